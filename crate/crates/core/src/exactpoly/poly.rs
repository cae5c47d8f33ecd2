use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Chart, Monomial, PolyError, Rational};

/// Exact multivariate polynomial with rational coefficients over a chart.
///
/// Terms with zero coefficient are never stored, so two equal polynomials
/// always have identical term maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    chart: Chart,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(chart: &Chart) -> Self {
        Poly { chart: chart.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(chart: &Chart, c: Rational) -> Self {
        let mut p = Poly::zero(chart);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(chart.dim()), c);
        }
        p
    }

    pub fn from_int(chart: &Chart, c: i64) -> Self {
        Poly::constant(chart, Rational::from_integer(BigInt::from(c)))
    }

    pub fn one(chart: &Chart) -> Self {
        Poly::from_int(chart, 1)
    }

    /// The coordinate function at `index`.
    pub fn var(chart: &Chart, index: usize) -> Self {
        let mut p = Poly::zero(chart);
        p.terms.insert(Monomial::var(chart.dim(), index), Rational::one());
        p
    }

    pub fn var_named(chart: &Chart, name: &str) -> Result<Self, PolyError> {
        let i = chart.index_of(name).ok_or_else(|| PolyError::UnknownCoordinate(name.to_string()))?;
        Ok(Poly::var(chart, i))
    }

    pub fn from_terms<I>(chart: &Chart, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero(chart);
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), chart.dim(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn ensure_same_chart(&self, other: &Poly) -> Result<(), PolyError> {
        if self.chart == other.chart {
            Ok(())
        } else {
            Err(PolyError::ChartMismatch { left: self.chart.to_string(), right: other.chart.to_string() })
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.ensure_same_chart(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.ensure_same_chart(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.ensure_same_chart(other)?;
        let mut out = Poly::zero(&self.chart);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.chart);
        }
        Poly { chart: self.chart.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.chart);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the coordinate at `index`.
    pub fn derivative(&self, index: usize) -> Poly {
        let mut out = Poly::zero(&self.chart);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::from_exponents(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn partial_derivative(&self, coord: &str) -> Result<Poly, PolyError> {
        let i = self.chart.index_of(coord).ok_or_else(|| PolyError::UnknownCoordinate(coord.to_string()))?;
        Ok(self.derivative(i))
    }

    /// Evaluate at a rational point given in chart coordinate order.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.chart.dim(), "point dimension");
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += t;
        }
        sum
    }

    /// Substitute `subs[a]` (polynomials over `target`) for coordinate `a`.
    pub fn compose(&self, target: &Chart, subs: &[Poly]) -> Result<Poly, PolyError> {
        if subs.len() != self.chart.dim() {
            return Err(PolyError::ArityMismatch { expected: self.chart.dim(), found: subs.len() });
        }
        if let Some(bad) = subs.iter().find(|s| s.chart() != target) {
            return Err(PolyError::ChartMismatch { left: target.to_string(), right: bad.chart().to_string() });
        }
        // powers[a][k] = subs[a]^k, filled lazily
        let mut powers: Vec<Vec<Poly>> = subs.iter().map(|s| vec![Poly::one(target), s.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (a, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[a].len() <= e as usize {
                    let next = &powers[a][powers[a].len() - 1] * &subs[a];
                    powers[a].push(next);
                }
                t = &t * &powers[a][e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(self.chart == divisor.chart, "chart mismatch in div_exact");
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.chart);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            let step = Poly::from_terms(&self.chart, [(qm, qc)]);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }

    fn fmt_term(f: &mut fmt::Formatter<'_>, chart: &Chart, m: &Monomial, c: &Rational) -> fmt::Result {
        let abs = c.abs();
        let unit = abs.is_one();
        if m.is_one() || !unit {
            if abs.is_integer() {
                write!(f, "{}", abs.numer())?;
            } else {
                write!(f, "{}/{}", abs.numer(), abs.denom())?;
            }
        }
        let mut first = m.is_one() || !unit;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if first {
                f.write_str("*")?;
            }
            first = true;
            f.write_str(chart.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    /// Renders in the polynomial text grammar, highest graded-lex term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            Poly::fmt_term(f, &self.chart, m, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

// Operator forms panic on chart mismatch; use the `checked_*` methods
// where the charts are not already known to agree.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial chart mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial chart mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial chart mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { chart: self.chart.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Chart {
        Chart::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(s, &xy()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x + 1") * &p("x - 1"), p("x^2 - 1"));
    }

    #[test]
    fn additive_identity() {
        let a = p("3/2*x^2*y - x + 1");
        assert_eq!(&a + &Poly::zero(&xy()), a);
    }

    #[test]
    fn rational_product() {
        // (1/2 x y)(2/3 y): 1/2 * 2/3 = 1/3, x^1 y^(1+1)
        let expected = Poly::from_terms(&xy(), [(Monomial::from_exponents(vec![1, 2]), q(1, 3))]);
        assert_eq!(&p("1/2*x*y") * &p("2/3*y"), expected);
    }

    #[test]
    fn chart_mismatch_is_an_error() {
        let other = Poly::var(&Chart::new(["x"]).unwrap(), 0);
        assert!(matches!(p("x").checked_add(&other), Err(PolyError::ChartMismatch { .. })));
        assert!(p("x").checked_mul(&other).is_err());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x^2*y").partial_derivative("x").unwrap(), p("2*x*y"));
        assert!(p("x^2").partial_derivative("y").unwrap().is_zero());
        // d/dx (x^3 - 3/2 x) = 3x^2 - 3/2, term by term
        let expected =
            Poly::from_terms(&xy(), [(Monomial::from_exponents(vec![2, 0]), q(3, 1)), (Monomial::one(2), q(-3, 2))]);
        assert_eq!(p("x^3 - 3/2*x").partial_derivative("x").unwrap(), expected);
        assert!(matches!(p("x").partial_derivative("z"), Err(PolyError::UnknownCoordinate(_))));
    }

    #[test]
    fn rendering() {
        assert_eq!(p("1 - x + 3/2*y*x^2").to_string(), "3/2*x^2*y - x + 1");
        assert_eq!(p("-x*y + 2*y^2 - 1/3").to_string(), "-x*y + 2*y^2 - 1/3");
        assert_eq!(p("x - x").to_string(), "0");
        assert_eq!(p("-2").to_string(), "-2");
    }

    #[test]
    fn compose_and_eval() {
        let t = Chart::new(["t"]).unwrap();
        let subs = [Poly::parse("t^2", &t).unwrap(), Poly::parse("t + 1", &t).unwrap()];
        let c = p("x*y - y").compose(&t, &subs).unwrap();
        assert_eq!(c, Poly::parse("t^3 + t^2 - t - 1", &t).unwrap());
        assert_eq!(p("x^2 + 1/2*y").eval(&[q(3, 1), q(1, 1)]), q(19, 2));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert!(a.div_exact(&p("x + 2")).is_none());
        assert_eq!(p("x^3*y").pow(2), p("x^6*y^2"));
    }
}
