use std::fmt;

use super::{Chart, Poly, PolyError};

/// Polynomial vector field `Σₐ Vₐ ∂/∂xₐ` on a chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    chart: Chart,
    components: Vec<Poly>,
}

impl VectorField {
    pub fn new(chart: &Chart, components: Vec<Poly>) -> Result<Self, PolyError> {
        if components.len() != chart.dim() {
            return Err(PolyError::ArityMismatch { expected: chart.dim(), found: components.len() });
        }
        if let Some(bad) = components.iter().find(|p| p.chart() != chart) {
            return Err(PolyError::ChartMismatch { left: chart.to_string(), right: bad.chart().to_string() });
        }
        Ok(VectorField { chart: chart.clone(), components })
    }

    pub fn zero(chart: &Chart) -> Self {
        VectorField { chart: chart.clone(), components: vec![Poly::zero(chart); chart.dim()] }
    }

    /// The coordinate field `∂/∂x_index`.
    pub fn coordinate(chart: &Chart, index: usize) -> Self {
        let mut v = VectorField::zero(chart);
        v.components[index] = Poly::one(chart);
        v
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, a: usize) -> &Poly {
        &self.components[a]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    fn ensure_chart(&self, chart: &Chart) -> Result<(), PolyError> {
        if &self.chart == chart {
            Ok(())
        } else {
            Err(PolyError::ChartMismatch { left: self.chart.to_string(), right: chart.to_string() })
        }
    }

    /// `V(f) = Σₐ Vₐ ∂f/∂xₐ`.
    pub fn apply(&self, f: &Poly) -> Result<Poly, PolyError> {
        self.ensure_chart(f.chart())?;
        let mut out = Poly::zero(&self.chart);
        for (a, va) in self.components.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            let d = f.derivative(a);
            if !d.is_zero() {
                out = &out + &(va * &d);
            }
        }
        Ok(out)
    }

    /// Lie bracket; component `a` is `V(Wₐ) − W(Vₐ)`.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField, PolyError> {
        self.ensure_chart(&other.chart)?;
        let components = (0..self.chart.dim())
            .map(|a| Ok(&self.apply(&other.components[a])? - &other.apply(&self.components[a])?))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(VectorField { chart: self.chart.clone(), components })
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField, PolyError> {
        self.ensure_chart(&other.chart)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &VectorField) -> Result<VectorField, PolyError> {
        self.ensure_chart(&other.chart)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &VectorField, f: impl Fn(&Poly, &Poly) -> Poly) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            components: self.components.iter().zip(&other.components).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Multiply every component by the function `f`.
    pub fn scale(&self, f: &Poly) -> Result<VectorField, PolyError> {
        self.ensure_chart(f.chart())?;
        Ok(VectorField { chart: self.chart.clone(), components: self.components.iter().map(|c| c * f).collect() })
    }

    /// Components rendered in the polynomial grammar.
    pub fn render(&self) -> Vec<String> {
        self.components.iter().map(Poly::to_string).collect()
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*d/d{}", c, self.chart.name(a))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
