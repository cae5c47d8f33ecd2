//! Algebroid morphisms over polynomial chart maps.
//!
//! A bundle map `Φ: 𝔥 → 𝔤` over `φ: N → M` is stored as the matrix of its
//! canonical decomposition `Φ(fᵢ) = Σⱼ Φʲᵢ φ*(eⱼ)` against the pulled-back
//! target frame. Since the pulled-back frame is a basis of `Γφ*𝔤`, the
//! bracket condition needs to be checked on this decomposition only.

use crate::algebroid::{Algebroid, AlgebroidError, Section};
use crate::exactpoly::{ChartMap, Poly, PolyError};
use crate::report::{CheckItem, CheckReport, Witness};

/// A `Φ`-decomposition `Σ fᵢ φ*(Xᵢ)`: functions on the source base paired
/// with sections of the target.
pub type Decomposition = Vec<(Poly, Section)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebroidMorphism {
    source: Algebroid,
    target: Algebroid,
    base_map: ChartMap,
    /// `matrix[j][i] = Φʲᵢ`, over the source base.
    matrix: Vec<Vec<Poly>>,
}

impl AlgebroidMorphism {
    pub fn new(
        source: Algebroid,
        target: Algebroid,
        base_map: ChartMap,
        matrix: Vec<Vec<Poly>>,
    ) -> Result<Self, AlgebroidError> {
        if base_map.source() != source.base() || base_map.target() != target.base() {
            return Err(AlgebroidError::Shape(format!(
                "base map {} -> {} does not connect {} to {}",
                base_map.source(),
                base_map.target(),
                source.base(),
                target.base()
            )));
        }
        let (r, s) = (target.rank(), source.rank());
        if matrix.len() != r || matrix.iter().any(|row| row.len() != s) {
            return Err(AlgebroidError::Shape(format!("morphism matrix must be {r}×{s}")));
        }
        if let Some(bad) = matrix.iter().flatten().find(|p| p.chart() != source.base()) {
            return Err(
                PolyError::ChartMismatch { left: source.base().to_string(), right: bad.chart().to_string() }.into()
            );
        }
        Ok(AlgebroidMorphism { source, target, base_map, matrix })
    }

    pub fn identity(alg: &Algebroid) -> Self {
        let r = alg.rank();
        let matrix = (0..r).map(|j| (0..r).map(|i| Poly::from_int(alg.base(), (i == j) as i64)).collect()).collect();
        AlgebroidMorphism { source: alg.clone(), target: alg.clone(), base_map: ChartMap::identity(alg.base()), matrix }
    }

    pub fn source(&self) -> &Algebroid {
        &self.source
    }

    pub fn target(&self) -> &Algebroid {
        &self.target
    }

    pub fn base_map(&self) -> &ChartMap {
        &self.base_map
    }

    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.matrix
    }

    /// Coefficients `gⱼ = Σᵢ fᵢ Φʲᵢ` of the canonical decomposition of `Φ∘s`.
    pub fn phi_decompose(&self, s: &Section) -> Result<Vec<Poly>, AlgebroidError> {
        self.source.check_section(s)?;
        Ok(self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(s.coeffs())
                    .filter(|(a, f)| !a.is_zero() && !f.is_zero())
                    .fold(Poly::zero(self.source.base()), |acc, (a, f)| &acc + &(a * f))
            })
            .collect())
    }

    /// Coefficients of `φ*(X)` in the pulled-back frame.
    pub fn pullback_section(&self, x: &Section) -> Result<Vec<Poly>, AlgebroidError> {
        self.target.check_section(x)?;
        Ok(x.coeffs().iter().map(|c| self.base_map.pullback(c)).collect::<Result<_, _>>()?)
    }

    /// Anchor compatibility `ρ∘Φ = dφ∘ρ` on each source frame element; the
    /// residual is indexed by target coordinate.
    #[allow(clippy::needless_range_loop)]
    pub fn anchor_defect(&self) -> Result<Option<Witness>, AlgebroidError> {
        let m = self.target.base().dim();
        let pulled_anchor: Vec<Vec<Poly>> = self
            .target
            .anchor_rows()
            .iter()
            .map(|row| row.components().iter().map(|c| self.base_map.pullback(c)).collect::<Result<_, _>>())
            .collect::<Result<_, PolyError>>()?;
        for i in 0..self.source.rank() {
            let rho_i = self.source.anchor_row(i);
            let mut residual = Vec::with_capacity(m);
            for a in 0..m {
                let mut lhs = Poly::zero(self.source.base());
                for (j, row) in self.matrix.iter().enumerate() {
                    lhs = &lhs + &(&row[i] * &pulled_anchor[j][a]);
                }
                let rhs = rho_i.apply(&self.base_map.formulas()[a])?;
                residual.push(&lhs - &rhs);
            }
            if residual.iter().any(|p| !p.is_zero()) {
                return Ok(Some(Witness::new(vec![i + 1], residual.iter().map(Poly::to_string).collect())));
            }
        }
        Ok(None)
    }

    /// Bracket compatibility on source frame pairs `i < i′`: the canonical
    /// decomposition of `[fᵢ, fᵢ′]` against
    /// `Σ ΦᵏᵢΦˡᵢ′ (cᵐₖₗ∘φ) + ρ(fᵢ)(Φᵐᵢ′) − ρ(fᵢ′)(Φᵐᵢ)`.
    #[allow(clippy::needless_range_loop)]
    pub fn bracket_defect(&self) -> Result<Option<Witness>, AlgebroidError> {
        let s = self.source.rank();
        let r = self.target.rank();
        let pulled_structure: Vec<Vec<Vec<Poly>>> = (0..r)
            .map(|k| {
                (0..r)
                    .map(|l| {
                        self.target
                            .structure_functions(k, l)
                            .iter()
                            .map(|c| self.base_map.pullback(c))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, PolyError>>()?;
        for i in 0..s {
            for i2 in i + 1..s {
                let fi = Section::basis(&self.source, i);
                let fi2 = Section::basis(&self.source, i2);
                let lhs = self.phi_decompose(&self.source.bracket(&fi, &fi2)?)?;
                let rho_i = self.source.anchor_row(i);
                let rho_i2 = self.source.anchor_row(i2);
                let mut residual = Vec::with_capacity(r);
                for (m, lhs_m) in lhs.iter().enumerate() {
                    let mut rhs = &rho_i.apply(&self.matrix[m][i2])? - &rho_i2.apply(&self.matrix[m][i])?;
                    for k in 0..r {
                        for l in 0..r {
                            let c = &pulled_structure[k][l][m];
                            if c.is_zero() {
                                continue;
                            }
                            rhs = &rhs + &(&(&self.matrix[k][i] * &self.matrix[l][i2]) * c);
                        }
                    }
                    residual.push(lhs_m - &rhs);
                }
                if residual.iter().any(|p| !p.is_zero()) {
                    return Ok(Some(Witness::new(vec![i + 1, i2 + 1], residual.iter().map(Poly::to_string).collect())));
                }
            }
        }
        Ok(None)
    }

    /// Items `morphism_anchor` and `morphism_bracket`.
    pub fn check(&self, subject: &str) -> Result<CheckReport, AlgebroidError> {
        Ok(CheckReport::new(
            subject,
            vec![
                CheckItem::from_witness("morphism_anchor", self.anchor_defect()?),
                CheckItem::from_witness("morphism_bracket", self.bracket_defect()?),
            ],
        ))
    }

    /// Pulled-back frame coefficients of a decomposition `Σ fᵢ φ*(Xᵢ)`.
    pub fn evaluate_decomposition(&self, d: &Decomposition) -> Result<Vec<Poly>, AlgebroidError> {
        let mut out = vec![Poly::zero(self.source.base()); self.target.rank()];
        for (f, x) in d {
            for (o, c) in out.iter_mut().zip(self.pullback_section(x)?) {
                *o = &*o + &(f * &c);
            }
        }
        Ok(out)
    }

    /// The bracket condition for arbitrary decompositions `dy` of `Φ∘y` and
    /// `dy2` of `Φ∘y2`: returns the residual of
    /// `Σ fᵢf′ⱼ φ*[Xᵢ,X′ⱼ] + Σ ρ(y)(f′ⱼ) φ*X′ⱼ − Σ ρ(y2)(fᵢ) φ*Xᵢ`
    /// against the canonical decomposition of `[y, y2]`.
    pub fn decomposition_bracket_residual(
        &self,
        y: &Section,
        dy: &Decomposition,
        y2: &Section,
        dy2: &Decomposition,
    ) -> Result<Vec<Poly>, AlgebroidError> {
        for (s, d) in [(y, dy), (y2, dy2)] {
            let canonical = self.phi_decompose(s)?;
            if self.evaluate_decomposition(d)? != canonical {
                return Err(AlgebroidError::SectionMismatch("not a Φ-decomposition of the given section".into()));
            }
        }
        let rho_y = self.source.anchor_of(y)?;
        let rho_y2 = self.source.anchor_of(y2)?;
        let mut expr: Decomposition = Vec::new();
        for (f, x) in dy {
            for (f2, x2) in dy2 {
                expr.push((f * f2, self.target.bracket(x, x2)?));
            }
        }
        for (f2, x2) in dy2 {
            expr.push((rho_y.apply(f2)?, x2.clone()));
        }
        for (f, x) in dy {
            expr.push((-rho_y2.apply(f)?, x.clone()));
        }
        let lhs = self.evaluate_decomposition(&expr)?;
        let canonical = self.phi_decompose(&self.source.bracket(y, y2)?)?;
        Ok(lhs.iter().zip(&canonical).map(|(a, b)| a - b).collect())
    }

    /// `self ∘ inner`, for `inner: 𝔨 → 𝔥` and `self: 𝔥 → 𝔤`.
    pub fn compose(&self, inner: &AlgebroidMorphism) -> Result<AlgebroidMorphism, AlgebroidError> {
        if inner.target != self.source {
            return Err(AlgebroidError::Shape("composable morphisms must share the middle algebroid".into()));
        }
        let base_map = self.base_map.compose(&inner.base_map)?;
        let outer: Vec<Vec<Poly>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| inner.base_map.pullback(p)).collect::<Result<_, _>>())
            .collect::<Result<_, PolyError>>()?;
        let zero = Poly::zero(inner.source.base());
        let matrix = outer
            .iter()
            .map(|orow| {
                (0..inner.source.rank())
                    .map(|i| orow.iter().zip(&inner.matrix).fold(zero.clone(), |acc, (g, irow)| &acc + &(g * &irow[i])))
                    .collect()
            })
            .collect();
        AlgebroidMorphism::new(inner.source.clone(), self.target.clone(), base_map, matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::StructureMap;
    use crate::exactpoly::Chart;

    fn p(c: &Chart, s: &str) -> Poly {
        Poly::parse(s, c).unwrap()
    }

    fn abelian2() -> Algebroid {
        let c = Chart::new(["x"]).unwrap();
        Algebroid::new(&c, vec!["e1".into(), "e2".into()], vec![vec![p(&c, "0")]; 2], StructureMap::new()).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let g = abelian2();
        let c = g.base().clone();
        let id = AlgebroidMorphism::identity(&g);
        assert!(id.phi_decompose(&Section::zero(&g)).unwrap().iter().all(Poly::is_zero));
        let s = Section::new(vec![p(&c, "x^2"), p(&c, "1/2")]);
        assert_eq!(id.phi_decompose(&s).unwrap(), s.coeffs());

        // rank-1 line spanned by e1 + x e2
        let line = Algebroid::new(&c, vec!["f".into()], vec![vec![p(&c, "0")]], StructureMap::new()).unwrap();
        let inc =
            AlgebroidMorphism::new(line.clone(), g, ChartMap::identity(&c), vec![vec![p(&c, "1")], vec![p(&c, "x")]])
                .unwrap();
        assert_eq!(inc.phi_decompose(&Section::basis(&line, 0)).unwrap(), vec![p(&c, "1"), p(&c, "x")]);
        assert!(inc.check("inclusion").unwrap().passed());
    }

    #[test]
    fn shape_validation() {
        let g = abelian2();
        let c = g.base().clone();
        assert!(AlgebroidMorphism::new(g.clone(), g.clone(), ChartMap::identity(&c), vec![]).is_err());
        let other = Chart::new(["y"]).unwrap();
        assert!(AlgebroidMorphism::new(g.clone(), g, ChartMap::identity(&other), vec![]).is_err());
    }
}
