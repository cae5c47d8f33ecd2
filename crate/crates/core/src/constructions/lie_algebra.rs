use std::collections::BTreeMap;

use crate::algebroid::{Algebroid, AlgebroidError, StructureMap};
use crate::exactpoly::{is_identifier, Chart, Poly, Rational, VectorField};
use crate::report::{CheckItem, CheckReport};

use super::{lie_algebra_bundle, ConstructionError};

/// A finite-dimensional Lie algebra by structure constants `cᵏᵢⱼ`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraPresentation {
    basis: Vec<String>,
    constants: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl LieAlgebraPresentation {
    pub fn new(basis: Vec<String>, constants: BTreeMap<(usize, usize), Vec<Rational>>) -> Result<Self, AlgebroidError> {
        let n = basis.len();
        for (i, b) in basis.iter().enumerate() {
            if !is_identifier(b) {
                return Err(AlgebroidError::BadFrameName(b.clone()));
            }
            if basis[..i].contains(b) {
                return Err(AlgebroidError::DuplicateFrameName(b.clone()));
            }
        }
        for (&(i, j), c) in &constants {
            if i >= j || j >= n {
                return Err(AlgebroidError::StructureKey(i + 1, j + 1));
            }
            if c.len() != n {
                return Err(AlgebroidError::Shape(format!("constants ({},{}) need {n} entries", i + 1, j + 1)));
            }
        }
        Ok(LieAlgebraPresentation { basis, constants })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn constants(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.constants
    }

    /// The Lie algebra as a bundle with constant fibers over `chart`.
    pub fn bundle_over(&self, chart: &Chart) -> Algebroid {
        lie_algebra_bundle(chart, self.basis.clone(), self.structure_over(chart)).expect("validated presentation")
    }

    /// The Lie algebra as an algebroid over a point.
    pub fn as_algebroid(&self) -> Algebroid {
        self.bundle_over(&Chart::point())
    }

    pub(super) fn structure_over(&self, chart: &Chart) -> StructureMap {
        self.constants.iter().map(|(&k, c)| (k, c.iter().map(|r| Poly::constant(chart, r.clone())).collect())).collect()
    }

    pub fn check_jacobi(&self) -> CheckItem {
        self.as_algebroid().check_jacobi_frame()
    }
}

/// An infinitesimal action `γ: 𝔤 → 𝔛(M)`, one vector field per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitesimalGroupAction {
    algebra: LieAlgebraPresentation,
    chart: Chart,
    fields: Vec<VectorField>,
}

impl InfinitesimalGroupAction {
    pub fn new(
        algebra: LieAlgebraPresentation,
        chart: &Chart,
        fields: Vec<VectorField>,
    ) -> Result<Self, ConstructionError> {
        if fields.len() != algebra.dim() {
            return Err(ConstructionError::Dimension(format!(
                "{} vector fields for a {}-dimensional algebra",
                fields.len(),
                algebra.dim()
            )));
        }
        if fields.iter().any(|f| f.chart() != chart) {
            return Err(ConstructionError::Dimension(format!("vector fields must live on {chart}")));
        }
        Ok(InfinitesimalGroupAction { algebra, chart: chart.clone(), fields })
    }

    pub fn algebra(&self) -> &LieAlgebraPresentation {
        &self.algebra
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn fields(&self) -> &[VectorField] {
        &self.fields
    }
}

/// The transformation algebroid `𝔤 × M`: anchor `ρ(ξᵢ) = γ(ξᵢ)`, constant
/// structure functions. The report records whether `γ` is a Lie algebra
/// homomorphism (`anchor_hom`) and whether the constants satisfy Jacobi.
pub fn transformation_algebroid(a: &InfinitesimalGroupAction) -> (Algebroid, CheckReport) {
    let anchor = a.fields.iter().map(|f| f.components().to_vec()).collect();
    let alg = Algebroid::new(&a.chart, a.algebra.basis.clone(), anchor, a.algebra.structure_over(&a.chart))
        .expect("validated action");
    let hom = alg.check_anchor_homomorphism();
    let report = CheckReport::new("transformation", vec![hom, a.algebra.check_jacobi()]);
    (alg, report)
}
