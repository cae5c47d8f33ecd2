use std::collections::BTreeMap;

use crate::algebroid::{Algebroid, AlgebroidError, StructureMap};
use crate::exactpoly::{Chart, Poly, PolyError};
use crate::report::CheckReport;

/// A bivector `Π = Σ_{a<b} Πᵃᵇ ∂ₐ∧∂_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonBivector {
    chart: Chart,
    /// Nonzero components, 0-based `a < b`.
    components: BTreeMap<(usize, usize), Poly>,
}

impl PoissonBivector {
    pub fn new(chart: &Chart, components: BTreeMap<(usize, usize), Poly>) -> Result<Self, AlgebroidError> {
        let m = chart.dim();
        let mut kept = BTreeMap::new();
        for ((a, b), p) in components {
            if a >= b || b >= m {
                return Err(AlgebroidError::StructureKey(a + 1, b + 1));
            }
            if p.chart() != chart {
                return Err(PolyError::ChartMismatch { left: chart.to_string(), right: p.chart().to_string() }.into());
            }
            if !p.is_zero() {
                kept.insert((a, b), p);
            }
        }
        Ok(PoissonBivector { chart: chart.clone(), components: kept })
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn components(&self) -> &BTreeMap<(usize, usize), Poly> {
        &self.components
    }

    /// `Πᵃᵇ` for any `a`, `b`.
    pub fn component(&self, a: usize, b: usize) -> Poly {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Equal => Poly::zero(&self.chart),
            Less => self.components.get(&(a, b)).cloned().unwrap_or_else(|| Poly::zero(&self.chart)),
            Greater => self.components.get(&(b, a)).map(|p| -p).unwrap_or_else(|| Poly::zero(&self.chart)),
        }
    }
}

/// The cotangent algebroid of `(M, Π)` on the frame `dxₐ`.
///
/// The anchor is `−Π̃`, `ρ(dxₐ) = −Σ_b Πᵃᵇ ∂_b`, and the bracket on exact
/// forms is `[dxₐ, dx_b] = −d(Πᵃᵇ) = −Σₖ ∂ₖΠᵃᵇ dxₖ`. With this sign pairing the
/// anchor is a homomorphism and Jacobi holds exactly when `[Π, Π] = 0`
/// (pinned by the Lie–Poisson so(3)* test below).
pub fn poisson_cotangent(pi: &PoissonBivector) -> (Algebroid, CheckReport) {
    let c = &pi.chart;
    let m = c.dim();
    let frame = c.coords().iter().map(|x| format!("d{x}")).collect();
    let anchor = (0..m).map(|a| (0..m).map(|b| -pi.component(a, b)).collect()).collect();
    let structure: StructureMap =
        pi.components.iter().map(|(&(a, b), p)| ((a, b), (0..m).map(|k| -p.derivative(k)).collect())).collect();
    let alg = Algebroid::new(c, frame, anchor, structure).expect("cotangent presentation is well formed");
    let report = CheckReport::new("poisson_cotangent", vec![alg.check_anchor_homomorphism(), alg.check_jacobi_frame()]);
    (alg, report)
}
