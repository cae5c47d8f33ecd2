use super::{Chart, Poly, PolyError, VectorField};

/// Polynomial map between charts: one formula over `source` per `target` coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartMap {
    source: Chart,
    target: Chart,
    formulas: Vec<Poly>,
}

impl ChartMap {
    pub fn new(source: &Chart, target: &Chart, formulas: Vec<Poly>) -> Result<Self, PolyError> {
        if formulas.len() != target.dim() {
            return Err(PolyError::ArityMismatch { expected: target.dim(), found: formulas.len() });
        }
        if let Some(bad) = formulas.iter().find(|p| p.chart() != source) {
            return Err(PolyError::ChartMismatch { left: source.to_string(), right: bad.chart().to_string() });
        }
        Ok(ChartMap { source: source.clone(), target: target.clone(), formulas })
    }

    pub fn identity(chart: &Chart) -> Self {
        let formulas = (0..chart.dim()).map(|a| Poly::var(chart, a)).collect();
        ChartMap { source: chart.clone(), target: chart.clone(), formulas }
    }

    /// The projection sending target coordinate `a` to the source coordinate `names[a]`.
    pub fn projection(source: &Chart, names: &[String]) -> Result<Self, PolyError> {
        let target = Chart::new(names.iter().cloned())?;
        let formulas = names.iter().map(|n| Poly::var_named(source, n)).collect::<Result<Vec<_>, _>>()?;
        Ok(ChartMap { source: source.clone(), target, formulas })
    }

    pub fn source(&self) -> &Chart {
        &self.source
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn formulas(&self) -> &[Poly] {
        &self.formulas
    }

    /// For a coordinate projection, the source index of each target coordinate.
    pub fn projection_indices(&self) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.formulas.len());
        for f in &self.formulas {
            if f.num_terms() != 1 {
                return None;
            }
            let (m, c) = f.leading_term()?;
            if !num_traits::One::is_one(c) || m.degree() != 1 {
                return None;
            }
            let idx = m.exponents().iter().position(|&e| e == 1)?;
            if out.contains(&idx) {
                return None;
            }
            out.push(idx);
        }
        Some(out)
    }

    /// `f ∘ φ` for `f` over the target chart.
    pub fn pullback(&self, f: &Poly) -> Result<Poly, PolyError> {
        if f.chart() != &self.target {
            return Err(PolyError::ChartMismatch { left: self.target.to_string(), right: f.chart().to_string() });
        }
        f.compose(&self.source, &self.formulas)
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &ChartMap) -> Result<ChartMap, PolyError> {
        if inner.target != self.source {
            return Err(PolyError::ChartMismatch { left: self.source.to_string(), right: inner.target.to_string() });
        }
        let formulas = self.formulas.iter().map(|f| inner.pullback(f)).collect::<Result<Vec<_>, _>>()?;
        Ok(ChartMap { source: inner.source.clone(), target: self.target.clone(), formulas })
    }

    /// Residual of the projectability identity `Σ_b V_b ∂φₐ/∂y_b − Wₐ∘φ`, one entry per
    /// target coordinate; `v` lives on the source chart and `w` on the target chart.
    pub fn pushforward_residual(&self, v: &VectorField, w: &VectorField) -> Result<Vec<Poly>, PolyError> {
        if v.chart() != &self.source {
            return Err(PolyError::ChartMismatch { left: self.source.to_string(), right: v.chart().to_string() });
        }
        if w.chart() != &self.target {
            return Err(PolyError::ChartMismatch { left: self.target.to_string(), right: w.chart().to_string() });
        }
        self.formulas.iter().zip(w.components()).map(|(qa, wa)| Ok(&v.apply(qa)? - &self.pullback(wa)?)).collect()
    }

    /// True iff `v` is φ-related to `w`: `V(f∘φ) = W(f)∘φ` for all `f`.
    pub fn pushforward_check(&self, v: &VectorField, w: &VectorField) -> Result<bool, PolyError> {
        Ok(self.pushforward_residual(v, w)?.iter().all(Poly::is_zero))
    }
}
