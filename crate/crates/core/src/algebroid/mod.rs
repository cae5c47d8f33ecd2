//! Lie algebroids presented by a global frame: an anchor matrix and
//! structure functions over a polynomial chart.
//!
//! The bracket of arbitrary sections is the Leibniz expansion of the frame
//! brackets, so the Leibniz identity holds by construction and the axioms
//! that remain to be checked are the anchor homomorphism and Jacobi.

mod checks;
mod rank;
mod sample;
mod section;

use std::collections::BTreeMap;

use crate::exactpoly::{is_identifier, Chart, Poly, PolyError, VectorField};

pub use checks::{RandomJacobi, Suite};
pub use rank::generic_rank;
pub use sample::RandomSections;
pub use section::Section;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebroidError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("invalid frame name '{0}'")]
    BadFrameName(String),
    #[error("duplicate frame name '{0}'")]
    DuplicateFrameName(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("structure pair ({0},{1}) must satisfy i < j <= rank")]
    StructureKey(usize, usize),
    #[error("section does not belong to this algebroid: {0}")]
    SectionMismatch(String),
}

/// Structure functions keyed by 0-based `(i, j)` with `i < j`.
pub type StructureMap = BTreeMap<(usize, usize), Vec<Poly>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebroid {
    base: Chart,
    frame: Vec<String>,
    /// `anchor[i] = ρ(eᵢ)`.
    anchor: Vec<VectorField>,
    /// Only nonzero brackets `[eᵢ, eⱼ]`, `i < j`.
    structure: StructureMap,
}

impl Algebroid {
    /// `anchor` is an r×m matrix whose row `i` holds the components of `ρ(eᵢ)`.
    pub fn new(
        base: &Chart,
        frame: Vec<String>,
        anchor: Vec<Vec<Poly>>,
        structure: StructureMap,
    ) -> Result<Self, AlgebroidError> {
        let rank = frame.len();
        for (i, name) in frame.iter().enumerate() {
            if !is_identifier(name) {
                return Err(AlgebroidError::BadFrameName(name.clone()));
            }
            if frame[..i].contains(name) {
                return Err(AlgebroidError::DuplicateFrameName(name.clone()));
            }
        }
        if anchor.len() != rank {
            return Err(AlgebroidError::Shape(format!("anchor has {} rows, rank is {rank}", anchor.len())));
        }
        let anchor = anchor.into_iter().map(|row| VectorField::new(base, row)).collect::<Result<Vec<_>, _>>()?;
        let mut kept = StructureMap::new();
        for ((i, j), coeffs) in structure {
            if i >= j || j >= rank {
                return Err(AlgebroidError::StructureKey(i + 1, j + 1));
            }
            if coeffs.len() != rank {
                return Err(AlgebroidError::Shape(format!(
                    "structure ({},{}) has {} entries, rank is {rank}",
                    i + 1,
                    j + 1,
                    coeffs.len()
                )));
            }
            if let Some(bad) = coeffs.iter().find(|p| p.chart() != base) {
                return Err(PolyError::ChartMismatch { left: base.to_string(), right: bad.chart().to_string() }.into());
            }
            if coeffs.iter().any(|p| !p.is_zero()) {
                kept.insert((i, j), coeffs);
            }
        }
        Ok(Algebroid { base: base.clone(), frame, anchor, structure: kept })
    }

    pub fn base(&self) -> &Chart {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.frame.len()
    }

    pub fn frame(&self) -> &[String] {
        &self.frame
    }

    pub fn anchor_row(&self, i: usize) -> &VectorField {
        &self.anchor[i]
    }

    pub fn anchor_rows(&self) -> &[VectorField] {
        &self.anchor
    }

    pub fn anchor_matrix(&self) -> Vec<Vec<Poly>> {
        self.anchor.iter().map(|v| v.components().to_vec()).collect()
    }

    /// Nonzero structure entries, `i < j`, in index order.
    pub fn structure(&self) -> &StructureMap {
        &self.structure
    }

    /// Coefficients of `[eᵢ, eⱼ]` for any `i`, `j`.
    pub fn structure_functions(&self, i: usize, j: usize) -> Vec<Poly> {
        use std::cmp::Ordering::*;
        let zero = || vec![Poly::zero(&self.base); self.rank()];
        match i.cmp(&j) {
            Equal => zero(),
            Less => self.structure.get(&(i, j)).cloned().unwrap_or_else(zero),
            Greater => self.structure.get(&(j, i)).map(|c| c.iter().map(|p| -p).collect()).unwrap_or_else(zero),
        }
    }

    /// Replace the frame names, keeping all other data.
    pub fn with_frame_names(&self, frame: Vec<String>) -> Result<Self, AlgebroidError> {
        Algebroid::new(&self.base, frame, self.anchor_matrix(), self.structure.clone())
    }

    pub(crate) fn check_section(&self, s: &Section) -> Result<(), AlgebroidError> {
        if s.len() != self.rank() {
            return Err(AlgebroidError::SectionMismatch(format!(
                "section has {} coefficients, rank is {}",
                s.len(),
                self.rank()
            )));
        }
        if let Some(bad) = s.coeffs().iter().find(|p| p.chart() != &self.base) {
            return Err(AlgebroidError::SectionMismatch(format!(
                "coefficient over {} on base {}",
                bad.chart(),
                self.base
            )));
        }
        Ok(())
    }

    /// `ρ(Σ fᵢ eᵢ) = Σ fᵢ ρ(eᵢ)`.
    pub fn anchor_of(&self, s: &Section) -> Result<VectorField, AlgebroidError> {
        self.check_section(s)?;
        let mut out = VectorField::zero(&self.base);
        for (f, row) in s.coeffs().iter().zip(&self.anchor) {
            if !f.is_zero() && !row.is_zero() {
                out = out.checked_add(&row.scale(f)?)?;
            }
        }
        Ok(out)
    }

    /// Bracket of arbitrary sections via the Leibniz expansion
    /// `[Σfᵢeᵢ, Σgⱼeⱼ]ₖ = Σ_{i<j}(fᵢgⱼ − fⱼgᵢ)cᵏᵢⱼ + ρ(s)(gₖ) − ρ(t)(fₖ)`.
    pub fn bracket(&self, s: &Section, t: &Section) -> Result<Section, AlgebroidError> {
        self.check_section(s)?;
        self.check_section(t)?;
        let rs = self.anchor_of(s)?;
        let rt = self.anchor_of(t)?;
        let (f, g) = (s.coeffs(), t.coeffs());
        let mut out: Vec<Poly> =
            (0..self.rank()).map(|k| Ok(&rs.apply(&g[k])? - &rt.apply(&f[k])?)).collect::<Result<_, PolyError>>()?;
        for (&(i, j), c) in &self.structure {
            let w = &(&f[i] * &g[j]) - &(&f[j] * &g[i]);
            if w.is_zero() {
                continue;
            }
            for (o, ck) in out.iter_mut().zip(c) {
                if !ck.is_zero() {
                    *o = &*o + &(&w * ck);
                }
            }
        }
        Ok(Section::new(out))
    }

    /// Cyclic sum `[s,[t,u]] + [t,[u,s]] + [u,[s,t]]`.
    pub fn jacobiator(&self, s: &Section, t: &Section, u: &Section) -> Result<Section, AlgebroidError> {
        let a = self.bracket(s, &self.bracket(t, u)?)?;
        let b = self.bracket(t, &self.bracket(u, s)?)?;
        let c = self.bracket(u, &self.bracket(s, t)?)?;
        Ok(a.add(&b).add(&c))
    }

    /// Rank of the anchor matrix over the rational function field.
    pub fn anchor_generic_rank(&self) -> usize {
        generic_rank(&self.anchor_matrix())
    }
}

#[cfg(test)]
mod tests;
