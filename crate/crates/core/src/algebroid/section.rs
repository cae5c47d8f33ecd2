use crate::exactpoly::{Chart, Poly};

use super::Algebroid;

/// A section `Σ fᵢ eᵢ`, stored as its frame coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    coeffs: Vec<Poly>,
}

impl Section {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        Section { coeffs }
    }

    pub fn zero(alg: &Algebroid) -> Self {
        Section::zeros(alg.base(), alg.rank())
    }

    pub fn zeros(chart: &Chart, rank: usize) -> Self {
        Section { coeffs: vec![Poly::zero(chart); rank] }
    }

    /// The frame element `eᵢ`.
    pub fn basis(alg: &Algebroid, i: usize) -> Self {
        let mut s = Section::zero(alg);
        s.coeffs[i] = Poly::one(alg.base());
        s
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Section) -> Section {
        assert_eq!(self.len(), other.len(), "section rank mismatch");
        Section { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Section) -> Section {
        assert_eq!(self.len(), other.len(), "section rank mismatch");
        Section { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Section {
        Section { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// `f · s`.
    pub fn scale(&self, f: &Poly) -> Section {
        Section { coeffs: self.coeffs.iter().map(|a| f * a).collect() }
    }

    pub fn render(&self) -> Vec<String> {
        self.coeffs.iter().map(Poly::to_string).collect()
    }
}
