use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactpoly::{Chart, Monomial, Poly, Rational};

use super::{Algebroid, Section};

/// Coefficients used for random monomials: ±2, ±1, ±1/2.
const COEFFS: [(i64, i64); 6] = [(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (2, 1)];

/// Deterministic generator of random polynomials and sections (ChaCha8, explicit seed).
///
/// Each polynomial is a sum of one to three monomials of total degree at most
/// `max_degree` with coefficients drawn from `{−2, −1, −1/2, 1/2, 1, 2}`.
pub struct RandomSections {
    rng: ChaCha8Rng,
}

impl RandomSections {
    pub fn new(seed: u64) -> Self {
        RandomSections { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn poly(&mut self, chart: &Chart, max_degree: u32) -> Poly {
        let nterms = self.rng.gen_range(1..=3);
        let terms: Vec<(Monomial, Rational)> = (0..nterms)
            .map(|_| {
                let mut exps = vec![0u32; chart.dim()];
                if chart.dim() > 0 {
                    let degree = self.rng.gen_range(0..=max_degree);
                    for _ in 0..degree {
                        exps[self.rng.gen_range(0..chart.dim())] += 1;
                    }
                }
                let (n, d) = COEFFS[self.rng.gen_range(0..COEFFS.len())];
                (Monomial::from_exponents(exps), Rational::new(BigInt::from(n), BigInt::from(d)))
            })
            .collect();
        Poly::from_terms(chart, terms)
    }

    pub fn section(&mut self, alg: &Algebroid, max_degree: u32) -> Section {
        Section::new((0..alg.rank()).map(|_| self.poly(alg.base(), max_degree)).collect())
    }
}
