//! Brute-force Schouten bracket `[Π,Π]ᵃᵇᶜ = 2·Σ_cyc(a,b,c) Σ_d Πᵈᵃ ∂_d Πᵇᶜ`,
//! written against the raw component list rather than the library's bivector type.

use algebroidkit::exactpoly::{Chart, Poly};

pub struct Bivector {
    pub chart: Chart,
    /// Full antisymmetric matrix of components.
    pub pi: Vec<Vec<Poly>>,
}

impl Bivector {
    pub fn new(chart: &Chart, entries: &[(usize, usize, &str)]) -> Self {
        let m = chart.dim();
        let mut pi = vec![vec![Poly::zero(chart); m]; m];
        for &(a, b, s) in entries {
            let p = Poly::parse(s, chart).unwrap();
            pi[a - 1][b - 1] = p.clone();
            pi[b - 1][a - 1] = -&p;
        }
        Bivector { chart: chart.clone(), pi }
    }

    /// `[Π,Π]ᵃᵇᶜ` for 0-based indices.
    pub fn component(&self, a: usize, b: usize, c: usize) -> Poly {
        let mut sum = Poly::zero(&self.chart);
        for (i, j, k) in [(a, b, c), (b, c, a), (c, a, b)] {
            for d in 0..self.chart.dim() {
                let term = &self.pi[d][i] * &self.pi[j][k].derivative(d);
                sum = &sum + &term;
            }
        }
        &sum + &sum
    }

    /// First nonzero component over `a < b < c`, if any.
    pub fn defect(&self) -> Option<((usize, usize, usize), Poly)> {
        let m = self.chart.dim();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    let s = self.component(a, b, c);
                    if !s.is_zero() {
                        return Some(((a + 1, b + 1, c + 1), s));
                    }
                }
            }
        }
        None
    }

    pub fn is_poisson(&self) -> bool {
        self.defect().is_none()
    }
}
