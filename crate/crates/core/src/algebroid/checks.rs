use crate::report::{CheckItem, CheckReport, Witness};

use super::{Algebroid, RandomSections, Section};

/// Parameters of the randomized Jacobi check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomJacobi {
    pub trials: usize,
    pub max_degree: u32,
    pub seed: u64,
}

impl Default for RandomJacobi {
    fn default() -> Self {
        RandomJacobi { trials: 25, max_degree: 2, seed: 42 }
    }
}

/// Which algebroid axiom checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `anchor_hom`, `jacobi_frame`
    Axioms,
    /// `jacobi_frame`, `jacobi_random`
    Jacobi,
    /// all three
    All,
}

impl Algebroid {
    /// `[ρ(eᵢ), ρ(eⱼ)] = Σₖ cᵏᵢⱼ ρ(eₖ)` for every `i < j`; reports the first failing pair.
    pub fn check_anchor_homomorphism(&self) -> CheckItem {
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                let lhs = self.anchor[i].bracket(&self.anchor[j]).expect("anchor rows share the base chart");
                let rhs = self
                    .anchor_of(&Section::new(self.structure_functions(i, j)))
                    .expect("structure functions live on the base chart");
                let residual = lhs.checked_sub(&rhs).expect("same chart");
                if !residual.is_zero() {
                    return CheckItem::fail("anchor_hom", Witness::new(vec![i + 1, j + 1], residual.render()));
                }
            }
        }
        CheckItem::pass("anchor_hom")
    }

    /// Cyclic Jacobi sum on every frame triple `i < j < k`.
    pub fn check_jacobi_frame(&self) -> CheckItem {
        let basis: Vec<Section> = (0..self.rank()).map(|i| Section::basis(self, i)).collect();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                for k in j + 1..self.rank() {
                    let r = self.jacobiator(&basis[i], &basis[j], &basis[k]).expect("frame sections");
                    if !r.is_zero() {
                        return CheckItem::fail("jacobi_frame", Witness::new(vec![i + 1, j + 1, k + 1], r.render()));
                    }
                }
            }
        }
        CheckItem::pass("jacobi_frame")
    }

    /// Cyclic Jacobi sum on random section triples; the witness carries the
    /// 1-based trial number and the three sections.
    pub fn check_jacobi_random(&self, params: RandomJacobi) -> CheckItem {
        let mut rng = RandomSections::new(params.seed);
        for trial in 0..params.trials {
            let s = rng.section(self, params.max_degree);
            let t = rng.section(self, params.max_degree);
            let u = rng.section(self, params.max_degree);
            let r = self.jacobiator(&s, &t, &u).expect("sampled sections");
            if !r.is_zero() {
                let w = Witness::new(vec![trial + 1], r.render()).with_inputs(vec![s.render(), t.render(), u.render()]);
                return CheckItem::fail("jacobi_random", w);
            }
        }
        CheckItem::pass("jacobi_random")
    }

    pub fn check_axioms(&self, subject: &str, suite: Suite, random: RandomJacobi) -> CheckReport {
        let mut items = Vec::new();
        if matches!(suite, Suite::Axioms | Suite::All) {
            items.push(self.check_anchor_homomorphism());
        }
        items.push(self.check_jacobi_frame());
        if matches!(suite, Suite::Jacobi | Suite::All) {
            items.push(self.check_jacobi_random(random));
        }
        CheckReport::new(subject, items)
    }
}
