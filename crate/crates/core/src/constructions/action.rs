use crate::algebroid::{Algebroid, Section};
use crate::derivation::Derivation;
use crate::exactpoly::{ChartMap, Poly, VectorField};
use crate::report::{CheckItem, CheckReport, Witness};

use super::ConstructionError;

/// An infinitesimal action of `𝔤` (over `M`) on `𝔥` (over `N`) along a
/// coordinate projection `q: N → M`, given by one derivation `∇ᵢ = (Dᵢ, Rᵢ)`
/// of `𝔥` per frame element `eᵢ` of `𝔤`. The action on general sections is
/// the `C∞(M)`-linear extension `∇_{Σgᵢeᵢ} = Σ (gᵢ∘q) ∇ᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebroidAction {
    acting: Algebroid,
    acted: Algebroid,
    q: ChartMap,
    nabla: Vec<Derivation>,
}

impl AlgebroidAction {
    pub fn new(
        acting: Algebroid,
        acted: Algebroid,
        q: ChartMap,
        nabla: Vec<Derivation>,
    ) -> Result<Self, ConstructionError> {
        if q.source() != acted.base() || q.target() != acting.base() || q.projection_indices().is_none() {
            return Err(ConstructionError::NotProjection);
        }
        if nabla.len() != acting.rank() {
            return Err(ConstructionError::Dimension(format!(
                "{} derivations for an acting algebroid of rank {}",
                nabla.len(),
                acting.rank()
            )));
        }
        for d in &nabla {
            // shape check against 𝔥
            Derivation::new(&acted, d.matrix().to_vec(), d.field().clone())?;
        }
        Ok(AlgebroidAction { acting, acted, q, nabla })
    }

    /// `q` given as the source coordinate names of the acting chart's coordinates, in order.
    pub fn along_projection(
        acting: Algebroid,
        acted: Algebroid,
        q_names: &[String],
        nabla: Vec<Derivation>,
    ) -> Result<Self, ConstructionError> {
        if q_names.len() != acting.base().dim() {
            return Err(ConstructionError::NotProjection);
        }
        let q = ChartMap::projection(acted.base(), q_names).map_err(|_| ConstructionError::NotProjection)?;
        // the projection's target chart must be the acting chart, names included
        let q = ChartMap::new(acted.base(), acting.base(), q.formulas().to_vec())
            .map_err(|_| ConstructionError::NotProjection)?;
        AlgebroidAction::new(acting, acted, q, nabla)
    }

    pub fn acting(&self) -> &Algebroid {
        &self.acting
    }

    pub fn acted(&self) -> &Algebroid {
        &self.acted
    }

    pub fn q(&self) -> &ChartMap {
        &self.q
    }

    /// Source coordinate names forming the projection.
    pub fn q_names(&self) -> Vec<String> {
        let idx = self.q.projection_indices().expect("validated projection");
        idx.iter().map(|&i| self.acted.base().name(i).to_string()).collect()
    }

    pub fn nabla(&self) -> &[Derivation] {
        &self.nabla
    }

    /// `Rᵢ`, the base field of `∇ᵢ`.
    pub fn lifted_field(&self, i: usize) -> &VectorField {
        self.nabla[i].field()
    }

    /// `cᵏᵢⱼ ∘ q`.
    pub fn pulled_structure(&self, i: usize, j: usize) -> Vec<Poly> {
        self.acting
            .structure_functions(i, j)
            .iter()
            .map(|c| self.q.pullback(c).expect("structure functions live on the acting base"))
            .collect()
    }

    /// First failing derivation axiom across all `∇ᵢ`; the witness is
    /// prefixed with the 1-based index `i`.
    fn derivation_item(&self, name: &str, defect: impl Fn(&Derivation) -> Option<Witness>) -> CheckItem {
        for (i, d) in self.nabla.iter().enumerate() {
            if let Some(mut w) = defect(d) {
                w.indices.insert(0, i + 1);
                return CheckItem::fail(name, w);
            }
        }
        CheckItem::pass(name)
    }

    /// `dq∘ρ_𝔥 = 0`: each `ρ(fₖ)` pushes forward to the zero field.
    fn family_defect(&self) -> Option<Witness> {
        let zero = VectorField::zero(self.acting.base());
        for k in 0..self.acted.rank() {
            let r = self.q.pushforward_residual(self.acted.anchor_row(k), &zero).expect("charts match q");
            if r.iter().any(|p| !p.is_zero()) {
                return Some(Witness::new(vec![k + 1], r.iter().map(Poly::to_string).collect()));
            }
        }
        None
    }

    /// `Rᵢ` is `q`-related to `ρ(eᵢ)`.
    fn projectability_defect(&self) -> Option<Witness> {
        for i in 0..self.acting.rank() {
            let r =
                self.q.pushforward_residual(self.lifted_field(i), self.acting.anchor_row(i)).expect("charts match q");
            if r.iter().any(|p| !p.is_zero()) {
                return Some(Witness::new(vec![i + 1], r.iter().map(Poly::to_string).collect()));
            }
        }
        None
    }

    /// `[∇ᵢ, ∇ⱼ] = Σₖ (cᵏᵢⱼ∘q) ∇ₖ` as derivations. The residual lists the
    /// derivation matrix columns followed by the base field components.
    fn homomorphism_defect(&self) -> Option<Witness> {
        let h = &self.acted;
        for i in 0..self.acting.rank() {
            for j in i + 1..self.acting.rank() {
                let lhs = self.nabla[i].bracket(&self.nabla[j], h).expect("validated derivations");
                let rhs = self.combine(&self.pulled_structure(i, j));
                let diff = lhs.sub(&rhs).expect("same chart");
                if !diff.is_zero() {
                    let mut residual: Vec<String> = (0..h.rank()).flat_map(|c| diff.column(c).render()).collect();
                    residual.extend(diff.field().render());
                    return Some(Witness::new(vec![i + 1, j + 1], residual));
                }
            }
        }
        None
    }

    /// `Σₖ gₖ ∇ₖ` for functions `gₖ` on `N`.
    pub fn combine(&self, g: &[Poly]) -> Derivation {
        g.iter().zip(&self.nabla).fold(Derivation::zero(&self.acted), |acc, (gk, d)| {
            if gk.is_zero() {
                acc
            } else {
                acc.add(&d.scale(gk).expect("same chart")).expect("same chart")
            }
        })
    }

    /// `∇_{eᵢ}(y)`.
    pub fn act(&self, i: usize, y: &Section) -> Section {
        self.nabla[i].apply(&self.acted, y).expect("section of the acted algebroid")
    }

    /// Items `derivation_i`, `derivation_ii`, `derivation_iii`,
    /// `action_family`, `action_project`, `action_hom`.
    pub fn check(&self, subject: &str) -> CheckReport {
        let h = &self.acted;
        let items = vec![
            self.derivation_item("derivation_i", |d| d.bracket_defect(h).expect("validated")),
            self.derivation_item("derivation_ii", |d| d.leibniz_defect(h).expect("validated")),
            self.derivation_item("derivation_iii", |d| d.anchor_defect(h).expect("validated")),
            CheckItem::from_witness("action_family", self.family_defect()),
            CheckItem::from_witness("action_project", self.projectability_defect()),
            CheckItem::from_witness("action_hom", self.homomorphism_defect()),
        ];
        CheckReport::new(subject, items)
    }
}
