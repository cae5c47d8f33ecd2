use crate::algebroid::{Algebroid, Section};
use crate::derivation::Derivation;
use crate::exactpoly::{ChartMap, Poly};
use crate::report::{CheckItem, CheckReport, Witness};

use super::{semidirect_product, AlgebroidAction, ConstructionError};

/// A split extension `0 → 𝔥 → 𝔨 → q*𝔤 → 0` in an adapted frame: the first
/// `r = rank 𝔤` frame elements of `𝔨` are the splitting `i(q*eᵢ)`, the last
/// `s = rank 𝔥` are `j(fₖ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitExtension {
    total: Algebroid,
    sub: Algebroid,
    acting: Algebroid,
    q: ChartMap,
}

/// Curvature `κ` of the splitting together with the connection it induces.
#[derive(Clone, Debug)]
pub struct Curvature {
    /// `κ(eᵢ, eⱼ)` as sections of `𝔥`, for `i < j` (0-based).
    pub kappa: Vec<((usize, usize), Section)>,
    /// `∇ᵢ(fₖ) = [i(q*eᵢ), j(fₖ)]`, `Rᵢ = ρ(i(q*eᵢ))`.
    pub connection: AlgebroidAction,
    /// False when a bracket of `𝔨` has a `q*𝔤`-component the presentation
    /// does not allow (mixed brackets must lie in `𝔥`, and `[i(q*eᵢ), i(q*eⱼ)]`
    /// must project to `q*[eᵢ, eⱼ]`).
    pub consistent: bool,
    pub issues: Vec<String>,
}

impl Curvature {
    pub fn is_zero(&self) -> bool {
        self.kappa.iter().all(|(_, s)| s.is_zero())
    }

    /// 1-based pairs with nonzero curvature.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize)> {
        self.kappa.iter().filter(|(_, s)| !s.is_zero()).map(|((i, j), _)| (i + 1, j + 1)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub action: AlgebroidAction,
    pub action_report: CheckReport,
    pub product: Algebroid,
    /// Anchor matrix and structure functions of the product equal those of `𝔨`.
    pub isomorphic: bool,
}

impl Reconstruction {
    pub fn succeeded(&self) -> bool {
        self.action_report.passed() && self.isomorphic
    }
}

impl SplitExtension {
    pub fn new(total: Algebroid, sub: Algebroid, acting: Algebroid, q: ChartMap) -> Result<Self, ConstructionError> {
        if q.source() != sub.base() || q.target() != acting.base() || q.projection_indices().is_none() {
            return Err(ConstructionError::NotProjection);
        }
        if total.base() != sub.base() {
            return Err(ConstructionError::SubMismatch(format!(
                "total base {} vs sub base {}",
                total.base(),
                sub.base()
            )));
        }
        let (r, s) = (acting.rank(), sub.rank());
        if total.rank() != r + s {
            return Err(ConstructionError::Dimension(format!("total rank {} != {r} + {s}", total.rank())));
        }
        for k in 0..s {
            if total.anchor_row(r + k) != sub.anchor_row(k) {
                return Err(ConstructionError::SubMismatch(format!("anchor of frame element {}", r + k + 1)));
            }
            for l in k + 1..s {
                let expected: Vec<Poly> =
                    std::iter::repeat_n(Poly::zero(sub.base()), r).chain(sub.structure_functions(k, l)).collect();
                if total.structure_functions(r + k, r + l) != expected {
                    return Err(ConstructionError::SubMismatch(format!("bracket ({},{})", r + k + 1, r + l + 1)));
                }
            }
        }
        Ok(SplitExtension { total, sub, acting, q })
    }

    pub fn along_projection(
        total: Algebroid,
        sub: Algebroid,
        acting: Algebroid,
        q_names: &[String],
    ) -> Result<Self, ConstructionError> {
        if q_names.len() != acting.base().dim() {
            return Err(ConstructionError::NotProjection);
        }
        let proj = ChartMap::projection(sub.base(), q_names).map_err(|_| ConstructionError::NotProjection)?;
        let q = ChartMap::new(sub.base(), acting.base(), proj.formulas().to_vec())
            .map_err(|_| ConstructionError::NotProjection)?;
        SplitExtension::new(total, sub, acting, q)
    }

    /// The extension `0 → 𝔥 → 𝔤⋉𝔥 → q*𝔤 → 0` of a (possibly invalid) action.
    pub fn from_action(act: &AlgebroidAction) -> Result<Self, ConstructionError> {
        let total = semidirect_product(act, true)?;
        SplitExtension::new(total, act.acted().clone(), act.acting().clone(), act.q().clone())
    }

    pub fn total(&self) -> &Algebroid {
        &self.total
    }

    pub fn sub(&self) -> &Algebroid {
        &self.sub
    }

    pub fn acting(&self) -> &Algebroid {
        &self.acting
    }

    pub fn q(&self) -> &ChartMap {
        &self.q
    }

    pub fn split_rank(&self) -> usize {
        self.acting.rank()
    }

    pub fn q_names(&self) -> Vec<String> {
        let idx = self.q.projection_indices().expect("validated projection");
        idx.iter().map(|&i| self.sub.base().name(i).to_string()).collect()
    }

    /// `j(κ(eᵢ,eⱼ)) = [i(q*eᵢ), i(q*eⱼ)]_𝔨 − i(q*[eᵢ,eⱼ])` and the connection
    /// `j(∇ᵢ(fₖ)) = [i(q*eᵢ), j(fₖ)]_𝔨`.
    pub fn curvature_form(&self) -> Curvature {
        let (r, s) = (self.split_rank(), self.sub.rank());
        let k = &self.total;
        let basis: Vec<Section> = (0..r + s).map(|i| Section::basis(k, i)).collect();
        let mut issues = Vec::new();
        let mut kappa = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let b = k.bracket(&basis[i], &basis[j]).expect("frame sections").into_coeffs();
                let lifted: Vec<Poly> = self
                    .acting
                    .structure_functions(i, j)
                    .iter()
                    .map(|c| self.q.pullback(c).expect("acting base"))
                    .collect();
                if b[..r] != lifted[..] {
                    issues.push(format!("[k{},k{}] does not project to q*[e{},e{}]", i + 1, j + 1, i + 1, j + 1));
                }
                kappa.push(((i, j), Section::new(b[r..].to_vec())));
            }
        }
        let mut nabla = Vec::with_capacity(r);
        for i in 0..r {
            let mut columns = Vec::with_capacity(s);
            for l in 0..s {
                let b = k.bracket(&basis[i], &basis[r + l]).expect("frame sections").into_coeffs();
                if b[..r].iter().any(|p| !p.is_zero()) {
                    issues.push(format!("[k{},k{}] has a component outside the subalgebroid", i + 1, r + l + 1));
                }
                columns.push(Section::new(b[r..].to_vec()));
            }
            let d = Derivation::from_columns(&self.sub, &columns, k.anchor_row(i).clone())
                .expect("shapes follow the frame");
            nabla.push(d);
        }
        let connection = AlgebroidAction::new(self.acting.clone(), self.sub.clone(), self.q.clone(), nabla)
            .expect("validated extension data");
        Curvature { kappa, connection, consistent: issues.is_empty(), issues }
    }

    /// Items `flatness` (`[κ(eᵢ,eⱼ), fₖ] = 0` for all `i<j`, `k`) and `kappa_zero`.
    pub fn check_flat(&self, subject: &str) -> CheckReport {
        let curvature = self.curvature_form();
        let h = &self.sub;
        let mut flat = None;
        'outer: for ((i, j), kappa) in &curvature.kappa {
            for l in 0..h.rank() {
                let b = h.bracket(kappa, &Section::basis(h, l)).expect("sections of the subalgebroid");
                if !b.is_zero() {
                    flat = Some(Witness::new(vec![i + 1, j + 1, l + 1], b.render()));
                    break 'outer;
                }
            }
        }
        let kappa_zero = curvature
            .kappa
            .iter()
            .find(|(_, s)| !s.is_zero())
            .map(|((i, j), s)| Witness::new(vec![i + 1, j + 1], s.render()));
        CheckReport::new(
            subject,
            vec![CheckItem::from_witness("flatness", flat), CheckItem::from_witness("kappa_zero", kappa_zero)],
        )
    }

    /// Reads the action off a flat-with-zero-curvature splitting, rebuilds
    /// `𝔤⋉𝔥`, and compares it with `𝔨`.
    pub fn reconstruct(&self) -> Result<Reconstruction, ConstructionError> {
        let curvature = self.curvature_form();
        if !curvature.is_zero() {
            return Err(ConstructionError::KappaNonzero(curvature.nonzero_pairs()));
        }
        let action = curvature.connection;
        let action_report = action.check("reconstructed_action");
        let product = semidirect_product(&action, true)?;
        let isomorphic =
            product.anchor_matrix() == self.total.anchor_matrix() && product.structure() == self.total.structure();
        Ok(Reconstruction { action, action_report, product, isomorphic })
    }
}
