use crate::algebroid::{Algebroid, StructureMap};
use crate::exactpoly::{ChartMap, Poly};
use crate::morphism::AlgebroidMorphism;

use super::{AlgebroidAction, ConstructionError};

/// Frame names of the product: `q_<e>` for the pulled-back acting frame, then the acted frame.
fn product_frame(act: &AlgebroidAction) -> Result<Vec<String>, ConstructionError> {
    let mut frame: Vec<String> = act.acting().frame().iter().map(|e| format!("q_{e}")).collect();
    for f in act.acted().frame() {
        if frame.contains(f) {
            return Err(ConstructionError::FrameNameClash(f.clone()));
        }
        frame.push(f.clone());
    }
    Ok(frame)
}

/// The semi-direct product `𝔤 ⋉ 𝔥` over `N`, on the frame `(q*e₁…q*e_r, f₁…f_s)`.
///
/// Anchor: `ρ(q*eᵢ) = Rᵢ`, `ρ(fₖ) = ρ_𝔥(fₖ)`. Frame brackets:
/// `[q*eᵢ, q*eⱼ] = Σₖ (cᵏᵢⱼ∘q) q*eₖ`, `[q*eᵢ, fₖ] = ∇ᵢ(fₖ)`, `[fₖ, fₗ] = [fₖ, fₗ]_𝔥`.
///
/// The action is validated first; `force` builds the product regardless,
/// which is how invalid actions are turned into testable algebroids.
pub fn semidirect_product(act: &AlgebroidAction, force: bool) -> Result<Algebroid, ConstructionError> {
    if !force {
        let report = act.check("action");
        if !report.passed() {
            return Err(ConstructionError::InvalidAction(Box::new(report)));
        }
    }
    let g = act.acting();
    let h = act.acted();
    let (r, s) = (g.rank(), h.rank());
    let n = h.base();
    let zero = Poly::zero(n);

    let mut anchor: Vec<Vec<Poly>> = (0..r).map(|i| act.lifted_field(i).components().to_vec()).collect();
    anchor.extend(h.anchor_matrix());

    let mut structure = StructureMap::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut c = act.pulled_structure(i, j);
            c.resize(r + s, zero.clone());
            structure.insert((i, j), c);
        }
        for k in 0..s {
            let mut c = vec![zero.clone(); r];
            c.extend(act.nabla()[i].column(k).into_coeffs());
            structure.insert((i, r + k), c);
        }
    }
    for (&(k, l), c) in h.structure() {
        let mut coeffs = vec![zero.clone(); r];
        coeffs.extend(c.iter().cloned());
        structure.insert((r + k, r + l), coeffs);
    }
    Ok(Algebroid::new(n, product_frame(act)?, anchor, structure)?)
}

/// `j: 𝔥 → 𝔤⋉𝔥`, `j(Y) = 0 ⊕ Y`, over the identity of `N`.
pub fn inclusion_morphism(act: &AlgebroidAction, product: &Algebroid) -> Result<AlgebroidMorphism, ConstructionError> {
    let (r, s) = (act.acting().rank(), act.acted().rank());
    let n = act.acted().base();
    let matrix = (0..r + s).map(|row| (0..s).map(|k| Poly::from_int(n, (row == r + k) as i64)).collect()).collect();
    Ok(AlgebroidMorphism::new(act.acted().clone(), product.clone(), ChartMap::identity(n), matrix)?)
}

/// `π: 𝔤⋉𝔥 → 𝔤` over `q`, `π(q*X ⊕ Y) = X`.
pub fn projection_morphism(act: &AlgebroidAction, product: &Algebroid) -> Result<AlgebroidMorphism, ConstructionError> {
    let (r, s) = (act.acting().rank(), act.acted().rank());
    let n = act.acted().base();
    let matrix = (0..r).map(|row| (0..r + s).map(|col| Poly::from_int(n, (row == col) as i64)).collect()).collect();
    Ok(AlgebroidMorphism::new(product.clone(), act.acting().clone(), act.q().clone(), matrix)?)
}
