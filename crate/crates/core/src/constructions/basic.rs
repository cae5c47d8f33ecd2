use crate::algebroid::{Algebroid, AlgebroidError, StructureMap};
use crate::exactpoly::{Chart, ChartMap, Poly};
use crate::morphism::AlgebroidMorphism;

/// `T(M)` with the coordinate frame `∂/∂xₐ`, named `partial_<x>`.
pub fn tangent_algebroid(chart: &Chart) -> Algebroid {
    let m = chart.dim();
    let frame = chart.coords().iter().map(|c| format!("partial_{c}")).collect();
    let anchor = (0..m).map(|i| (0..m).map(|a| Poly::from_int(chart, (i == a) as i64)).collect()).collect();
    Algebroid::new(chart, frame, anchor, StructureMap::new()).expect("tangent presentation is well formed")
}

/// The rank-0 algebroid over `chart`.
pub fn zero_algebroid(chart: &Chart) -> Algebroid {
    Algebroid::new(chart, Vec::new(), Vec::new(), StructureMap::new()).expect("empty presentation")
}

/// A vector bundle with zero anchor and zero bracket.
pub fn vector_bundle(chart: &Chart, frame: Vec<String>) -> Result<Algebroid, AlgebroidError> {
    lie_algebra_bundle(chart, frame, StructureMap::new())
}

/// A bundle of Lie algebras: zero anchor, fiberwise structure functions.
pub fn lie_algebra_bundle(
    chart: &Chart,
    frame: Vec<String>,
    structure: StructureMap,
) -> Result<Algebroid, AlgebroidError> {
    let anchor = vec![vec![Poly::zero(chart); chart.dim()]; frame.len()];
    Algebroid::new(chart, frame, anchor, structure)
}

/// The anchor as a morphism `𝔤 → T(M)` over the identity.
pub fn anchor_morphism(alg: &Algebroid) -> AlgebroidMorphism {
    let tm = tangent_algebroid(alg.base());
    let m = alg.base().dim();
    let matrix = (0..m).map(|a| (0..alg.rank()).map(|i| alg.anchor_row(i).component(a).clone()).collect()).collect();
    AlgebroidMorphism::new(alg.clone(), tm, ChartMap::identity(alg.base()), matrix)
        .expect("anchor matrix has the right shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{RandomJacobi, Section};

    #[test]
    fn tangent_examples() {
        let x = Chart::new(["x"]).unwrap();
        let t = tangent_algebroid(&x);
        assert_eq!(t.rank(), 1);
        assert_eq!(t.anchor_matrix(), vec![vec![Poly::one(&x)]]);
        assert!(t.structure().is_empty());

        let xy = Chart::new(["x", "y"]).unwrap();
        let t2 = tangent_algebroid(&xy);
        assert!(t2.check_jacobi_random(RandomJacobi { trials: 10, max_degree: 2, seed: 1 }).passed());
        // [x∂x, y∂y] = x·∂x(y)∂y − y·∂y(x)∂x = 0
        let s = Section::new(vec![Poly::var(&xy, 0), Poly::zero(&xy)]);
        let u = Section::new(vec![Poly::zero(&xy), Poly::var(&xy, 1)]);
        assert!(t2.bracket(&s, &u).unwrap().is_zero());
    }

    #[test]
    fn zero_and_bundles() {
        let c = Chart::new(["x"]).unwrap();
        let z = zero_algebroid(&c);
        assert!(z.check_anchor_homomorphism().passed() && z.check_jacobi_frame().passed());
        assert!(z.check_jacobi_random(RandomJacobi::default()).passed());

        let p = |s: &str| Poly::parse(s, &c).unwrap();
        let frame = || vec!["a".to_string(), "b".to_string(), "z".to_string()];
        let mut heis = StructureMap::new();
        heis.insert((0, 1), vec![p("0"), p("0"), p("x")]);
        assert!(lie_algebra_bundle(&c, frame(), heis).unwrap().check_jacobi_frame().passed());

        // diagonal constants [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = x e2 satisfy Jacobi for every x
        let mut diag = StructureMap::new();
        diag.insert((0, 1), vec![p("0"), p("0"), p("1")]);
        diag.insert((1, 2), vec![p("1"), p("0"), p("0")]);
        diag.insert((0, 2), vec![p("0"), p("-x"), p("0")]);
        assert!(lie_algebra_bundle(&c, frame(), diag).unwrap().check_jacobi_frame().passed());

        // [e1,e2] = e3, [e1,e3] = x e1: cyclic sum = [e2, −x e1] = x e3
        let mut bad = StructureMap::new();
        bad.insert((0, 1), vec![p("0"), p("0"), p("1")]);
        bad.insert((0, 2), vec![p("x"), p("0"), p("0")]);
        let item = lie_algebra_bundle(&c, frame(), bad).unwrap().check_jacobi_frame();
        assert!(!item.passed());
        assert_eq!(item.witness.unwrap().residual, vec!["0", "0", "x"]);
    }

    #[test]
    fn anchor_map_is_a_morphism_of_tangent() {
        let c = Chart::new(["x", "y"]).unwrap();
        let t = tangent_algebroid(&c);
        assert!(anchor_morphism(&t).check("anchor").unwrap().passed());
    }
}
