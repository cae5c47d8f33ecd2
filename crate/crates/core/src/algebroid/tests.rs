use super::*;
use crate::exactpoly::Rational;
use crate::report::Verdict;

fn chart(names: &[&str]) -> Chart {
    Chart::new(names.iter().copied()).unwrap()
}

fn poly(c: &Chart, s: &str) -> Poly {
    Poly::parse(s, c).unwrap()
}

/// 1-based structure keys, as in the file format.
fn build(c: &Chart, anchor: &[&[&str]], structure: &[((usize, usize), &[&str])]) -> Algebroid {
    let frame = (1..=anchor.len()).map(|i| format!("e{i}")).collect();
    let anchor = anchor.iter().map(|row| row.iter().map(|s| poly(c, s)).collect()).collect();
    let structure =
        structure.iter().map(|&((i, j), cs)| ((i - 1, j - 1), cs.iter().map(|s| poly(c, s)).collect())).collect();
    Algebroid::new(c, frame, anchor, structure).unwrap()
}

fn so3_with(c312: &str, c123: &str) -> Algebroid {
    let c = chart(&["x", "y", "z"]);
    build(
        &c,
        &[&["0", "-z", "y"], &["z", "0", "-x"], &["-y", "x", "0"]],
        &[((1, 2), &["0", "0", c312]), ((2, 3), &[c123, "0", "0"]), ((1, 3), &["0", "1", "0"])],
    )
}

fn so3() -> Algebroid {
    so3_with("-1", "-1")
}

fn tangent(names: &[&str]) -> Algebroid {
    let c = chart(names);
    let rows: Vec<Vec<Poly>> =
        (0..c.dim()).map(|i| (0..c.dim()).map(|j| Poly::from_int(&c, (i == j) as i64)).collect()).collect();
    Algebroid::new(&c, names.iter().map(|n| format!("d_{n}")).collect(), rows, StructureMap::new()).unwrap()
}

fn sec(a: &Algebroid, coeffs: &[&str]) -> Section {
    Section::new(coeffs.iter().map(|s| poly(a.base(), s)).collect())
}

/// Frame Jacobiator from the structure-function formula
/// `Σ_cyc (Σ_l c^l_jk c^m_il + ρ_i(c^m_jk))`, independent of `bracket`.
fn jacobi_oracle(a: &Algebroid, i: usize, j: usize, k: usize) -> Vec<Poly> {
    let r = a.rank();
    let mut out = vec![Poly::zero(a.base()); r];
    for (p, q, s) in [(i, j, k), (j, k, i), (k, i, j)] {
        let cqs = a.structure_functions(q, s);
        for m in 0..r {
            for (l, cl) in cqs.iter().enumerate() {
                out[m] = &out[m] + &(cl * &a.structure_functions(p, l)[m]);
            }
            out[m] = &out[m] + &a.anchor_row(p).apply(&cqs[m]).unwrap();
        }
    }
    out
}

#[test]
fn rejects_malformed_presentations() {
    let c = chart(&["x"]);
    let one = || vec![poly(&c, "1")];
    assert!(matches!(
        Algebroid::new(&c, vec!["e".into(), "e".into()], vec![one(), one()], StructureMap::new()),
        Err(AlgebroidError::DuplicateFrameName(_))
    ));
    assert!(matches!(Algebroid::new(&c, vec!["e".into()], vec![], StructureMap::new()), Err(AlgebroidError::Shape(_))));
    let mut s = StructureMap::new();
    s.insert((1, 0), vec![poly(&c, "1"), poly(&c, "0")]);
    assert!(matches!(
        Algebroid::new(&c, vec!["a".into(), "b".into()], vec![one(), one()], s),
        Err(AlgebroidError::StructureKey(2, 1))
    ));
}

#[test]
fn zero_structure_entries_are_dropped() {
    let c = chart(&["x"]);
    let mut s = StructureMap::new();
    s.insert((0, 1), vec![poly(&c, "0"), poly(&c, "0")]);
    let a = Algebroid::new(&c, vec!["a".into(), "b".into()], vec![vec![poly(&c, "0")]; 2], s).unwrap();
    assert!(a.structure().is_empty());
    assert_eq!(a.structure_functions(1, 0), vec![Poly::zero(&c); 2]);
}

#[test]
fn anchor_of_examples() {
    let t = tangent(&["x"]);
    assert!(t.anchor_of(&Section::zero(&t)).unwrap().is_zero());
    assert_eq!(t.anchor_of(&sec(&t, &["x"])).unwrap().render(), vec!["x"]);
    let a = so3();
    assert_eq!(a.anchor_of(&Section::basis(&a, 0)).unwrap().render(), vec!["0", "-z", "y"]);
    assert!(a.anchor_of(&Section::new(vec![])).is_err());
}

#[test]
fn bracket_examples() {
    let t = tangent(&["x"]);
    let s = sec(&t, &["x"]);
    assert!(t.bracket(&s, &s).unwrap().is_zero());
    // x·(x²)′ − x²·(x)′ = 2x² − x² = x²
    assert_eq!(t.bracket(&s, &sec(&t, &["x^2"])).unwrap(), sec(&t, &["x^2"]));
    let a = so3();
    for i in 0..3 {
        for j in 0..3 {
            let b = a.bracket(&Section::basis(&a, i), &Section::basis(&a, j)).unwrap();
            assert_eq!(b.coeffs(), a.structure_functions(i, j).as_slice());
        }
    }
    let other = tangent(&["y"]);
    assert!(a.bracket(&Section::basis(&a, 0), &Section::basis(&other, 0)).is_err());
}

#[test]
fn anchor_homomorphism_checks() {
    let c = chart(&["x"]);
    let zero = Algebroid::new(&c, vec![], vec![], StructureMap::new()).unwrap();
    assert!(zero.check_anchor_homomorphism().passed());
    assert!(build(&c, &[&["0"], &["0"]], &[]).check_anchor_homomorphism().passed());
    assert!(so3().check_anchor_homomorphism().passed());
    let broken = so3_with("1", "-1").check_anchor_homomorphism();
    assert_eq!(broken.verdict, Verdict::Fail);
    let w = broken.witness.unwrap();
    assert_eq!(w.indices, vec![1, 2]);
    // [γ₁,γ₂] − (+1)γ₃ = (y∂x − x∂y) − (x∂y − y∂x) = 2y∂x − 2x∂y
    assert_eq!(w.residual, vec!["2*y", "-2*x", "0"]);
}

#[test]
fn jacobi_frame_checks() {
    let c = chart(&["x"]);
    let heis = build(&c, &[&["0"], &["0"], &["0"]], &[((1, 2), &["0", "0", "x"])]);
    assert!(heis.check_jacobi_frame().passed());
    assert!(jacobi_oracle(&heis, 0, 1, 2).iter().all(Poly::is_zero));
    assert!(so3().check_jacobi_frame().passed());
    let bad = so3_with("-1", "1 + y");
    let item = bad.check_jacobi_frame();
    assert!(!item.passed());
    let w = item.witness.unwrap();
    assert_eq!(w.indices, vec![1, 2, 3]);
    let oracle: Vec<String> = jacobi_oracle(&bad, 0, 1, 2).iter().map(Poly::to_string).collect();
    assert_eq!(w.residual, oracle);
    // rank ≤ 2 has no triples
    assert!(tangent(&["x", "y"]).check_jacobi_frame().passed());
}

#[test]
fn jacobi_random_checks() {
    assert!(tangent(&["x", "y"]).check_jacobi_random(RandomJacobi { trials: 10, max_degree: 2, seed: 7 }).passed());
    assert!(so3().check_jacobi_random(RandomJacobi { trials: 25, max_degree: 2, seed: 3 }).passed());
    let bad = so3_with("-1", "1 + y");
    let item = bad.check_jacobi_random(RandomJacobi { trials: 25, max_degree: 2, seed: 3 });
    assert!(!item.passed());
    let w = item.witness.unwrap();
    assert_eq!(w.inputs.len(), 3);
    let parsed: Vec<Section> =
        w.inputs.iter().map(|v| sec(&bad, &v.iter().map(String::as_str).collect::<Vec<_>>())).collect();
    let r = bad.jacobiator(&parsed[0], &parsed[1], &parsed[2]).unwrap();
    assert!(!r.is_zero());
    assert_eq!(r.render(), w.residual);
}

#[test]
fn generic_rank_examples() {
    let c = chart(&["x"]);
    assert_eq!(build(&c, &[&["0"], &["0"]], &[]).anchor_generic_rank(), 0);
    assert_eq!(tangent(&["x", "y"]).anchor_generic_rank(), 2);
    let a = so3();
    assert_eq!(a.anchor_generic_rank(), 2);
    // oracle: cofactor determinant vanishes, a 2×2 minor does not
    let m = a.anchor_matrix();
    let det = &(&m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1])))
        - &(&(&m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0])))
            - &(&m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]))));
    assert!(det.is_zero());
    let minor = &(&m[0][1] * &m[1][2]) - &(&m[0][2] * &m[1][1]);
    assert!(!minor.is_zero());
}

#[test]
fn generic_rank_needs_exact_division() {
    let c = chart(&["x", "y"]);
    let m: Vec<Vec<Poly>> = [["x", "y", "1"], ["x^2", "x*y", "x"], ["y", "x", "x + y"]]
        .iter()
        .map(|r| r.iter().map(|s| poly(&c, s)).collect())
        .collect();
    // row 2 = x · row 1, rows 1 and 3 independent
    assert_eq!(generic_rank(&m), 2);
    let pt = [Rational::from_integer(2.into()), Rational::from_integer(5.into())];
    assert!(!m[0][0].eval(&pt).eq(&m[2][0].eval(&pt)));
}
