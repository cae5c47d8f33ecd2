#![allow(dead_code)]

pub mod schouten;

use algebroidkit::algebroid::Algebroid;
use algebroidkit::constructions::{poisson_cotangent, transformation_algebroid, AlgebroidAction, SplitExtension};
use algebroidkit::corpus::{self, CorpusResolver, Entry};
use algebroidkit::exactpoly::{Chart, Poly};
use algebroidkit::files::{parse_document, Document, Kind};
use algebroidkit::report::Verdict;

pub fn chart(names: &[&str]) -> Chart {
    Chart::new(names.iter().copied()).unwrap()
}

pub fn poly(c: &Chart, s: &str) -> Poly {
    Poly::parse(s, c).unwrap()
}

pub fn load(name: &str, kind: Kind) -> Document {
    let text = corpus::fixture(name).unwrap_or_else(|| panic!("no fixture {name}"));
    parse_document(text, name, kind, &CorpusResolver).unwrap()
}

pub fn algebroid(name: &str) -> Algebroid {
    match load(name, Kind::Algebroid) {
        Document::Algebroid(a) => a,
        _ => unreachable!(),
    }
}

pub fn action(name: &str) -> AlgebroidAction {
    match load(name, Kind::Action) {
        Document::Action(a) => a,
        _ => unreachable!(),
    }
}

pub fn extension(name: &str) -> SplitExtension {
    match load(name, Kind::Extension) {
        Document::Extension(e) => e,
        _ => unreachable!(),
    }
}

fn entries(command: &str, expect: Verdict) -> Vec<Entry> {
    corpus::manifest().into_iter().filter(|e| e.command == command && e.expect == expect).collect()
}

/// Every algebroid the corpus expects to be valid: the `check` fixtures plus
/// the outputs of the passing builders.
pub fn valid_algebroids() -> Vec<(String, Algebroid)> {
    let mut out: Vec<(String, Algebroid)> =
        entries("check", Verdict::Pass).into_iter().map(|e| (e.fixture.clone(), algebroid(&e.fixture))).collect();
    for e in entries("build-transformation", Verdict::Pass) {
        let Document::GroupAction(g) = load(&e.fixture, Kind::GroupAction) else { unreachable!() };
        out.push((format!("transformation({})", e.fixture), transformation_algebroid(&g).0));
    }
    for e in entries("build-poisson", Verdict::Pass) {
        let Document::Bivector(b) = load(&e.fixture, Kind::Bivector) else { unreachable!() };
        out.push((format!("cotangent({})", e.fixture), poisson_cotangent(&b).0));
    }
    out
}

pub fn broken_algebroids() -> Vec<(String, Algebroid)> {
    entries("check", Verdict::Fail).into_iter().map(|e| (e.fixture.clone(), algebroid(&e.fixture))).collect()
}

pub fn valid_actions() -> Vec<(String, AlgebroidAction)> {
    entries("check-action", Verdict::Pass).into_iter().map(|e| (e.fixture.clone(), action(&e.fixture))).collect()
}

pub fn broken_actions() -> Vec<(String, AlgebroidAction)> {
    entries("check-action", Verdict::Fail).into_iter().map(|e| (e.fixture.clone(), action(&e.fixture))).collect()
}

pub type BivectorSpec = (&'static str, &'static [&'static str], &'static [(usize, usize, &'static str)]);

/// Ten bivectors `(chart, [(a, b, Πᵃᵇ)])`, 1-based `a < b`.
pub const BIVECTORS: [BivectorSpec; 10] = [
    ("symplectic_r2", &["x1", "x2"], &[(1, 2, "1")]),
    ("lie_poisson_so3", &["x1", "x2", "x3"], &[(1, 2, "x3"), (2, 3, "x1"), (1, 3, "-x2")]),
    ("symplectic_plus_x1", &["x1", "x2", "x3", "x4"], &[(1, 2, "1"), (3, 4, "x1")]),
    ("planar_quadratic", &["x1", "x2"], &[(1, 2, "x1^2 + x2")]),
    ("casimir_x3", &["x1", "x2", "x3"], &[(1, 2, "x3")]),
    ("curl_free", &["x1", "x2", "x3"], &[(1, 2, "x3"), (2, 3, "x1")]),
    ("rotation_plus_const", &["x1", "x2", "x3"], &[(1, 2, "1"), (2, 3, "-x2"), (1, 3, "-x1")]),
    ("quadratic_cyclic", &["x1", "x2", "x3"], &[(1, 2, "x1*x2"), (2, 3, "x2*x3"), (1, 3, "x1*x3")]),
    ("split_blocks", &["x1", "x2", "x3", "x4"], &[(1, 2, "x1"), (3, 4, "x3")]),
    ("coupled_blocks", &["x1", "x2", "x3", "x4"], &[(1, 2, "x3"), (3, 4, "1")]),
];
