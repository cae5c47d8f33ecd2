use serde_json::{json, Map, Value};

use crate::algebroid::Algebroid;
use crate::constructions::{AlgebroidAction, InfinitesimalGroupAction, PoissonBivector, SplitExtension};
use crate::derivation::Derivation;
use crate::exactpoly::{Chart, Poly, VectorField};
use crate::morphism::AlgebroidMorphism;

use super::{DerivationFile, Document};

fn polys(ps: &[Poly]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

fn matrix(rows: &[Vec<Poly>]) -> Value {
    Value::Array(rows.iter().map(|r| polys(r)).collect())
}

fn field(v: &VectorField) -> Value {
    polys(v.components())
}

fn chart(c: &Chart) -> Value {
    json!(c.coords())
}

fn key(i: usize, j: usize) -> String {
    format!("{},{}", i + 1, j + 1)
}

pub(crate) fn algebroid(a: &Algebroid) -> Value {
    let structure: Map<String, Value> = a.structure().iter().map(|(&(i, j), c)| (key(i, j), polys(c))).collect();
    json!({
        "chart": chart(a.base()),
        "rank": a.rank(),
        "frame": a.frame(),
        "anchor": matrix(&a.anchor_matrix()),
        "structure": structure,
    })
}

fn derivation_body(d: &Derivation) -> Value {
    json!({ "matrix": matrix(d.matrix()), "field": field(d.field()) })
}

fn morphism(m: &AlgebroidMorphism) -> Value {
    json!({
        "source": algebroid(m.source()),
        "target": algebroid(m.target()),
        "phi": polys(m.base_map().formulas()),
        "matrix": matrix(m.matrix()),
    })
}

fn derivation_file(d: &DerivationFile) -> Value {
    json!({
        "algebroid": algebroid(&d.algebroid),
        "matrix": matrix(d.derivation.matrix()),
        "field": field(d.derivation.field()),
    })
}

fn action(a: &AlgebroidAction) -> Value {
    json!({
        "acting": algebroid(a.acting()),
        "acted": algebroid(a.acted()),
        "q": a.q_names(),
        "nabla": a.nabla().iter().map(derivation_body).collect::<Vec<_>>(),
    })
}

fn extension(e: &SplitExtension) -> Value {
    json!({
        "total": algebroid(e.total()),
        "sub": algebroid(e.sub()),
        "acting": algebroid(e.acting()),
        "q": e.q_names(),
        "split_rank": e.split_rank(),
    })
}

fn bivector(b: &PoissonBivector) -> Value {
    let components: Map<String, Value> =
        b.components().iter().map(|(&(i, j), p)| (key(i, j), Value::String(p.to_string()))).collect();
    json!({ "chart": chart(b.chart()), "components": components })
}

fn group_action(g: &InfinitesimalGroupAction) -> Value {
    let point = Chart::point();
    let constants: Map<String, Value> = g
        .algebra()
        .constants()
        .iter()
        .map(|(&(i, j), c)| (key(i, j), c.iter().map(|q| Poly::constant(&point, q.clone()).to_string()).collect()))
        .collect();
    json!({
        "algebra": { "basis": g.algebra().basis(), "constants": constants },
        "chart": chart(g.chart()),
        "fields": g.fields().iter().map(field).collect::<Vec<_>>(),
    })
}

/// The document as JSON; nested algebroids are always written inline.
pub fn to_json(doc: &Document) -> Value {
    match doc {
        Document::Algebroid(a) => algebroid(a),
        Document::Morphism(m) => morphism(m),
        Document::Derivation(d) => derivation_file(d),
        Document::Action(a) => action(a),
        Document::Extension(e) => extension(e),
        Document::Bivector(b) => bivector(b),
        Document::GroupAction(g) => group_action(g),
    }
}

/// Two-space indented JSON with a trailing newline.
pub fn to_pretty_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
