use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::algebroid::{Algebroid, AlgebroidError, StructureMap};
use crate::constructions::{
    AlgebroidAction, ConstructionError, InfinitesimalGroupAction, LieAlgebraPresentation, PoissonBivector,
    SplitExtension,
};
use crate::derivation::Derivation;
use crate::exactpoly::{is_identifier, Chart, ChartMap, Poly, VectorField};
use crate::morphism::AlgebroidMorphism;

use super::{DerivationFile, Document, ErrorKind, FileError, FsResolver, Kind, Resolver};

type R<T> = Result<T, FileError>;

const MAX_DEPTH: usize = 16;

/// Parses `text` (reported as `label`) as a document of the given kind.
pub fn parse_document(text: &str, label: &str, kind: Kind, resolver: &dyn Resolver) -> Result<Document, FileError> {
    Reader { file: label.to_string(), resolver, depth: 0 }.document(text, kind)
}

/// [`parse_document`] with filesystem references relative to the working directory.
pub fn parse_str(text: &str, kind: Kind) -> Result<Document, FileError> {
    parse_document(text, "<input>", kind, &FsResolver)
}

struct Reader<'a> {
    file: String,
    resolver: &'a dyn Resolver,
    depth: usize,
}

fn child(path: &str, key: &str) -> String {
    if is_identifier(key) {
        format!("{path}.{key}")
    } else {
        format!("{path}[{key:?}]")
    }
}

fn index(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

impl Reader<'_> {
    fn err(&self, kind: ErrorKind) -> FileError {
        FileError { file: self.file.clone(), kind }
    }

    fn schema(&self, path: &str, message: impl Into<String>) -> FileError {
        self.err(ErrorKind::Schema { path: path.to_string(), message: message.into() })
    }

    fn invalid(&self, path: &str, message: impl ToString) -> FileError {
        self.err(ErrorKind::Invalid { path: path.to_string(), message: message.to_string() })
    }

    fn document(&self, text: &str, kind: Kind) -> R<Document> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| self.err(ErrorKind::Syntax { line: e.line(), column: e.column(), message: e.to_string() }))?;
        let p = "$";
        Ok(match kind {
            Kind::Algebroid => Document::Algebroid(self.algebroid_object(&v, p)?),
            Kind::Morphism => Document::Morphism(self.morphism(&v, p)?),
            Kind::Derivation => Document::Derivation(self.derivation_file(&v, p)?),
            Kind::Action => Document::Action(self.action(&v, p)?),
            Kind::Extension => Document::Extension(self.extension(&v, p)?),
            Kind::Bivector => Document::Bivector(self.bivector(&v, p)?),
            Kind::GroupAction => Document::GroupAction(self.group_action(&v, p)?),
        })
    }

    fn object<'v>(&self, v: &'v Value, path: &str, required: &[&str], optional: &[&str]) -> R<&'v Map<String, Value>> {
        let m =
            v.as_object().ok_or_else(|| self.schema(path, format!("expected an object, found {}", type_name(v))))?;
        for key in m.keys() {
            if !required.contains(&key.as_str()) && !optional.contains(&key.as_str()) {
                return Err(self.schema(&child(path, key), "unknown key"));
            }
        }
        for key in required {
            if !m.contains_key(*key) {
                return Err(self.schema(path, format!("missing key \"{key}\"")));
            }
        }
        Ok(m)
    }

    fn string<'v>(&self, v: &'v Value, path: &str) -> R<&'v str> {
        v.as_str().ok_or_else(|| self.schema(path, format!("expected a string, found {}", type_name(v))))
    }

    fn array<'v>(&self, v: &'v Value, path: &str, len: Option<usize>) -> R<&'v [Value]> {
        let a = v.as_array().ok_or_else(|| self.schema(path, format!("expected an array, found {}", type_name(v))))?;
        match len {
            Some(n) if a.len() != n => Err(self.schema(path, format!("expected {n} entries, found {}", a.len()))),
            _ => Ok(a),
        }
    }

    fn count(&self, v: &Value, path: &str) -> R<usize> {
        v.as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| self.schema(path, format!("expected a non-negative integer, found {v}")))
    }

    fn names(&self, v: &Value, path: &str) -> R<Vec<String>> {
        self.array(v, path, None)?
            .iter()
            .enumerate()
            .map(|(i, x)| self.string(x, &index(path, i)).map(str::to_string))
            .collect()
    }

    fn chart(&self, v: &Value, path: &str) -> R<Chart> {
        let names = self.names(v, path)?;
        Chart::new(names).map_err(|e| self.invalid(path, e))
    }

    fn poly(&self, v: &Value, path: &str, chart: &Chart) -> R<Poly> {
        let s = self.string(v, path)?;
        Poly::parse(s, chart)
            .map_err(|e| self.err(ErrorKind::Grammar { path: path.to_string(), column: e.column, message: e.message }))
    }

    fn row(&self, v: &Value, path: &str, chart: &Chart, len: usize) -> R<Vec<Poly>> {
        self.array(v, path, Some(len))?.iter().enumerate().map(|(i, x)| self.poly(x, &index(path, i), chart)).collect()
    }

    fn matrix(&self, v: &Value, path: &str, chart: &Chart, rows: usize, cols: usize) -> R<Vec<Vec<Poly>>> {
        self.array(v, path, Some(rows))?
            .iter()
            .enumerate()
            .map(|(i, x)| self.row(x, &index(path, i), chart, cols))
            .collect()
    }

    /// `"i,j"` with `1 ≤ i < j ≤ n`, returned 0-based.
    fn pair(&self, key: &str, path: &str, n: usize) -> R<(usize, usize)> {
        let bad = || self.schema(path, format!("pair key {key:?} must have the form \"i,j\""));
        let (a, b) = key.split_once(',').ok_or_else(bad)?;
        let parse = |s: &str| -> Option<usize> {
            if !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit()) {
                s.parse().ok()
            } else {
                None
            }
        };
        let (i, j) = (parse(a).ok_or_else(bad)?, parse(b).ok_or_else(bad)?);
        if i >= j {
            return Err(self.schema(path, format!("pair keys must have i<j, found \"{key}\"")));
        }
        if i == 0 || j > n {
            return Err(self.schema(path, format!("pair \"{key}\" out of range 1..{n}")));
        }
        Ok((i - 1, j - 1))
    }

    fn field(&self, v: &Value, path: &str, chart: &Chart) -> R<VectorField> {
        let comps = self.row(v, path, chart, chart.dim())?;
        Ok(VectorField::new(chart, comps).expect("components parsed over the chart"))
    }

    /// Inline object or a reference to another algebroid file.
    fn algebroid(&self, v: &Value, path: &str) -> R<Algebroid> {
        let Value::String(reference) = v else {
            return self.algebroid_object(v, path);
        };
        if self.depth >= MAX_DEPTH {
            return Err(self.invalid(path, "file references nested too deeply"));
        }
        let (label, text) = self.resolver.load(reference, &self.file).map_err(|m| self.invalid(path, m))?;
        let nested = Reader { file: label, resolver: self.resolver, depth: self.depth + 1 };
        match nested.document(&text, Kind::Algebroid)? {
            Document::Algebroid(a) => Ok(a),
            _ => unreachable!(),
        }
    }

    fn algebroid_object(&self, v: &Value, path: &str) -> R<Algebroid> {
        let m = self.object(v, path, &["chart", "rank", "frame", "anchor"], &["structure"])?;
        let chart = self.chart(&m["chart"], &child(path, "chart"))?;
        let rank = self.count(&m["rank"], &child(path, "rank"))?;
        let frame_path = child(path, "frame");
        let frame = self.names(&m["frame"], &frame_path)?;
        if frame.len() != rank {
            return Err(self.schema(&frame_path, format!("expected {rank} frame names, found {}", frame.len())));
        }
        let anchor = self.matrix(&m["anchor"], &child(path, "anchor"), &chart, rank, chart.dim())?;
        let mut structure = StructureMap::new();
        if let Some(s) = m.get("structure") {
            let sp = child(path, "structure");
            let entries =
                s.as_object().ok_or_else(|| self.schema(&sp, format!("expected an object, found {}", type_name(s))))?;
            for (key, val) in entries {
                let kp = child(&sp, key);
                let ij = self.pair(key, &kp, rank)?;
                structure.insert(ij, self.row(val, &kp, &chart, rank)?);
            }
        }
        Algebroid::new(&chart, frame, anchor, structure).map_err(|e| match e {
            AlgebroidError::BadFrameName(_) | AlgebroidError::DuplicateFrameName(_) => self.invalid(&frame_path, e),
            _ => self.invalid(path, e),
        })
    }

    fn morphism(&self, v: &Value, path: &str) -> R<AlgebroidMorphism> {
        let m = self.object(v, path, &["source", "target", "phi", "matrix"], &[])?;
        let source = self.algebroid(&m["source"], &child(path, "source"))?;
        let target = self.algebroid(&m["target"], &child(path, "target"))?;
        let phi_path = child(path, "phi");
        let phi = self.row(&m["phi"], &phi_path, source.base(), target.base().dim())?;
        let base_map = ChartMap::new(source.base(), target.base(), phi).map_err(|e| self.invalid(&phi_path, e))?;
        let mp = child(path, "matrix");
        let matrix = self.matrix(&m["matrix"], &mp, source.base(), target.rank(), source.rank())?;
        AlgebroidMorphism::new(source, target, base_map, matrix).map_err(|e| self.invalid(path, e))
    }

    /// `{"matrix", "field"}` over `alg`.
    fn derivation_body(&self, m: &Map<String, Value>, path: &str, alg: &Algebroid) -> R<Derivation> {
        let r = alg.rank();
        let matrix = self.matrix(&m["matrix"], &child(path, "matrix"), alg.base(), r, r)?;
        let field = self.field(&m["field"], &child(path, "field"), alg.base())?;
        Derivation::new(alg, matrix, field).map_err(|e| self.invalid(path, e))
    }

    fn derivation_file(&self, v: &Value, path: &str) -> R<DerivationFile> {
        let m = self.object(v, path, &["algebroid", "matrix", "field"], &[])?;
        let algebroid = self.algebroid(&m["algebroid"], &child(path, "algebroid"))?;
        let derivation = self.derivation_body(m, path, &algebroid)?;
        Ok(DerivationFile { algebroid, derivation })
    }

    /// Projection coordinates, each a coordinate of `source`.
    fn q(&self, v: &Value, path: &str, source: &Chart, target: &Chart) -> R<Vec<String>> {
        let names = self.names(v, path)?;
        if names.len() != target.dim() {
            return Err(self.schema(path, format!("expected {} coordinate names, found {}", target.dim(), names.len())));
        }
        for (i, n) in names.iter().enumerate() {
            if source.index_of(n).is_none() {
                return Err(self.invalid(&index(path, i), format!("'{n}' is not a coordinate of {source}")));
            }
            if names[..i].contains(n) {
                return Err(self.invalid(&index(path, i), format!("'{n}' repeated")));
            }
        }
        Ok(names)
    }

    fn action(&self, v: &Value, path: &str) -> R<AlgebroidAction> {
        let m = self.object(v, path, &["acting", "acted", "q", "nabla"], &[])?;
        let acting = self.algebroid(&m["acting"], &child(path, "acting"))?;
        let acted = self.algebroid(&m["acted"], &child(path, "acted"))?;
        let qp = child(path, "q");
        let q = self.q(&m["q"], &qp, acted.base(), acting.base())?;
        let np = child(path, "nabla");
        let nabla = self
            .array(&m["nabla"], &np, Some(acting.rank()))?
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let dp = index(&np, i);
                let dm = self.object(d, &dp, &["matrix", "field"], &[])?;
                self.derivation_body(dm, &dp, &acted)
            })
            .collect::<R<Vec<_>>>()?;
        AlgebroidAction::along_projection(acting, acted, &q, nabla).map_err(|e| match e {
            ConstructionError::NotProjection => self.invalid(&qp, e),
            _ => self.invalid(path, e),
        })
    }

    fn extension(&self, v: &Value, path: &str) -> R<SplitExtension> {
        let m = self.object(v, path, &["total", "sub", "acting", "q", "split_rank"], &[])?;
        let total = self.algebroid(&m["total"], &child(path, "total"))?;
        let sub = self.algebroid(&m["sub"], &child(path, "sub"))?;
        let acting = self.algebroid(&m["acting"], &child(path, "acting"))?;
        let qp = child(path, "q");
        let q = self.q(&m["q"], &qp, sub.base(), acting.base())?;
        let rp = child(path, "split_rank");
        let split = self.count(&m["split_rank"], &rp)?;
        if split != acting.rank() {
            return Err(self.invalid(&rp, format!("split_rank {split} differs from the acting rank {}", acting.rank())));
        }
        SplitExtension::along_projection(total, sub, acting, &q).map_err(|e| match e {
            ConstructionError::NotProjection => self.invalid(&qp, e),
            _ => self.invalid(path, e),
        })
    }

    fn bivector(&self, v: &Value, path: &str) -> R<PoissonBivector> {
        let m = self.object(v, path, &["chart", "components"], &[])?;
        let chart = self.chart(&m["chart"], &child(path, "chart"))?;
        let cp = child(path, "components");
        let c = &m["components"];
        let entries =
            c.as_object().ok_or_else(|| self.schema(&cp, format!("expected an object, found {}", type_name(c))))?;
        let mut components = BTreeMap::new();
        for (key, val) in entries {
            let kp = child(&cp, key);
            let ab = self.pair(key, &kp, chart.dim())?;
            components.insert(ab, self.poly(val, &kp, &chart)?);
        }
        PoissonBivector::new(&chart, components).map_err(|e| self.invalid(path, e))
    }

    fn group_action(&self, v: &Value, path: &str) -> R<InfinitesimalGroupAction> {
        let m = self.object(v, path, &["algebra", "chart", "fields"], &[])?;
        let ap = child(path, "algebra");
        let am = self.object(&m["algebra"], &ap, &["basis"], &["constants"])?;
        let bp = child(&ap, "basis");
        let basis = self.names(&am["basis"], &bp)?;
        let n = basis.len();
        let point = Chart::point();
        let mut constants = BTreeMap::new();
        if let Some(c) = am.get("constants") {
            let cp = child(&ap, "constants");
            let entries =
                c.as_object().ok_or_else(|| self.schema(&cp, format!("expected an object, found {}", type_name(c))))?;
            for (key, val) in entries {
                let kp = child(&cp, key);
                let ij = self.pair(key, &kp, n)?;
                let row = self
                    .row(val, &kp, &point, n)?
                    .into_iter()
                    .map(|p| p.as_constant().expect("constant over the point"))
                    .collect();
                constants.insert(ij, row);
            }
        }
        let algebra = LieAlgebraPresentation::new(basis, constants).map_err(|e| self.invalid(&ap, e))?;
        let chart = self.chart(&m["chart"], &child(path, "chart"))?;
        let fp = child(path, "fields");
        let fields = self
            .array(&m["fields"], &fp, Some(n))?
            .iter()
            .enumerate()
            .map(|(i, f)| self.field(f, &index(&fp, i), &chart))
            .collect::<R<Vec<_>>>()?;
        InfinitesimalGroupAction::new(algebra, &chart, fields).map_err(|e| self.invalid(path, e))
    }
}
