//! JSON file formats for every object kind.
//!
//! Polynomials are always strings in the polynomial grammar. Nested
//! algebroids (`"algebroid"`, `"source"`, `"acting"`, …) are either inline
//! objects or strings naming another file, resolved through a [`Resolver`].

mod read;
mod write;

use std::fmt;
use std::path::{Path, PathBuf};

use crate::algebroid::Algebroid;
use crate::constructions::{AlgebroidAction, InfinitesimalGroupAction, PoissonBivector, SplitExtension};
use crate::derivation::Derivation;
use crate::morphism::AlgebroidMorphism;

pub use read::{parse_document, parse_str};
pub use write::{to_json, to_pretty_string};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Algebroid,
    Morphism,
    Derivation,
    Action,
    Extension,
    Bivector,
    GroupAction,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Algebroid,
        Kind::Morphism,
        Kind::Derivation,
        Kind::Action,
        Kind::Extension,
        Kind::Bivector,
        Kind::GroupAction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebroid => "algebroid",
            Kind::Morphism => "morphism",
            Kind::Derivation => "derivation",
            Kind::Action => "action",
            Kind::Extension => "extension",
            Kind::Bivector => "bivector",
            Kind::GroupAction => "group_action",
        }
    }

    pub fn from_name(name: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A derivation together with the algebroid it acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationFile {
    pub algebroid: Algebroid,
    pub derivation: Derivation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebroid(Algebroid),
    Morphism(AlgebroidMorphism),
    Derivation(DerivationFile),
    Action(AlgebroidAction),
    Extension(SplitExtension),
    Bivector(PoissonBivector),
    GroupAction(InfinitesimalGroupAction),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Algebroid(_) => Kind::Algebroid,
            Document::Morphism(_) => Kind::Morphism,
            Document::Derivation(_) => Kind::Derivation,
            Document::Action(_) => Kind::Action,
            Document::Extension(_) => Kind::Extension,
            Document::Bivector(_) => Kind::Bivector,
            Document::GroupAction(_) => Kind::GroupAction,
        }
    }
}

/// What went wrong, positioned inside the offending file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Io(String),
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// Wrong shape or type at a key path such as `$.anchor[1][0]`.
    Schema {
        path: String,
        message: String,
    },
    /// Polynomial grammar error; `column` is 1-based inside the string.
    Grammar {
        path: String,
        column: usize,
        message: String,
    },
    /// Well-formed data violating an object invariant.
    Invalid {
        path: String,
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct FileError {
    pub file: String,
    pub kind: ErrorKind,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ErrorKind::Io(m) => write!(f, "{}: {m}", self.file),
            ErrorKind::Syntax { line, column, message } => {
                write!(f, "{}: syntax error at line {line}, column {column}: {message}", self.file)
            }
            ErrorKind::Schema { path, message } => write!(f, "{}: schema violation at {path}: {message}", self.file),
            ErrorKind::Grammar { path, column, message } => {
                write!(f, "{}: polynomial grammar error at {path}, column {column}: {message}", self.file)
            }
            ErrorKind::Invalid { path, message } => write!(f, "{}: invalid data at {path}: {message}", self.file),
        }
    }
}

/// Loads the text behind a string reference found in file `from`.
pub trait Resolver {
    /// Returns the label to report errors against and the file text.
    fn load(&self, reference: &str, from: &str) -> Result<(String, String), String>;
}

/// References are paths relative to the referencing file's directory.
#[derive(Clone, Copy, Debug, Default)]
pub struct FsResolver;

impl Resolver for FsResolver {
    fn load(&self, reference: &str, from: &str) -> Result<(String, String), String> {
        let base = Path::new(from).parent().unwrap_or(Path::new(""));
        let path: PathBuf = base.join(reference);
        let label = path.display().to_string();
        let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read {label}: {e}"))?;
        Ok((label, text))
    }
}

/// Reads and validates `path` as a document of the given kind.
pub fn parse_file(path: impl AsRef<Path>, kind: Kind) -> Result<Document, FileError> {
    let path = path.as_ref();
    let label = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| FileError { file: label.clone(), kind: ErrorKind::Io(format!("cannot read file: {e}")) })?;
    parse_document(&text, &label, kind, &FsResolver)
}
