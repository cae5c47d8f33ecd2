//! Executes a command on a parsed document and produces its report.

use std::fmt;

use crate::algebroid::{Algebroid, RandomJacobi, Suite};
use crate::constructions::{poisson_cotangent, semidirect_product, transformation_algebroid};
use crate::exactpoly::Poly;
use crate::files::{Document, Kind};
use crate::report::{CheckItem, CheckReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Check,
    CheckMorphism,
    CheckDerivation,
    CheckAction,
    BuildTransformation,
    BuildSemidirect,
    BuildPoisson,
    Curvature,
    Reconstruct,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Check,
        Command::CheckMorphism,
        Command::CheckDerivation,
        Command::CheckAction,
        Command::BuildTransformation,
        Command::BuildSemidirect,
        Command::BuildPoisson,
        Command::Curvature,
        Command::Reconstruct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::CheckMorphism => "check-morphism",
            Command::CheckDerivation => "check-derivation",
            Command::CheckAction => "check-action",
            Command::BuildTransformation => "build-transformation",
            Command::BuildSemidirect => "build-semidirect",
            Command::BuildPoisson => "build-poisson",
            Command::Curvature => "curvature",
            Command::Reconstruct => "reconstruct",
        }
    }

    pub fn from_name(name: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == name)
    }

    /// The document kind the command reads.
    pub fn input(self) -> Kind {
        match self {
            Command::Check => Kind::Algebroid,
            Command::CheckMorphism => Kind::Morphism,
            Command::CheckDerivation => Kind::Derivation,
            Command::CheckAction | Command::BuildSemidirect => Kind::Action,
            Command::BuildTransformation => Kind::GroupAction,
            Command::BuildPoisson => Kind::Bivector,
            Command::Curvature | Command::Reconstruct => Kind::Extension,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub suite: Suite,
    pub random: RandomJacobi,
    /// Build semi-direct products of actions that fail their check.
    pub force: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { suite: Suite::All, random: RandomJacobi::default(), force: false }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: CheckReport,
    /// The algebroid built by `build-*` and `reconstruct`, when the report allows it.
    pub output: Option<Algebroid>,
    /// Extra human-readable lines (curvature values, presentation issues).
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{command} expects a {expected} document, got {found}")]
pub struct WrongKind {
    pub command: Command,
    pub expected: Kind,
    pub found: Kind,
}

fn with_random(mut report: CheckReport, alg: &Algebroid, opts: &Options) -> CheckReport {
    if matches!(opts.suite, Suite::Jacobi | Suite::All) {
        report.items.push(alg.check_jacobi_random(opts.random));
        report = CheckReport::new(report.subject, report.items);
    }
    report
}

fn renamed(report: CheckReport, subject: &str) -> CheckReport {
    CheckReport::new(subject, report.items)
}

/// First anchor row or frame bracket on which two presentations over the same chart differ.
pub fn first_difference(a: &Algebroid, b: &Algebroid) -> Option<Witness> {
    if a.rank() != b.rank() || a.base() != b.base() {
        return Some(Witness::new(vec![], vec![format!("rank {} vs {}", a.rank(), b.rank())]));
    }
    let diff = |x: &[Poly], y: &[Poly]| -> Vec<String> { x.iter().zip(y).map(|(p, q)| (p - q).to_string()).collect() };
    for i in 0..a.rank() {
        let (x, y) = (a.anchor_row(i), b.anchor_row(i));
        if x != y {
            return Some(Witness::new(vec![i + 1], diff(x.components(), y.components())));
        }
    }
    for i in 0..a.rank() {
        for j in i + 1..a.rank() {
            let (x, y) = (a.structure_functions(i, j), b.structure_functions(i, j));
            if x != y {
                return Some(Witness::new(vec![i + 1, j + 1], diff(&x, &y)));
            }
        }
    }
    None
}

pub fn execute(command: Command, doc: &Document, subject: &str, opts: &Options) -> Result<Outcome, WrongKind> {
    let wrong = || WrongKind { command, expected: command.input(), found: doc.kind() };
    let plain = |report| Outcome { report, output: None, notes: Vec::new() };
    Ok(match (command, doc) {
        (Command::Check, Document::Algebroid(a)) => plain(a.check_axioms(subject, opts.suite, opts.random)),
        (Command::CheckMorphism, Document::Morphism(m)) => {
            plain(m.check(subject).expect("parsed morphisms are consistent"))
        }
        (Command::CheckDerivation, Document::Derivation(d)) => {
            plain(d.derivation.check(&d.algebroid, subject).expect("parsed derivations fit their algebroid"))
        }
        (Command::CheckAction, Document::Action(a)) => plain(a.check(subject)),
        (Command::BuildTransformation, Document::GroupAction(g)) => {
            let (alg, report) = transformation_algebroid(g);
            let report = with_random(renamed(report, subject), &alg, opts);
            Outcome { report, output: Some(alg), notes: Vec::new() }
        }
        (Command::BuildPoisson, Document::Bivector(b)) => {
            let (alg, report) = poisson_cotangent(b);
            let report = with_random(renamed(report, subject), &alg, opts);
            Outcome { report, output: Some(alg), notes: Vec::new() }
        }
        (Command::BuildSemidirect, Document::Action(a)) => {
            let action = a.check(subject);
            if !opts.force && !action.passed() {
                let notes = vec!["action check failed; no product built (use --force to build anyway)".to_string()];
                Outcome { report: action, output: None, notes }
            } else {
                let product = semidirect_product(a, true).expect("frame names of the factors are disjoint");
                let report = product.check_axioms(subject, opts.suite, opts.random);
                Outcome { report, output: Some(product), notes: Vec::new() }
            }
        }
        (Command::Curvature, Document::Extension(e)) => {
            let curvature = e.curvature_form();
            let mut notes: Vec<String> = curvature
                .kappa
                .iter()
                .map(|((i, j), s)| format!("kappa({},{}) = [{}]", i + 1, j + 1, s.render().join(", ")))
                .collect();
            notes.extend(curvature.issues.iter().map(|i| format!("presentation issue: {i}")));
            plain(e.check_flat(subject)).with_notes(notes)
        }
        (Command::Reconstruct, Document::Extension(e)) => match e.reconstruct() {
            Err(_) => {
                let flat = e.check_flat(subject);
                let kappa = flat.item("kappa_zero").expect("always reported").clone();
                plain(CheckReport::new(subject, vec![kappa]))
            }
            Ok(rec) => {
                let mut items = vec![CheckItem::pass("kappa_zero")];
                items.extend(rec.action_report.items.iter().cloned());
                items.push(CheckItem::from_witness("reconstruct_iso", first_difference(&rec.product, e.total())));
                let report = CheckReport::new(subject, items);
                let output = report.passed().then_some(rec.product);
                Outcome { report, output, notes: Vec::new() }
            }
        },
        _ => return Err(wrong()),
    })
}

impl Outcome {
    fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}
