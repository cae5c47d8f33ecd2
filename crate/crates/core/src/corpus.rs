//! The bundled fixture corpus and its expected-verdict manifest.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::files::{parse_document, FileError, Resolver};
use crate::report::{CheckReport, Verdict};
use crate::runner::{execute, Command, Options};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name)))),*]
    };
}

/// `(file name, contents)` of every bundled fixture.
pub const FIXTURES: &[(&str, &str)] = fixtures![
    "affine_flat.json",
    "affine_scaling.json",
    "anchor_so3.json",
    "broken_bundle.json",
    "broken_derivation_action.json",
    "broken_derivation_iii.json",
    "broken_derivation_so3.json",
    "broken_family.json",
    "broken_hom.json",
    "broken_lie_poisson_cotangent.json",
    "broken_project.json",
    "broken_so3.json",
    "broken_tangent_r2.json",
    "ext_atiyah_bad.json",
    "ext_heisenberg.json",
    "ext_semidirect_affine.json",
    "ext_semidirect_atiyah.json",
    "ext_semidirect_rotations.json",
    "ext_so3_twisted.json",
    "family_base.json",
    "foliation_on_foliation.json",
    "foliation_shear.json",
    "heisenberg_bundle.json",
    "heisenberg_grading.json",
    "inner_so3.json",
    "lie_poisson_cotangent.json",
    "lie_poisson_so3.json",
    "non_poisson_r4.json",
    "project_base.json",
    "sl2_broken.json",
    "sl2_linear.json",
    "sl2_transformation.json",
    "so3_algebra.json",
    "so3_bundle.json",
    "so3_doubled.json",
    "so3_identity.json",
    "so3_on_tangent_r3.json",
    "so3_rotation_algebra.json",
    "so3_rotations.json",
    "so3_sign_corrupted.json",
    "so3_transformation.json",
    "symplectic_cotangent.json",
    "symplectic_r2.json",
    "tangent_on_plane.json",
    "tangent_on_so3.json",
    "tangent_projection.json",
    "tangent_r1.json",
    "tangent_r2.json",
    "tangent_r3.json",
    "zero_action.json",
    "zero_bundle.json",
    "zero_r2.json",
];

pub const MANIFEST: &str = include_str!("../corpus/manifest.json");

pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Resolves references by fixture name.
#[derive(Clone, Copy, Debug, Default)]
pub struct CorpusResolver;

impl Resolver for CorpusResolver {
    fn load(&self, reference: &str, _from: &str) -> Result<(String, String), String> {
        fixture(reference)
            .map(|t| (reference.to_string(), t.to_string()))
            .ok_or_else(|| format!("no bundled fixture named {reference}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub fixture: String,
    pub command: String,
    pub expect: Verdict,
}

impl Entry {
    pub fn command(&self) -> Command {
        Command::from_name(&self.command).expect("manifest names known commands")
    }
}

pub fn manifest() -> Vec<Entry> {
    serde_json::from_str(MANIFEST).expect("bundled manifest is valid")
}

#[derive(Clone, Debug)]
pub struct EntryResult {
    pub entry: Entry,
    pub report: CheckReport,
}

impl EntryResult {
    pub fn matched(&self) -> bool {
        self.report.overall == self.entry.expect
    }
}

/// Parses a bundled fixture as the document its command expects.
pub fn load(entry: &Entry) -> Result<crate::files::Document, FileError> {
    let text = fixture(&entry.fixture).unwrap_or_else(|| panic!("manifest names a missing fixture {}", entry.fixture));
    parse_document(text, &entry.fixture, entry.command().input(), &CorpusResolver)
}

/// Runs every manifest entry in order.
pub fn run(opts: &Options) -> Result<Vec<EntryResult>, FileError> {
    manifest()
        .into_iter()
        .map(|entry| {
            let doc = load(&entry)?;
            let subject = format!("{} {}", entry.command, entry.fixture);
            let command = entry.command();
            // semi-direct products of broken actions are built on purpose
            let opts = Options { force: true, ..*opts };
            let outcome = execute(command, &doc, &subject, &opts).expect("command matches its input kind");
            Ok(EntryResult { entry, report: outcome.report })
        })
        .collect()
}

pub fn results_json(results: &[EntryResult]) -> Value {
    let entries: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "fixture": r.entry.fixture,
                "command": r.entry.command,
                "expect": r.entry.expect,
                "matched": r.matched(),
                "report": r.report,
            })
        })
        .collect();
    let matched = results.iter().filter(|r| r.matched()).count();
    json!({ "entries": entries, "matched": matched, "total": results.len() })
}
