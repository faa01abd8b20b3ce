//! The bundled corpus of presentations with their expected outcomes.
//!
//! Setting `LYNDON_PBW_CORPUS` to a directory makes `run-all` read the files
//! from there instead of the copies compiled into the binary.

use std::path::Path;

use super::pipeline::{run_source, Options, Stage};

pub const CORPUS_DIR_VAR: &str = "LYNDON_PBW_CORPUS";

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub file: &'static str,
    pub description: &'static str,
    pub stage: Stage,
    pub expected_exit: i32,
    pub bundled: &'static str,
}

macro_rules! entry {
    ($name:literal, $desc:literal, $stage:expr, $exit:literal) => {
        CorpusEntry {
            name: $name,
            file: concat!($name, ".json"),
            description: $desc,
            stage: $stage,
            expected_exit: $exit,
            bundled: include_str!(concat!("../../corpus/", $name, ".json")),
        }
    };
}

pub const CORPUS: &[CorpusEntry] = &[
    entry!(
        "commutative-2",
        "polynomials in x1, x2 over k",
        Stage::Tower,
        0
    ),
    entry!(
        "commutative-2-over-x1",
        "polynomials in x1, x2 over k[x1]",
        Stage::Tower,
        0
    ),
    entry!(
        "commutative-3",
        "polynomials in x1, x2, x3 over k",
        Stage::Tower,
        0
    ),
    entry!(
        "heisenberg",
        "enveloping algebra of the Heisenberg Lie algebra over k",
        Stage::Tower,
        0
    ),
    entry!(
        "heisenberg-over-x",
        "Heisenberg enveloping algebra over k[x]",
        Stage::Tower,
        0
    ),
    entry!(
        "heisenberg-whole",
        "Heisenberg enveloping algebra over itself",
        Stage::Pbw,
        0
    ),
    entry!(
        "heisenberg-central",
        "Heisenberg with a central degree-2 generator, over k[x, z]",
        Stage::Tower,
        0
    ),
    entry!(
        "divided-power",
        "commuting v, w with a non-primitive w",
        Stage::Tower,
        0
    ),
    entry!(
        "witt-truncated",
        "truncated positive Witt algebra e1..e6",
        Stage::Tower,
        3
    ),
    entry!(
        "inhomogeneous",
        "relation yx - x (expected to fail validation)",
        Stage::Check,
        1
    ),
    entry!(
        "jordan",
        "relation yx - xy - xx (expected to fail the coproduct check)",
        Stage::Check,
        1
    ),
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusResult {
    pub name: &'static str,
    pub stage: Stage,
    pub expected_exit: i32,
    pub actual_exit: i32,
    pub detail: Option<String>,
}

impl CorpusResult {
    pub fn ok(&self) -> bool {
        self.expected_exit == self.actual_exit
    }
}

pub fn source(entry: &CorpusEntry, dir: Option<&Path>) -> std::io::Result<String> {
    match dir {
        Some(dir) => std::fs::read_to_string(dir.join(entry.file)),
        None => Ok(entry.bundled.to_string()),
    }
}

pub fn run_entry(entry: &CorpusEntry, dir: Option<&Path>, opts: Options) -> CorpusResult {
    let (actual_exit, detail) = match source(entry, dir) {
        Ok(src) => {
            let outcome = run_source(&src, entry.stage, opts);
            let detail = match &outcome {
                super::pipeline::Outcome::Report(r) => r.message.clone(),
                super::pipeline::Outcome::InputError(e) => Some(e.clone()),
            };
            (outcome.exit_code(), detail)
        }
        Err(e) => (2, Some(format!("{}: {e}", entry.file))),
    };
    CorpusResult {
        name: entry.name,
        stage: entry.stage,
        expected_exit: entry.expected_exit,
        actual_exit,
        detail,
    }
}

pub fn run_all(dir: Option<&Path>, opts: Options) -> Vec<CorpusResult> {
    CORPUS.iter().map(|e| run_entry(e, dir, opts)).collect()
}

pub fn render_list() -> String {
    let width = CORPUS.iter().map(|e| e.name.len()).max().unwrap_or(0);
    CORPUS
        .iter()
        .map(|e| format!("{:width$}  {}\n", e.name, e.description))
        .collect()
}

pub fn render_results(results: &[CorpusResult]) -> String {
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{} {:width$}  {:6} expected {} got {}",
            if r.ok() { "[ok]  " } else { "[FAIL]" },
            r.name,
            r.stage.name(),
            r.expected_exit,
            r.actual_exit
        ));
        if let (false, Some(d)) = (r.ok(), &r.detail) {
            out.push_str(&format!("  ({d})"));
        }
        out.push('\n');
    }
    out
}
