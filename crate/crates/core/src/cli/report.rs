//! Run reports. Every map is ordered and every scalar is a `p/q` string, so
//! serializing the same run twice gives identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::freealg::{Poly, TensorPoly};
use crate::ihoe::FreenessCheck;
use crate::pbw::{CheckStatus, ModuleBasisCheck};
use crate::presentation::Violation;
use crate::words::Alphabet;

pub const REPORT_VERSION: u32 = 1;

/// `[coefficient, word]` pairs, leading term first.
pub type Terms = Vec<(String, String)>;
/// `[coefficient, left, right]` triples, leading term first.
pub type TensorTerms = Vec<(String, String, String)>;

pub fn terms(p: &Poly, a: &Alphabet) -> Terms {
    p.to_pairs(a)
}

pub fn tensor_terms(t: &TensorPoly, a: &Alphabet) -> TensorTerms {
    t.to_triples(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Violation,
    InputError,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Violation => 1,
            Status::InputError => 2,
            Status::Inconclusive => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub report_version: u32,
    pub command: String,
    pub max_degree: u32,
    pub generator_order: Vec<String>,
    pub status: Status,
    pub message: Option<String>,
    pub validation: ValidationSection,
    pub delta_check: Option<DeltaSection>,
    pub groebner: Option<GroebnerSection>,
    pub subalgebra: Option<SubalgebraSection>,
    pub pbw: Option<PbwSection>,
    pub hilbert: Option<HilbertSection>,
    pub pbw_conditions: Option<ConditionsSection>,
    pub tower: Option<TowerSection>,
}

impl RunReport {
    pub fn new(command: &str, max_degree: u32, generator_order: Vec<String>) -> Self {
        RunReport {
            report_version: REPORT_VERSION,
            command: command.to_string(),
            max_degree,
            generator_order,
            status: Status::Verified,
            message: None,
            validation: ValidationSection {
                passed: true,
                violations: Vec::new(),
            },
            delta_check: None,
            groebner: None,
            subalgebra: None,
            pbw: None,
            hilbert: None,
            pbw_conditions: None,
            tower: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationSection {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaResidual {
    /// `element[i]` or `generator x`.
    pub source: String,
    pub degree: u32,
    pub residual: String,
    pub terms: TensorTerms,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaSection {
    pub passed: bool,
    pub checked_degree: u32,
    pub violations: Vec<DeltaResidual>,
    pub strict_coassociativity: bool,
    pub coassociativity_failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerSection {
    pub elements: Vec<Terms>,
    pub obstructions: Vec<String>,
    pub complete_below: u32,
    pub finite_certificate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubalgebraSection {
    pub generators: Vec<String>,
    pub elements: Vec<Terms>,
    pub irreducible_lyndon_equal: bool,
    pub obstructions_equal: bool,
    pub groebner_equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZEntry {
    pub gamma: String,
    pub z: Terms,
}

#[derive(Debug, Clone, Serialize)]
pub struct PbwSection {
    pub n_i: Vec<String>,
    pub n_j: Vec<String>,
    /// Lex order, which is the order of the module basis and of the tower.
    pub gamma: Vec<String>,
    pub z: Vec<ZEntry>,
    pub non_lyndon_obstructions: Vec<String>,
    pub b_i_mismatch_degrees: Vec<u32>,
    pub brackets_not_lower: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertSection {
    pub dims: Vec<usize>,
    pub product_dims: Vec<usize>,
    pub consistent: bool,
    pub gk_estimate: usize,
    pub certified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoproductRow {
    pub gamma: String,
    pub status: CheckStatus,
    pub residual: TensorTerms,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommutatorRow {
    pub gamma: String,
    pub generator: String,
    pub status: CheckStatus,
    pub commutator: Terms,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleBasisRow {
    #[serde(flatten)]
    pub check: ModuleBasisCheck,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GkRow {
    pub gk: usize,
    pub gk_subalgebra: usize,
    pub gamma_count: usize,
    pub holds: bool,
    pub certified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionsSection {
    pub passed: bool,
    pub coproduct: Vec<CoproductRow>,
    pub commutators: Vec<CommutatorRow>,
    pub module_basis: Vec<ModuleBasisRow>,
    pub gk: GkRow,
}

#[derive(Debug, Clone, Serialize)]
pub struct DerivationEntry {
    pub generator: String,
    pub value: Terms,
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerStepRow {
    pub step: usize,
    pub gamma: String,
    pub z: Terms,
    pub delta_table: Vec<DerivationEntry>,
    pub leibniz_failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerSection {
    pub passed: bool,
    pub l: usize,
    pub certified_through_degree: u32,
    pub steps: Vec<TowerStepRow>,
    pub freeness: Vec<FreenessCheck>,
    /// The stage-by-stage monomials span the same space as the module basis.
    pub reconstruction_matches: bool,
    /// `l` equals the difference of the GK dimensions of `A` and `B`.
    pub length_matches_gk: bool,
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "ok",
        CheckStatus::Fail => "FAILED",
        CheckStatus::Unverifiable => "beyond bound",
    }
}

fn list(items: &[String], sep: &str) -> String {
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(sep)
    }
}

fn render_terms(t: &Terms) -> String {
    if t.is_empty() {
        return "0".to_string();
    }
    t.iter()
        .map(|(c, w)| format!("{c} {w}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn render_text(r: &RunReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (bound {}): {:?}", r.command, r.max_degree, r.status);
    let _ = writeln!(s, "generator order: {}", r.generator_order.join(" < "));
    if let Some(m) = &r.message {
        let _ = writeln!(s, "{m}");
    }
    let _ = writeln!(s, "validation: {}", mark(r.validation.passed));
    for v in &r.validation.violations {
        let _ = writeln!(s, "  {v}");
    }
    if let Some(d) = &r.delta_check {
        let _ = writeln!(
            s,
            "delta check through degree {}: {}",
            d.checked_degree,
            mark(d.passed)
        );
        for v in &d.violations {
            let _ = writeln!(
                s,
                "  {} (degree {}): residual {}",
                v.source, v.degree, v.residual
            );
        }
        if !d.coassociativity_failures.is_empty() {
            let _ = writeln!(
                s,
                "  not coassociative on: {}",
                d.coassociativity_failures.join(", ")
            );
        }
    }
    if let Some(g) = &r.groebner {
        let _ = writeln!(
            s,
            "groebner basis: {} elements, complete below {}, finite certificate {}",
            g.elements.len(),
            g.complete_below,
            g.finite_certificate
        );
        let _ = writeln!(s, "  obstructions: {}", list(&g.obstructions, ", "));
    }
    if let Some(j) = &r.subalgebra {
        let ok = j.irreducible_lyndon_equal && j.obstructions_equal && j.groebner_equal;
        let _ = writeln!(
            s,
            "subalgebra on {}: intersection {}",
            list(&j.generators, ", "),
            mark(ok)
        );
    }
    if let Some(p) = &r.pbw {
        let _ = writeln!(s, "N_I: {}", list(&p.n_i, ", "));
        let _ = writeln!(s, "N_J: {}", list(&p.n_j, ", "));
        let _ = writeln!(s, "Gamma: {}", list(&p.gamma, " < "));
        for z in &p.z {
            let _ = writeln!(s, "  z[{}] = {}", z.gamma, render_terms(&z.z));
        }
    }
    if let Some(h) = &r.hilbert {
        let _ = writeln!(s, "dims: {:?} (product {:?})", h.dims, h.product_dims);
        let _ = writeln!(
            s,
            "gk estimate: {} ({})",
            h.gk_estimate,
            if h.certified {
                "certified"
            } else {
                "not certified"
            }
        );
    }
    if let Some(c) = &r.pbw_conditions {
        let _ = writeln!(s, "pbw conditions: {}", mark(c.passed));
        for row in &c.coproduct {
            let _ = writeln!(
                s,
                "  coproduct z[{}]: {}",
                row.gamma,
                status_word(row.status)
            );
        }
        for row in &c.commutators {
            let _ = writeln!(
                s,
                "  [z[{}], {}]: {}",
                row.gamma,
                row.generator,
                status_word(row.status)
            );
        }
        for row in &c.module_basis {
            let _ = writeln!(
                s,
                "  module basis degree {}: {} (dim {})",
                row.check.degree,
                mark(row.passed),
                row.check.dim
            );
        }
        let _ = writeln!(
            s,
            "  gk: {} = {} + {}: {}",
            c.gk.gk,
            c.gk.gk_subalgebra,
            c.gk.gamma_count,
            mark(c.gk.holds)
        );
    }
    if let Some(t) = &r.tower {
        let _ = writeln!(
            s,
            "tower of length {} through degree {}: {}",
            t.l,
            t.certified_through_degree,
            mark(t.passed)
        );
        for step in &t.steps {
            let _ = writeln!(s, "  step {}: z[{}]", step.step, step.gamma);
            for e in &step.delta_table {
                let _ = writeln!(s, "    delta({}) = {}", e.generator, render_terms(&e.value));
            }
        }
    }
    s
}
