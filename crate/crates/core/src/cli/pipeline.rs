//! The staged pipeline behind `check`, `pbw` and `tower`.
//!
//! Exit codes: 0 verified, 1 mathematical violation, 2 input error,
//! 3 inconclusive at the bound.

use serde::Serialize;

use super::format::PresentationFile;
use super::report::*;
use crate::error::{Error, Result};
use crate::ihoe::{build_tower, check_leibniz, tower_monomials, verify_step_freeness};
use crate::linalg;
use crate::pbw::{
    check_structure, compute_pbw, hilbert_report, module_family, verify_condition_1,
    verify_condition_2, verify_condition_3, CheckStatus, PbwData,
};
use crate::presentation::{
    check_coassociativity, check_delta_ideal, compare_with_subalgebra, restrict_to_subalgebra,
    validate, DeltaSource, Presentation,
};
use crate::rewrite::{complete, TruncatedGB};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Check,
    Pbw,
    Tower,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Check => "check",
            Stage::Pbw => "pbw",
            Stage::Tower => "tower",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub max_degree: Option<u32>,
    pub strict_coassoc: bool,
}

/// Result of a run: a report, or an input error with its message.
#[derive(Debug, Clone)]
pub enum Outcome {
    Report(Box<RunReport>),
    InputError(String),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Report(r) => r.exit_code(),
            Outcome::InputError(_) => Status::InputError.exit_code(),
        }
    }

    pub fn report(&self) -> Option<&RunReport> {
        match self {
            Outcome::Report(r) => Some(r),
            Outcome::InputError(_) => None,
        }
    }
}

pub fn run_source(src: &str, stage: Stage, opts: Options) -> Outcome {
    let parsed = PresentationFile::parse(src).and_then(|f| f.to_presentation(opts.max_degree));
    match parsed {
        Ok(p) => match run(&p, stage, opts) {
            Ok(r) => Outcome::Report(Box::new(r)),
            Err(e) => Outcome::InputError(e.to_string()),
        },
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

pub fn run_file(path: &std::path::Path, stage: Stage, opts: Options) -> Outcome {
    match std::fs::read_to_string(path) {
        Ok(src) => run_source(&src, stage, opts),
        Err(e) => Outcome::InputError(format!("{}: {e}", path.display())),
    }
}

fn fail(report: &mut RunReport, status: Status, message: impl Into<String>) {
    if report.status == Status::Verified {
        report.status = status;
        report.message = Some(message.into());
    }
}

/// Runs the pipeline through `stage`. Errors here are input errors; every
/// mathematical outcome is recorded in the report.
pub fn run(p: &Presentation, stage: Stage, opts: Options) -> Result<RunReport> {
    let a = p.alphabet();
    let mut report = RunReport::new(stage.name(), p.bound(), p.generator_order());

    let violations = validate(p);
    report.validation = ValidationSection {
        passed: violations.is_empty(),
        violations,
    };
    if !report.validation.passed {
        fail(&mut report, Status::Violation, "validation failed");
        return Ok(report);
    }

    let gb = complete(a, p.relations(), p.bound())?;
    report.groebner = Some(GroebnerSection {
        elements: gb.elements().iter().map(|g| terms(g, a)).collect(),
        obstructions: gb.obstructions().iter().map(|w| a.render(w)).collect(),
        complete_below: gb.complete_below(),
        finite_certificate: gb.finite_certificate(),
    });

    let delta = check_delta_ideal(p, &gb)?;
    let coassoc = check_coassociativity(p, &gb)?;
    report.delta_check = Some(DeltaSection {
        passed: delta.passed(),
        checked_degree: delta.checked_degree,
        violations: delta
            .violations
            .iter()
            .map(|v| DeltaResidual {
                source: match v.source {
                    DeltaSource::Element(i) => format!("element[{i}]"),
                    DeltaSource::Generator(r) => {
                        format!("generator {}", a.name(a.letter(r as usize)))
                    }
                },
                degree: v.degree,
                residual: v.residual.render(a),
                terms: tensor_terms(&v.residual, a),
            })
            .collect(),
        strict_coassociativity: opts.strict_coassoc,
        coassociativity_failures: coassoc.clone(),
    });
    if !delta.passed() {
        fail(
            &mut report,
            Status::Violation,
            "the coproduct does not preserve the ideal",
        );
        return Ok(report);
    }
    if opts.strict_coassoc && !coassoc.is_empty() {
        fail(
            &mut report,
            Status::Violation,
            "the coproduct is not coassociative",
        );
        return Ok(report);
    }
    if stage == Stage::Check {
        return Ok(report);
    }

    let q = match restrict_to_subalgebra(p, &gb, &delta) {
        Ok(q) => q,
        Err(e @ Error::HypothesesNotEstablished(_)) => {
            fail(&mut report, Status::Violation, e.to_string());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let gb_j = complete(q.alphabet(), q.relations(), q.bound())?;
    let cmp = compare_with_subalgebra(&gb, &gb_j, p.subalgebra_len())?;
    report.subalgebra = Some(SubalgebraSection {
        generators: q.generator_order(),
        elements: gb_j.elements().iter().map(|g| terms(g, a)).collect(),
        irreducible_lyndon_equal: cmp.irreducible_lyndon_equal,
        obstructions_equal: cmp.obstructions_equal,
        groebner_equal: cmp.groebner_equal,
    });
    if !cmp.passed() {
        fail(
            &mut report,
            Status::Violation,
            "the subalgebra ideal is not the intersection",
        );
    }

    let d = compute_pbw(p, &gb, &gb_j, &delta)?;
    pbw_sections(&mut report, p, &gb, &d)?;
    if stage == Stage::Pbw || report.status != Status::Verified {
        return Ok(report);
    }

    tower_section(&mut report, &gb, &d)?;
    Ok(report)
}

fn pbw_sections(
    report: &mut RunReport,
    p: &Presentation,
    gb: &TruncatedGB,
    d: &PbwData,
) -> Result<()> {
    let a = p.alphabet();
    let structure = check_structure(d, gb)?;
    report.pbw = Some(PbwSection {
        n_i: d.n_i.iter().map(|w| a.render(w)).collect(),
        n_j: d.n_j.iter().map(|w| a.render(w)).collect(),
        gamma: d.gamma.iter().map(|w| a.render(w)).collect(),
        z: d.gamma
            .iter()
            .zip(&d.z)
            .map(|(g, z)| ZEntry {
                gamma: a.render(g),
                z: terms(z, a),
            })
            .collect(),
        non_lyndon_obstructions: structure
            .non_lyndon_obstructions
            .iter()
            .map(|w| a.render(w))
            .collect(),
        b_i_mismatch_degrees: structure.b_i_mismatch_degrees.clone(),
        brackets_not_lower: structure
            .brackets_not_lower
            .iter()
            .map(|w| a.render(w))
            .collect(),
    });
    if !structure.passed() {
        fail(
            report,
            Status::Violation,
            "irreducible words are not nondecreasing Lyndon products",
        );
    }

    let h = hilbert_report(d, gb)?;
    report.hilbert = Some(HilbertSection {
        consistent: h.consistent(),
        dims: h.dims.clone(),
        product_dims: h.product_dims.clone(),
        gk_estimate: h.gk_estimate.count,
        certified: h.gk_estimate.certified,
    });
    if !h.consistent() {
        fail(
            report,
            Status::Violation,
            "Hilbert series differs from the Lyndon product",
        );
    }

    let c1 = verify_condition_1(d, p, gb)?;
    let c2 = verify_condition_2(d, p, gb)?;
    let c3 = (0..=d.bound())
        .map(|n| verify_condition_3(d, p, gb, n))
        .collect::<Result<Vec<_>>>()?;
    let gk = GkRow {
        gk: h.gk_estimate.count,
        gk_subalgebra: h.gk_subalgebra,
        gamma_count: h.gamma_count,
        holds: h.gk_estimate.count == h.gk_subalgebra + h.gamma_count,
        certified: h.gk_estimate.certified,
    };
    let passed = c1.iter().all(|c| c.status != CheckStatus::Fail)
        && c2.iter().all(|c| c.status != CheckStatus::Fail)
        && c3.iter().all(|c| c.passed())
        && gk.holds;
    report.pbw_conditions = Some(ConditionsSection {
        passed,
        coproduct: c1
            .iter()
            .map(|c| CoproductRow {
                gamma: a.render(&c.gamma),
                status: c.status,
                residual: tensor_terms(&c.residual, a),
            })
            .collect(),
        commutators: c2
            .iter()
            .map(|c| CommutatorRow {
                gamma: a.render(&c.gamma),
                generator: c.generator.label(a),
                status: c.status,
                commutator: terms(&c.commutator, a),
            })
            .collect(),
        module_basis: c3
            .into_iter()
            .map(|c| ModuleBasisRow {
                passed: c.passed(),
                check: c,
            })
            .collect(),
        gk,
    });
    if !passed {
        fail(report, Status::Violation, "a PBW condition fails");
    }
    Ok(())
}

fn tower_section(report: &mut RunReport, gb: &TruncatedGB, d: &PbwData) -> Result<()> {
    let a = d.alphabet();
    let t = match build_tower(d, gb) {
        Ok(t) => t,
        Err(Error::InfiniteGamma(m)) => {
            fail(
                report,
                Status::Inconclusive,
                format!("no finite tower below bound: {m}"),
            );
            return Ok(());
        }
        Err(e @ Error::DerivationEscapes { .. }) => {
            fail(report, Status::Violation, e.to_string());
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let mut steps = Vec::new();
    let mut freeness = Vec::new();
    for (i, step) in t.steps.iter().enumerate() {
        steps.push(TowerStepRow {
            step: i + 1,
            gamma: a.render(&step.gamma),
            z: terms(&step.z, a),
            delta_table: step
                .delta_table
                .iter()
                .map(|(g, v)| DerivationEntry {
                    generator: g.label(a),
                    value: terms(v, a),
                })
                .collect(),
            leibniz_failures: check_leibniz(&t, d, gb, i)?,
        });
        for n in 0..=t.certified_through_degree {
            freeness.push(verify_step_freeness(&t, d, gb, i, n)?);
        }
    }
    let mut reconstruction_matches = true;
    for n in 0..=t.certified_through_degree {
        let tower = tower_monomials(&t, d, gb, n)?;
        let family = module_family(d, gb, n, false)?;
        reconstruction_matches &= tower.len() == family.len()
            && linalg::rank(tower.iter().chain(&family)) == linalg::rank(&family);
    }
    let length_matches_gk = t.l + d.n_j.len() == d.n_i.len();
    let passed = steps.iter().all(|s| s.leibniz_failures.is_empty())
        && freeness.iter().all(|f| f.passed())
        && reconstruction_matches
        && length_matches_gk;
    report.tower = Some(TowerSection {
        passed,
        l: t.l,
        certified_through_degree: t.certified_through_degree,
        steps,
        freeness,
        reconstruction_matches,
        length_matches_gk,
    });
    if !passed {
        fail(report, Status::Violation, "the tower does not verify");
    }
    Ok(())
}
