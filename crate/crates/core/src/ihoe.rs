//! The tower `B = A_0 ⊂ A_1 ⊂ ⋯ ⊂ A_l = A` with `A_i = A_{i-1}[z_i; δ_i]`,
//! where `z_i` runs over `Γ` in lex order and `δ_i = [z_i, -]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::Poly;
use crate::linalg;
use crate::pbw::{
    gk_certified, lower_generators, supported_within, LowerGenerator, PbwBasis, PbwData,
};
use crate::rewrite::TruncatedGB;
use crate::words::{cfl_factorization, Word};

#[derive(Debug, Clone)]
pub struct TowerStep {
    pub gamma: Word,
    pub z: Poly,
    /// `δ(g)` for each algebra generator `g` of the previous stage, in PBW
    /// coordinates. Pairs beyond the bound are omitted.
    pub delta_table: Vec<(LowerGenerator, Poly)>,
}

#[derive(Debug, Clone)]
pub struct TowerReport {
    pub steps: Vec<TowerStep>,
    pub l: usize,
    pub certified_through_degree: u32,
}

pub fn build_tower(d: &PbwData, gb: &TruncatedGB) -> Result<TowerReport> {
    if !gk_certified(d, gb) {
        return Err(Error::InfiniteGamma(format!(
            "finiteness of the irreducible Lyndon words is not certified through degree {}",
            d.bound()
        )));
    }
    let bound = gb.complete_below().min(d.bound());
    let mut basis = PbwBasis::new(gb);
    let mut steps = Vec::new();
    for (i, (gamma, z)) in d.gamma.iter().zip(&d.z).enumerate() {
        let allowed = d.allowed_below(i);
        let mut delta_table = Vec::new();
        for (g, value) in lower_generators(d, gb, i)? {
            if gamma.degree() + g.word().degree() > bound {
                continue;
            }
            let coords = basis.coordinates(&(&(z * &value) - &(&value * z)))?;
            if !supported_within(&coords, &allowed) {
                return Err(Error::DerivationEscapes {
                    step: i + 1,
                    detail: format!(
                        "[z_{}, {}] = {}",
                        d.alphabet().render(gamma),
                        g.label(d.alphabet()),
                        coords.render(d.alphabet())
                    ),
                });
            }
            delta_table.push((g, coords));
        }
        steps.push(TowerStep {
            gamma: gamma.clone(),
            z: z.clone(),
            delta_table,
        });
    }
    Ok(TowerReport {
        l: steps.len(),
        steps,
        certified_through_degree: bound,
    })
}

/// Table entries of step `i` (0-based) whose derivation rule fails:
/// `δ(gh) = δ(g)h + gδ(h)` with `δ(gh)` computed as `[z, gh]` and the right
/// side taken from the table.
pub fn check_leibniz(
    report: &TowerReport,
    d: &PbwData,
    gb: &TruncatedGB,
    i: usize,
) -> Result<Vec<String>> {
    let step = &report.steps[i];
    let mut basis = PbwBasis::new(gb);
    let mut values = Vec::new();
    for (g, coords) in &step.delta_table {
        let v = lower_value(d, gb, g)?;
        values.push((g, v, basis.from_coordinates(coords)?));
    }
    let mut failures = Vec::new();
    for (g, gv, dg) in &values {
        for (h, hv, dh) in &values {
            if step.gamma.degree() + g.word().degree() + h.word().degree()
                > report.certified_through_degree
            {
                continue;
            }
            let gh = gb.normal_form(&(gv * hv))?;
            let lhs = gb.normal_form(&(&(&step.z * &gh) - &(&gh * &step.z)))?;
            let rhs = gb.normal_form(&(&(dg * hv) + &(gv * dh)))?;
            if lhs != rhs {
                failures.push(format!(
                    "{} · {}",
                    g.label(d.alphabet()),
                    h.label(d.alphabet())
                ));
            }
        }
    }
    Ok(failures)
}

fn lower_value(d: &PbwData, gb: &TruncatedGB, g: &LowerGenerator) -> Result<Poly> {
    match g {
        LowerGenerator::Letter(w) => gb.normal_form_word(w),
        LowerGenerator::Z(w) => d
            .z_of(w)
            .cloned()
            .ok_or_else(|| Error::NotIrreducibleLyndon(w.to_string())),
    }
}

/// Normal forms of `[w]` for the PBW words of degree `n` spanning stage `i`
/// (0-based), i.e. whose CFL parts lie in `N_J ∪ {γ_1, …, γ_i}`.
pub fn stage_basis(d: &PbwData, gb: &TruncatedGB, i: usize, n: u32) -> Result<Vec<Poly>> {
    let allowed = d.allowed_below(i);
    let mut basis = PbwBasis::new(gb);
    gb.irreducible_words(n)?
        .into_iter()
        .filter(|w| cfl_factorization(w).iter().all(|p| allowed.contains(p)))
        .map(|w| basis.bracket(&w))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessCheck {
    pub step: usize,
    pub degree: u32,
    /// `#{h · z^j}` with `h` from the stage basis of the previous stage.
    pub count: usize,
    pub rank: usize,
    /// Dimension of the next stage in this degree.
    pub dim: usize,
    /// `z·g = g·z + δ(g)` holds for every table entry within the degree.
    pub commutation_ok: bool,
}

impl FreenessCheck {
    pub fn passed(&self) -> bool {
        self.count == self.rank && self.rank == self.dim && self.commutation_ok
    }
}

/// The powers of `z` form a free left basis of stage `i + 1` over stage `i`
/// in degree `n`, and the table's commutation rule holds in `A`.
pub fn verify_step_freeness(
    report: &TowerReport,
    d: &PbwData,
    gb: &TruncatedGB,
    i: usize,
    n: u32,
) -> Result<FreenessCheck> {
    let step = &report.steps[i];
    let g = step.gamma.degree();
    let mut family = Vec::new();
    let mut power = Poly::one();
    let mut j = 0;
    while j * g <= n {
        for h in stage_basis(d, gb, i, n - j * g)? {
            family.push(gb.normal_form(&(&h * &power))?);
        }
        j += 1;
        if j * g <= n {
            power = gb.normal_form(&(&power * &step.z))?;
        }
    }
    let dim = stage_basis(d, gb, i + 1, n)?.len();
    let mut basis = PbwBasis::new(gb);
    let mut commutation_ok = true;
    for (gen, coords) in &step.delta_table {
        if g + gen.word().degree() > n {
            continue;
        }
        let v = lower_value(d, gb, gen)?;
        let lhs = gb.normal_form(&(&step.z * &v))?;
        let rhs = gb.normal_form(&(&(&v * &step.z) + &basis.from_coordinates(coords)?))?;
        commutation_ok &= lhs == rhs;
    }
    Ok(FreenessCheck {
        step: i + 1,
        degree: n,
        count: family.len(),
        rank: linalg::rank(&family),
        dim,
        commutation_ok,
    })
}

/// Degree-`n` monomials `b·z_1^{j_1}⋯z_l^{j_l}` built stage by stage, with
/// `b` a normal word of `B`.
pub fn tower_monomials(
    report: &TowerReport,
    d: &PbwData,
    gb: &TruncatedGB,
    n: u32,
) -> Result<Vec<Poly>> {
    // stage[m] holds the degree-m monomials of the current stage.
    let mut stage: Vec<Vec<Poly>> = (0..=n)
        .map(|m| {
            d.subalgebra_gb()
                .irreducible_words(m)
                .map(|ws| ws.into_iter().map(Poly::from_word).collect())
        })
        .collect::<Result<_>>()?;
    for step in &report.steps {
        let g = step.gamma.degree();
        let mut next: Vec<Vec<Poly>> = vec![Vec::new(); n as usize + 1];
        for (m, monos) in stage.iter().enumerate() {
            for h in monos {
                let mut cur = h.clone();
                let mut deg = m as u32;
                while deg <= n {
                    next[deg as usize].push(cur.clone());
                    deg += g;
                    if deg <= n {
                        cur = gb.normal_form(&(&cur * &step.z))?;
                    }
                }
            }
        }
        stage = next;
    }
    Ok(stage.swap_remove(n as usize))
}
