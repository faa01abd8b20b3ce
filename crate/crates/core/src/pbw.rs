//! Relative PBW generators `z_γ = [γ] + I` for `γ ∈ Γ = N_I ∖ N_J`, and
//! degree-truncated verification of their structural properties.
//!
//! Elements of `A` are handled in two bases. The normal-word basis (words
//! with no obstruction factor) is what reduction produces. The PBW basis
//! `{[w] + I : w irreducible}` is related to it by a unitriangular change
//! of basis, since `lw([w]) = w`. Subalgebra membership questions are
//! answered in PBW coordinates: the subalgebra generated by `B` and the
//! `z_δ` with `δ < γ` is spanned by the `[w]` whose CFL parts all lie in
//! `N_J ∪ {δ ∈ Γ : δ < γ}`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{apply_delta, standard_bracket, Poly, Scalar, TensorPoly};
use crate::presentation::{reduce_legs, DeltaCheckReport, Presentation};
use crate::rewrite::TruncatedGB;
use crate::words::{cfl_factorization, is_lyndon, lex_compare, Alphabet, Word};

#[derive(Debug, Clone)]
pub struct PbwData {
    alphabet: Alphabet,
    sub_len: usize,
    bound: u32,
    /// Irreducible Lyndon words within the bound, glex-sorted.
    pub n_i: Vec<Word>,
    /// The part of `n_i` over the subalgebra generators.
    pub n_j: Vec<Word>,
    /// `n_i ∖ n_j` in lex order.
    pub gamma: Vec<Word>,
    /// Normal forms of `[γ]`, parallel to `gamma`.
    pub z: Vec<Poly>,
    subalgebra_gb: TruncatedGB,
}

impl PbwData {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sub_len(&self) -> usize {
        self.sub_len
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn subalgebra_gb(&self) -> &TruncatedGB {
        &self.subalgebra_gb
    }

    pub fn z_of(&self, gamma: &Word) -> Option<&Poly> {
        self.gamma
            .iter()
            .position(|g| g == gamma)
            .map(|i| &self.z[i])
    }

    /// `N_J ∪ {δ ∈ Γ : δ < gamma[i]}` as a set; `i = gamma.len()` gives all of `N_I`.
    pub fn allowed_below(&self, i: usize) -> BTreeSet<Word> {
        self.n_j.iter().chain(&self.gamma[..i]).cloned().collect()
    }
}

/// Converts between normal words and PBW coordinates, caching `nf([w])`.
pub struct PbwBasis<'a> {
    gb: &'a TruncatedGB,
    cache: HashMap<Word, Poly>,
}

impl<'a> PbwBasis<'a> {
    pub fn new(gb: &'a TruncatedGB) -> Self {
        PbwBasis {
            gb,
            cache: HashMap::new(),
        }
    }

    pub fn gb(&self) -> &TruncatedGB {
        self.gb
    }

    /// Normal form of `[w]`.
    pub fn bracket(&mut self, w: &Word) -> Result<Poly> {
        if let Some(p) = self.cache.get(w) {
            return Ok(p.clone());
        }
        let p = self.gb.normal_form(&standard_bracket(w))?;
        self.cache.insert(w.clone(), p.clone());
        Ok(p)
    }

    /// Coordinates of `f + I` in the basis `{[w] + I}`; the word `w` in the
    /// result stands for `[w]`.
    pub fn coordinates(&mut self, f: &Poly) -> Result<Poly> {
        let mut work = self.gb.normal_form(f)?;
        let mut out = Poly::zero();
        while let Some((w, c)) = work.pop_leading() {
            let b = self.bracket(&w)?;
            debug_assert_eq!(b.leading_word().ok(), Some(&w));
            for (u, d) in b.terms().rev().skip(1) {
                work.add_term(u.clone(), -(&c * d));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Inverse of `coordinates`.
    pub fn from_coordinates(&mut self, coords: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (w, c) in coords.terms() {
            out.add_scaled(c, &self.bracket(w)?);
        }
        Ok(out)
    }

    pub fn tensor_coordinates(&mut self, t: &TensorPoly) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero();
        for ((u, v), c) in t.terms() {
            let cu = self.coordinates(&Poly::from_word(u.clone()))?;
            let cv = self.coordinates(&Poly::from_word(v.clone()))?;
            for (a, ca) in cu.terms() {
                for (b, cb) in cv.terms() {
                    out.add_term(a.clone(), b.clone(), c * ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.gb.normal_form(&(f * g))
    }
}

/// Whether every CFL part of `w` lies in `allowed`.
pub fn parts_within(w: &Word, allowed: &BTreeSet<Word>) -> bool {
    cfl_factorization(w).iter().all(|p| allowed.contains(p))
}

/// Whether PBW coordinates are supported on words with all parts in `allowed`.
pub fn supported_within(coords: &Poly, allowed: &BTreeSet<Word>) -> bool {
    coords.words().all(|w| parts_within(w, allowed))
}

pub fn sort_lex(words: &mut [Word]) {
    words.sort_by(lex_compare);
}

pub fn compute_pbw(
    p: &Presentation,
    gb: &TruncatedGB,
    subalgebra_gb: &TruncatedGB,
    delta_report: &DeltaCheckReport,
) -> Result<PbwData> {
    if !delta_report.passed() || delta_report.checked_degree < p.bound() {
        return Err(Error::HypothesesNotEstablished(
            "the coproduct does not preserve the ideal through the bound".to_string(),
        ));
    }
    let bound = p.bound().min(gb.complete_below());
    let sub_len = p.subalgebra_len();
    let n_i: Vec<Word> = p
        .alphabet()
        .enumerate_lyndon(bound)
        .into_iter()
        .filter(|w| gb.find_obstruction(w).is_none())
        .collect();
    let n_j: Vec<Word> = n_i
        .iter()
        .filter(|w| w.over_prefix_alphabet(sub_len))
        .cloned()
        .collect();
    let mut gamma: Vec<Word> = n_i
        .iter()
        .filter(|w| !w.over_prefix_alphabet(sub_len))
        .cloned()
        .collect();
    sort_lex(&mut gamma);
    let z = gamma
        .iter()
        .map(|g| gb.normal_form(&standard_bracket(g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PbwData {
        alphabet: p.alphabet().clone(),
        sub_len,
        bound,
        n_i,
        n_j,
        gamma,
        z,
        subalgebra_gb: subalgebra_gb.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unverifiable,
}

#[derive(Debug, Clone)]
pub struct CoproductCheck {
    pub gamma: Word,
    pub status: CheckStatus,
    /// `Δ(z_γ) − z_γ⊗1 − 1⊗z_γ` in PBW coordinates on both legs.
    pub residual: TensorPoly,
}

/// `Δ(z_γ) ∈ 1⊗z_γ + z_γ⊗1 + (A₊^{<γ} ⊗ A₊^{<γ})` for every `γ`.
pub fn verify_condition_1(
    d: &PbwData,
    p: &Presentation,
    gb: &TruncatedGB,
) -> Result<Vec<CoproductCheck>> {
    let mut basis = PbwBasis::new(gb);
    let mut out = Vec::new();
    for (i, (gamma, z)) in d.gamma.iter().zip(&d.z).enumerate() {
        if gamma.degree() > gb.complete_below() {
            out.push(CoproductCheck {
                gamma: gamma.clone(),
                status: CheckStatus::Unverifiable,
                residual: TensorPoly::zero(),
            });
            continue;
        }
        let image = reduce_legs(&apply_delta(z, p.delta())?, gb)?;
        let rest = &image - &TensorPoly::primitive(z);
        let residual = basis.tensor_coordinates(&rest)?;
        let allowed = d.allowed_below(i);
        let ok = residual.terms().all(|((u, v), _)| {
            !u.is_empty() && !v.is_empty() && parts_within(u, &allowed) && parts_within(v, &allowed)
        });
        out.push(CoproductCheck {
            gamma: gamma.clone(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            residual,
        });
    }
    Ok(out)
}

/// A generator of `A^{<γ}`: a subalgebra letter or an earlier `z_δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerGenerator {
    Letter(Word),
    Z(Word),
}

impl LowerGenerator {
    pub fn word(&self) -> &Word {
        match self {
            LowerGenerator::Letter(w) | LowerGenerator::Z(w) => w,
        }
    }

    pub fn label(&self, a: &Alphabet) -> String {
        match self {
            LowerGenerator::Letter(w) => a.render(w),
            LowerGenerator::Z(w) => format!("z[{}]", a.render(w)),
        }
    }
}

/// Algebra generators of `A^{<γ}` for `γ = gamma[i]` with their values in `A`.
pub fn lower_generators(
    d: &PbwData,
    gb: &TruncatedGB,
    i: usize,
) -> Result<Vec<(LowerGenerator, Poly)>> {
    let mut out = Vec::new();
    for rank in 0..d.sub_len {
        let w = Word::single(d.alphabet.letter(rank));
        if w.degree() > gb.complete_below() {
            continue;
        }
        let value = gb.normal_form_word(&w)?;
        out.push((LowerGenerator::Letter(w), value));
    }
    for j in 0..i {
        out.push((LowerGenerator::Z(d.gamma[j].clone()), d.z[j].clone()));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CommutatorCheck {
    pub gamma: Word,
    pub generator: LowerGenerator,
    pub status: CheckStatus,
    /// `[z_γ, g]` in PBW coordinates (zero when unverifiable).
    pub commutator: Poly,
}

/// `[z_γ, A^{<γ}] ⊆ A^{<γ}`, checked on algebra generators of `A^{<γ}`.
pub fn verify_condition_2(
    d: &PbwData,
    _p: &Presentation,
    gb: &TruncatedGB,
) -> Result<Vec<CommutatorCheck>> {
    let mut basis = PbwBasis::new(gb);
    let mut out = Vec::new();
    for (i, (gamma, z)) in d.gamma.iter().zip(&d.z).enumerate() {
        let allowed = d.allowed_below(i);
        for (g, value) in lower_generators(d, gb, i)? {
            if gamma.degree() + g.word().degree() > gb.complete_below() {
                out.push(CommutatorCheck {
                    gamma: gamma.clone(),
                    generator: g,
                    status: CheckStatus::Unverifiable,
                    commutator: Poly::zero(),
                });
                continue;
            }
            let c = &(z * &value) - &(&value * z);
            let coords = basis.coordinates(&c)?;
            let status = if supported_within(&coords, &allowed) {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            out.push(CommutatorCheck {
                gamma: gamma.clone(),
                generator: g,
                status,
                commutator: coords,
            });
        }
    }
    Ok(out)
}

/// Nondecreasing index sequences into `gamma[..limit]` (which is lex-sorted)
/// of total degree exactly `degree`.
pub fn nondecreasing_sequences(gamma: &[Word], limit: usize, degree: u32) -> Vec<Vec<usize>> {
    fn go(
        gamma: &[Word],
        limit: usize,
        start: usize,
        remaining: u32,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..limit {
            let d = gamma[i].degree();
            if d <= remaining {
                cur.push(i);
                go(gamma, limit, i, remaining - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(gamma, limit, 0, degree, &mut Vec::new(), &mut out);
    out
}

/// `z_{γ_1} ⋯ z_{γ_k}` in normal form.
pub fn z_monomial(d: &PbwData, gb: &TruncatedGB, seq: &[usize]) -> Result<Poly> {
    let mut acc = Poly::one();
    for &i in seq {
        acc = gb.normal_form(&(&acc * &d.z[i]))?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleBasisCheck {
    pub degree: u32,
    pub dim: usize,
    pub left_count: usize,
    pub left_rank: usize,
    pub right_count: usize,
    pub right_rank: usize,
}

impl ModuleBasisCheck {
    pub fn passed(&self) -> bool {
        [
            self.left_count,
            self.left_rank,
            self.right_count,
            self.right_rank,
        ]
        .iter()
        .all(|&x| x == self.dim)
    }
}

/// The products `b·z_{γ_1}⋯z_{γ_k}` (`b` a normal word of `B`, `γ`
/// nondecreasing) of degree `n`, in normal form. With `right` the `b` goes
/// on the right.
pub fn module_family(d: &PbwData, gb: &TruncatedGB, n: u32, right: bool) -> Result<Vec<Poly>> {
    let mut family = Vec::new();
    for k in 0..=n {
        for seq in nondecreasing_sequences(&d.gamma, d.gamma.len(), k) {
            let zm = z_monomial(d, gb, &seq)?;
            for b in d.subalgebra_gb.irreducible_words(n - k)? {
                let b = Poly::from_word(b);
                let prod = if right { &zm * &b } else { &b * &zm };
                family.push(gb.normal_form(&prod)?);
            }
        }
    }
    Ok(family)
}

/// The nondecreasing `z`-monomials form a basis of `A` as a left and as a
/// right `B`-module, checked in degree `n` by exact rank.
pub fn verify_condition_3(
    d: &PbwData,
    _p: &Presentation,
    gb: &TruncatedGB,
    n: u32,
) -> Result<ModuleBasisCheck> {
    let dim = gb.irreducible_words(n)?.len();
    let left = module_family(d, gb, n, false)?;
    let right = module_family(d, gb, n, true)?;
    Ok(ModuleBasisCheck {
        degree: n,
        dim,
        left_count: left.len(),
        left_rank: crate::linalg::rank(&left),
        right_count: right.len(),
        right_rank: crate::linalg::rank(&right),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkEstimate {
    /// `#N_I` within the bound.
    pub count: usize,
    /// True only when no irreducible Lyndon word can exist beyond the bound.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub dims: Vec<usize>,
    pub product_dims: Vec<usize>,
    pub gk_estimate: GkEstimate,
    pub gk_subalgebra: usize,
    pub gamma_count: usize,
}

impl HilbertReport {
    pub fn consistent(&self) -> bool {
        self.dims == self.product_dims
    }
}

/// Coefficients of `∏ (1 − t^{deg v})^{-1}` through degree `bound`.
pub fn product_series(degrees: impl IntoIterator<Item = u32>, bound: u32) -> Vec<usize> {
    let mut series = vec![0usize; bound as usize + 1];
    series[0] = 1;
    for d in degrees {
        let d = d as usize;
        if d == 0 || d > bound as usize {
            continue;
        }
        // Multiplying by 1/(1 - t^d) is a running sum with stride d.
        for n in d..series.len() {
            series[n] += series[n - d];
        }
    }
    series
}

/// Whether `#N_I` is exactly the count found within the bound.
///
/// A minimal-degree irreducible Lyndon word beyond the bound is not a letter
/// when every letter lies within the bound, and its Shirshov factors are
/// irreducible Lyndon words within the bound; the larger one has degree in
/// `(bound/2, bound]`. So an empty window certifies `N_I`. The finite-basis
/// certificate is additionally required.
pub fn gk_certified(d: &PbwData, gb: &TruncatedGB) -> bool {
    let bound = d.bound;
    gb.finite_certificate()
        && d.alphabet.generators().iter().all(|g| g.degree <= bound)
        && !d.n_i.iter().any(|w| 2 * w.degree() > bound)
}

pub fn hilbert_report(d: &PbwData, gb: &TruncatedGB) -> Result<HilbertReport> {
    let dims = (0..=d.bound)
        .map(|n| gb.irreducible_words(n).map(|w| w.len()))
        .collect::<Result<Vec<_>>>()?;
    let product_dims = product_series(d.n_i.iter().map(Word::degree), d.bound);
    Ok(HilbertReport {
        dims,
        product_dims,
        gk_estimate: GkEstimate {
            count: d.n_i.len(),
            certified: gk_certified(d, gb),
        },
        gk_subalgebra: d.n_j.len(),
        gamma_count: d.gamma.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reordered {
    /// Coefficients of `[v_1]⋯[v_p] + I` with `v_1 ≤ ⋯ ≤ v_p` in `N_I`.
    pub terms: Vec<(Scalar, Vec<Word>)>,
    /// Every appearing Lyndon word is `≤_lex max{w_i}` and every term has the
    /// input degree.
    pub certified: bool,
}

/// Rewrites `[w_1]⋯[w_m] + I` in the nondecreasing PBW spanning set.
pub fn reorder_to_bounded(seq: &[Word], d: &PbwData, gb: &TruncatedGB) -> Result<Reordered> {
    for w in seq {
        if !d.n_i.contains(w) {
            return Err(Error::NotIrreducibleLyndon(w.to_string()));
        }
    }
    let degree: u32 = seq.iter().map(Word::degree).sum();
    if degree > gb.complete_below() {
        return Err(Error::BeyondTruncation {
            degree,
            bound: gb.complete_below(),
        });
    }
    let mut basis = PbwBasis::new(gb);
    let mut product = Poly::one();
    for w in seq {
        product = &product * &basis.bracket(w)?;
    }
    let coords = basis.coordinates(&product)?;
    let max = seq.iter().max_by(|a, b| lex_compare(a, b));
    let mut certified = true;
    let mut terms = Vec::new();
    for (w, c) in coords.terms().rev() {
        let parts = cfl_factorization(w);
        if w.degree() != degree {
            certified = false;
        }
        if let Some(max) = max {
            if parts
                .iter()
                .any(|p| lex_compare(p, max) == Ordering::Greater)
            {
                certified = false;
            }
        }
        terms.push((c.clone(), parts));
    }
    Ok(Reordered { terms, certified })
}

/// Structural facts that hold whenever the coproduct preserves the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Obstructions (within the bound) that are not Lyndon words.
    pub non_lyndon_obstructions: Vec<Word>,
    /// Degrees where irreducible words differ from nondecreasing products
    /// over `N_I`.
    pub b_i_mismatch_degrees: Vec<u32>,
    /// Reducible Lyndon words `v` whose `[v]` is not below `v`.
    pub brackets_not_lower: Vec<Word>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.non_lyndon_obstructions.is_empty()
            && self.b_i_mismatch_degrees.is_empty()
            && self.brackets_not_lower.is_empty()
    }
}

/// Nondecreasing (lex) products of words from `n_i` of degree `n`.
pub fn b_i_words(n_i: &[Word], n: u32) -> Vec<Word> {
    let mut sorted = n_i.to_vec();
    sort_lex(&mut sorted);
    let mut out: Vec<Word> = nondecreasing_sequences(&sorted, sorted.len(), n)
        .into_iter()
        .map(|seq| {
            seq.iter()
                .fold(Word::empty(), |acc, &i| acc.concat(&sorted[i]))
        })
        .collect();
    out.sort();
    out
}

pub fn check_structure(d: &PbwData, gb: &TruncatedGB) -> Result<StructureReport> {
    let bound = d.bound;
    let non_lyndon_obstructions = gb
        .obstructions()
        .iter()
        .filter(|w| w.degree() <= bound && !is_lyndon(w))
        .cloned()
        .collect();
    let mut b_i_mismatch_degrees = Vec::new();
    for n in 0..=bound {
        if gb.irreducible_words(n)? != b_i_words(&d.n_i, n) {
            b_i_mismatch_degrees.push(n);
        }
    }
    let mut basis = PbwBasis::new(gb);
    let mut brackets_not_lower = Vec::new();
    for v in d.alphabet.enumerate_lyndon(bound) {
        if gb.find_obstruction(&v).is_none() {
            continue;
        }
        let coords = basis.coordinates(&standard_bracket(&v))?;
        let lower = coords.words().all(|w| {
            cfl_factorization(w)
                .iter()
                .all(|p| lex_compare(p, &v) == Ordering::Less)
        });
        if !lower {
            brackets_not_lower.push(v);
        }
    }
    Ok(StructureReport {
        non_lyndon_obstructions,
        b_i_mismatch_degrees,
        brackets_not_lower,
    })
}
