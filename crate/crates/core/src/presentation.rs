//! Presented pairs `B = k<X'>/J ⊆ A = k<X>/I` together with a
//! pseudo-comultiplication given on generators.
//!
//! Generators are stored in a fixed order:
//! every subalgebra generator precedes every other generator, then degree
//! ascending, then the order in which the user listed them. Consequently
//! the subalgebra alphabet `X'` is always a prefix of `X`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{apply_delta, DeltaImages, Poly, Scalar, TensorPoly};
use crate::rewrite::TruncatedGB;
use crate::words::{Alphabet, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    pub in_subalgebra: bool,
}

impl GeneratorSpec {
    pub fn new(name: &str, degree: u32, in_subalgebra: bool) -> Self {
        GeneratorSpec {
            name: name.to_string(),
            degree,
            in_subalgebra,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    marks: Vec<bool>,
    relations: Vec<Poly>,
    delta: DeltaImages,
    bound: u32,
}

impl Presentation {
    /// Orders the generators (subalgebra first, then degree, then listing
    /// order) and starts with no relations and no coproduct images.
    pub fn new(generators: &[GeneratorSpec], bound: u32) -> Result<Self> {
        let mut sorted: Vec<&GeneratorSpec> = generators.iter().collect();
        sorted.sort_by_key(|g| (!g.in_subalgebra, g.degree));
        let alphabet = Alphabet::new(
            sorted
                .iter()
                .map(|g| Generator {
                    name: g.name.clone(),
                    degree: g.degree,
                })
                .collect(),
        )?;
        let marks = sorted.iter().map(|g| g.in_subalgebra).collect();
        Ok(Presentation {
            alphabet,
            marks,
            relations: Vec::new(),
            delta: DeltaImages::new(),
            bound,
        })
    }

    /// Uses the alphabet order as given; `validate` reports order problems.
    pub fn from_ordered_parts(
        alphabet: Alphabet,
        marks: Vec<bool>,
        relations: Vec<Poly>,
        delta: DeltaImages,
        bound: u32,
    ) -> Self {
        assert_eq!(alphabet.len(), marks.len(), "one mark per generator");
        Presentation {
            alphabet,
            marks,
            relations,
            delta,
            bound,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn marks(&self) -> &[bool] {
        &self.marks
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn delta(&self) -> &DeltaImages {
        &self.delta
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn set_bound(&mut self, bound: u32) {
        self.bound = bound;
    }

    /// Number of subalgebra generators; they occupy ranks `0..len`.
    pub fn subalgebra_len(&self) -> usize {
        self.marks.iter().take_while(|m| **m).count()
    }

    pub fn word(&self, names: &[&str]) -> Result<Word> {
        self.alphabet.parse_word(names)
    }

    pub fn poly(&self, terms: &[(Scalar, &[&str])]) -> Result<Poly> {
        let mut p = Poly::zero();
        for (c, names) in terms {
            p.add_term(self.word(names)?, c.clone());
        }
        Ok(p)
    }

    pub fn tensor(&self, terms: &[(Scalar, &[&str], &[&str])]) -> Result<TensorPoly> {
        let mut t = TensorPoly::zero();
        for (c, l, r) in terms {
            t.add_term(self.word(l)?, self.word(r)?, c.clone());
        }
        Ok(t)
    }

    pub fn add_relation(&mut self, relation: Poly) {
        self.relations.push(relation);
    }

    pub fn set_delta(&mut self, name: &str, image: TensorPoly) -> Result<()> {
        let rank = self
            .alphabet
            .rank_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        self.delta.insert(rank as u32, image);
        Ok(())
    }

    /// Sets `Δ(g) = g⊗1 + 1⊗g`.
    pub fn set_primitive(&mut self, name: &str) -> Result<()> {
        let w = self.word(&[name])?;
        self.set_delta(name, TensorPoly::primitive(&Poly::from_word(w)))
    }

    pub fn set_all_primitive(&mut self) {
        let names: Vec<String> = self
            .alphabet
            .generators()
            .iter()
            .map(|g| g.name.clone())
            .collect();
        for n in names {
            self.set_primitive(&n).expect("generator exists");
        }
    }

    /// Generator names in the order used for all computations.
    pub fn generator_order(&self) -> Vec<String> {
        self.alphabet
            .generators()
            .iter()
            .map(|g| g.name.clone())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    RelationNotHomogeneous,
    RelationDegreeZero,
    ForeignLetter,
    MissingDelta,
    DeltaShape,
    DeltaLeavesSubalgebra,
    GeneratorOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.detail)
    }
}

/// Syntactic checks of every presentation invariant.
pub fn validate(p: &Presentation) -> Vec<Violation> {
    let a = &p.alphabet;
    let mut out = Vec::new();
    for (i, r) in p.relations.iter().enumerate() {
        let location = format!("relation {i}");
        if let Err(Error::AlphabetMismatch(rank)) = r.check_alphabet(a) {
            out.push(Violation {
                kind: ViolationKind::ForeignLetter,
                location,
                detail: format!("letter of rank {rank} is not a generator"),
            });
            continue;
        }
        match r.homogeneous_degree() {
            None if !r.is_zero() => out.push(Violation {
                kind: ViolationKind::RelationNotHomogeneous,
                location,
                detail: format!("relation not homogeneous: {}", r.render(a)),
            }),
            Some(0) => out.push(Violation {
                kind: ViolationKind::RelationDegreeZero,
                location,
                detail: "relation has degree zero".to_string(),
            }),
            _ => {}
        }
    }

    let sub_len = p.subalgebra_len();
    for (rank, g) in a.generators().iter().enumerate() {
        let location = format!("delta({})", g.name);
        let Some(image) = p.delta.get(&(rank as u32)) else {
            out.push(Violation {
                kind: ViolationKind::MissingDelta,
                location,
                detail: "no coproduct image".to_string(),
            });
            continue;
        };
        let x = Poly::letter(a.letter(rank));
        let rest = image - &TensorPoly::primitive(&x);
        for ((u, v), _) in rest.terms() {
            if u.is_empty() || v.is_empty() || u.degree() + v.degree() != g.degree {
                out.push(Violation {
                    kind: ViolationKind::DeltaShape,
                    location: location.clone(),
                    detail: format!(
                        "term {}⊗{} is not of the form positive⊗positive in degree {}",
                        a.render(u),
                        a.render(v),
                        g.degree
                    ),
                });
                break;
            }
        }
        for ((u, v), _) in image.terms() {
            if u.letters()
                .iter()
                .chain(v.letters())
                .any(|l| !a.contains(*l))
            {
                out.push(Violation {
                    kind: ViolationKind::ForeignLetter,
                    location: location.clone(),
                    detail: "image uses a letter outside the alphabet".to_string(),
                });
                break;
            }
        }
        if p.marks[rank]
            && image.terms().any(|((u, v), _)| {
                !u.over_prefix_alphabet(sub_len) || !v.over_prefix_alphabet(sub_len)
            })
        {
            out.push(Violation {
                kind: ViolationKind::DeltaLeavesSubalgebra,
                location,
                detail: "image of a subalgebra generator leaves the subalgebra".to_string(),
            });
        }
    }

    let gens = a.generators();
    for i in 1..gens.len() {
        let (prev, cur) = (&gens[i - 1], &gens[i]);
        let bad = (!p.marks[i - 1] && p.marks[i])
            || (p.marks[i - 1] == p.marks[i] && prev.degree > cur.degree);
        if bad {
            out.push(Violation {
                kind: ViolationKind::GeneratorOrder,
                location: format!("generator {}", cur.name),
                detail: format!("`{}` must not precede `{}`", prev.name, cur.name),
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaSource {
    /// Index into the Gröbner basis elements.
    Element(usize),
    /// Generator rank (shape re-check after reduction).
    Generator(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaViolation {
    pub source: DeltaSource,
    pub degree: u32,
    pub residual: TensorPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCheckReport {
    pub checked_degree: u32,
    pub violations: Vec<DeltaViolation>,
}

impl DeltaCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reduces both tensor legs to normal form, i.e. maps into `A ⊗ A`.
pub fn reduce_legs(t: &TensorPoly, gb: &TruncatedGB) -> Result<TensorPoly> {
    t.map_legs(|u| gb.normal_form_word(u), |v| gb.normal_form_word(v))
}

/// Checks `Δ(I) ⊆ k<X>⊗I + I⊗k<X>` on the Gröbner basis elements by
/// reducing both legs of their images, and re-checks the coproduct shape of
/// every generator after reduction.
pub fn check_delta_ideal(p: &Presentation, gb: &TruncatedGB) -> Result<DeltaCheckReport> {
    if gb.complete_below() < p.bound {
        return Err(Error::BeyondTruncation {
            degree: p.bound,
            bound: gb.complete_below(),
        });
    }
    let mut violations = Vec::new();
    for (i, g) in gb.elements().iter().enumerate() {
        let degree = g.homogeneous_degree().unwrap_or(0);
        if degree > p.bound {
            continue;
        }
        let image = apply_delta(g, &p.delta)?;
        let residual = reduce_legs(&image, gb)?;
        if !residual.is_zero() {
            violations.push(DeltaViolation {
                source: DeltaSource::Element(i),
                degree,
                residual,
            });
        }
    }
    for (rank, image) in &p.delta {
        let letter = p.alphabet.letter(*rank as usize);
        if letter.degree > p.bound {
            continue;
        }
        let x = gb.normal_form_word(&Word::single(letter))?;
        let reduced = reduce_legs(image, gb)?;
        let rest = &reduced - &TensorPoly::primitive(&x);
        if rest.terms().any(|((u, v), _)| u.is_empty() || v.is_empty()) {
            violations.push(DeltaViolation {
                source: DeltaSource::Generator(*rank),
                degree: letter.degree,
                residual: rest,
            });
        }
    }
    Ok(DeltaCheckReport {
        checked_degree: p.bound,
        violations,
    })
}

type Triple = BTreeMap<(Word, Word, Word), Scalar>;

fn add_triple(t: &mut Triple, key: (Word, Word, Word), c: Scalar) {
    use num_traits::Zero;
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match t.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Optional strict check: `(Δ⊗id)Δ(x) = (id⊗Δ)Δ(x)` in `A⊗A⊗A` for every
/// generator `x` within the bound. Returns the names of failing generators.
pub fn check_coassociativity(p: &Presentation, gb: &TruncatedGB) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for (rank, image) in &p.delta {
        let g = &p.alphabet.generators()[*rank as usize];
        if g.degree > p.bound {
            continue;
        }
        let mut left = Triple::new();
        let mut right = Triple::new();
        for ((u, v), c) in image.terms() {
            let du = reduce_legs(&apply_delta(&Poly::from_word(u.clone()), &p.delta)?, gb)?;
            let nv = gb.normal_form_word(v)?;
            for ((a, b), d) in du.terms() {
                for (w, e) in nv.terms() {
                    add_triple(&mut left, (a.clone(), b.clone(), w.clone()), c * d * e);
                }
            }
            let nu = gb.normal_form_word(u)?;
            let dv = reduce_legs(&apply_delta(&Poly::from_word(v.clone()), &p.delta)?, gb)?;
            for (w, e) in nu.terms() {
                for ((a, b), d) in dv.terms() {
                    add_triple(&mut right, (w.clone(), a.clone(), b.clone()), c * d * e);
                }
            }
        }
        if left != right {
            failures.push(g.name.clone());
        }
    }
    Ok(failures)
}

/// The presentation of `B` on `X'` whose relations are the Gröbner elements
/// of `I` supported on `X'`.
pub fn restrict_to_subalgebra(
    p: &Presentation,
    gb: &TruncatedGB,
    delta_report: &DeltaCheckReport,
) -> Result<Presentation> {
    if !delta_report.passed() {
        return Err(Error::HypothesesNotEstablished(format!(
            "{} coproduct violation(s)",
            delta_report.violations.len()
        )));
    }
    if delta_report.checked_degree < p.bound || gb.complete_below() < p.bound {
        return Err(Error::HypothesesNotEstablished(
            "coproduct check does not reach the bound".to_string(),
        ));
    }
    if validate(p).iter().any(|v| {
        matches!(
            v.kind,
            ViolationKind::GeneratorOrder | ViolationKind::DeltaLeavesSubalgebra
        )
    }) {
        return Err(Error::HypothesesNotEstablished(
            "subalgebra generators are not closed or not first".to_string(),
        ));
    }
    let m = p.subalgebra_len();
    let alphabet = Alphabet::new(p.alphabet.generators()[..m].to_vec())?;
    let relations = gb
        .elements()
        .iter()
        .filter(|g| g.over_prefix_alphabet(m))
        .cloned()
        .collect();
    let delta = p
        .delta
        .iter()
        .filter(|(r, _)| (**r as usize) < m)
        .map(|(r, t)| (*r, t.clone()))
        .collect();
    Ok(Presentation::from_ordered_parts(
        alphabet,
        vec![true; m],
        relations,
        delta,
        p.bound,
    ))
}

/// Extensional comparison of the `J`-side sets with the `X'`-parts of the
/// `I`-side sets, through the common bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub irreducible_lyndon_equal: bool,
    pub obstructions_equal: bool,
    pub groebner_equal: bool,
}

impl IntersectionReport {
    pub fn passed(&self) -> bool {
        self.irreducible_lyndon_equal && self.obstructions_equal && self.groebner_equal
    }
}

pub fn compare_with_subalgebra(
    gb_i: &TruncatedGB,
    gb_j: &TruncatedGB,
    sub_len: usize,
) -> Result<IntersectionReport> {
    let bound = gb_i.complete_below().min(gb_j.complete_below());
    let n_j: Vec<Word> = gb_j
        .alphabet()
        .enumerate_lyndon(bound)
        .into_iter()
        .filter(|w| gb_j.find_obstruction(w).is_none())
        .collect();
    let n_i_cap: Vec<Word> = gb_i
        .alphabet()
        .enumerate_lyndon(bound)
        .into_iter()
        .filter(|w| w.over_prefix_alphabet(sub_len) && gb_i.find_obstruction(w).is_none())
        .collect();
    let o_j: Vec<&Word> = gb_j
        .obstructions()
        .iter()
        .filter(|w| w.degree() <= bound)
        .collect();
    let o_i_cap: Vec<&Word> = gb_i
        .obstructions()
        .iter()
        .filter(|w| w.degree() <= bound && w.over_prefix_alphabet(sub_len))
        .collect();
    let g_j: Vec<&Poly> = gb_j
        .elements()
        .iter()
        .filter(|g| g.max_degree().unwrap_or(0) <= bound)
        .collect();
    let g_i_cap: Vec<&Poly> = gb_i
        .elements()
        .iter()
        .filter(|g| g.max_degree().unwrap_or(0) <= bound && g.over_prefix_alphabet(sub_len))
        .collect();
    Ok(IntersectionReport {
        irreducible_lyndon_equal: n_j == n_i_cap,
        obstructions_equal: o_j == o_i_cap,
        groebner_equal: g_j == g_i_cap,
    })
}
