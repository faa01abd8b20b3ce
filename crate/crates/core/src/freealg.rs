//! Exact-rational graded free algebra and its tensor square.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{cfl_factorization, is_lyndon, shirshov_factorization, Alphabet, Letter, Word};

pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `p/q` rendering (denominator always present, positive).
pub fn render_scalar(c: &Scalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if t.is_empty()
        || !t
            .chars()
            .all(|c| c.is_ascii_digit() || c == '/' || c == '-' || c == '+')
    {
        return Err(Error::Parse(format!(
            "`{s}` is not a rational of the form p/q"
        )));
    }
    t.parse::<BigRational>()
        .map_err(|e| Error::Parse(format!("`{s}`: {e}")))
}

/// A noncommutative polynomial: sparse map from words to nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Poly::term(scalar(1), w)
    }

    pub fn letter(l: Letter) -> Self {
        Poly::from_word(Word::single(l))
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = Poly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Word)>) -> Self {
        let mut p = Poly::zero();
        for (c, w) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending glex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl DoubleEndedIterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Removes and returns the glex-largest term.
    pub fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    /// `self += c * a * g * b`
    pub fn add_scaled_sandwich(&mut self, c: &Scalar, a: &Word, g: &Poly, b: &Word) {
        for (w, d) in &g.terms {
            self.add_term(a.concat(w).concat(b), c * d);
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, g: &Poly) {
        for (w, d) in &g.terms {
            self.add_term(w.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    /// Largest word under glex together with its coefficient.
    pub fn leading_term(&self) -> Result<(&Word, &Scalar)> {
        self.terms.iter().next_back().ok_or(Error::NoLeadingWord)
    }

    pub fn leading_word(&self) -> Result<&Word> {
        self.leading_term().map(|(w, _)| w)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Poly> {
        let (_, c) = self.leading_term()?;
        let inv = c.recip();
        Ok(self.scale(&inv))
    }

    /// The common degree of all terms; `None` for the zero polynomial or an
    /// inhomogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Word::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).max()
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Errors if some word uses a letter outside `alphabet`.
    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        for w in self.terms.keys() {
            if let Some(l) = w.letters().iter().find(|l| !alphabet.contains(**l)) {
                return Err(Error::AlphabetMismatch(l.rank));
            }
        }
        Ok(())
    }

    pub fn over_prefix_alphabet(&self, n: usize) -> bool {
        self.terms.keys().all(|w| w.over_prefix_alphabet(n))
    }

    pub fn mul_checked(&self, other: &Poly, alphabet: &Alphabet) -> Result<Poly> {
        self.check_alphabet(alphabet)?;
        other.check_alphabet(alphabet)?;
        Ok(self * other)
    }

    pub fn add_checked(&self, other: &Poly, alphabet: &Alphabet) -> Result<Poly> {
        self.check_alphabet(alphabet)?;
        other.check_alphabet(alphabet)?;
        Ok(self + other)
    }

    pub fn pow(&self, n: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Human-readable rendering, terms in glex-descending order.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() || w.is_empty() {
                out.push_str(&abs.to_string());
                if !w.is_empty() {
                    out.push(' ');
                }
            }
            if !w.is_empty() {
                out.push_str(&alphabet.render(w));
            }
        }
        out
    }

    /// `[["p/q", "a·b"], ...]` pairs in glex-descending order.
    pub fn to_pairs(&self, alphabet: &Alphabet) -> Vec<(String, String)> {
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| (render_scalar(c), alphabet.render(w)))
            .collect()
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&scalar(-1))
    }
}

/// `[f, g] = fg - gf`
pub fn commutator(f: &Poly, g: &Poly) -> Poly {
    &(f * g) - &(g * f)
}

/// The standard bracketing of a word: Lyndon words bracket along their
/// Shirshov factorization, other words multiply the brackets of their
/// Shirshov parts.
pub fn standard_bracket(u: &Word) -> Poly {
    if u.len() <= 1 {
        return Poly::from_word(u.clone());
    }
    if !is_lyndon(u) {
        // Equivalent to bracketing the Shirshov parts, and cheaper: the
        // CFL parts are Lyndon and nondecreasing.
        return cfl_factorization(u)
            .iter()
            .fold(Poly::one(), |acc, part| &acc * &standard_bracket(part));
    }
    let (l, r) = shirshov_factorization(u).expect("length checked");
    commutator(&standard_bracket(&l), &standard_bracket(&r))
}

/// Standard bracketing computed literally from the Shirshov recursion for
/// every word (no CFL shortcut).
pub fn standard_bracket_by_shirshov(u: &Word) -> Poly {
    if u.len() <= 1 {
        return Poly::from_word(u.clone());
    }
    let (l, r) = shirshov_factorization(u).expect("length checked");
    let (bl, br) = (
        standard_bracket_by_shirshov(&l),
        standard_bracket_by_shirshov(&r),
    );
    if is_lyndon(u) {
        commutator(&bl, &br)
    } else {
        &bl * &br
    }
}

/// An element of the tensor square `k<X> ⊗ k<X>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    /// `1 ⊗ 1`
    pub fn one() -> Self {
        TensorPoly::pure(scalar(1), Word::empty(), Word::empty())
    }

    pub fn pure(c: Scalar, left: Word, right: Word) -> Self {
        let mut t = TensorPoly::zero();
        t.add_term(left, right, c);
        t
    }

    /// `f ⊗ g`
    pub fn tensor(f: &Poly, g: &Poly) -> Self {
        let mut t = TensorPoly::zero();
        for (u, a) in f.terms() {
            for (v, b) in g.terms() {
                t.add_term(u.clone(), v.clone(), a * b);
            }
        }
        t
    }

    /// `g ⊗ 1 + 1 ⊗ g`
    pub fn primitive(g: &Poly) -> Self {
        &TensorPoly::tensor(g, &Poly::one()) + &TensorPoly::tensor(&Poly::one(), g)
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((u, v), d) in &self.terms {
            out.add_term(u.clone(), v.clone(), c * d);
        }
        out
    }

    /// Applies linear maps to each leg: `Σ c u⊗v ↦ Σ c f(u)⊗g(v)`.
    pub fn map_legs(
        &self,
        mut left: impl FnMut(&Word) -> Result<Poly>,
        mut right: impl FnMut(&Word) -> Result<Poly>,
    ) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero();
        for ((u, v), c) in &self.terms {
            let (fu, fv) = (left(u)?, right(v)?);
            for (a, ca) in fu.terms() {
                for (b, cb) in fv.terms() {
                    out.add_term(a.clone(), b.clone(), c * ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((u, v), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push(' ');
            }
            out.push_str(&format!("{}⊗{}", alphabet.render(u), alphabet.render(v)));
        }
        out
    }

    /// `("p/q", left, right)` triples in descending order.
    pub fn to_triples(&self, alphabet: &Alphabet) -> Vec<(String, String, String)> {
        self.terms
            .iter()
            .rev()
            .map(|((u, v), c)| (render_scalar(c), alphabet.render(u), alphabet.render(v)))
            .collect()
    }
}

impl<'a> Add<&'a TensorPoly> for &'a TensorPoly {
    type Output = TensorPoly;
    fn add(self, rhs: &'a TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((u, v), c) in &rhs.terms {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TensorPoly> for &'a TensorPoly {
    type Output = TensorPoly;
    fn sub(self, rhs: &'a TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((u, v), c) in &rhs.terms {
            out.add_term(u.clone(), v.clone(), -c);
        }
        out
    }
}

/// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.
impl<'a> Mul<&'a TensorPoly> for &'a TensorPoly {
    type Output = TensorPoly;
    fn mul(self, rhs: &'a TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &rhs.terms {
                out.add_term(a.concat(c), b.concat(d), x * y);
            }
        }
        out
    }
}

/// Coproduct images indexed by generator rank.
pub type DeltaImages = BTreeMap<u32, TensorPoly>;

/// Extends generator images multiplicatively and linearly; `1 ↦ 1⊗1`.
pub fn apply_delta(f: &Poly, images: &DeltaImages) -> Result<TensorPoly> {
    let mut out = TensorPoly::zero();
    for (w, c) in f.terms() {
        let mut acc = TensorPoly::one();
        for l in w.letters() {
            let image = images
                .get(&l.rank)
                .ok_or(Error::MissingDeltaImage(l.rank))?;
            acc = &acc * image;
        }
        out = &out + &acc.scale(c);
    }
    Ok(out)
}
