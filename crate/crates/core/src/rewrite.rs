//! Degree-truncated noncommutative Gröbner bases with respect to glex.
//!
//! Completion runs degree by degree. At degree `d` the candidates are the
//! input generators of degree `d` together with the overlap S-polynomials
//! of degree `d` among the elements found so far; after reduction modulo
//! the lower-degree basis they are interreduced by a row echelon form, which
//! yields exactly the reduced Gröbner basis elements of degree `d`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freealg::Poly;
use crate::linalg::Echelon;
use crate::words::{Alphabet, Letter, Word};

/// A reduced Gröbner basis valid through `complete_below`.
#[derive(Debug, Clone)]
pub struct TruncatedGB {
    alphabet: Alphabet,
    elements: Vec<Poly>,
    obstructions: Vec<Word>,
    bound: u32,
    complete_below: u32,
    finite_certificate: bool,
    index: HashMap<Vec<Letter>, usize>,
    max_len: usize,
}

/// One-sided overlap `lw(g_i) = a·c`, `lw(g_j) = c·b` with `c`, `a`, `b`
/// nonempty; the ambiguity word is `a·c·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub word: Word,
    pub left: usize,
    pub right: usize,
    pub shared: usize,
}

impl TruncatedGB {
    fn from_elements(alphabet: Alphabet, elements: Vec<Poly>, bound: u32) -> Self {
        let obstructions: Vec<Word> = elements
            .iter()
            .map(|g| g.leading_word().expect("nonzero").clone())
            .collect();
        let index = obstructions
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters().to_vec(), i))
            .collect();
        let max_len = obstructions.iter().map(Word::len).max().unwrap_or(0);
        TruncatedGB {
            alphabet,
            elements,
            obstructions,
            bound,
            complete_below: bound,
            finite_certificate: false,
            index,
            max_len,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Monic elements sorted by leading word (glex ascending).
    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    /// Leading words of the elements, in the same order.
    pub fn obstructions(&self) -> &[Word] {
        &self.obstructions
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn complete_below(&self) -> u32 {
        self.complete_below
    }

    /// True when the basis is provably complete in every degree: all input
    /// generators lie within the bound and every overlap of the final basis
    /// has degree at most the bound (and was therefore resolved).
    pub fn finite_certificate(&self) -> bool {
        self.finite_certificate
    }

    fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.complete_below {
            return Err(Error::BeyondTruncation {
                degree,
                bound: self.complete_below,
            });
        }
        Ok(())
    }

    /// The leftmost obstruction occurring in `w`: `(position, element index)`.
    pub fn find_obstruction(&self, w: &Word) -> Option<(usize, usize)> {
        let letters = w.letters();
        for start in 0..letters.len() {
            let max = self.max_len.min(letters.len() - start);
            for len in 1..=max {
                if let Some(&i) = self.index.get(&letters[start..start + len]) {
                    return Some((start, i));
                }
            }
        }
        None
    }

    /// Reduces modulo the basis until no word has an obstruction factor.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if let Some(d) = f.max_degree() {
            self.check_degree(d)?;
        }
        Ok(self.reduce_unchecked(f))
    }

    fn reduce_unchecked(&self, f: &Poly) -> Poly {
        let mut work = f.clone();
        let mut out = Poly::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.find_obstruction(&w) {
                Some((pos, i)) => {
                    let g = &self.elements[i];
                    let len = self.obstructions[i].len();
                    let a = w.prefix(pos);
                    let b = w.suffix_from(pos + len);
                    // g is monic; its leading term cancels w exactly.
                    for (u, d) in g.terms().rev().skip(1) {
                        work.add_term(a.concat(u).concat(&b), -(&c * d));
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<Poly> {
        self.normal_form(&Poly::from_word(w.clone()))
    }

    /// Whether `u` has a factor among the obstructions.
    pub fn is_reducible(&self, u: &Word) -> Result<bool> {
        self.check_degree(u.degree())?;
        Ok(self.find_obstruction(u).is_some())
    }

    /// All irreducible words of degree `n`, glex-sorted.
    pub fn irreducible_words(&self, n: u32) -> Result<Vec<Word>> {
        self.check_degree(n)?;
        Ok(self.irreducible_words_over(n, self.alphabet.len()))
    }

    /// Irreducible words of degree `n` that only use the first `letters`
    /// generators.
    pub fn irreducible_words_over(&self, n: u32, letters: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.extend_irreducible(n, letters, &mut prefix, &mut out);
        out.sort();
        out
    }

    fn extend_irreducible(
        &self,
        remaining: u32,
        letters: usize,
        prefix: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            out.push(Word::from_letters(prefix.clone()));
            return;
        }
        for l in self.alphabet.letters().take(letters) {
            if l.degree > remaining {
                continue;
            }
            prefix.push(l);
            let n = prefix.len();
            let hit =
                (1..=self.max_len.min(n)).any(|len| self.index.contains_key(&prefix[n - len..]));
            if !hit {
                self.extend_irreducible(remaining - l.degree, letters, prefix, out);
            }
            prefix.pop();
        }
    }

    /// All one-sided overlaps among the elements, sorted by ambiguity word
    /// (glex) and then by element indices.
    pub fn overlaps(&self) -> Vec<Overlap> {
        overlaps_of(&self.obstructions, None)
    }

    /// Whether every overlap's S-polynomial reduces to zero.
    pub fn overlaps_resolve(&self) -> Result<bool> {
        for o in self.overlaps() {
            if o.word.degree() > self.complete_below {
                continue;
            }
            let s = s_polynomial(&self.elements, &self.obstructions, &o);
            if !self.normal_form(&s)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks the reducedness invariant: monic elements and no word of any
    /// element has a factor among the other elements' leading words, and
    /// the tail of each element avoids all obstructions.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            let Ok((lw, c)) = g.leading_term() else {
                return false;
            };
            if *c != crate::freealg::scalar(1) {
                return false;
            }
            for (w, _) in g.terms() {
                for (j, o) in self.obstructions.iter().enumerate() {
                    if (i != j || w != lw) && w.has_factor(o) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn overlaps_of(obstructions: &[Word], max_degree: Option<u32>) -> Vec<Overlap> {
    let mut out = Vec::new();
    for (i, u) in obstructions.iter().enumerate() {
        for (j, v) in obstructions.iter().enumerate() {
            let max_shared = u.len().min(v.len());
            for k in 1..max_shared {
                if u.letters()[u.len() - k..] == v.letters()[..k] {
                    let word = u.concat(&v.suffix_from(k));
                    if max_degree.is_none_or(|d| word.degree() <= d) {
                        out.push(Overlap {
                            word,
                            left: i,
                            right: j,
                            shared: k,
                        });
                    }
                }
            }
            // Inclusion ambiguities cannot occur between reduced elements.
            debug_assert!(i == j || !u.has_factor(v));
        }
    }
    out.sort_by(|a, b| {
        a.word
            .cmp(&b.word)
            .then(a.left.cmp(&b.left))
            .then(a.right.cmp(&b.right))
    });
    out
}

fn s_polynomial(elements: &[Poly], obstructions: &[Word], o: &Overlap) -> Poly {
    let u = &obstructions[o.left];
    let v = &obstructions[o.right];
    let a = u.prefix(u.len() - o.shared);
    let b = v.suffix_from(o.shared);
    let one = crate::freealg::scalar(1);
    let mut s = Poly::zero();
    s.add_scaled_sandwich(&one, &Word::empty(), &elements[o.left], &b);
    s.add_scaled_sandwich(&-one, &a, &elements[o.right], &Word::empty());
    s
}

/// Computes the reduced Gröbner basis of the ideal generated by
/// `generators`, through degree `bound`.
pub fn complete(alphabet: &Alphabet, generators: &[Poly], bound: u32) -> Result<TruncatedGB> {
    let mut by_degree: Vec<Vec<&Poly>> = vec![Vec::new(); bound as usize + 1];
    let mut beyond_bound = false;
    for g in generators {
        g.check_alphabet(alphabet)?;
        if g.is_zero() {
            continue;
        }
        let d = g.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
        if d == 0 {
            return Err(Error::DegreeZeroGenerator);
        }
        if d > bound {
            beyond_bound = true;
        } else {
            by_degree[d as usize].push(g);
        }
    }

    let mut gb = TruncatedGB::from_elements(alphabet.clone(), Vec::new(), bound);
    for d in 1..=bound {
        let mut echelon = Echelon::new();
        for g in &by_degree[d as usize] {
            echelon.insert(&gb.reduce_unchecked(g));
        }
        for o in overlaps_of(&gb.obstructions, Some(d)) {
            if o.word.degree() != d {
                continue;
            }
            let s = s_polynomial(&gb.elements, &gb.obstructions, &o);
            echelon.insert(&gb.reduce_unchecked(&s));
        }
        if echelon.rank() == 0 {
            continue;
        }
        let mut elements = gb.elements.clone();
        elements.extend(echelon.into_reduced());
        elements.sort_by(|f, g| f.leading_word().unwrap().cmp(g.leading_word().unwrap()));
        gb = TruncatedGB::from_elements(alphabet.clone(), elements, bound);
    }
    gb.finite_certificate = !beyond_bound && gb.overlaps().iter().all(|o| o.word.degree() <= bound);
    Ok(gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::scalar;

    fn x1x2() -> Alphabet {
        Alphabet::from_pairs([("x1", 1), ("x2", 1)]).unwrap()
    }

    fn commutator_relation(a: &Alphabet) -> Poly {
        Poly::from_terms([(scalar(1), a.word(&[1, 0])), (scalar(-1), a.word(&[0, 1]))])
    }

    fn heisenberg(a: &Alphabet) -> Vec<Poly> {
        vec![
            Poly::from_terms([
                (scalar(1), a.word(&[1, 0, 0])),
                (scalar(-2), a.word(&[0, 1, 0])),
                (scalar(1), a.word(&[0, 0, 1])),
            ]),
            Poly::from_terms([
                (scalar(1), a.word(&[1, 1, 0])),
                (scalar(-2), a.word(&[1, 0, 1])),
                (scalar(1), a.word(&[0, 1, 1])),
            ]),
        ]
    }

    #[test]
    fn commutative_basis() {
        let a = x1x2();
        let gb = complete(&a, &[commutator_relation(&a)], 6).unwrap();
        assert_eq!(gb.elements(), &[commutator_relation(&a)]);
        assert_eq!(gb.obstructions(), &[a.word(&[1, 0])]);
        assert!(gb.finite_certificate());
        assert_eq!(
            gb.normal_form_word(&a.word(&[1, 0])).unwrap(),
            Poly::from_word(a.word(&[0, 1]))
        );
        assert_eq!(
            gb.normal_form_word(&a.word(&[0, 1])).unwrap(),
            Poly::from_word(a.word(&[0, 1]))
        );
        assert!(gb.is_reducible(&a.word(&[1, 0])).unwrap());
        assert!(!gb.is_reducible(&a.word(&[0, 0, 0, 0])).unwrap());
        let deg2 = gb.irreducible_words(2).unwrap();
        assert_eq!(
            deg2,
            vec![a.word(&[0, 0]), a.word(&[0, 1]), a.word(&[1, 1])]
        );
        assert_eq!(gb.irreducible_words(0).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn empty_generators() {
        let a = x1x2();
        let gb = complete(&a, &[], 6).unwrap();
        assert!(gb.elements().is_empty());
        assert!(gb.obstructions().is_empty());
    }

    #[test]
    fn heisenberg_obstructions() {
        let a = Alphabet::from_pairs([("x", 1), ("y", 1)]).unwrap();
        let gb = complete(&a, &heisenberg(&a), 6).unwrap();
        assert_eq!(gb.obstructions(), &[a.word(&[1, 0, 0]), a.word(&[1, 1, 0])]);
        assert!(gb.is_reduced());
        assert!(gb.finite_certificate());
        assert_eq!(gb.irreducible_words(3).unwrap().len(), 6);
    }

    #[test]
    fn errors() {
        let a = x1x2();
        let inhomogeneous =
            Poly::from_terms([(scalar(1), a.word(&[1, 0])), (scalar(-1), a.word(&[0]))]);
        assert_eq!(
            complete(&a, &[inhomogeneous], 4).unwrap_err(),
            Error::Inhomogeneous
        );
        assert_eq!(
            complete(&a, &[Poly::one()], 4).unwrap_err(),
            Error::DegreeZeroGenerator
        );
        let gb = complete(&a, &[commutator_relation(&a)], 3).unwrap();
        assert!(matches!(
            gb.normal_form_word(&a.word(&[1, 1, 1, 1])),
            Err(Error::BeyondTruncation {
                degree: 4,
                bound: 3
            })
        ));
        assert!(gb.is_reducible(&a.word(&[0, 0, 0, 0])).is_err());
        assert!(gb.irreducible_words(4).is_err());
    }

    #[test]
    fn generator_beyond_bound_blocks_certificate() {
        let a = x1x2();
        let quartic = Poly::from_word(a.word(&[1, 1, 1, 1]));
        let gb = complete(&a, &[quartic], 3).unwrap();
        assert!(gb.elements().is_empty());
        assert!(!gb.finite_certificate());
    }
}
