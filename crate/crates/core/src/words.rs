//! The free monoid on a well-ordered graded alphabet.
//!
//! The lexicographic order used throughout this crate treats a proper
//! prefix as *larger*: `u <_lex v` when `v` is a proper prefix of `u`, or
//! when the first differing letters satisfy `u[i] < v[i]`. Under this
//! convention a Lyndon word is strictly greater than each of its proper
//! rotations, and the Chen-Fox-Lyndon factorization is nondecreasing.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A single generator occurrence: its rank in the alphabet and its degree.
///
/// Ordering is by rank; the degree is carried along so that words can be
/// split and measured without going back to the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub rank: u32,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// Ordered graded generators. The order on letters is list position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    generators: Vec<Generator>,
}

impl Alphabet {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.name.is_empty() {
                return Err(Error::InvalidAlphabet(format!(
                    "generator {i} has an empty name"
                )));
            }
            if g.degree == 0 {
                return Err(Error::InvalidAlphabet(format!(
                    "generator `{}` must have positive degree",
                    g.name
                )));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidAlphabet(format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
        }
        Ok(Alphabet { generators })
    }

    /// Convenience constructor from `(name, degree)` pairs.
    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        Self::new(
            pairs
                .into_iter()
                .map(|(name, degree)| Generator {
                    name: name.into(),
                    degree,
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn letter(&self, rank: usize) -> Letter {
        Letter {
            rank: rank as u32,
            degree: self.generators[rank].degree,
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(|r| self.letter(r))
    }

    pub fn rank_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.generators[letter.rank as usize].name
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.generators
            .get(letter.rank as usize)
            .is_some_and(|g| g.degree == letter.degree)
    }

    /// Builds a word from generator ranks.
    pub fn word(&self, ranks: &[usize]) -> Word {
        Word::from_letters(ranks.iter().map(|&r| self.letter(r)).collect())
    }

    /// Builds a word from generator names.
    pub fn parse_word<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names
            .iter()
            .map(|n| {
                self.rank_of(n.as_ref())
                    .map(|r| self.letter(r))
                    .ok_or_else(|| Error::UnknownGenerator(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from_letters)
    }

    /// Renders a word as `·`-joined generator names; the empty word is `1`.
    pub fn render(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join("·")
    }

    /// All words of exactly the given degree, in glex order.
    pub fn words_of_degree(&self, degree: u32) -> Vec<Word> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.extend_words(degree, &mut prefix, &mut |w| {
            out.push(Word::from_letters(w.to_vec()))
        });
        out.sort();
        out
    }

    fn extend_words(
        &self,
        remaining: u32,
        prefix: &mut Vec<Letter>,
        emit: &mut dyn FnMut(&[Letter]),
    ) {
        if remaining == 0 {
            emit(prefix);
            return;
        }
        for l in self.letters() {
            if l.degree <= remaining {
                prefix.push(l);
                self.extend_words(remaining - l.degree, prefix, emit);
                prefix.pop();
            }
        }
    }

    /// All Lyndon words of degree at most `max_degree`, sorted by glex.
    pub fn enumerate_lyndon(&self, max_degree: u32) -> Vec<Word> {
        let mut out = Vec::new();
        for first in self.letters() {
            if first.degree > max_degree {
                continue;
            }
            // A Lyndon word begins with its largest letter.
            let mut prefix = vec![first];
            self.extend_bounded(first, max_degree - first.degree, &mut prefix, &mut out);
        }
        out.sort();
        out
    }

    fn extend_bounded(
        &self,
        first: Letter,
        remaining: u32,
        prefix: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        let word = Word::from_letters(prefix.clone());
        if word.is_lyndon() {
            out.push(word);
        }
        for l in self.letters() {
            if l.rank <= first.rank && l.degree <= remaining {
                prefix.push(l);
                self.extend_bounded(first, remaining - l.degree, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// An element of the free monoid.
///
/// `Ord` on words is the graded lex order: degree first, then the
/// lexicographic order. Within one degree no word is a proper prefix of
/// another, so the slice comparison on letters coincides with `lex_compare`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    degree: u32,
    letters: Vec<Letter>,
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        let degree = letters.iter().map(|l| l.degree).sum();
        Word { degree, letters }
    }

    pub fn single(letter: Letter) -> Self {
        Word {
            degree: letter.degree,
            letters: vec![letter],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_letter(&self) -> bool {
        self.letters.len() == 1
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            degree: self.degree + other.degree,
            letters,
        }
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters(self.letters[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.slice(start, self.len())
    }

    /// Position of the first occurrence of `factor` inside `self`.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        if factor.len() > self.len() {
            return None;
        }
        if factor.is_empty() {
            return Some(0);
        }
        self.letters
            .windows(factor.len())
            .position(|w| w == factor.letters())
    }

    pub fn has_factor(&self, factor: &Word) -> bool {
        self.find_factor(factor).is_some()
    }

    /// True when every letter has rank below `n` (the word lives on the
    /// first `n` generators).
    pub fn over_prefix_alphabet(&self, n: usize) -> bool {
        self.letters.iter().all(|l| (l.rank as usize) < n)
    }

    pub fn is_lyndon(&self) -> bool {
        is_lyndon(self)
    }
}

/// The lexicographic order in which a proper prefix is the larger word.
pub fn lex_compare(u: &Word, v: &Word) -> Ordering {
    for (a, b) in u.letters.iter().zip(&v.letters) {
        match a.rank.cmp(&b.rank) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    // One is a prefix of the other: the longer word is smaller.
    v.len().cmp(&u.len())
}

/// Graded lex order: degree first, then `lex_compare`.
pub fn glex_compare(u: &Word, v: &Word) -> Ordering {
    u.degree.cmp(&v.degree).then_with(|| lex_compare(u, v))
}

/// Suffix criterion: nonempty and lex-greater than every proper nonempty
/// suffix.
pub fn is_lyndon(u: &Word) -> bool {
    if u.is_empty() {
        return false;
    }
    (1..u.len()).all(|i| {
        let suffix = Word {
            degree: 0,
            letters: u.letters[i..].to_vec(),
        };
        lex_compare(u, &suffix) == Ordering::Greater
    })
}

/// Splits `u` at its lex-largest proper suffix.
pub fn shirshov_factorization(u: &Word) -> Result<(Word, Word)> {
    if u.len() < 2 {
        return Err(Error::NoShirshovFactorization);
    }
    let mut best = 1;
    for i in 2..u.len() {
        let candidate = Word {
            degree: 0,
            letters: u.letters[i..].to_vec(),
        };
        let current = Word {
            degree: 0,
            letters: u.letters[best..].to_vec(),
        };
        if lex_compare(&candidate, &current) == Ordering::Greater {
            best = i;
        }
    }
    Ok((u.prefix(best), u.suffix_from(best)))
}

/// Chen-Fox-Lyndon factorization into a lex-nondecreasing product of
/// Lyndon words (Duval's algorithm with the letter order reversed).
/// The empty word factors as the empty list.
pub fn cfl_factorization(u: &Word) -> Vec<Word> {
    let s = &u.letters;
    let n = s.len();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k].rank >= s[j].rank {
            if s[k].rank > s[j].rank {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            parts.push(u.slice(i, i + j - k));
            i += j - k;
        }
    }
    parts
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("x{}", l.rank + 1))
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> Alphabet {
        Alphabet::from_pairs([("x1", 1), ("x2", 1)]).unwrap()
    }

    #[test]
    fn lex_prefix_is_larger() {
        let a = Alphabet::from_pairs([("y", 1), ("x", 1)]).unwrap();
        let x = a.word(&[1]);
        let xx = a.word(&[1, 1]);
        assert_eq!(lex_compare(&x, &xx), Ordering::Greater);
        // x > y: xy <_lex x²y
        let xy = a.word(&[1, 0]);
        let xxy = a.word(&[1, 1, 0]);
        assert_eq!(lex_compare(&xy, &xxy), Ordering::Less);
        assert_eq!(lex_compare(&xy, &xy), Ordering::Equal);
    }

    #[test]
    fn glex_degree_dominates() {
        let a = two();
        assert_eq!(
            glex_compare(&a.word(&[1]), &a.word(&[0, 0])),
            Ordering::Less
        );
        let (u, v) = (a.word(&[1, 0]), a.word(&[0, 1]));
        assert_eq!(glex_compare(&u, &v), lex_compare(&u, &v));
        assert_eq!(u.cmp(&v), glex_compare(&u, &v));
    }

    #[test]
    fn lyndon_basics() {
        let a = two();
        assert!(is_lyndon(&a.word(&[1, 0])));
        assert!(!is_lyndon(&a.word(&[0, 1])));
        assert!(!is_lyndon(&Word::empty()));
        assert!(!is_lyndon(&a.word(&[0, 0])));
    }

    #[test]
    fn shirshov_examples() {
        let a = two();
        let (l, r) = shirshov_factorization(&a.word(&[1, 1, 0, 1, 0])).unwrap();
        assert_eq!((l, r), (a.word(&[1, 1, 0]), a.word(&[1, 0])));
        let (l, r) = shirshov_factorization(&a.word(&[1, 0])).unwrap();
        assert_eq!((l, r), (a.word(&[1]), a.word(&[0])));
        let (l, r) = shirshov_factorization(&a.word(&[1, 0, 0])).unwrap();
        assert_eq!((l, r), (a.word(&[1, 0]), a.word(&[0])));
        assert!(matches!(
            shirshov_factorization(&a.word(&[1])),
            Err(Error::NoShirshovFactorization)
        ));
    }

    #[test]
    fn cfl_examples() {
        let a = two();
        assert_eq!(cfl_factorization(&a.word(&[1, 0])), vec![a.word(&[1, 0])]);
        assert_eq!(
            cfl_factorization(&a.word(&[0, 1, 1])),
            vec![a.word(&[0]), a.word(&[1]), a.word(&[1])]
        );
        assert!(cfl_factorization(&Word::empty()).is_empty());
    }

    #[test]
    fn enumeration_examples() {
        let a = two();
        assert_eq!(
            a.enumerate_lyndon(2),
            vec![a.word(&[0]), a.word(&[1]), a.word(&[1, 0])]
        );
        let one = Alphabet::from_pairs([("x", 1)]).unwrap();
        assert_eq!(one.enumerate_lyndon(7), vec![one.word(&[0])]);
        let three = Alphabet::from_pairs([("a", 1), ("b", 1), ("c", 1)]).unwrap();
        assert_eq!(three.enumerate_lyndon(3).len(), 14);
    }

    #[test]
    fn enumeration_respects_degrees() {
        let a = Alphabet::from_pairs([("v", 1), ("w", 2)]).unwrap();
        let lyndon = a.enumerate_lyndon(3);
        let rendered: Vec<String> = lyndon.iter().map(|w| a.render(w)).collect();
        assert_eq!(rendered, vec!["v", "w", "w·v"]);
    }

    #[test]
    fn alphabet_rejects_bad_generators() {
        assert!(Alphabet::from_pairs([("x", 0)]).is_err());
        assert!(Alphabet::from_pairs([("", 1)]).is_err());
        assert!(Alphabet::from_pairs([("x", 1), ("x", 2)]).is_err());
    }

    #[test]
    fn degree_is_additive() {
        let a = Alphabet::from_pairs([("v", 1), ("w", 2)]).unwrap();
        let u = a.word(&[1, 0]);
        let v = a.word(&[1, 1]);
        assert_eq!(u.concat(&v).degree(), u.degree() + v.degree());
        assert_eq!(Word::empty().degree(), 0);
    }
}
