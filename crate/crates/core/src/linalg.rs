//! Sparse row echelon forms over words, used for ranks and interreduction.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::freealg::Poly;
use crate::words::Word;

/// Monic rows keyed by their leading (glex-largest) word.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<Word, Poly>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminates every pivot word from `row`.
    pub fn reduce(&self, row: &Poly) -> Poly {
        let mut work = row.clone();
        let mut out = Poly::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.pivots.get(&w) {
                Some(p) => {
                    // p is monic with leading word w, which was just removed.
                    for (u, d) in p.terms().rev().skip(1) {
                        work.add_term(u.clone(), -(&c * d));
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }

    /// Inserts a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, row: &Poly) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_zero() {
            return false;
        }
        let monic = reduced.monic().expect("nonzero");
        let lw = monic.leading_word().expect("nonzero").clone();
        self.pivots.insert(lw, monic);
        true
    }

    pub fn contains(&self, row: &Poly) -> bool {
        self.reduce(row).is_zero()
    }

    pub fn pivot_words(&self) -> impl Iterator<Item = &Word> {
        self.pivots.keys()
    }

    /// Reduced row echelon form: every row is monic and its tail avoids all
    /// pivot words. Rows are returned in ascending order of leading word.
    pub fn into_reduced(self) -> Vec<Poly> {
        let mut done: Echelon = Echelon::new();
        for (lw, row) in self.pivots {
            let mut tail = row.clone();
            let lead = tail.pop_leading().expect("nonzero");
            debug_assert_eq!(lead.0, lw);
            let mut reduced = done.reduce(&tail);
            reduced.add_term(lead.0.clone(), lead.1);
            debug_assert!(!reduced.coeff(&lw).is_zero());
            done.pivots.insert(lw, reduced);
        }
        done.pivots.into_values().collect()
    }
}

/// Rank of a family of polynomials.
pub fn rank<'a>(rows: impl IntoIterator<Item = &'a Poly>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::scalar;
    use crate::words::Alphabet;

    #[test]
    fn rank_and_rref() {
        let a = Alphabet::from_pairs([("x", 1), ("y", 1)]).unwrap();
        let (xx, xy, yx) = (a.word(&[0, 0]), a.word(&[0, 1]), a.word(&[1, 0]));
        let r1 = Poly::from_terms([(scalar(2), yx.clone()), (scalar(1), xy.clone())]);
        let r2 = Poly::from_terms([(scalar(1), xy.clone()), (scalar(1), xx.clone())]);
        let r3 = &r1 + &r2;
        assert_eq!(rank([&r1, &r2, &r3]), 2);
        let mut e = Echelon::new();
        e.insert(&r1);
        e.insert(&r2);
        let rows = e.into_reduced();
        // Pivots xy and yx; the yx row must not mention xy.
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1].coeff(&xy), scalar(0));
        assert_eq!(rows[1].coeff(&yx), scalar(1));
    }
}
