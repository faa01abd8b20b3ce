//! Independent oracles and shared fixtures. The oracles do not call into
//! the library's word combinatorics or rewriting; words are plain index
//! vectors and linear algebra is dense Gaussian elimination.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use lyndon_pbw::cli::corpus::{CorpusEntry, CORPUS};
use lyndon_pbw::cli::format::PresentationFile;
use lyndon_pbw::freealg::Poly;
use lyndon_pbw::pbw::{compute_pbw, PbwData};
use lyndon_pbw::presentation::{check_delta_ideal, restrict_to_subalgebra, Presentation};
use lyndon_pbw::rewrite::{complete, TruncatedGB};
use lyndon_pbw::words::{Alphabet, Word};

pub type W = Vec<usize>;
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Lex order with a proper prefix counted as larger.
pub fn lex_cmp(u: &[usize], v: &[usize]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        if a != b {
            return a.cmp(b);
        }
    }
    v.len().cmp(&u.len())
}

pub fn all_words(k: usize, len: usize) -> Vec<W> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn all_words_upto(k: usize, max_len: usize) -> Vec<W> {
    (0..=max_len).flat_map(|n| all_words(k, n)).collect()
}

/// Words over letters with the given degrees, of total degree `n`.
pub fn weighted_words(degrees: &[u32], n: u32) -> Vec<W> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (a, &d) in degrees.iter().enumerate() {
        if d <= n {
            for mut rest in weighted_words(degrees, n - d) {
                rest.insert(0, a);
                out.push(rest);
            }
        }
    }
    out
}

/// Lyndon by rotations: strictly greater than every proper rotation.
pub fn lyndon_by_rotation(u: &[usize]) -> bool {
    !u.is_empty()
        && (1..u.len()).all(|i| {
            let rot: W = u[i..].iter().chain(&u[..i]).copied().collect();
            lex_cmp(u, &rot) == Ordering::Greater
        })
}

/// Every factorization into rotation-Lyndon words in nondecreasing order.
pub fn cfl_brute(u: &[usize]) -> Vec<Vec<W>> {
    fn go(u: &[usize], prev: Option<&[usize]>, cur: &mut Vec<W>, out: &mut Vec<Vec<W>>) {
        if u.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 1..=u.len() {
            let head = &u[..i];
            if lyndon_by_rotation(head)
                && prev.is_none_or(|p| lex_cmp(p, head) != Ordering::Greater)
            {
                cur.push(head.to_vec());
                go(&u[i..], Some(head), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(u, None, &mut Vec::new(), &mut out);
    out
}

/// `(u_L, u_R)` with `u_R` the longest proper suffix that is Lyndon.
pub fn shirshov_by_longest_suffix(u: &[usize]) -> (W, W) {
    let i = (1..u.len())
        .find(|&i| lyndon_by_rotation(&u[i..]))
        .expect("length >= 2");
    (u[..i].to_vec(), u[i..].to_vec())
}

/// Rank of a dense rational matrix.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    pivot_columns(&mut rows).len()
}

/// Reduces `rows` in place to row echelon form and returns the pivot columns.
pub fn pivot_columns(rows: &mut [Vec<Q>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// A homogeneous relation as `(coefficient, word)` terms.
pub type Rel = Vec<(Q, W)>;

pub fn word_degree(degrees: &[u32], w: &[usize]) -> u32 {
    w.iter().map(|&a| degrees[a]).sum()
}

/// Spanning rows `a·r·b` of the degree-`n` slice of the ideal, over the
/// given column order.
fn ideal_slice(degrees: &[u32], rels: &[Rel], n: u32, columns: &[W]) -> Vec<Vec<Q>> {
    let index: HashMap<&W, usize> = columns.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = Vec::new();
    for r in rels {
        let Some((_, w0)) = r.first() else { continue };
        let d = word_degree(degrees, w0);
        if d > n {
            continue;
        }
        for k in 0..=(n - d) {
            for a in weighted_words(degrees, k) {
                for b in weighted_words(degrees, n - d - k) {
                    let mut row = vec![Q::zero(); columns.len()];
                    for (c, w) in r {
                        let full: W = a.iter().chain(w).chain(&b).copied().collect();
                        row[index[&full]] += c;
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// `#words − rank` of the degree-`n` ideal slice.
pub fn quotient_dim(degrees: &[u32], rels: &[Rel], n: u32) -> usize {
    let columns = weighted_words(degrees, n);
    let rows = ideal_slice(degrees, rels, n, &columns);
    columns.len() - rank(rows)
}

/// Dimension of `I_n ∩ span(words over the first sub_len letters)`.
pub fn intersection_dim(degrees: &[u32], rels: &[Rel], n: u32, sub_len: usize) -> usize {
    let mut columns = weighted_words(degrees, n);
    // Foreign columns first, so echelon rows with a pivot among the
    // subalgebra columns vanish on every foreign word.
    columns.sort_by_key(|w| w.iter().all(|&a| a < sub_len));
    let first_sub = columns
        .iter()
        .position(|w| w.iter().all(|&a| a < sub_len))
        .unwrap_or(columns.len());
    let mut rows = ideal_slice(degrees, rels, n, &columns);
    pivot_columns(&mut rows)
        .into_iter()
        .filter(|&c| c >= first_sub)
        .count()
}

/// Number of words over the first `sub_len` letters of degree `n`.
pub fn sub_words(degrees: &[u32], n: u32, sub_len: usize) -> usize {
    weighted_words(&degrees[..sub_len], n).len()
}

pub fn ranks(w: &Word) -> W {
    w.letters().iter().map(|l| l.rank as usize).collect()
}

pub fn to_word(a: &Alphabet, w: &[usize]) -> Word {
    a.word(w)
}

pub fn rels_of(p: &Presentation) -> Vec<Rel> {
    p.relations().iter().map(poly_terms).collect()
}

pub fn poly_terms(f: &Poly) -> Rel {
    f.terms().map(|(w, c)| (c.clone(), ranks(w))).collect()
}

pub fn degrees_of(a: &Alphabet) -> Vec<u32> {
    a.generators().iter().map(|g| g.degree).collect()
}

pub fn load(entry: &CorpusEntry) -> Presentation {
    PresentationFile::parse(entry.bundled)
        .and_then(|f| f.to_presentation(None))
        .unwrap_or_else(|e| panic!("{}: {e}", entry.name))
}

pub fn corpus(name: &str) -> Presentation {
    load(
        CORPUS
            .iter()
            .find(|e| e.name == name)
            .expect("corpus entry"),
    )
}

/// Möbius function, for the necklace count.
pub fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// Number of Lyndon words of length `n` over `k` letters.
pub fn necklaces(k: usize, n: usize) -> usize {
    let s: i64 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
        .sum();
    (s / n as i64) as usize
}

/// Fixture: the library pipeline up to the PBW data.
pub struct Setup {
    pub p: Presentation,
    pub gb: TruncatedGB,
    pub gb_j: TruncatedGB,
    pub d: PbwData,
}

pub fn setup(p: Presentation) -> Setup {
    let gb = complete(p.alphabet(), p.relations(), p.bound()).unwrap();
    let report = check_delta_ideal(&p, &gb).unwrap();
    let q = restrict_to_subalgebra(&p, &gb, &report).unwrap();
    let gb_j = complete(q.alphabet(), q.relations(), q.bound()).unwrap();
    let d = compute_pbw(&p, &gb, &gb_j, &report).unwrap();
    Setup { p, gb, gb_j, d }
}

pub fn render_all(a: &Alphabet, ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| a.render(w)).collect()
}
