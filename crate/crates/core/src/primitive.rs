//! Primitive digraphs and their exponents.
//!
//! A digraph is primitive when it is strongly connected and the gcd of its
//! cycle lengths is 1; equivalently some boolean power of its adjacency
//! matrix is all-ones. The least such power is the exponent, classically at
//! most `(n-1)^2 + 1`. Exponents matter here because the reset threshold of
//! a strongly connected synchronizing automaton always exceeds the exponent
//! of its underlying digraph minus the state count.

use crate::automaton::Dfa;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::solver::{reset_threshold_with_cap, DEFAULT_STATE_CAP};

/// A square boolean matrix with row-packed words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoolMatrix {
    dim: usize,
    words_per_row: usize,
    rows: Vec<u64>,
}

impl BoolMatrix {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        let words_per_row = dim.div_ceil(64);
        BoolMatrix {
            dim,
            words_per_row,
            rows: vec![0; dim * words_per_row],
        }
    }

    pub fn from_digraph(g: &Digraph) -> Self {
        let mut m = BoolMatrix::zero(g.num_vertices());
        for (u, v) in g.edges() {
            m.set(u, v, true);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words_per_row + j / 64] & (1u64 << (j % 64)) != 0
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let word = &mut self.rows[i * self.words_per_row + j / 64];
        if value {
            *word |= 1u64 << (j % 64);
        } else {
            *word &= !(1u64 << (j % 64));
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// Boolean matrix product: entry `(i, j)` is true iff some `k` links
    /// `i -> k -> j`.
    pub fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = BoolMatrix::zero(self.dim);
        for i in 0..self.dim {
            let mut acc = vec![0u64; self.words_per_row];
            for k in 0..self.dim {
                if self.get(i, k) {
                    for (a, b) in acc.iter_mut().zip(other.row(k)) {
                        *a |= b;
                    }
                }
            }
            out.rows[i * self.words_per_row..(i + 1) * self.words_per_row]
                .copy_from_slice(&acc);
        }
        out
    }

    pub fn is_all_true(&self) -> bool {
        let full_words = self.dim / 64;
        let tail_bits = self.dim % 64;
        for i in 0..self.dim {
            let row = self.row(i);
            for &w in &row[..full_words] {
                if w != u64::MAX {
                    return false;
                }
            }
            if tail_bits > 0 && row[full_words] != (1u64 << tail_bits) - 1 {
                return false;
            }
        }
        true
    }
}

/// True iff the digraph is strongly connected and the gcd of its cycle
/// lengths is 1.
///
/// The gcd is computed without enumerating cycles: fix BFS levels from
/// vertex 0 and take the gcd of `level(u) + 1 - level(v)` over all edges.
pub fn is_primitive(g: &Digraph) -> bool {
    if !g.is_strongly_connected() {
        return false;
    }
    if g.num_edges() == 0 {
        return false;
    }
    let n = g.num_vertices();
    let mut level = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    level[0] = 0;
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut period: i64 = 0;
    for (u, v) in g.edges() {
        let diff = level[u] as i64 + 1 - level[v] as i64;
        period = gcd_i64(period, diff.abs());
    }
    period == 1
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd_i64(b, a % b)
    }
}

/// Least `t` such that every ordered vertex pair is joined by a walk of
/// length exactly `t`.
///
/// Requires a primitive digraph. Repeated squaring finds the first binary
/// power whose matrix is all-ones; binary search with the stored powers
/// then isolates the minimum. Positivity is monotone on strongly connected
/// digraphs, which justifies the search; if the classical `(n-1)^2 + 1`
/// bound is ever exceeded something upstream let a non-primitive digraph
/// through, and the call fails loudly.
pub fn exponent(g: &Digraph) -> Result<usize> {
    if !is_primitive(g) {
        return Err(Error::Domain("digraph is not primitive".into()));
    }
    let n = g.num_vertices();
    let bound = (n - 1) * (n - 1) + 2;
    let base = BoolMatrix::from_digraph(g);
    // powers[j] = M^(2^j)
    let mut powers = vec![base.clone()];
    while !powers.last().expect("nonempty").is_all_true() {
        let last = powers.last().expect("nonempty");
        let exp_so_far = 1usize << (powers.len() - 1);
        if exp_so_far > bound {
            return Err(Error::Internal(format!(
                "no all-ones power within the exponent bound {bound}"
            )));
        }
        let next = last.mul(last);
        powers.push(next);
    }
    if powers.len() == 1 {
        return Ok(1);
    }
    // Minimal t lies in (2^(j-1), 2^j]; binary-search the offset by
    // composing stored binary powers.
    let j = powers.len() - 1;
    let mut lo = 1usize << (j - 1); // known not all-true
    let mut hi = 1usize << j; // known all-true
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if power_is_all_true(&powers, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if hi > bound {
        return Err(Error::Internal(format!(
            "computed exponent {hi} exceeds the bound {bound}"
        )));
    }
    Ok(hi)
}

fn power_is_all_true(powers: &[BoolMatrix], t: usize) -> bool {
    let mut acc: Option<BoolMatrix> = None;
    for (j, power) in powers.iter().enumerate() {
        if t & (1 << j) != 0 {
            acc = Some(match acc {
                None => power.clone(),
                Some(m) => m.mul(power),
            });
        }
    }
    acc.expect("t >= 1").is_all_true()
}

/// Exponent of the underlying digraph, exact reset threshold, and the gap
/// inequality `rt > exp - n` between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentGap {
    pub exponent: usize,
    pub threshold: usize,
    pub ok: bool,
}

pub fn exponent_gap_check(dfa: &Dfa) -> Result<ExponentGap> {
    exponent_gap_check_with_cap(dfa, DEFAULT_STATE_CAP)
}

pub fn exponent_gap_check_with_cap(dfa: &Dfa, cap: usize) -> Result<ExponentGap> {
    let g = dfa.underlying_digraph();
    let exp = exponent(&g)?;
    let threshold = reset_threshold_with_cap(dfa, cap)?.threshold;
    let ok = threshold as i64 > exp as i64 - dfa.num_states() as i64;
    Ok(ExponentGap {
        exponent: exp,
        threshold,
        ok,
    })
}
