//! Exhaustive census of reset thresholds over all binary n-state automata.
//!
//! Enumerates every raw transition table (no canonization), filters to
//! synchronizing automata with a pair-merging prefilter, and tallies exact
//! thresholds with a dense subset search. The state count is capped at 5:
//! that is 5^10 tables, which is desk-scale; 6 and beyond is not.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Largest state count the census will enumerate.
pub const MAX_CENSUS_STATES: usize = 5;

/// Attained reset thresholds of binary `n`-state automata, with the number
/// of transition tables attaining each value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdCensus {
    pub num_states: usize,
    pub counts: BTreeMap<usize, u64>,
    pub total_tables: u64,
    pub synchronizing_tables: u64,
}

impl ThresholdCensus {
    /// The sorted set of attained thresholds.
    pub fn thresholds(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    pub fn max_threshold(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }
}

/// Runs the full census for binary automata on `n <= 5` states.
pub fn reset_threshold_census(n: usize) -> Result<ThresholdCensus> {
    if n == 0 {
        return Err(Error::Domain("state count must be positive".into()));
    }
    if n > MAX_CENSUS_STATES {
        return Err(Error::ResourceLimit(format!(
            "census over {n}-state automata ({n}^{} tables) is beyond desk scale",
            2 * n
        )));
    }
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut total: u64 = 0;
    let mut synchronizing: u64 = 0;

    // delta[2s + x] is the image of state s under letter x.
    let mut delta = [0u8; 2 * MAX_CENSUS_STATES];
    let slots = 2 * n;
    loop {
        total += 1;
        if pairs_all_merge(&delta, n) {
            synchronizing += 1;
            let t = micro_threshold(&delta, n);
            *counts.entry(t).or_insert(0) += 1;
        }
        // Advance the base-n odometer over the table.
        let mut pos = 0;
        loop {
            if pos == slots {
                return Ok(ThresholdCensus {
                    num_states: n,
                    counts,
                    total_tables: total,
                    synchronizing_tables: synchronizing,
                });
            }
            delta[pos] += 1;
            if (delta[pos] as usize) < n {
                break;
            }
            delta[pos] = 0;
            pos += 1;
        }
    }
}

/// Pair criterion, allocation-free: every unordered state pair must reach
/// a merged pair. Quadratic in the state count.
fn pairs_all_merge(delta: &[u8], n: usize) -> bool {
    if n == 1 {
        return true;
    }
    // Bit per ordered pair id u*n+v (u < v) in a u32: n <= 5 needs 25 bits.
    let pid = |u: usize, v: usize| {
        if u < v {
            u * n + v
        } else {
            v * n + u
        }
    };
    let mut good: u32 = 0;
    let mut all: u32 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            all |= 1 << pid(u, v);
            for x in 0..2 {
                if delta[2 * u + x] == delta[2 * v + x] {
                    good |= 1 << pid(u, v);
                }
            }
        }
    }
    loop {
        let before = good;
        for u in 0..n {
            for v in (u + 1)..n {
                if good & (1 << pid(u, v)) != 0 {
                    continue;
                }
                for x in 0..2 {
                    let (a, b) = (delta[2 * u + x] as usize, delta[2 * v + x] as usize);
                    if good & (1 << pid(a, b)) != 0 {
                        good |= 1 << pid(u, v);
                        break;
                    }
                }
            }
        }
        if good == before {
            return good == all;
        }
    }
}

/// Exact threshold by dense breadth-first search over the 2^n subset masks.
/// The caller guarantees the automaton is synchronizing.
fn micro_threshold(delta: &[u8], n: usize) -> usize {
    let full: u32 = (1u32 << n) - 1;
    if full.count_ones() == 1 {
        return 0;
    }
    let mut img = [[0u32; MAX_CENSUS_STATES]; 2];
    for x in 0..2 {
        for s in 0..n {
            img[x][s] = 1 << delta[2 * s + x];
        }
    }
    let mut visited: u32 = 1 << full; // bit per subset mask; 2^5 = 32 masks
    let mut frontier = [0u8; 32];
    let mut frontier_len = 1;
    frontier[0] = full as u8;
    let mut depth = 0;
    loop {
        depth += 1;
        let mut next = [0u8; 32];
        let mut next_len = 0;
        for &setm in &frontier[..frontier_len] {
            for imgs in &img {
                let mut bits = setm as u32;
                let mut out: u32 = 0;
                while bits != 0 {
                    let s = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out |= imgs[s];
                }
                if visited & (1 << out) == 0 {
                    visited |= 1 << out;
                    if out.count_ones() == 1 {
                        return depth;
                    }
                    next[next_len] = out as u8;
                    next_len += 1;
                }
            }
        }
        debug_assert!(next_len > 0, "synchronizing automaton must make progress");
        frontier = next;
        frontier_len = next_len;
    }
}
