//! Enumeration of the colorings of a constant-out-degree digraph.
//!
//! A coloring assigns the letters to each vertex's out-edges, turning the
//! digraph into a complete deterministic automaton. Vertices drawn with a
//! single out-edge are treated as carrying every letter on that edge.

use itertools::Itertools;

use crate::automaton::Dfa;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::quotient::is_isomorphic_with_cap;
use crate::solver::is_synchronizing;

/// Default ceiling on the number of raw letter assignments explored.
pub const DEFAULT_COLORING_BUDGET: usize = 10_000;

/// One representative coloring and whether it synchronizes.
#[derive(Clone, Debug)]
pub struct Coloring {
    pub dfa: Dfa,
    pub synchronizing: bool,
}

pub fn enumerate_colorings(g: &Digraph) -> Result<Vec<Coloring>> {
    enumerate_colorings_with_budget(g, DEFAULT_COLORING_BUDGET)
}

/// All colorings of `g` up to automaton isomorphism (letter permutations
/// allowed), each flagged as synchronizing or not.
///
/// The alphabet size is the maximal out-degree `d`; every vertex must have
/// out-degree `d` or 1. Representatives are returned in transition-table
/// order.
pub fn enumerate_colorings_with_budget(g: &Digraph, budget: usize) -> Result<Vec<Coloring>> {
    let n = g.num_vertices();
    let d = (0..n).map(|v| g.out_degree(v)).max().unwrap_or(0);
    if d == 0 {
        return Err(Error::Domain("every vertex needs an outgoing edge".into()));
    }
    let mut branching = Vec::new();
    for v in 0..n {
        match g.out_degree(v) {
            1 => {}
            deg if deg == d => branching.push(v),
            deg => {
                return Err(Error::Domain(format!(
                    "vertex {v} has out-degree {deg}, expected 1 or {d}"
                )))
            }
        }
    }

    let perms: Vec<Vec<usize>> = (0..d).permutations(d).collect();
    let total = perms
        .len()
        .checked_pow(branching.len() as u32)
        .unwrap_or(usize::MAX);
    if total > budget {
        return Err(Error::ResourceLimit(format!(
            "{total} letter assignments exceed the budget of {budget}"
        )));
    }

    let mut reps: Vec<Dfa> = Vec::new();
    // Odometer over one permutation choice per branching vertex.
    let mut choice = vec![0usize; branching.len()];
    let mut done = false;
    while !done {
        let dfa = Dfa::from_fn(n, d, |v, letter| {
            let out = g.out_neighbors(v);
            if out.len() == 1 {
                out[0]
            } else {
                let pos = branching.iter().position(|&b| b == v).expect("branching");
                out[perms[choice[pos]][letter]]
            }
        })?;
        let mut known = false;
        for rep in &reps {
            if is_isomorphic_with_cap(&dfa, rep, true, n)? {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(dfa);
        }
        done = advance_odometer(&mut choice, perms.len());
    }

    reps.sort_by(|x, y| {
        let rows = |dfa: &Dfa| (0..n).flat_map(|s| dfa.row(s).to_vec()).collect::<Vec<_>>();
        rows(x).cmp(&rows(y))
    });
    Ok(reps
        .into_iter()
        .map(|dfa| {
            let synchronizing = is_synchronizing(&dfa);
            Coloring { dfa, synchronizing }
        })
        .collect())
}

/// Increments a mixed-radix counter; true once it wraps around.
fn advance_odometer(choice: &mut [usize], base: usize) -> bool {
    for slot in choice.iter_mut() {
        *slot += 1;
        if *slot < base {
            return false;
        }
        *slot = 0;
    }
    true
}
