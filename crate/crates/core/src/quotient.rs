//! Congruences, factor automata and automaton isomorphism.
//!
//! The central relation is the row congruence sigma: two states are
//! equivalent when they have identical transition rows. Factoring by sigma
//! changes the reset threshold by at most one, which is what makes the
//! stretched family instances tractable level by level.

use std::collections::HashMap;

use itertools::Itertools;

use crate::automaton::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::solver::{reset_threshold_with_cap, DEFAULT_STATE_CAP};

/// Default cap on state counts for the isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 16;

/// Alphabet sizes above this make letter-permutation search unreasonable.
const MAX_PERMUTED_ALPHABET: usize = 8;

/// A partition of `0..universe-1` into disjoint nonempty classes.
///
/// Classes are kept sorted by their minimal member, which fixes the state
/// numbering of every factor automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    universe: usize,
    classes: Vec<StateSet>,
    class_of: Vec<usize>,
}

impl Partition {
    pub fn new(universe: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; universe];
        let mut sets = Vec::with_capacity(classes.len());
        for class in &classes {
            if class.is_empty() {
                return Err(Error::Domain("partition classes must be nonempty".into()));
            }
            sets.push(StateSet::from_states(universe, class.iter().copied())?);
        }
        sets.sort_by_key(|c| c.iter().next().expect("classes are nonempty"));
        for (idx, class) in sets.iter().enumerate() {
            for s in class.iter() {
                if class_of[s] != usize::MAX {
                    return Err(Error::Domain(format!(
                        "state {s} appears in more than one class"
                    )));
                }
                class_of[s] = idx;
            }
        }
        if let Some(s) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Domain(format!("state {s} is not covered")));
        }
        Ok(Partition {
            universe,
            classes: sets,
            class_of,
        })
    }

    /// The all-singletons partition.
    pub fn singletons(universe: usize) -> Self {
        Partition::new(universe, (0..universe).map(|s| vec![s]).collect())
            .expect("singletons always form a partition")
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[StateSet] {
        &self.classes
    }

    pub fn class_of(&self, state: usize) -> usize {
        self.class_of[state]
    }

    pub fn is_trivial(&self) -> bool {
        self.num_classes() == self.universe
    }
}

/// Groups states with identical transition rows.
///
/// The result is always a congruence: states in one class agree on every
/// letter, so each class maps into a single state, hence a single class.
pub fn sigma_congruence(dfa: &Dfa) -> Partition {
    let mut groups: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for s in 0..dfa.num_states() {
        groups.entry(dfa.row(s)).or_default().push(s);
    }
    Partition::new(dfa.num_states(), groups.into_values().collect())
        .expect("row groups partition the state set")
}

/// The factor automaton induced on the classes of a congruence.
///
/// Class indices follow ascending minimal members. Fails if some class maps
/// across two classes under one letter.
pub fn factor(dfa: &Dfa, part: &Partition) -> Result<Dfa> {
    if part.universe() != dfa.num_states() {
        return Err(Error::UniverseMismatch {
            set_universe: part.universe(),
            num_states: dfa.num_states(),
        });
    }
    let mut table = Vec::with_capacity(part.num_classes());
    for class in part.classes() {
        let mut row = Vec::with_capacity(dfa.alphabet_size());
        for x in 0..dfa.alphabet_size() {
            let mut images = class.iter().map(|s| part.class_of(dfa.step(s, x)));
            let first = images.next().expect("classes are nonempty");
            if images.any(|c| c != first) {
                return Err(Error::NotCongruence(format!(
                    "class {:?} splits under letter {x}",
                    class
                )));
            }
            row.push(first);
        }
        table.push(row);
    }
    Dfa::new(dfa.alphabet_size(), table)
}

/// State-bijection isomorphism test with the default size cap.
pub fn is_isomorphic(x: &Dfa, y: &Dfa, allow_letter_permutation: bool) -> Result<bool> {
    is_isomorphic_with_cap(x, y, allow_letter_permutation, DEFAULT_ISO_CAP)
}

/// True iff a state bijection (optionally composed with a letter
/// permutation) carries the transition table of `x` onto that of `y`.
///
/// Backtracking over degree-consistent bijections, pruned by iterated
/// row-signature refinement; assignments propagate through the
/// deterministic transitions, so rigid instances resolve without search.
pub fn is_isomorphic_with_cap(
    x: &Dfa,
    y: &Dfa,
    allow_letter_permutation: bool,
    cap: usize,
) -> Result<bool> {
    if x.num_states() > cap || y.num_states() > cap {
        return Err(Error::ResourceLimit(format!(
            "isomorphism search capped at {cap} states"
        )));
    }
    if x.num_states() != y.num_states() || x.alphabet_size() != y.alphabet_size() {
        return Ok(false);
    }
    if !allow_letter_permutation {
        return Ok(isomorphic_fixed_letters(x, y));
    }
    let k = x.alphabet_size();
    if k > MAX_PERMUTED_ALPHABET {
        return Err(Error::ResourceLimit(format!(
            "letter permutations over alphabet of size {k}"
        )));
    }
    for perm in (0..k).permutations(k) {
        let permuted = Dfa::from_fn(y.num_states(), k, |s, l| y.step(s, perm[l]))
            .expect("permuting letters preserves validity");
        if isomorphic_fixed_letters(x, &permuted) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn isomorphic_fixed_letters(x: &Dfa, y: &Dfa) -> bool {
    let n = x.num_states();
    let (colors_x, colors_y) = match joint_refinement(x, y) {
        Some(c) => c,
        None => return false,
    };
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(x, y, &colors_x, &colors_y, &mut mapping, &mut used)
}

/// Iterated joint row-signature refinement. Returns per-state colors, or
/// `None` if the color class sizes already rule out a bijection.
fn joint_refinement(x: &Dfa, y: &Dfa) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = x.num_states();
    let mut cx = vec![0usize; n];
    let mut cy = vec![0usize; n];
    let mut num_colors = 1;
    loop {
        let mut next_id: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let signature = |dfa: &Dfa, colors: &[usize], s: usize| {
            (colors[s], dfa.row(s).iter().map(|&t| colors[t]).collect::<Vec<_>>())
        };
        // Deterministic ids: sweep x first, then y.
        let mut nx = vec![0; n];
        let mut ny = vec![0; n];
        for s in 0..n {
            let sig = signature(x, &cx, s);
            let fresh = next_id.len();
            nx[s] = *next_id.entry(sig).or_insert(fresh);
        }
        for s in 0..n {
            let sig = signature(y, &cy, s);
            let fresh = next_id.len();
            ny[s] = *next_id.entry(sig).or_insert(fresh);
        }
        let new_count = next_id.len();
        let mut count_x = vec![0usize; new_count];
        let mut count_y = vec![0usize; new_count];
        for s in 0..n {
            count_x[nx[s]] += 1;
            count_y[ny[s]] += 1;
        }
        if count_x != count_y {
            return None;
        }
        let stable = new_count == num_colors;
        cx = nx;
        cy = ny;
        if stable {
            return Some((cx, cy));
        }
        num_colors = new_count;
    }
}

fn backtrack(
    x: &Dfa,
    y: &Dfa,
    colors_x: &[usize],
    colors_y: &[usize],
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let seed = match mapping.iter().position(|&m| m == usize::MAX) {
        Some(s) => s,
        None => return true,
    };
    for t in 0..y.num_states() {
        if used[t] || colors_y[t] != colors_x[seed] {
            continue;
        }
        let mut trail = Vec::new();
        if propagate(x, y, colors_x, colors_y, seed, t, mapping, used, &mut trail)
            && backtrack(x, y, colors_x, colors_y, mapping, used)
        {
            return true;
        }
        for s in trail {
            used[mapping[s]] = false;
            mapping[s] = usize::MAX;
        }
    }
    false
}

/// Forces `seed -> target` and everything the transitions imply; records
/// the assignments in `trail` so the caller can undo them.
#[allow(clippy::too_many_arguments)]
fn propagate(
    x: &Dfa,
    y: &Dfa,
    colors_x: &[usize],
    colors_y: &[usize],
    seed: usize,
    target: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    trail: &mut Vec<usize>,
) -> bool {
    let mut queue = vec![(seed, target)];
    while let Some((s, t)) = queue.pop() {
        if mapping[s] != usize::MAX {
            if mapping[s] != t {
                return false;
            }
            continue;
        }
        if used[t] || colors_x[s] != colors_y[t] {
            return false;
        }
        mapping[s] = t;
        used[t] = true;
        trail.push(s);
        for l in 0..x.alphabet_size() {
            queue.push((x.step(s, l), y.step(t, l)));
        }
    }
    true
}

/// The reset thresholds of an automaton and its sigma factor.
///
/// `ok` reports the sandwich `rt(factor) <= rt <= rt(factor) + 1`, which
/// holds for every synchronizing automaton; a violation indicates a solver
/// bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientBounds {
    pub factor_threshold: usize,
    pub original_threshold: usize,
    pub ok: bool,
}

pub fn sigma_quotient_bounds(dfa: &Dfa) -> Result<QuotientBounds> {
    sigma_quotient_bounds_with_cap(dfa, DEFAULT_STATE_CAP)
}

pub fn sigma_quotient_bounds_with_cap(dfa: &Dfa, cap: usize) -> Result<QuotientBounds> {
    let part = sigma_congruence(dfa);
    let quotient = factor(dfa, &part)?;
    let original = reset_threshold_with_cap(dfa, cap)?.threshold;
    let factored = reset_threshold_with_cap(&quotient, cap)?.threshold;
    Ok(QuotientBounds {
        factor_threshold: factored,
        original_threshold: original,
        ok: factored <= original && original <= factored + 1,
    })
}
