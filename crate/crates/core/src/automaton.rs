//! Complete deterministic finite automata and bit-packed state sets.
//!
//! A [`Dfa`] is a triple (states, alphabet, transition table) with states
//! `0..n-1` and letters `0..k-1`; every (state, letter) pair has exactly one
//! image. There is no initial state and no accepting set: the objects of
//! interest are the actions of words on subsets of the state set.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::word::Word;

/// Hard ceiling on state counts; state sets are packed into a single `u64`.
pub const MAX_STATES: usize = 64;

/// Hard ceiling on alphabet size, matching the `a`..`z` word syntax.
pub const MAX_ALPHABET: usize = crate::word::MAX_ALPHABET;

/// A subset of `0..universe-1` with constant-time membership.
///
/// Equality and hashing depend only on the universe size and the members.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateSet {
    universe: usize,
    bits: u64,
}

impl StateSet {
    /// The empty subset of a `universe`-element state set.
    ///
    /// Panics if `universe` is zero or above [`MAX_STATES`]; universe sizes
    /// come from already-validated automata.
    pub fn empty(universe: usize) -> Self {
        assert!(
            universe >= 1 && universe <= MAX_STATES,
            "universe size {universe} out of range"
        );
        StateSet { universe, bits: 0 }
    }

    /// The full subset `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = StateSet::empty(universe);
        s.bits = full_mask(universe);
        s
    }

    pub fn singleton(universe: usize, state: usize) -> Result<Self> {
        StateSet::from_states(universe, [state])
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(universe: usize, states: I) -> Result<Self> {
        let mut s = StateSet::empty(universe);
        for state in states {
            if state >= universe {
                return Err(Error::Domain(format!(
                    "state {state} is outside the universe 0..{universe}"
                )));
            }
            s.bits |= 1 << state;
        }
        Ok(s)
    }

    pub(crate) fn from_bits(universe: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !full_mask(universe), 0);
        StateSet { universe, bits }
    }

    pub(crate) fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, state: usize) -> bool {
        state < self.universe && self.bits & (1 << state) != 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(s)
            }
        })
    }
}

impl std::fmt::Debug for StateSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}/{}", self.universe)
    }
}

pub(crate) fn full_mask(universe: usize) -> u64 {
    if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

/// A complete deterministic automaton over an indexed alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    num_states: usize,
    alphabet_size: usize,
    /// Row-major table: `delta[state * alphabet_size + letter]`.
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds an automaton from one transition row per state.
    ///
    /// Every row must have exactly `alphabet_size` entries, each a valid
    /// state index.
    pub fn new(alphabet_size: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let num_states = rows.len();
        for (s, row) in rows.iter().enumerate() {
            if row.len() != alphabet_size {
                return Err(Error::Construction(format!(
                    "transition row for state {s} has {} entries, expected {alphabet_size}",
                    row.len()
                )));
            }
        }
        Dfa::from_fn(num_states, alphabet_size, |s, x| rows[s][x])
    }

    /// Builds an automaton by evaluating `f(state, letter)` on every pair.
    pub fn from_fn(
        num_states: usize,
        alphabet_size: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::Construction("automaton needs at least one state".into()));
        }
        if num_states > MAX_STATES {
            return Err(Error::ResourceLimit(format!(
                "{num_states} states exceed the supported maximum of {MAX_STATES}"
            )));
        }
        if alphabet_size == 0 {
            return Err(Error::Construction("alphabet must be nonempty".into()));
        }
        if alphabet_size > MAX_ALPHABET {
            return Err(Error::ResourceLimit(format!(
                "alphabet of size {alphabet_size} exceeds the supported maximum of {MAX_ALPHABET}"
            )));
        }
        let mut delta = Vec::with_capacity(num_states * alphabet_size);
        for s in 0..num_states {
            for x in 0..alphabet_size {
                let t = f(s, x);
                if t >= num_states {
                    return Err(Error::Construction(format!(
                        "transition {s} --{x}--> {t} leaves the state set 0..{num_states}"
                    )));
                }
                delta.push(t);
            }
        }
        Ok(Dfa {
            num_states,
            alphabet_size,
            delta,
        })
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Image of a single state under a single letter.
    #[inline]
    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.alphabet_size + letter]
    }

    /// The transition row of one state, indexed by letter.
    pub fn row(&self, state: usize) -> &[usize] {
        &self.delta[state * self.alphabet_size..(state + 1) * self.alphabet_size]
    }

    /// Checks that every letter of `word` exists in this alphabet.
    pub fn validate_word(&self, word: &Word) -> Result<()> {
        if let Some(letter) = word.max_letter() {
            if letter >= self.alphabet_size {
                return Err(Error::InvalidLetter {
                    letter,
                    alphabet_size: self.alphabet_size,
                });
            }
        }
        Ok(())
    }

    /// Runs `word` from a single state.
    pub fn run_state(&self, state: usize, word: &Word) -> Result<usize> {
        self.validate_word(word)?;
        if state >= self.num_states {
            return Err(Error::Domain(format!(
                "state {state} is outside the state set 0..{}",
                self.num_states
            )));
        }
        Ok(word.letters().fold(state, |s, x| self.step(s, x)))
    }

    /// Image of a state set under a word: `{ s·w : s ∈ set }`.
    ///
    /// The image never grows, and the empty set maps to itself.
    pub fn apply(&self, set: &StateSet, word: &Word) -> Result<StateSet> {
        if set.universe() != self.num_states {
            return Err(Error::UniverseMismatch {
                set_universe: set.universe(),
                num_states: self.num_states,
            });
        }
        self.validate_word(word)?;
        let masks = self.letter_masks();
        let mut bits = set.bits();
        for x in word.letters() {
            bits = apply_mask(&masks[x], bits);
        }
        Ok(StateSet::from_bits(self.num_states, bits))
    }

    /// Per-letter image masks: `masks[x][s]` is the bit of `s·x`.
    pub(crate) fn letter_masks(&self) -> Vec<Vec<u64>> {
        (0..self.alphabet_size)
            .map(|x| (0..self.num_states).map(|s| 1u64 << self.step(s, x)).collect())
            .collect()
    }

    /// The digraph with an edge `(u, v)` whenever some letter maps `u` to
    /// `v`; parallel edges collapse.
    pub fn underlying_digraph(&self) -> Digraph {
        let mut edges = Vec::new();
        for s in 0..self.num_states {
            let mut targets: Vec<usize> = self.row(s).to_vec();
            targets.sort_unstable();
            targets.dedup();
            for t in targets {
                edges.push((s, t));
            }
        }
        Digraph::new(self.num_states, &edges)
            .expect("edges of a valid automaton always form a valid digraph")
    }
}

/// Image of a bit-packed set under one letter's image masks.
#[inline]
pub(crate) fn apply_mask(mask: &[u64], mut bits: u64) -> u64 {
    let mut out = 0u64;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= mask[s];
    }
    out
}

impl std::fmt::Debug for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<&[usize]> = (0..self.num_states).map(|s| self.row(s)).collect();
        f.debug_struct("Dfa")
            .field("num_states", &self.num_states)
            .field("alphabet_size", &self.alphabet_size)
            .field("delta", &rows)
            .finish()
    }
}
