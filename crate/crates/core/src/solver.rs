//! Exact synchronization analysis.
//!
//! Synchronizability is decided by the pair-merging criterion; the exact
//! reset threshold comes from a breadth-first search over images of the full
//! state set, which also yields the lexicographically smallest shortest
//! reset word and the set of states minimum-length words can reset to.

use std::collections::HashMap;

use crate::automaton::{apply_mask, full_mask, Dfa, StateSet};
use crate::error::{Error, Result};
use crate::frobenius::gcd;
use crate::word::Word;

/// Default cap on the state count accepted by the subset search.
pub const DEFAULT_STATE_CAP: usize = 24;

/// Switch point between a dense (mask-indexed) and a hashed visited map.
const DENSE_LIMIT: usize = 22;

/// Outcome of an exact reset-threshold computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResetResult {
    /// Minimum length of a reset word.
    pub threshold: usize,
    /// Lexicographically smallest reset word of minimum length.
    pub witness: Word,
    /// Every state some minimum-length reset word synchronizes to.
    pub targets: StateSet,
}

/// True iff some word maps the full state set to a singleton.
///
/// Uses the pair criterion: the automaton is synchronizing iff every
/// two-element subset can reach a singleton in the pair automaton. Runs in
/// O(n^2 * |alphabet|), so it doubles as a fast pre-check for large inputs.
pub fn is_synchronizing(dfa: &Dfa) -> bool {
    let n = dfa.num_states();
    if n == 1 {
        return true;
    }
    let k = dfa.alphabet_size();
    let pair_id = |u: usize, v: usize| {
        debug_assert!(u < v);
        u * n + v
    };
    // good[pair] – a singleton is reachable from this pair.
    let mut good = vec![false; n * n];
    let mut rev: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut queue = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let id = pair_id(u, v);
            for x in 0..k {
                let (a, b) = (dfa.step(u, x), dfa.step(v, x));
                if a == b {
                    if !good[id] {
                        good[id] = true;
                        queue.push(id);
                    }
                } else {
                    let target = pair_id(a.min(b), a.max(b));
                    rev.entry(target).or_default().push(id);
                }
            }
        }
    }
    while let Some(id) = queue.pop() {
        if let Some(preds) = rev.get(&id) {
            for &p in preds {
                if !good[p] {
                    good[p] = true;
                    queue.push(p);
                }
            }
        }
    }
    (0..n).all(|u| ((u + 1)..n).all(|v| good[pair_id(u, v)]))
}

/// Exact reset threshold with the default state cap.
pub fn reset_threshold(dfa: &Dfa) -> Result<ResetResult> {
    reset_threshold_with_cap(dfa, DEFAULT_STATE_CAP)
}

/// Exact reset threshold, witness and targets, refusing automata above
/// `cap` states.
///
/// Layered search from the full set; within a layer sets are expanded in
/// discovery order and letters in index order, so the first singleton found
/// is reached by the lexicographically smallest minimum-length reset word.
pub fn reset_threshold_with_cap(dfa: &Dfa, cap: usize) -> Result<ResetResult> {
    let n = dfa.num_states();
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "{n} states exceed the solver cap of {cap}"
        )));
    }
    if !is_synchronizing(dfa) {
        return Err(Error::NotSynchronizing);
    }
    let full = full_mask(n);
    if n == 1 {
        return Ok(ResetResult {
            threshold: 0,
            witness: Word::empty(),
            targets: StateSet::from_bits(1, full),
        });
    }
    let masks = dfa.letter_masks();
    let mut seen: Box<dyn SeenMap> = if n <= DENSE_LIMIT {
        Box::new(DenseSeen::new(n))
    } else {
        Box::new(SparseSeen::default())
    };
    seen.insert(full, 0, ROOT);
    let mut frontier = vec![full];
    let mut depth = 0usize;
    loop {
        let mut next = Vec::new();
        let mut singletons: Vec<u64> = Vec::new();
        for &set in &frontier {
            for (x, mask) in masks.iter().enumerate() {
                let img = apply_mask(mask, set);
                if seen.insert(img, set, x as u8) {
                    if img.count_ones() == 1 {
                        singletons.push(img);
                    }
                    next.push(img);
                }
            }
        }
        depth += 1;
        if !singletons.is_empty() {
            let witness = reconstruct(seen.as_ref(), singletons[0], depth);
            let mut targets = 0u64;
            for s in &singletons {
                targets |= s;
            }
            return Ok(ResetResult {
                threshold: depth,
                witness,
                targets: StateSet::from_bits(n, targets),
            });
        }
        if next.is_empty() {
            // Unreachable: the pair criterion accepted the automaton.
            return Err(Error::NotSynchronizing);
        }
        frontier = next;
    }
}

const ROOT: u8 = u8::MAX;

fn reconstruct(seen: &dyn SeenMap, mut set: u64, depth: usize) -> Word {
    let mut letters = Vec::with_capacity(depth);
    loop {
        let (parent, letter) = seen.get(set).expect("walked off the search tree");
        if letter == ROOT {
            break;
        }
        letters.push(letter as usize);
        set = parent;
    }
    letters.reverse();
    Word::from_letters(letters).expect("letters come from a valid alphabet")
}

/// Predecessor map over discovered sets; dense for small state counts.
trait SeenMap {
    /// Records `set` with its predecessor; false if already present.
    fn insert(&mut self, set: u64, parent: u64, letter: u8) -> bool;
    fn get(&self, set: u64) -> Option<(u64, u8)>;
}

struct DenseSeen {
    letters: Vec<u8>,
    parents: Vec<u32>,
}

impl DenseSeen {
    fn new(n: usize) -> Self {
        DenseSeen {
            letters: vec![u8::MAX - 1; 1 << n],
            parents: vec![0; 1 << n],
        }
    }
}

impl SeenMap for DenseSeen {
    fn insert(&mut self, set: u64, parent: u64, letter: u8) -> bool {
        let slot = &mut self.letters[set as usize];
        if *slot != u8::MAX - 1 {
            return false;
        }
        *slot = letter;
        self.parents[set as usize] = parent as u32;
        true
    }

    fn get(&self, set: u64) -> Option<(u64, u8)> {
        let letter = self.letters[set as usize];
        (letter != u8::MAX - 1).then(|| (self.parents[set as usize] as u64, letter))
    }
}

#[derive(Default)]
struct SparseSeen(HashMap<u64, (u64, u8)>);

impl SeenMap for SparseSeen {
    fn insert(&mut self, set: u64, parent: u64, letter: u8) -> bool {
        use std::collections::hash_map::Entry;
        match self.0.entry(set) {
            Entry::Occupied(_) => false,
            Entry::Vacant(e) => {
                e.insert((parent, letter));
                true
            }
        }
    }

    fn get(&self, set: u64) -> Option<(u64, u8)> {
        self.0.get(&set).copied()
    }
}

/// Applies `word` to the full state set; the unique final state if the word
/// resets the automaton, `None` otherwise.
pub fn check_reset_word(dfa: &Dfa, word: &Word) -> Result<Option<usize>> {
    let image = dfa.apply(&StateSet::full(dfa.num_states()), word)?;
    Ok(if image.len() == 1 { image.iter().next() } else { None })
}

/// States reachable from `from` by words of length exactly `ell`.
pub fn reach_layer(dfa: &Dfa, from: usize, ell: usize) -> Result<StateSet> {
    let n = dfa.num_states();
    if from >= n {
        return Err(Error::Domain(format!(
            "state {from} is outside the state set 0..{n}"
        )));
    }
    let masks = dfa.letter_masks();
    let mut layer = 1u64 << from;
    for _ in 0..ell {
        let mut next = 0u64;
        for mask in &masks {
            next |= apply_mask(mask, layer);
        }
        layer = next;
    }
    Ok(StateSet::from_bits(n, layer))
}

/// Hypotheses for the two-cycle-length lower bound.
///
/// `p < q` must be coprime; the optional anchor `(source, length, target)`
/// asserts that every word of the given length carries `source` to `target`,
/// with `target` a state some shortest reset word synchronizes to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBoundHypothesis {
    pub p: usize,
    pub q: usize,
    pub anchor: Option<LowerBoundAnchor>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBoundAnchor {
    pub source: usize,
    pub length: usize,
    pub target: usize,
}

impl LowerBoundHypothesis {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        validate_coprime_pair(p, q)?;
        Ok(LowerBoundHypothesis { p, q, anchor: None })
    }

    pub fn with_anchor(p: usize, q: usize, source: usize, length: usize, target: usize) -> Result<Self> {
        validate_coprime_pair(p, q)?;
        if length == 0 {
            return Err(Error::Domain("anchor length must be positive".into()));
        }
        Ok(LowerBoundHypothesis {
            p,
            q,
            anchor: Some(LowerBoundAnchor {
                source,
                length,
                target,
            }),
        })
    }
}

pub(crate) fn validate_coprime_pair(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::Domain("cycle lengths must be positive".into()));
    }
    if p >= q {
        return Err(Error::Domain(format!("require p < q, got p={p}, q={q}")));
    }
    if gcd(p as u64, q as u64) != 1 {
        return Err(Error::Domain(format!("{p} and {q} are not coprime")));
    }
    Ok(())
}

/// Lower bound on the reset threshold of a strongly connected synchronizing
/// automaton whose simple cycles have exactly the two lengths `p` and `q`.
///
/// Any word fixing the reset state decomposes into cycles, so its length is
/// a non-negative combination of `p` and `q`; the coin-problem bound forces
/// the threshold to be at least `(p-1)(q-1)`, plus the anchor length when an
/// anchor is supplied. All hypotheses are validated before the bound is
/// returned. Uses the default solver cap.
pub fn reset_lower_bound(dfa: &Dfa, hyp: &LowerBoundHypothesis) -> Result<usize> {
    reset_lower_bound_with_cap(dfa, hyp, DEFAULT_STATE_CAP)
}

pub fn reset_lower_bound_with_cap(
    dfa: &Dfa,
    hyp: &LowerBoundHypothesis,
    cap: usize,
) -> Result<usize> {
    validate_coprime_pair(hyp.p, hyp.q)?;
    let digraph = dfa.underlying_digraph();
    if !digraph.is_strongly_connected() {
        return Err(Error::Hypothesis("automaton is not strongly connected".into()));
    }
    if !is_synchronizing(dfa) {
        return Err(Error::Hypothesis("automaton is not synchronizing".into()));
    }
    let mut distinct = digraph.simple_cycle_lengths()?;
    distinct.dedup();
    if distinct != vec![hyp.p, hyp.q] {
        return Err(Error::Hypothesis(format!(
            "distinct cycle lengths are {distinct:?}, expected [{}, {}]",
            hyp.p, hyp.q
        )));
    }
    let base = (hyp.p - 1) * (hyp.q - 1);
    let Some(anchor) = hyp.anchor else {
        return Ok(base);
    };
    let layer = reach_layer(dfa, anchor.source, anchor.length)?;
    let expected = StateSet::singleton(dfa.num_states(), anchor.target)?;
    if layer != expected {
        return Err(Error::Hypothesis(format!(
            "words of length {} carry state {} to {layer:?}, not exactly to state {}",
            anchor.length, anchor.source, anchor.target
        )));
    }
    let result = reset_threshold_with_cap(dfa, cap)?;
    if !result.targets.contains(anchor.target) {
        return Err(Error::Hypothesis(format!(
            "no shortest reset word synchronizes to state {}",
            anchor.target
        )));
    }
    Ok(base + anchor.length)
}

/// The cycle-collapsing word `(b a^{q-1})^{p-2}`.
pub fn collapse_word(p: usize, q: usize) -> Word {
    let a = Word::letter(0).expect("letter a");
    let b = Word::letter(1).expect("letter b");
    b.concat(&a.repeat(q - 1)).repeat(p.saturating_sub(2))
}

/// Image of a `p`-cycle under the collapsing word `(b a^{q-1})^{p-2}`.
///
/// `cycle` must consist of `p` states forming a rotation orbit relative to
/// the designated `zero` state: both letters advance every non-zero cycle
/// state one step, letter `a` advances `zero`, and `b a^{q-1}` fixes `zero`.
/// The hypotheses are verified by simulation before the image is computed.
/// Under them the image is the two-state set that corresponds to `{0, p-r}`
/// in cycle-relative labels, where `r = q mod p`.
pub fn cycle_collapse_image(
    p: usize,
    q: usize,
    dfa: &Dfa,
    cycle: &StateSet,
    zero: usize,
) -> Result<StateSet> {
    validate_coprime_pair(p, q)?;
    if p < 2 {
        return Err(Error::Hypothesis("cycle length p must be at least 2".into()));
    }
    if dfa.alphabet_size() < 2 {
        return Err(Error::Hypothesis("collapse word needs letters a and b".into()));
    }
    if cycle.universe() != dfa.num_states() {
        return Err(Error::UniverseMismatch {
            set_universe: cycle.universe(),
            num_states: dfa.num_states(),
        });
    }
    if cycle.len() != p {
        return Err(Error::Hypothesis(format!(
            "cycle has {} states, expected p = {p}",
            cycle.len()
        )));
    }
    if !cycle.contains(zero) {
        return Err(Error::Hypothesis(format!(
            "designated zero state {zero} is not in the cycle"
        )));
    }

    // Recover the cycle-relative labeling 0, 1, .., p-1 by walking from the
    // zero state, checking the rotation hypotheses on the way.
    let mut label = vec![zero];
    let mut current = dfa.step(zero, 0);
    for i in 1..p {
        if !cycle.contains(current) || label.contains(&current) {
            return Err(Error::Hypothesis(format!(
                "walking the cycle from state {zero} leaves it or revisits a state at step {i}"
            )));
        }
        label.push(current);
        let next = dfa.step(current, 0);
        for x in 1..dfa.alphabet_size() {
            if dfa.step(current, x) != next {
                return Err(Error::Hypothesis(format!(
                    "letters disagree on non-zero cycle state {current}"
                )));
            }
        }
        current = next;
    }
    if current != zero {
        return Err(Error::Hypothesis(
            "walking the cycle does not return to the zero state after p steps".into(),
        ));
    }
    let b_loop = Word::letter(1)
        .expect("letter b")
        .concat(&Word::letter(0).expect("letter a").repeat(q - 1));
    if dfa.run_state(zero, &b_loop)? != zero {
        return Err(Error::Hypothesis(format!(
            "b a^{} does not fix the zero state {zero}",
            q - 1
        )));
    }

    dfa.apply(cycle, &collapse_word(p, q))
}

/// A `p`-state probe automaton exercising the cycle collapse: letter `a`
/// rotates, letter `b` rotates except at 0, which jumps so that `b a^{q-1}`
/// fixes 0.
pub fn cycle_collapse_probe(p: usize, q: usize) -> Result<Dfa> {
    validate_coprime_pair(p, q)?;
    if p < 2 {
        return Err(Error::Domain("cycle length p must be at least 2".into()));
    }
    // 0·b must land where q-1 further rotations return to 0.
    let jump = (p + 1 - q % p) % p;
    Dfa::from_fn(p, 2, |s, x| {
        if s == 0 && x == 1 {
            jump
        } else {
            (s + 1) % p
        }
    })
}
