//! Constructors for the automata families with two cycle lengths, their
//! closed-form reset thresholds, and the explicit reset words that certify
//! the upper bounds.
//!
//! Fix coprime `p < q`. The Wielandt-type automaton `W(n, q, p)` with
//! `q <= n < p+q` is the unique strongly connected binary `n`-state
//! automaton whose underlying digraph has exactly one cycle of length `p`
//! and one of length `q`; its reset threshold is `(p-1)(q-1) + n - p`.
//! The Dulmage-Mendelsohn-type digraph `D(q, p, k)` (one `q`-cycle, two
//! `p`-cycles, branch offset `1 <= k < min(p, q-p+1)`) has exactly two
//! non-isomorphic colorings, named here by the letter of the branch edge at
//! state `k`: in the `aa` coloring both branch edges carry `a`, in the `ab`
//! coloring the branch at `k` carries `b`. The extended digraph
//! `D_lambda(q, p, k)` stretches each branch chord into a path with
//! `lambda` interior states; each stretch raises the reset threshold by
//! exactly one via a quotient step.

use crate::automaton::Dfa;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::solver::{check_reset_word, reset_threshold_with_cap, validate_coprime_pair};
use crate::word::Word;

const A: usize = 0;
const B: usize = 1;

/// The two colorings of `D_lambda(q, p, k)`, named by the letter on the
/// branch edge leaving state `k` (the branch at state 0 is always `a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DmVariant {
    Aa,
    Ab,
}

impl DmVariant {
    pub fn name(&self) -> &'static str {
        match self {
            DmVariant::Aa => "aa",
            DmVariant::Ab => "ab",
        }
    }
}

/// A validated parameter tuple for one family instance.
///
/// Constructing a value proves the tuple builds a non-degenerate instance:
/// the underlying digraph is strongly connected with exactly the advertised
/// cycle structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    Wielandt {
        n: usize,
        q: usize,
        p: usize,
    },
    Dm {
        variant: DmVariant,
        q: usize,
        p: usize,
        k: usize,
        lambda: usize,
    },
}

impl FamilyParams {
    pub fn wielandt(n: usize, q: usize, p: usize) -> Result<Self> {
        build_wielandt(n, q, p)?;
        Ok(FamilyParams::Wielandt { n, q, p })
    }

    pub fn dm(variant: DmVariant, q: usize, p: usize, k: usize, lambda: usize) -> Result<Self> {
        build_dm_digraph(q, p, k, lambda)?;
        Ok(FamilyParams::Dm {
            variant,
            q,
            p,
            k,
            lambda,
        })
    }

    pub fn num_states(&self) -> usize {
        match *self {
            FamilyParams::Wielandt { n, .. } => n,
            FamilyParams::Dm { q, lambda, .. } => q + 2 * lambda,
        }
    }

    pub fn build(&self) -> Result<Dfa> {
        match *self {
            FamilyParams::Wielandt { n, q, p } => build_wielandt(n, q, p),
            FamilyParams::Dm {
                variant,
                q,
                p,
                k,
                lambda,
            } => build_dm(variant, q, p, k, lambda),
        }
    }

    pub fn formula(&self) -> Result<usize> {
        match *self {
            FamilyParams::Wielandt { n, q, p } => wielandt_rt_formula(n, q, p),
            FamilyParams::Dm {
                variant,
                q,
                p,
                k,
                lambda,
            } => dm_rt_formula(variant, q, p, k, lambda),
        }
    }

    /// The state every shortest reset word synchronizes to, where the
    /// family pins it down (all Wielandt-type instances; the unextended
    /// branch colorings).
    pub fn expected_reset_target(&self) -> Option<usize> {
        match *self {
            FamilyParams::Wielandt { n, p, .. } => Some(n - p + 1),
            FamilyParams::Dm {
                variant,
                q,
                p,
                k,
                lambda: 0,
            } => Some(match variant {
                DmVariant::Ab => q - p + 1,
                DmVariant::Aa if k < q - p => q - p + 1,
                DmVariant::Aa => (q - p + 1 + k) % q,
            }),
            FamilyParams::Dm { .. } => None,
        }
    }
}

fn wielandt_range_check(n: usize, q: usize, p: usize) -> Result<()> {
    validate_coprime_pair(p, q)?;
    if n < q || n >= p + q {
        return Err(Error::Domain(format!(
            "require q <= n < p+q, got n={n}, q={q}, p={p}"
        )));
    }
    Ok(())
}

/// The Wielandt-type automaton `W(n, q, p)` on states `0..n-1`.
///
/// State 0 branches (`a` onto the detour, `b` along the main cycle); every
/// other state has a single outgoing edge carrying both letters. After
/// building, strong connectivity and the exact cycle structure `{p, q}` are
/// verified; tuples whose detour degenerates (for example `n = p+q-1`) are
/// rejected.
pub fn build_wielandt(n: usize, q: usize, p: usize) -> Result<Dfa> {
    wielandt_range_check(n, q, p)?;
    let dfa = Dfa::from_fn(n, 2, |s, x| {
        if s == 0 {
            if x == A {
                if n > q {
                    q
                } else {
                    q - p + 1
                }
            } else {
                1
            }
        } else if s == q - 1 {
            0
        } else if s == n - 1 {
            n - p + 1
        } else {
            s + 1
        }
    })
    .map_err(|e| Error::Construction(format!("W({n},{q},{p}): {e}")))?;
    verify_two_cycle_structure(&dfa.underlying_digraph(), &[p, q])
        .map_err(|e| Error::Construction(format!("W({n},{q},{p}): {e}")))?;
    Ok(dfa)
}

/// Reset threshold of `W(n, q, p)`: `(p-1)(q-1) + n - p`.
pub fn wielandt_rt_formula(n: usize, q: usize, p: usize) -> Result<usize> {
    build_wielandt(n, q, p)?;
    Ok((p - 1) * (q - 1) + n - p)
}

/// A shortest reset word for `W(n, q, p)`, built in closed form:
/// `a^{q-p} (b a^{q-1})^{p-2} b a^{q-p}` followed by one letter per state
/// beyond `q`. The word is checked to synchronize and to have exactly the
/// closed-form length before it is returned.
pub fn wielandt_witness(n: usize, q: usize, p: usize) -> Result<Word> {
    let dfa = build_wielandt(n, q, p)?;
    let a = Word::letter(A).expect("letter a");
    let b = Word::letter(B).expect("letter b");
    let word = a
        .repeat(q - p)
        .concat(&b.concat(&a.repeat(q - 1)).repeat(p - 2))
        .concat(&b)
        .concat(&a.repeat(q - p))
        .concat(&a.repeat(n - q));
    let expected_len = wielandt_rt_formula(n, q, p)?;
    if word.len() != expected_len {
        return Err(Error::Internal(format!(
            "W({n},{q},{p}) witness has length {}, formula says {expected_len}",
            word.len()
        )));
    }
    if check_reset_word(&dfa, &word)?.is_none() {
        return Err(Error::Internal(format!(
            "W({n},{q},{p}) witness \"{word}\" does not synchronize"
        )));
    }
    Ok(word)
}

fn dm_range_check(q: usize, p: usize, k: usize, lambda: usize) -> Result<()> {
    validate_coprime_pair(p, q)?;
    if p < 2 {
        return Err(Error::Domain("branch digraphs need p >= 2".into()));
    }
    if k < 1 || k >= p.min(q - p + 1) {
        return Err(Error::Domain(format!(
            "require 1 <= k < min(p, q-p+1), got k={k}, q={q}, p={p}"
        )));
    }
    if lambda >= p {
        return Err(Error::Domain(format!(
            "require lambda < p, got lambda={lambda}, p={p}"
        )));
    }
    // Each stretch level must keep a non-branching state in front of the
    // lower path's re-entry point, otherwise the quotient chain down to
    // lambda = 0 breaks; structurally this is k + lambda < p.
    if lambda >= 1 && k + lambda >= p {
        return Err(Error::Domain(format!(
            "require k + lambda < p for stretched instances, got k={k}, lambda={lambda}, p={p}"
        )));
    }
    Ok(())
}

/// Re-entry points of the two branch paths on the main cycle.
fn dm_entry_points(q: usize, p: usize, k: usize, lambda: usize) -> (usize, usize) {
    ((q - p + 1 + lambda) % q, (q - p + k + 1 + lambda) % q)
}

/// The digraph `D_lambda(q, p, k)` on `q + 2*lambda` vertices.
///
/// The main `q`-cycle carries two detours: one from vertex 0 through
/// `lambda` fresh vertices re-entering at `q-p+1+lambda`, one from vertex
/// `k` re-entering `k` steps later. With `lambda = 0` the detours are the
/// plain chords. Both detour cycles have length exactly `p`; contracting
/// the last detour vertex into its parallel main-cycle predecessor, once
/// per level, recovers the `lambda - 1` instance.
pub fn build_dm_digraph(q: usize, p: usize, k: usize, lambda: usize) -> Result<Digraph> {
    dm_range_check(q, p, k, lambda)?;
    let (s, t) = dm_entry_points(q, p, k, lambda);
    let n = q + 2 * lambda;
    let mut edges: Vec<(usize, usize)> = (0..q).map(|i| (i, (i + 1) % q)).collect();
    if lambda == 0 {
        edges.push((0, s));
        edges.push((k, t));
    } else {
        edges.push((0, q));
        for j in 0..lambda - 1 {
            edges.push((q + j, q + j + 1));
        }
        edges.push((q + lambda - 1, s));
        edges.push((k, q + lambda));
        for j in 0..lambda - 1 {
            edges.push((q + lambda + j, q + lambda + j + 1));
        }
        edges.push((q + 2 * lambda - 1, t));
    }
    let g = Digraph::new(n, &edges)
        .map_err(|e| Error::Construction(format!("D_{lambda}({q},{p},{k}): {e}")))?;
    verify_two_cycle_structure(&g, &[p, p, q])
        .map_err(|e| Error::Construction(format!("D_{lambda}({q},{p},{k}): {e}")))?;
    if lambda >= 1 {
        // The contraction partners of the two path ends must be ordinary
        // cycle states, or the quotient chain cannot reach lambda = 0.
        for entry in [s, t] {
            let pred = (entry + q - 1) % q;
            if g.out_degree(pred) != 1 {
                return Err(Error::Construction(format!(
                    "D_{lambda}({q},{p},{k}): re-entry predecessor {pred} branches"
                )));
            }
        }
    }
    Ok(g)
}

/// One of the two colorings of `D_lambda(q, p, k)`.
///
/// Vertex 0 sends `a` along its detour and `b` along the main cycle; the
/// variant names the letter vertex `k` sends along its detour. Every other
/// state carries both letters on its single outgoing edge.
pub fn build_dm(variant: DmVariant, q: usize, p: usize, k: usize, lambda: usize) -> Result<Dfa> {
    let g = build_dm_digraph(q, p, k, lambda)?;
    let n = g.num_vertices();
    let (s, t) = dm_entry_points(q, p, k, lambda);
    let zero_branch = if lambda == 0 { s } else { q };
    let k_branch = if lambda == 0 { t } else { q + lambda };
    Dfa::from_fn(n, 2, |state, x| {
        if state == 0 {
            if x == A {
                zero_branch
            } else {
                1
            }
        } else if state == k {
            let branch_letter = match variant {
                DmVariant::Aa => A,
                DmVariant::Ab => B,
            };
            if x == branch_letter {
                k_branch
            } else {
                k + 1
            }
        } else {
            g.out_neighbors(state)[0]
        }
    })
}

/// Reset threshold of the colored instance.
///
/// `ab` variant: `(p-1)(q-1) + q - p - k + lambda`. `aa` variant: the same
/// when `k < q-p`, and `(p-1)(q-1) + 2(q-p) + lambda` in the extremal case
/// `k = q-p`.
pub fn dm_rt_formula(
    variant: DmVariant,
    q: usize,
    p: usize,
    k: usize,
    lambda: usize,
) -> Result<usize> {
    dm_range_check(q, p, k, lambda)?;
    let base = (p - 1) * (q - 1);
    Ok(match variant {
        DmVariant::Ab => base + q - p - k + lambda,
        DmVariant::Aa if k < q - p => base + q - p - k + lambda,
        DmVariant::Aa => base + 2 * (q - p) + lambda,
    })
}

/// A shortest reset word for the unstretched coloring, in closed form.
///
/// Checked to synchronize `build_dm(variant, q, p, k, 0)` with exactly the
/// closed-form length. Stretched instances have no closed-form word here;
/// use the solver's witness.
pub fn dm_witness(variant: DmVariant, q: usize, p: usize, k: usize) -> Result<Word> {
    dm_range_check(q, p, k, 0)?;
    let a = Word::letter(A).expect("letter a");
    let b = Word::letter(B).expect("letter b");
    let word = match variant {
        DmVariant::Ab => {
            let tail = b
                .concat(&a.repeat(q - 1))
                .repeat(p - 2)
                .concat(&b)
                .concat(&a.repeat(q - p));
            if k == q - p {
                tail
            } else {
                b.concat(&a.repeat(q - p - k - 1)).concat(&tail)
            }
        }
        DmVariant::Aa => {
            let block = b
                .concat(&a.repeat(k - 1))
                .concat(&b)
                .concat(&a.repeat(q - k - 1));
            let lead = if k == q - p { q - p } else { q - p - k };
            a.repeat(lead)
                .concat(&block.repeat(p - 2))
                .concat(&b)
                .concat(&a.repeat(k - 1))
                .concat(&b)
                .concat(&a.repeat(lead))
        }
    };
    let expected_len = dm_rt_formula(variant, q, p, k, 0)?;
    if word.len() != expected_len {
        return Err(Error::Internal(format!(
            "D^{}({q},{p},{k}) witness has length {}, formula says {expected_len}",
            variant.name(),
            word.len()
        )));
    }
    let dfa = build_dm(variant, q, p, k, 0)?;
    if check_reset_word(&dfa, &word)?.is_none() {
        return Err(Error::Internal(format!(
            "D^{}({q},{p},{k}) witness \"{word}\" does not synchronize",
            variant.name()
        )));
    }
    Ok(word)
}

/// The classical slowly synchronizing series: one cyclic letter and one
/// letter fixing everything except the last state, which it returns to 0.
/// Reset threshold `(n-1)^2`.
pub fn build_cerny(n: usize) -> Result<Dfa> {
    if n < 2 {
        return Err(Error::Domain("the cyclic series needs n >= 2".into()));
    }
    Dfa::from_fn(n, 2, |s, x| {
        if x == A {
            (s + 1) % n
        } else if s == n - 1 {
            0
        } else {
            s
        }
    })
}

/// Checks that a digraph is strongly connected and its simple cycles have
/// exactly the expected sorted length multiset.
fn verify_two_cycle_structure(g: &Digraph, expected: &[usize]) -> Result<()> {
    if !g.is_strongly_connected() {
        return Err(Error::Construction("digraph is not strongly connected".into()));
    }
    let lengths = g.simple_cycle_lengths()?;
    if lengths != expected {
        return Err(Error::Construction(format!(
            "cycle length multiset is {lengths:?}, expected {expected:?}"
        )));
    }
    Ok(())
}

/// One row of a formula-versus-solver verification sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub params: FamilyParams,
    pub formula_value: usize,
    pub solver_value: usize,
    /// Word checked: the closed-form witness where one exists (length must
    /// equal the formula value), otherwise the solver's own witness.
    pub witness_len: usize,
    pub witness_ok: bool,
    /// States the solver found as shortest-reset targets.
    pub targets: Vec<usize>,
    pub matches: bool,
}

/// Builds one instance, solves it exactly, and compares against the
/// closed-form threshold and witness.
pub fn verify_one(params: &FamilyParams, cap: usize) -> Result<FormulaReport> {
    let dfa = params.build()?;
    let formula_value = params.formula()?;
    let result = reset_threshold_with_cap(&dfa, cap)?;
    let witness = match *params {
        FamilyParams::Wielandt { n, q, p } => Some(wielandt_witness(n, q, p)?),
        FamilyParams::Dm {
            variant,
            q,
            p,
            k,
            lambda: 0,
        } => Some(dm_witness(variant, q, p, k)?),
        FamilyParams::Dm { .. } => None,
    };
    let (witness_len, witness_ok) = match witness {
        Some(w) => {
            let ok = w.len() == formula_value && check_reset_word(&dfa, &w)?.is_some();
            (w.len(), ok)
        }
        None => {
            let ok = check_reset_word(&dfa, &result.witness)?.is_some()
                && result.witness.len() == result.threshold;
            (result.witness.len(), ok)
        }
    };
    Ok(FormulaReport {
        params: *params,
        formula_value,
        solver_value: result.threshold,
        witness_len,
        witness_ok,
        targets: result.targets.iter().collect(),
        matches: formula_value == result.threshold,
    })
}

/// Verifies every tuple in order; the first failure aborts the sweep with
/// the offending tuple named in the error.
pub fn verify_family(tuples: &[FamilyParams], cap: usize) -> Result<Vec<FormulaReport>> {
    tuples
        .iter()
        .map(|params| {
            verify_one(params, cap).map_err(|e| match e {
                Error::Internal(msg) => Error::Internal(format!("{params:?}: {msg}")),
                other => Error::Construction(format!("{params:?}: {other}")),
            })
        })
        .collect()
}

/// All constructible Wielandt-type tuples with `q <= max_q`, in
/// lexicographic `(q, p, n)` order.
pub fn wielandt_tuples(max_q: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for q in 3..=max_q {
        for p in 2..q {
            for n in q..p + q {
                if let Ok(params) = FamilyParams::wielandt(n, q, p) {
                    out.push(params);
                }
            }
        }
    }
    out
}

/// All constructible branch-coloring tuples with `q <= max_q` and
/// `lambda <= max_lambda`, in lexicographic `(q, p, k, lambda)` order.
pub fn dm_tuples(variant: DmVariant, max_q: usize, max_lambda: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for q in 3..=max_q {
        for p in 2..q {
            for k in 1..p.min(q - p + 1) {
                for lambda in 0..=max_lambda.min(p.saturating_sub(1)) {
                    if let Ok(params) = FamilyParams::dm(variant, q, p, k, lambda) {
                        out.push(params);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{reset_threshold, DEFAULT_STATE_CAP};

    #[test]
    fn wielandt_five_state_tables() {
        // q = n case: the branch letter from 0 goes straight to q - p + 1.
        let w = build_wielandt(5, 5, 3).unwrap();
        assert_eq!(
            (0..5).map(|s| w.row(s).to_vec()).collect::<Vec<_>>(),
            vec![vec![3, 1], vec![2, 2], vec![3, 3], vec![4, 4], vec![0, 0]]
        );
        // p = n - 1 gives the classical Wielandt coloring.
        let w = build_wielandt(5, 5, 4).unwrap();
        assert_eq!(w.row(0), &[2, 1]);
        assert_eq!(w.row(4), &[0, 0]);
    }

    #[test]
    fn wielandt_six_state_table() {
        let w = build_wielandt(6, 5, 3).unwrap();
        assert_eq!(
            (0..6).map(|s| w.row(s).to_vec()).collect::<Vec<_>>(),
            vec![
                vec![5, 1],
                vec![2, 2],
                vec![3, 3],
                vec![4, 4],
                vec![0, 0],
                vec![4, 4]
            ]
        );
    }

    #[test]
    fn wielandt_rejects_degenerate_tuples() {
        // n = p + q - 1 collapses the short cycle.
        assert!(matches!(
            build_wielandt(7, 5, 3),
            Err(Error::Construction(_))
        ));
        assert!(build_wielandt(6, 5, 3).is_ok());
        // p = 1 has no valid branch target.
        assert!(build_wielandt(5, 5, 1).is_err());
        // Range violations.
        assert!(build_wielandt(4, 5, 3).is_err());
        assert!(build_wielandt(8, 5, 3).is_err());
        // p = 2 at n = q is fine: the branch edge 0 -> 4 closes a 2-cycle.
        assert!(build_wielandt(5, 5, 2).is_ok());
    }

    #[test]
    fn wielandt_cycle_structure() {
        for (n, q, p) in [(5, 5, 3), (6, 5, 3), (5, 5, 4), (5, 5, 2), (11, 7, 6)] {
            let g = build_wielandt(n, q, p).unwrap().underlying_digraph();
            assert_eq!(g.simple_cycle_lengths().unwrap(), vec![p, q]);
        }
    }

    #[test]
    fn wielandt_formula_values() {
        assert_eq!(wielandt_rt_formula(5, 5, 3).unwrap(), 10);
        assert_eq!(wielandt_rt_formula(6, 5, 3).unwrap(), 11);
        // p = n-1, q = n: the classical series value n^2 - 3n + 3.
        for n in 4..=9 {
            assert_eq!(
                wielandt_rt_formula(n, n, n - 1).unwrap(),
                n * n - 3 * n + 3
            );
        }
    }

    #[test]
    fn wielandt_witness_words() {
        let w = wielandt_witness(5, 5, 3).unwrap();
        assert_eq!(w.to_string(), "aabaaaabaa");
        let w6 = wielandt_witness(6, 5, 3).unwrap();
        assert_eq!(w6.to_string(), "aabaaaabaaa");
        assert_eq!(w6.len(), 11);
        assert_eq!(wielandt_witness(5, 5, 4).unwrap().len(), 13);
    }

    #[test]
    fn dm_digraph_edges_and_cycles() {
        let g = build_dm_digraph(5, 3, 1, 0).unwrap();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(g.num_edges(), 7);
        assert_eq!(g.simple_cycle_lengths().unwrap(), vec![3, 3, 5]);

        // Branch targets wrap around the main cycle.
        let g = build_dm_digraph(5, 3, 2, 0).unwrap();
        assert!(g.edges().contains(&(0, 3)));
        assert!(g.edges().contains(&(2, 0)));

        let g = build_dm_digraph(5, 3, 1, 1).unwrap();
        assert_eq!(g.num_vertices(), 7);
        assert_eq!(g.simple_cycle_lengths().unwrap(), vec![3, 3, 5]);
    }

    #[test]
    fn dm_rejects_bad_tuples() {
        assert!(build_dm_digraph(5, 3, 0, 0).is_err());
        assert!(build_dm_digraph(5, 3, 3, 0).is_err()); // k >= p
        assert!(build_dm_digraph(5, 4, 2, 0).is_err()); // k >= q-p+1
        assert!(build_dm_digraph(6, 3, 1, 0).is_err()); // not coprime
        assert!(build_dm_digraph(5, 3, 1, 3).is_err()); // lambda >= p
        assert!(build_dm_digraph(5, 3, 2, 1).is_err()); // k + lambda >= p
        assert!(build_dm_digraph(5, 3, 1, 2).is_err()); // k + lambda >= p
        assert!(build_dm_digraph(5, 3, 1, 1).is_ok());
    }

    #[test]
    fn dm_coloring_tables() {
        // Branch at k = 1 carries b in the ab coloring...
        let ab = build_dm(DmVariant::Ab, 5, 3, 1, 0).unwrap();
        assert_eq!(ab.row(1), &[2, 4]);
        // ...and a in the aa coloring.
        let aa = build_dm(DmVariant::Aa, 5, 3, 1, 0).unwrap();
        assert_eq!(aa.row(1), &[4, 2]);
        // Non-branching states are identical in both.
        assert_eq!(ab.row(3), &[4, 4]);
        assert_eq!(aa.row(3), &[4, 4]);
        assert_eq!(ab.row(0), &[3, 1]);
        assert_eq!(aa.row(0), &[3, 1]);
    }

    #[test]
    fn dm_formula_values() {
        assert_eq!(dm_rt_formula(DmVariant::Ab, 5, 3, 1, 0).unwrap(), 9);
        assert_eq!(dm_rt_formula(DmVariant::Aa, 5, 3, 2, 0).unwrap(), 12);
        assert_eq!(dm_rt_formula(DmVariant::Ab, 5, 3, 1, 1).unwrap(), 10);
        assert_eq!(dm_rt_formula(DmVariant::Aa, 5, 3, 1, 0).unwrap(), 9);
    }

    #[test]
    fn dm_witness_words() {
        let w = dm_witness(DmVariant::Ab, 5, 3, 2).unwrap();
        assert_eq!(w.to_string(), "baaaabaa");
        let w = dm_witness(DmVariant::Ab, 5, 3, 1).unwrap();
        assert_eq!(w.to_string(), "bbaaaabaa");
        let w = dm_witness(DmVariant::Aa, 5, 3, 2).unwrap();
        assert_eq!(w.len(), 12);
        assert_eq!(w.to_string(), "aababaababaa");
    }

    #[test]
    fn cerny_shape() {
        let c = build_cerny(4).unwrap();
        assert_eq!(
            (0..4).map(|s| c.row(s).to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 0], vec![2, 1], vec![3, 2], vec![0, 0]]
        );
        assert!(build_cerny(1).is_err());
    }

    #[test]
    fn expected_targets() {
        let w = FamilyParams::wielandt(6, 5, 3).unwrap();
        assert_eq!(w.expected_reset_target(), Some(4));
        let ab = FamilyParams::dm(DmVariant::Ab, 5, 3, 1, 0).unwrap();
        assert_eq!(ab.expected_reset_target(), Some(3));
        // Extremal aa case wraps around the cycle.
        let aa = FamilyParams::dm(DmVariant::Aa, 5, 3, 2, 0).unwrap();
        assert_eq!(aa.expected_reset_target(), Some(0));
        let stretched = FamilyParams::dm(DmVariant::Ab, 5, 3, 1, 1).unwrap();
        assert_eq!(stretched.expected_reset_target(), None);
    }

    #[test]
    fn verify_small_sweeps_match() {
        let reports = verify_family(&wielandt_tuples(6), DEFAULT_STATE_CAP).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.matches, "{:?}", r.params);
            assert!(r.witness_ok, "{:?}", r.params);
        }
        let reports =
            verify_family(&dm_tuples(DmVariant::Aa, 6, 0), DEFAULT_STATE_CAP).unwrap();
        for r in &reports {
            assert!(r.matches && r.witness_ok, "{:?}", r.params);
        }
    }

    #[test]
    fn solver_agrees_on_spot_instances() {
        let dfa = build_dm(DmVariant::Ab, 5, 3, 1, 0).unwrap();
        assert_eq!(reset_threshold(&dfa).unwrap().threshold, 9);
        let dfa = build_dm(DmVariant::Aa, 5, 3, 2, 0).unwrap();
        assert_eq!(reset_threshold(&dfa).unwrap().threshold, 12);
        let dfa = build_dm(DmVariant::Ab, 5, 3, 1, 1).unwrap();
        assert_eq!(reset_threshold(&dfa).unwrap().threshold, 10);
    }

    #[test]
    fn wielandt_tuple_generator_matches_validated_range() {
        // For every coprime pair the constructible n are exactly
        // q..=p+q-2.
        let tuples = wielandt_tuples(8);
        for q in 3..=8usize {
            for p in 2..q {
                if crate::frobenius::gcd(p as u64, q as u64) != 1 {
                    continue;
                }
                let ns: Vec<usize> = tuples
                    .iter()
                    .filter_map(|t| match t {
                        FamilyParams::Wielandt { n, q: tq, p: tp } if *tq == q && *tp == p => {
                            Some(*n)
                        }
                        _ => None,
                    })
                    .collect();
                let expected: Vec<usize> = (q..=p + q - 2).collect();
                assert_eq!(ns, expected, "q={q} p={p}");
            }
        }
    }
}
