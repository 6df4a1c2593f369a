//! The two-cycle lower bound against the exact solver across the families.
//!
//! With the right anchor the bound is tight for the Wielandt-type series
//! and the non-extremal branch colorings; in the extremal aa case it stays
//! a strict lower bound (the solver value is larger by k).

use synchro_core::families::{dm_tuples, wielandt_tuples, DmVariant, FamilyParams};
use synchro_core::solver::{
    reset_lower_bound, reset_lower_bound_with_cap, reset_threshold_with_cap, LowerBoundHypothesis,
};

const CAP: usize = 24;

#[test]
fn anchored_bound_is_tight_on_wielandt_instances() {
    for params in wielandt_tuples(8) {
        let FamilyParams::Wielandt { n, q, p } = params else {
            unreachable!()
        };
        let dfa = params.build().unwrap();
        let rt = reset_threshold_with_cap(&dfa, CAP).unwrap().threshold;

        let plain = LowerBoundHypothesis::new(p, q).unwrap();
        let base = reset_lower_bound_with_cap(&dfa, &plain, CAP).unwrap();
        assert_eq!(base, (p - 1) * (q - 1));
        assert!(base <= rt);

        // Words of length n-p funnel state 1 into the merge state n-p+1.
        let anchored =
            LowerBoundHypothesis::with_anchor(p, q, 1, n - p, n - p + 1).unwrap();
        let bound = reset_lower_bound_with_cap(&dfa, &anchored, CAP).unwrap();
        assert_eq!(bound, rt, "anchored bound should be tight on W({n},{q},{p})");
    }
}

#[test]
fn anchored_bound_on_branch_colorings() {
    for variant in [DmVariant::Aa, DmVariant::Ab] {
        for params in dm_tuples(variant, 8, 0) {
            let FamilyParams::Dm { q, p, k, .. } = params else {
                unreachable!()
            };
            let dfa = params.build().unwrap();
            let rt = reset_threshold_with_cap(&dfa, CAP).unwrap().threshold;
            let extremal = variant == DmVariant::Aa && k == q - p;
            let hyp = if extremal {
                // Words of length k carry the branch target q-p+1 to the
                // actual reset state (q-p+1+k) mod q.
                LowerBoundHypothesis::with_anchor(p, q, q - p + 1, k, (q - p + 1 + k) % q)
                    .unwrap()
            } else {
                LowerBoundHypothesis::with_anchor(p, q, k + 1, q - p - k, q - p + 1).unwrap()
            };
            let bound = reset_lower_bound_with_cap(&dfa, &hyp, CAP).unwrap();
            assert!(bound <= rt, "{params:?}");
            if extremal {
                // The bound certifies all but the final k letters.
                assert_eq!(bound + k, rt, "{params:?}");
            } else {
                assert_eq!(bound, rt, "{params:?}");
            }
        }
    }
}

#[test]
fn default_cap_entry_point() {
    let dfa = synchro_core::families::build_wielandt(5, 5, 3).unwrap();
    let hyp = LowerBoundHypothesis::with_anchor(3, 5, 1, 2, 3).unwrap();
    assert_eq!(reset_lower_bound(&dfa, &hyp).unwrap(), 10);
}
