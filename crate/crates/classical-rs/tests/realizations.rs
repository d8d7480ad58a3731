use classical_rs::*;
use combinatorics_core::{evacuation, StandardTableau};
use proptest::prelude::*;

#[test]
fn all_realizations_agree_up_to_six() {
    for n in 1..=6 {
        let report = classical_cell_invariants(n).unwrap();
        assert!(report.all_agree(), "n={n}: {:?}", report.mismatches);
    }
}

#[test]
fn shapes_match_in_every_realization() {
    for w in FinitePermutation::all(5) {
        for (p, q) in [rs_insertion(&w), rs_growth(&w), rs_shadow(&w), dual_rs(&w)] {
            assert_eq!(p.shape(), q.shape());
        }
    }
}

#[test]
fn inverse_swaps_tableaux() {
    for n in 1..=6 {
        for w in FinitePermutation::all(n) {
            let (p, q) = rs_insertion(&w);
            assert_eq!(rs_insertion(&w.inverse()), (q, p));
        }
    }
}

#[test]
fn right_multiplying_by_longest_element() {
    // RS(w w0) = (P^t, evac(Q)^t)
    for n in 1..=5 {
        let w0 = FinitePermutation::longest(n);
        for w in FinitePermutation::all(n) {
            let (p, q) = rs_insertion(&w);
            let (p2, q2) = rs_insertion(&w.compose(&w0));
            assert_eq!(p2, p.transpose());
            assert_eq!(q2, evacuation(&q).transpose());
        }
    }
}

#[test]
fn shadow_labels_equal_growth_labels() {
    for n in 1..=5 {
        for w in FinitePermutation::all(n) {
            assert_eq!(shadow_edge_labels(&w), growth_diagram(&w).labels);
        }
    }
}

#[test]
fn dual_growth_matches_evacuation() {
    for w in FinitePermutation::all(5) {
        let (p, q) = rs_insertion(&w);
        let (pd, qd) = dual_rs(&w);
        assert_eq!(pd, p);
        assert_eq!(evacuation(&qd), q);
    }
}

#[test]
fn dual_labels_satisfy_rules() {
    for w in FinitePermutation::all(5) {
        let l = dual_edge_labels(&w);
        for i in 1..=5 {
            for j in 1..=5 {
                let (s, west, _) = dual_rule(l.h[i - 1][j], l.v[i][j], w.at(j) == i);
                assert_eq!((l.h[i][j], l.v[i][j - 1]), (s, west));
            }
        }
    }
}

proptest! {
    #[test]
    fn random_larger_permutations_agree(perm in Just((1..=9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let w = FinitePermutation::new(perm).unwrap();
        prop_assert!(realizations_agree(&w));
        let (p, _) = rs_insertion(&w);
        prop_assert!(StandardTableau::new(p.rows().to_vec()).is_ok());
    }
}
