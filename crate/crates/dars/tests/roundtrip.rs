use affine_growth::{first_stable_window, GrowthRegion};
use affine_permutation::{enumerate_box, AffinePermutation};
use combinatorics_core::{looparrowright, minimal_inner_shape_pair, partitions_of, Partition, Tabloid};
use dars::*;
use proptest::prelude::*;

fn all_tuples(n: usize, max_lambda: usize) -> Vec<(Tabloid, Tabloid, Partition)> {
    let mut out = Vec::new();
    for k in 0..=max_lambda {
        for lambda in partitions_of(k) {
            for mu in partitions_of(n) {
                let tabs = Tabloid::all_of_shape(&mu);
                for p in &tabs {
                    for q in &tabs {
                        out.push((p.clone(), q.clone(), lambda.clone()));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn inverse_undoes_forward_on_boxes() {
    let mut count = 0;
    for (n, lo, hi) in [(2, -6, 8), (3, -4, 6), (4, -2, 5)] {
        for w in enumerate_box(n, lo, hi, None).unwrap() {
            let t = forward(&w).unwrap();
            assert_eq!(inverse(&t).unwrap(), w, "{t}");
            count += 1;
        }
    }
    assert!(count > 700, "{count}");
}

#[test]
fn forward_outputs_validate_and_are_minimal() {
    for (n, lo, hi) in [(2, -6, 8), (3, -4, 6)] {
        for w in enumerate_box(n, lo, hi, None).unwrap() {
            let t = forward(&w).unwrap();
            let report = validate(&t);
            assert!(report.is_valid(), "{w}: {:?}", report.first_failure());
            assert_eq!(report.minimal_lambda.as_deref(), Some(t.lambda.parts()), "{w}");
            assert_eq!(t.index(), w.index());
        }
    }
}

#[test]
fn size_identity_holds_in_every_full_window() {
    for w in enumerate_box(3, -3, 5, None).unwrap() {
        let s = first_stable_window(&w).unwrap();
        let region = GrowthRegion::build(&w, s.m + 3).unwrap();
        let first_full = affine_growth::window::first_full_window(&w);
        for m in first_full..=s.m + 3 {
            let size = region.lambda(m).unwrap().size() as i64;
            assert_eq!(size, 3 * (m - 2) - w.index(), "{w} window {m}");
        }
    }
}

#[test]
fn forward_undoes_inverse_on_valid_tuples() {
    let mut valid = 0;
    for (n, max_lambda) in [(2, 8), (3, 8), (4, 6)] {
        for (p, q, lambda) in all_tuples(n, max_lambda) {
            let k = lambda.size() as i64;
            let probe = DarsTuple::new(p.clone(), q.clone(), lambda.clone(), 2);
            if !validate(&probe).is_valid() {
                continue;
            }
            for n0 in -2..=6 {
                let i = n as i64 * (n0 - 2) - k;
                if i.abs() > n as i64 {
                    continue;
                }
                let t = DarsTuple::new(p.clone(), q.clone(), lambda.clone(), n0);
                let w = inverse(&t).unwrap();
                assert_eq!(forward(&w).unwrap(), t, "{w}");
                assert_eq!(w.index(), i);
                valid += 1;
            }
        }
    }
    assert!(valid > 500, "{valid}");
}

#[test]
fn slide_test_agrees_with_minimal_inner_shape() {
    for n in 2..=4 {
        for (p, q, lambda) in all_tuples(n, 6) {
            let (a, b) = (looparrowright(&lambda, &p), looparrowright(&lambda, &q));
            if !a.is_standard() || !b.is_standard() {
                continue;
            }
            let minimal = minimal_inner_shape_pair(&a.column_word(), &b.column_word()).unwrap();
            assert_eq!(!some_column_slides(&a, &b), minimal == lambda, "{p} {q} {lambda}");
        }
    }
}

#[test]
fn saturated_omega_pair_round_trips() {
    // 4(N0 - 2) - i = 7 with N0 = 4 gives i = 1
    let t = DarsTuple::new("1,3,4/2".parse().unwrap(), "1,2,3/4".parse().unwrap(), "4,3".parse().unwrap(), 4);
    let w = inverse(&t).unwrap();
    assert_eq!(w.index(), 1);
    assert_eq!(forward(&w).unwrap(), t);
}

#[test]
fn invalid_tuples_are_rejected_by_inverse() {
    let t = DarsTuple::new("1,4/2,3".parse().unwrap(), "2,3/1,4".parse().unwrap(), "2,1".parse().unwrap(), 3);
    assert!(matches!(inverse(&t), Err(DarsError::InvalidTuple { condition: "(2)(c)", .. })));
    let t = DarsTuple::new("2/1".parse().unwrap(), "2/1".parse().unwrap(), "3,1".parse().unwrap(), 4);
    assert!(matches!(inverse(&t), Err(DarsError::InvalidTuple { condition: "(3)", .. })));
}

#[test]
fn json_format() {
    let t = forward(&"10,3,-3,12".parse().unwrap()).unwrap();
    let json = serde_json::to_string(&t).unwrap();
    assert_eq!(json, r#"{"p":"1,3/2/4","q":"1,2/3/4","lambda":[6,6,5],"n0":7,"n":4,"index":3}"#);
    let back: DarsTuple = serde_json::from_str(&json).unwrap();
    assert_eq!(back, t);
    let bare: DarsTuple = serde_json::from_str(r#"{"p":"1,3/2/4","q":"1,2/3/4","lambda":[6,6,5],"n0":7}"#).unwrap();
    assert_eq!(bare, t);
    assert!(serde_json::from_str::<DarsTuple>(r#"{"p":"1,3/2/4","q":"1,2/3/4","lambda":[6,6,5],"n0":7,"index":0}"#).is_err());
    assert!(serde_json::from_str::<DarsTuple>(r#"{"p":"1,1","q":"1,2","lambda":[],"n0":2}"#).is_err());
}

fn affine(n: usize, shift: i64) -> impl Strategy<Value = AffinePermutation> {
    (Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(-shift..=shift, n)).prop_map(
        move |(perm, shifts)| AffinePermutation::new(perm.iter().zip(&shifts).map(|(p, k)| p + n as i64 * k).collect()).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_round_trip(w in (2usize..=5).prop_flat_map(|n| affine(n, 2))) {
        let t = forward(&w).unwrap();
        prop_assert!(validate(&t).is_valid());
        prop_assert_eq!(t.index(), w.index());
        prop_assert_eq!(inverse(&t).unwrap(), w);
    }

    #[test]
    fn dynkin_reflection_preserves_shapes(w in affine(4, 2)) {
        let (a, b) = (forward(&w).unwrap(), forward(&w.dynkin_reflection()).unwrap());
        prop_assert_eq!(a.pbar.shape(), b.pbar.shape());
        prop_assert_eq!(a.index(), -b.index());
    }
}
