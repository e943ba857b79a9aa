//! Generative properties over the exact-arithmetic kernels.

use proptest::prelude::*;
use sci_chern::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_is_idempotent_and_permutation_invariant(
        raw in proptest::collection::vec((-40i64..40, 1i64..12, -40i64..40, 1i64..12), 1..120),
        rot in 0usize..128,
    ) {
        let pts: Vec<RatioPoint> = raw
            .iter()
            .map(|(xn, xd, yn, yd)| RatioPoint::new(q(*xn, *xd), q(*yn, *yd)))
            .collect();
        let h = convex_hull(&pts);
        prop_assert!(h.contains_all(&pts));
        prop_assert!(convex_hull(&h.vertices).vertices == h.vertices);
        let mut rotated = pts.clone();
        let k = rot % rotated.len();
        rotated.rotate_left(k);
        prop_assert!(convex_hull(&rotated).vertices == h.vertices);
    }

    #[test]
    fn partitions_sum_sort_and_count(n in 1u32..=22) {
        let mut count = 0u64;
        for t in partitions(n) {
            count += 1;
            prop_assert_eq!(t.s1(), n);
            prop_assert!(t.parts().windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(t.parts().iter().all(|&d| d >= 1));
        }
        prop_assert_eq!(count, partition_count(n));
    }

    #[test]
    fn parse_format_round_trip(n in any::<i64>(), d in 1i64..=1_000_000) {
        let v = q(n, d);
        prop_assert!(is_canonical(&v));
        prop_assert_eq!(parse_q(&fmt_q(&v)).unwrap(), v);
    }

    #[test]
    fn sampled_tuples_stay_on_the_simplex(m in 5u32..=48, seed in any::<u64>()) {
        for tuple in sample_real_tuples(m, 8, seed) {
            prop_assert!(!tuple.is_empty() && tuple.len() <= m as usize);
            prop_assert!(tuple.iter().all(|d| *d >= qi(1)));
            let sum = tuple.iter().fold(qi(0), |a, b| a + b);
            prop_assert_eq!(sum, qu(m));
        }
    }

    #[test]
    fn ample_tuples_have_well_defined_canonical_ratios(
        parts in proptest::collection::vec(1u32..=9, 1..8),
    ) {
        let t = DegreeTuple::new(parts).unwrap();
        if t.s1() >= 5 {
            let c = chern_of_tuple(&t).unwrap();
            prop_assert!(c.c1c2 < qi(0));
            prop_assert!(is_canonical(&c.x) && is_canonical(&c.y));
            prop_assert!(yau_holds(&c));
        }
    }
}
