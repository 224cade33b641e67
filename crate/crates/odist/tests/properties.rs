//! Randomized invariants over small graphs and orientations.

use proptest::prelude::*;

use odist::graph::{orient, OrientationMask, UndirectedGraph};
use odist::{is_distinguishing, parameter_value, reverse, Direction, ParamKind};

/// A connected graph on 2..=6 vertices with an orientation mask.
fn oriented_graph() -> impl Strategy<Value = (UndirectedGraph, OrientationMask)> {
    (2usize..=6)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            (Just(n), Just(pairs), prop::bits::u32::between(0, m), 0u32..1 << m)
        })
        .prop_filter_map("connected", |(n, pairs, edge_bits, mask_bits)| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| edge_bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if edges.is_empty() {
                return None;
            }
            let g = UndirectedGraph::new(n, edges).unwrap();
            let mut reach = 1u64;
            for _ in 0..n {
                for &(u, v) in &g.edges {
                    if reach >> u & 1 == 1 || reach >> v & 1 == 1 {
                        reach |= 1 << u | 1 << v;
                    }
                }
            }
            if reach != (1u64 << n) - 1 {
                return None;
            }
            let m = g.m();
            let mask = OrientationMask::new((0..m).map(|i| mask_bits >> i & 1 == 1).collect());
            Some((g, mask))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mask_string_round_trip((_, mask) in oriented_graph()) {
        let s = mask.to_string();
        prop_assert_eq!(s.parse::<OrientationMask>().unwrap(), mask);
    }

    #[test]
    fn parameters_invariant_under_reversal((g, mask) in oriented_graph()) {
        let og = orient(&g, &mask).unwrap();
        let rev = reverse(&og);
        for kind in ParamKind::all() {
            prop_assert_eq!(
                parameter_value(&og, kind).unwrap().0,
                parameter_value(&rev, kind).unwrap().0
            );
        }
    }

    #[test]
    fn witnesses_verify((g, mask) in oriented_graph()) {
        let og = orient(&g, &mask).unwrap();
        for kind in ParamKind::all() {
            let (_, lab) = parameter_value(&og, kind).unwrap();
            prop_assert!(is_distinguishing(&og, &lab).unwrap());
            if kind.is_proper() {
                prop_assert!(lab.is_proper(&og));
            }
        }
    }

    #[test]
    fn extremal_min_at_most_max((g, _) in oriented_graph()) {
        for kind in ParamKind::all() {
            let lo = odist::extremal(&g, kind, Direction::Min).unwrap().value;
            let hi = odist::extremal(&g, kind, Direction::Max).unwrap().value;
            prop_assert!(lo <= hi);
        }
    }
}
