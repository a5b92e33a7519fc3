//! Property tests for the encodings and the vertex-set algebra.

use std::collections::BTreeSet;

use implab::codec::{decode, decode_adjacency_list, decode_graph6, encode_adjacency_list, encode_graph6};
use implab::graph::{Graph, VertexSet};
use proptest::prelude::*;

/// A graph strategy: order up to 20, then each possible edge flipped on
/// independently.
fn graphs() -> impl Strategy<Value = Graph> {
    (0usize..=20)
        .prop_flat_map(|n| {
            let bits = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), bits))
        })
        .prop_map(|(n, flips)| {
            let mut g = Graph::new(n).expect("order fits");
            let mut next = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if flips[next] {
                        g.add_edge(u, v).expect("in range");
                    }
                    next += 1;
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn graph6_roundtrips(g in graphs()) {
        let code = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(&code).unwrap(), g);
    }

    #[test]
    fn adjacency_list_roundtrips(g in graphs()) {
        let text = encode_adjacency_list(&g);
        if g.order() == 0 {
            prop_assert!(text.is_empty());
        } else {
            prop_assert_eq!(decode_adjacency_list(&text).unwrap(), g);
        }
    }

    #[test]
    fn front_door_decode_accepts_both_encodings(g in graphs()) {
        let as_g6 = decode(&encode_graph6(&g));
        prop_assert_eq!(as_g6.unwrap(), g.clone());
        if g.order() > 0 {
            prop_assert_eq!(decode(&encode_adjacency_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn vertex_set_tracks_a_reference_set(ops in proptest::collection::vec((0usize..64, any::<bool>()), 0..100)) {
        let mut set = VertexSet::EMPTY;
        let mut reference = BTreeSet::new();
        for (v, insert) in ops {
            if insert {
                set.insert(v);
                reference.insert(v);
            } else {
                set.remove(v);
                reference.remove(&v);
            }
            prop_assert_eq!(set.len(), reference.len());
            prop_assert_eq!(set.min(), reference.iter().next().copied());
        }
        let collected: Vec<usize> = set.iter().collect();
        let expected: Vec<usize> = reference.into_iter().collect();
        prop_assert_eq!(collected, expected);
    }

    #[test]
    fn set_algebra_matches_bitwise_definitions(a in any::<u64>(), b in any::<u64>()) {
        let (sa, sb) = (VertexSet::from_iter((0..64).filter(|i| a & (1 << i) != 0)),
                        VertexSet::from_iter((0..64).filter(|i| b & (1 << i) != 0)));
        prop_assert_eq!(sa.union(sb).len(), (a | b).count_ones() as usize);
        prop_assert_eq!(sa.intersection(sb).len(), (a & b).count_ones() as usize);
        prop_assert_eq!(sa.difference(sb).len(), (a & !b).count_ones() as usize);
        prop_assert_eq!(sa.is_subset_of(sb), a & !b == 0);
    }
}
