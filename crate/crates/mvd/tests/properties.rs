//! Invariant checks over randomized graphs.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::FileFailurePersistence;

use mvd::digraph::{Digraph, VertexId};
use mvd::solver::mu;
use mvd::structure::{bridge_cut, is_dag, scc, strong_bridges};
use mvd::visibility::{naive_verify, verify, Variant};

fn arc_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1)).prop_map(move |mask| {
            let arcs = arc_slots(n)
                .into_iter()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(a, _)| a);
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

/// A graph plus one of its vertices.
fn digraph_with_vertex(max_n: usize) -> impl Strategy<Value = (Digraph, VertexId)> {
    digraph_strategy(max_n).prop_flat_map(|d| {
        let n = d.vertex_count();
        (Just(d), (0..n).prop_map(VertexId::new))
    })
}

/// A graph plus an arbitrary vertex subset.
fn digraph_with_subset(max_n: usize) -> impl Strategy<Value = (Digraph, Vec<VertexId>)> {
    digraph_strategy(max_n).prop_flat_map(|d| {
        let n = d.vertex_count();
        (Just(d), proptest::collection::vec(any::<bool>(), n)).prop_map(|(d, mask)| {
            let set = (0..mask.len())
                .filter(|&i| mask[i])
                .map(VertexId::new)
                .collect::<Vec<_>>();
            (d, set)
        })
    })
}

/// Strongly connected by construction: a spanning directed cycle plus a
/// sparse sprinkle of extra arcs, which keeps strong bridges common.
fn strongly_connected_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.15), n * (n - 1)).prop_map(
            move |mask| {
                let mut arcs: BTreeSet<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                for (slot, keep) in arc_slots(n).into_iter().zip(mask) {
                    if keep {
                        arcs.insert(slot);
                    }
                }
                Digraph::from_arcs(n, arcs).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: Some(Box::new(FileFailurePersistence::Off)),
        .. ProptestConfig::default()
    })]

    #[test]
    fn edge_list_round_trip(d in digraph_strategy(8)) {
        let text = d.to_edge_list();
        let parsed = Digraph::from_edge_list(&text).unwrap();
        match d.arcs().map(|(u, v)| u.index().max(v.index())).max() {
            // An arcs-only format cannot express isolated vertices.
            None => prop_assert_eq!(parsed.vertex_count(), 0),
            Some(max_used) => {
                prop_assert_eq!(parsed.vertex_count(), max_used + 1);
                prop_assert_eq!(
                    parsed.arcs().collect::<Vec<_>>(),
                    d.arcs().collect::<Vec<_>>()
                );
                // Emission is a fixed point of parse-then-emit.
                prop_assert_eq!(parsed.to_edge_list(), text);
            }
        }
    }

    #[test]
    fn bfs_basics((d, source) in digraph_with_vertex(8)) {
        let dist = d.bfs_distances(source).unwrap();
        prop_assert_eq!(dist.get(source), Some(0));
        prop_assert_eq!(d.restricted_bfs(source, &[]).unwrap(), dist);
    }

    #[test]
    fn triangle_inequality(d in digraph_strategy(7)) {
        let n = d.vertex_count();
        let dist: Vec<_> = (0..n)
            .map(|u| d.bfs_distances(VertexId::new(u)).unwrap())
            .collect();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if let (Some(duv), Some(dvw)) =
                        (dist[u].get(VertexId::new(v)), dist[v].get(VertexId::new(w)))
                    {
                        let duw = dist[u].get(VertexId::new(w)).expect("reachable through v");
                        prop_assert!(duw <= duv + dvw);
                    }
                }
            }
        }
    }

    #[test]
    fn restricted_never_shortens((d, blocked) in digraph_with_subset(8)) {
        let Some(source) = d.vertices().find(|v| !blocked.contains(v)) else {
            return Ok(());
        };
        let free = d.bfs_distances(source).unwrap();
        let restricted = d.restricted_bfs(source, &blocked).unwrap();
        for v in d.vertices() {
            match (free.get(v), restricted.get(v)) {
                (None, r) => prop_assert_eq!(r, None),
                (Some(f), Some(r)) => prop_assert!(r >= f),
                (Some(_), None) => {}
            }
        }
    }

    #[test]
    fn scc_partition_matches_mutual_reachability(d in digraph_strategy(8)) {
        let decomposition = scc(&d);
        let n = d.vertex_count();
        let mut seen = vec![0usize; n];
        for comp in &decomposition.components {
            for &v in comp {
                seen[v.index()] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1), "components partition the vertices");
        for u in d.vertices() {
            for v in d.vertices() {
                let same = decomposition.component_of[u.index()]
                    == decomposition.component_of[v.index()];
                prop_assert_eq!(same, d.mutually_reachable(u, v));
            }
        }
        prop_assert!(is_dag(&decomposition.condensation));
    }

    #[test]
    fn bridge_cuts_are_certificates(d in strongly_connected_strategy(7)) {
        for e in strong_bridges(&d) {
            let cut = bridge_cut(&d, e).unwrap();
            prop_assert_eq!(cut.v_source.len() + cut.v_sink.len(), d.vertex_count());
            prop_assert!(cut.v_source.contains(&e.0));
            prop_assert!(cut.v_sink.contains(&e.1));
            let crossings: Vec<_> = d
                .arcs()
                .filter(|(a, b)| cut.v_source.contains(a) && cut.v_sink.contains(b))
                .collect();
            prop_assert_eq!(crossings, vec![e]);
        }
    }

    #[test]
    fn verifier_agrees_with_oracle((d, set) in digraph_with_subset(7)) {
        for variant in Variant::ALL {
            let fast = verify(&d, &set, variant).unwrap();
            let slow = naive_verify(&d, &set, variant).unwrap();
            prop_assert_eq!(fast.valid, slow.valid);
            prop_assert_eq!(fast.blocked, slow.blocked);
        }
    }

    #[test]
    fn solver_witnesses_shrink_validly(d in digraph_strategy(8)) {
        // Solver witnesses are valid by contract; the standard condition is
        // hereditary, so dropping any member must keep them valid.
        let witness = mu(&d).unwrap().witness;
        prop_assert!(verify(&d, &witness, Variant::Standard).unwrap().valid);
        for skip in 0..witness.len() {
            let smaller: Vec<VertexId> = witness
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect();
            prop_assert!(verify(&d, &smaller, Variant::Standard).unwrap().valid);
        }
    }
}
