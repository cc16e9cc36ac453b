use proptest::prelude::*;

use temporal_spanner::bipartite::{bipartite_spanner, BipartiteInstance};
use temporal_spanner::certificate::replay_certificate;
use temporal_spanner::dismount::{
    algorithm1_spanner, apply_dismount, extremal, find_k_hop, recursively_dismount, validate_step,
};
use temporal_spanner::graph::{
    is_temporally_connected, parse_graph, reachability, verify_spanner, write_edge_list,
};
use temporal_spanner::oracle::{
    footprint_2_degenerate, gen_random_clique, gen_random_graph, is_minimal_spanner,
    minimal_spanner_greedy,
};
use temporal_spanner::pivot::{compress, find_pivot, pivot_spanner};
use temporal_spanner::structure::reduce_to_biclique;
use temporal_spanner::{EdgeSubset, NodeId, NodeSet, Phase, TemporalGraph};

fn clique() -> impl Strategy<Value = TemporalGraph> {
    (3usize..=8, any::<u64>()).prop_map(|(n, seed)| gen_random_clique(n, seed).unwrap())
}

fn sparse() -> impl Strategy<Value = TemporalGraph> {
    (2usize..=8, 0.2f64..=1.0, 1u64..20, any::<u64>())
        .prop_map(|(n, p, l, seed)| gen_random_graph(n, p, l, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trips(g in sparse()) {
        let text = write_edge_list(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn unrestricted_reachability_matches_full_restriction(g in sparse()) {
        let all = EdgeSubset::full(&g);
        let a = reachability(&g, None, None);
        let b = reachability(&g, Some(&NodeSet::full(g.node_count())), Some(&all));
        prop_assert_eq!(a, b);
        prop_assert_eq!(is_temporally_connected(&g), verify_spanner(&g, &all).unwrap());
    }

    #[test]
    fn adding_edges_keeps_reachability(g in sparse(), mask in any::<u64>(), extra in any::<u64>()) {
        let mut s = EdgeSubset::empty(&g);
        s.extend(g.edges().filter(|e| mask >> (e.0 % 64) & 1 == 1));
        let before = reachability(&g, None, Some(&s));
        s.extend(g.edges().filter(|e| extra >> (e.0 % 64) & 1 == 1));
        let after = reachability(&g, None, Some(&s));
        for u in g.nodes() {
            for v in g.nodes() {
                prop_assert!(!before.reachable(u, v) || after.reachable(u, v));
            }
        }
    }

    #[test]
    fn cliques_are_connected(g in clique()) {
        prop_assert!(is_temporally_connected(&g));
    }

    #[test]
    fn extremal_edges_bound_incident_labels(g in sparse()) {
        for v in g.nodes() {
            let Ok(x) = extremal(&g, v, None, None) else {
                prop_assert_eq!(g.degree(v), 0);
                continue;
            };
            for &(_, e) in g.incident(v) {
                prop_assert!(g.label(x.earliest) <= g.label(e) && g.label(e) <= g.label(x.latest));
            }
            prop_assert_eq!(g.contact(x.earliest).other(v), x.earliest_neighbor);
            prop_assert_eq!(g.contact(x.latest).other(v), x.latest_neighbor);
        }
    }

    #[test]
    fn steps_revalidate_and_compose(g in clique(), k in 1usize..=4) {
        let full = NodeSet::full(g.node_count());
        if let Some(step) = find_k_hop(&g, &full, k) {
            prop_assert!(validate_step(&g, &full, &step).is_ok());
            prop_assert!(step.p_minus.hops() <= k && step.p_plus.hops() <= k);
            prop_assert!(step.p_minus.is_temporal(&g) && step.p_minus.is_simple());
            prop_assert!(step.p_plus.is_temporal(&g) && step.p_plus.is_simple());
            // any spanner of the rest plus the step edges spans the whole clique
            let (rest, selected) = apply_dismount(&g, &full, &step).unwrap();
            let inner = g.induced(&rest);
            let inner_spanner = minimal_spanner_greedy(&inner.graph, 7).unwrap();
            let mut s = EdgeSubset::empty(&g);
            s.extend(inner_spanner.iter().map(|e| inner.parent_edge(e)));
            s.extend(selected);
            prop_assert!(verify_spanner(&g, &s).unwrap());
        }
    }

    #[test]
    fn deterministic_runs(n in 4usize..=8, seed in any::<u64>()) {
        let a = algorithm1_spanner(&gen_random_clique(n, seed).unwrap(), 2).unwrap();
        let b = algorithm1_spanner(&gen_random_clique(n, seed).unwrap(), 2).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn certificates_replay_to_the_spanner(g in clique()) {
        let r = algorithm1_spanner(&g, 2).unwrap();
        let doc = r.certificate(&g);
        let json = serde_json::to_string(&doc).unwrap();
        let back: temporal_spanner::certificate::CertificateDoc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(replay_certificate(&g, &back).unwrap(), r.edges);
    }

    #[test]
    fn one_hop_spanners_are_two_degenerate(g in clique()) {
        // one-hop steps add two edges at the removed node only
        if let Some(r) = recursively_dismount(&g, 1) {
            prop_assert!(r.verify(&g));
            prop_assert!(footprint_2_degenerate(&g, &r.edges));
            prop_assert_eq!(r.size(), 2 * g.node_count() - 3);
        }
        if let Some(r) = recursively_dismount(&g, 3) {
            prop_assert!(r.verify(&g));
            prop_assert!(r.steps.iter().all(|s| s.cost() <= 4));
        }
    }

    #[test]
    fn pivot_spanners_are_small(g in clique()) {
        if let Some(cert) = find_pivot(&g).unwrap() {
            let s = pivot_spanner(&g, &cert).unwrap();
            prop_assert!(s.verify(&g));
            prop_assert!(s.size() <= 2 * g.node_count() - 3);
        }
    }

    #[test]
    fn greedy_is_minimal(g in clique(), seed in any::<u64>()) {
        let s = minimal_spanner_greedy(&g, seed).unwrap();
        prop_assert!(verify_spanner(&g, &s).unwrap());
        prop_assert!(is_minimal_spanner(&g, &s));
    }

    #[test]
    fn compression_lowers_positive_labels(g in sparse()) {
        let shifted: Vec<u64> = g.edges().map(|e| g.label(e) + 1).collect();
        let g = g.relabeled(&shifted).unwrap();
        let c = compress(&g);
        for e in g.edges() {
            prop_assert!(c.graph.label(e) <= g.label(e));
            prop_assert_eq!(c.original[e.0], g.label(e));
        }
    }

    #[test]
    fn bipartite_reaches_every_target(s in 1usize..=4, extra in 0usize..=3, seed in any::<u64>()) {
        let n = 2 * s + extra;
        let g = gen_random_clique(n, seed).unwrap();
        let inst = BipartiteInstance::new(&g, (0..s).map(NodeId), (s..n).map(NodeId)).unwrap();
        let (edges, log) = bipartite_spanner(&inst);
        prop_assert_eq!(&log.replay(&g), &edges);
        let r = reachability(&g, None, Some(&edges));
        for a in 0..s {
            for b in s..n {
                prop_assert!(r.reachable(NodeId(a), NodeId(b)));
            }
        }
        for e in edges.iter() {
            let c = g.contact(e);
            prop_assert!((c.u.0 < s) != (c.v.0 < s));
        }
        if extra == 0 && s.is_power_of_two() {
            let log2 = s.trailing_zeros() as usize;
            prop_assert!(edges.len() <= 2 * s * log2 + 4 * s);
        }
    }
}

#[test]
fn stuck_cliques_reduce_to_connected_bicliques() {
    let mut seen = 0;
    for m in 2..=4 {
        for seed in 0..20 {
            let g = temporal_spanner::oracle::gen_layered_clique(m, 0, seed).unwrap();
            let red = reduce_to_biclique(&g).unwrap();
            assert!(is_temporally_connected(&red.graph));
            // any spanner of the bi-clique spans the clique
            let s = minimal_spanner_greedy(&red.graph, seed).unwrap();
            let mut lifted = EdgeSubset::empty(&g);
            lifted.extend(s.iter().map(|e| red.parent_edges[e.0]));
            assert!(verify_spanner(&g, &lifted).unwrap());
            let r = algorithm1_spanner(&g, 2).unwrap();
            assert!(r.phases.iter().any(|p| matches!(p, Phase::Bipartite(_))));
            seen += 1;
        }
    }
    assert_eq!(seen, 60);
}

#[test]
fn measured_minimum_sizes() {
    use temporal_spanner::oracle::{fixture, min_spanner_bruteforce, SearchBudget};
    let fig2 = min_spanner_bruteforce(&fixture("fig2_k5").unwrap(), SearchBudget::default())
        .unwrap()
        .unwrap();
    assert_eq!((fig2.size, fig2.optimal), (6, true));
    let fig12 = min_spanner_bruteforce(&fixture("fig12_k8").unwrap(), SearchBudget::default())
        .unwrap()
        .unwrap();
    assert_eq!((fig12.size, fig12.optimal), (12, true));
}
