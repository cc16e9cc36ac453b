//! Brute-force oracles, generators and fixtures.
//!
//! The oracles deliberately avoid the optimized code paths: dismountable nodes
//! come from plain path enumeration, pivots from fixpoint relaxation, minimum
//! spanners from subset enumeration with bitmask reachability.

mod fixtures;
mod generate;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{
    connected_with, is_temporally_connected, EdgeId, EdgeSubset, Label, NodeId, TemporalGraph,
};

pub use fixtures::{fixture, fixture_info, fixture_names, Fixture, FIXTURES};
pub use generate::{
    gen_full_range_clique, gen_layered_clique, gen_random_clique, gen_random_graph,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
    #[error("graph is not temporally connected")]
    NotTemporallyConnected,
    #[error("search budget exhausted while checking size {size} after {elapsed_ms} ms")]
    BudgetExhausted { size: usize, elapsed_ms: u128 },
    #[error(
        "exhaustive search supports at most {max_edges} edges and 64 nodes, got {edges} edges"
    )]
    TooLarge { edges: usize, max_edges: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generation failed: {0}")]
    GenerationFailed(String),
}

/// Limits of an exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Smallest subset size tried; defaults to `n - 1`.
    pub min_size: Option<usize>,
    /// Largest subset size tried; defaults to the edge count.
    pub max_size: Option<usize>,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            min_size: None,
            max_size: None,
            time_limit: Duration::from_secs(60),
        }
    }
}

impl SearchBudget {
    pub fn with_time_limit(time_limit: Duration) -> Self {
        SearchBudget {
            time_limit,
            ..Default::default()
        }
    }

    /// Only subsets of exactly `size` edges.
    pub fn exact(size: usize, time_limit: Duration) -> Self {
        SearchBudget {
            min_size: Some(size),
            max_size: Some(size),
            time_limit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSpanner {
    pub size: usize,
    pub edges: EdgeSubset,
    /// Every size below `size` down to the search start was ruled out.
    pub optimal: bool,
}

pub const MAX_BRUTEFORCE_EDGES: usize = 28;

/// Edge list in label order as endpoint index pairs, with the parent ids.
fn label_ordered(g: &TemporalGraph) -> (Vec<(usize, usize)>, Vec<EdgeId>) {
    let ids: Vec<EdgeId> = g.edges_by_label().to_vec();
    let ends = ids
        .iter()
        .map(|&e| {
            let c = g.contact(e);
            (c.u.0, c.v.0)
        })
        .collect();
    (ends, ids)
}

/// Temporal connectivity of the edges of `mask` (bits index `ends`, which is
/// in label order). `sources[v]` is the set of nodes that have reached `v`.
fn tc_mask(ends: &[(usize, usize)], mask: u64, n: usize, sources: &mut [u64]) -> bool {
    for (v, s) in sources.iter_mut().enumerate().take(n) {
        *s = 1 << v;
    }
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        let (a, b) = ends[i];
        let x = sources[a] | sources[b];
        sources[a] = x;
        sources[b] = x;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    sources[..n].iter().all(|&s| s == full)
}

/// Next integer with the same number of set bits.
fn gosper(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Smallest temporal spanner by exhaustive enumeration, by increasing size.
///
/// `Ok(None)` means no spanner exists up to `budget.max_size`; running out of
/// time is an error.
pub fn min_spanner_bruteforce(
    g: &TemporalGraph,
    budget: SearchBudget,
) -> Result<Option<MinSpanner>, OracleError> {
    let (n, m) = (g.node_count(), g.edge_count());
    if m > MAX_BRUTEFORCE_EDGES || n > 64 {
        return Err(OracleError::TooLarge {
            edges: m,
            max_edges: MAX_BRUTEFORCE_EDGES,
        });
    }
    if !is_temporally_connected(g) {
        return Err(OracleError::NotTemporallyConnected);
    }
    if n <= 1 {
        return Ok(Some(MinSpanner {
            size: 0,
            edges: EdgeSubset::empty(g),
            optimal: true,
        }));
    }
    let (ends, ids) = label_ordered(g);
    let node_bits: Vec<u64> = ends
        .iter()
        .map(|&(a, b)| (1u64 << a) | (1u64 << b))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let start = budget.min_size.unwrap_or(n - 1).max(1);
    let stop = budget.max_size.unwrap_or(m).min(m);
    let began = Instant::now();
    let mut sources = vec![0u64; n];
    let mut checked: u64 = 0;
    for size in start..=stop {
        let last = 1u64 << m;
        let mut mask: u64 = (1u64 << size) - 1;
        while mask < last {
            checked += 1;
            if checked & 0xFFFF == 0 && began.elapsed() > budget.time_limit {
                return Err(OracleError::BudgetExhausted {
                    size,
                    elapsed_ms: began.elapsed().as_millis(),
                });
            }
            // every node needs an incident edge
            let mut covered = 0u64;
            let mut bits = mask;
            while bits != 0 {
                covered |= node_bits[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            if covered == full && tc_mask(&ends, mask, n, &mut sources) {
                let edges = EdgeSubset::from_edges(
                    g,
                    (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]),
                )
                .expect("own edges");
                return Ok(Some(MinSpanner {
                    size,
                    edges,
                    optimal: start < n,
                }));
            }
            mask = gosper(mask);
        }
    }
    Ok(None)
}

/// One random pass over the edges, dropping every edge whose removal keeps the
/// graph connected. The result is minimal: dropping edges never makes a kept
/// edge removable.
pub fn minimal_spanner_greedy(g: &TemporalGraph, seed: u64) -> Result<EdgeSubset, OracleError> {
    if !is_temporally_connected(g) {
        return Err(OracleError::NotTemporallyConnected);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<EdgeId> = g.edges().collect();
    order.shuffle(&mut rng);
    let mut keep = vec![true; g.edge_count()];
    for e in order {
        keep[e.0] = false;
        if !connected_with(g, |f| keep[f.0]) {
            keep[e.0] = true;
        }
    }
    Ok(EdgeSubset::from_edges(g, g.edges().filter(|e| keep[e.0])).expect("own edges"))
}

/// A spanner from which no single edge can be dropped.
pub fn is_minimal_spanner(g: &TemporalGraph, s: &EdgeSubset) -> bool {
    if s.universe() != g.edge_count() || !connected_with(g, |f| s.contains(f)) {
        return false;
    }
    s.iter()
        .all(|e| !connected_with(g, |f| f != e && s.contains(f)))
}

/// Earliest and latest incident edge of every node, by direct scan.
fn extremal_scan(g: &TemporalGraph) -> (Vec<Option<EdgeId>>, Vec<Option<EdgeId>>) {
    let n = g.node_count();
    let mut lo: Vec<Option<EdgeId>> = vec![None; n];
    let mut hi: Vec<Option<EdgeId>> = vec![None; n];
    for (i, c) in g.contacts().iter().enumerate() {
        for x in [c.u, c.v] {
            if lo[x.0].is_none_or(|e| g.label(e) > c.label) {
                lo[x.0] = Some(EdgeId(i));
            }
            if hi[x.0].is_none_or(|e| g.label(e) < c.label) {
                hi[x.0] = Some(EdgeId(i));
            }
        }
    }
    (lo, hi)
}

/// Every node that is dismountable with witnesses of at most `kmax` hops,
/// with its minimum cost `|P-| + |P+|`, by enumerating all simple temporal
/// paths of at most `kmax` hops.
pub fn oracle_dismountable_nodes(g: &TemporalGraph, kmax: usize) -> BTreeMap<NodeId, usize> {
    let n = g.node_count();
    let (lo, hi) = extremal_scan(g);
    let mut adj: Vec<Vec<(usize, usize, Label)>> = vec![Vec::new(); n];
    for (i, c) in g.contacts().iter().enumerate() {
        adj[c.u.0].push((c.v.0, i, c.label));
        adj[c.v.0].push((c.u.0, i, c.label));
    }
    let mut emit: Vec<Option<usize>> = vec![None; n];
    let mut recv: Vec<Option<usize>> = vec![None; n];

    struct Walk<'a> {
        adj: &'a [Vec<(usize, usize, Label)>],
        lo: &'a [Option<EdgeId>],
        hi: &'a [Option<EdgeId>],
        kmax: usize,
        nodes: Vec<usize>,
        edges: Vec<usize>,
        emit: &'a mut [Option<usize>],
        recv: &'a mut [Option<usize>],
    }
    impl Walk<'_> {
        fn go(&mut self, time: Label) {
            let at = *self.nodes.last().unwrap();
            let hops = self.edges.len();
            if hops > 0 {
                let (first, last) = (self.nodes[0], at);
                if self.lo[last] == Some(EdgeId(*self.edges.last().unwrap())) {
                    let slot = &mut self.emit[first];
                    *slot = Some(slot.map_or(hops, |h| h.min(hops)));
                }
                if self.hi[first] == Some(EdgeId(self.edges[0])) {
                    let slot = &mut self.recv[last];
                    *slot = Some(slot.map_or(hops, |h| h.min(hops)));
                }
            }
            if hops == self.kmax {
                return;
            }
            for i in 0..self.adj[at].len() {
                let (y, e, t) = self.adj[at][i];
                if t < time || self.nodes.contains(&y) {
                    continue;
                }
                self.nodes.push(y);
                self.edges.push(e);
                self.go(t);
                self.nodes.pop();
                self.edges.pop();
            }
        }
    }

    for s in 0..n {
        let mut w = Walk {
            adj: &adj,
            lo: &lo,
            hi: &hi,
            kmax,
            nodes: vec![s],
            edges: Vec::new(),
            emit: &mut emit,
            recv: &mut recv,
        };
        w.go(0);
    }
    (0..n)
        .filter_map(|u| match (emit[u], recv[u]) {
            (Some(a), Some(b)) => Some((NodeId(u), a + b)),
            _ => None,
        })
        .collect()
}

/// Nodes that can reach `targets` no later than `by`, by fixpoint relaxation
/// over edges other than `skip` (latest departure per node).
fn reach_before(g: &TemporalGraph, targets: [NodeId; 2], by: Label, skip: EdgeId) -> Vec<bool> {
    let mut dep: Vec<Option<Label>> = vec![None; g.node_count()];
    for t in targets {
        dep[t.0] = Some(by);
    }
    loop {
        let mut changed = false;
        for (i, c) in g.contacts().iter().enumerate() {
            if i == skip.0 || c.label > by {
                continue;
            }
            for (a, b) in [(c.u, c.v), (c.v, c.u)] {
                if dep[b.0].is_some_and(|d| d >= c.label) && dep[a.0].is_none_or(|d| d < c.label) {
                    dep[a.0] = Some(c.label);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    dep.iter().map(Option::is_some).collect()
}

/// Nodes reachable from `sources` leaving at `from` or later (earliest arrival
/// per node, fixpoint relaxation).
fn reach_after(g: &TemporalGraph, sources: [NodeId; 2], from: Label, skip: EdgeId) -> Vec<bool> {
    let mut arr: Vec<Option<Label>> = vec![None; g.node_count()];
    for s in sources {
        arr[s.0] = Some(from);
    }
    loop {
        let mut changed = false;
        for (i, c) in g.contacts().iter().enumerate() {
            if i == skip.0 || c.label < from {
                continue;
            }
            for (a, b) in [(c.u, c.v), (c.v, c.u)] {
                if arr[a.0].is_some_and(|t| t <= c.label) && arr[b.0].is_none_or(|t| t > c.label) {
                    arr[b.0] = Some(c.label);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    arr.iter().map(Option::is_some).collect()
}

/// All pivot edges.
pub fn oracle_pivot_edges(g: &TemporalGraph) -> BTreeSet<EdgeId> {
    g.edges()
        .filter(|&e| {
            let c = g.contact(e);
            reach_before(g, [c.u, c.v], c.label, e).iter().all(|&r| r)
                && reach_after(g, [c.u, c.v], c.label, e).iter().all(|&r| r)
        })
        .collect()
}

/// Does repeatedly deleting a node of degree at most 2 in the footprint of
/// `edges` empty the graph?
pub fn footprint_2_degenerate(g: &TemporalGraph, edges: &EdgeSubset) -> bool {
    let n = g.node_count();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for e in edges.iter() {
        let c = g.contact(e);
        adj[c.u.0].insert(c.v.0);
        adj[c.v.0].insert(c.u.0);
    }
    let mut alive = vec![true; n];
    for _ in 0..n {
        let Some(v) = (0..n).find(|&v| alive[v] && adj[v].len() <= 2) else {
            return false;
        };
        alive[v] = false;
        for w in std::mem::take(&mut adj[v]) {
            adj[w].remove(&v);
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, verify_spanner};

    #[test]
    fn gosper_walks_fixed_popcount() {
        let mut x = 0b0111u64;
        let mut seen = vec![x];
        while x < 1 << 5 {
            x = gosper(x);
            if x < 1 << 5 {
                seen.push(x);
            }
        }
        assert_eq!(seen.len(), 10);
        assert!(seen.iter().all(|s| s.count_ones() == 3));
    }

    #[test]
    fn k2_minimum_spanner() {
        let g = parse_graph("a b 1").unwrap();
        let r = min_spanner_bruteforce(&g, SearchBudget::default())
            .unwrap()
            .unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(minimal_spanner_greedy(&g, 0).unwrap().len(), 1);
        assert_eq!(oracle_pivot_edges(&g).len(), 1);
    }

    #[test]
    fn k4_min_needs_only_the_cross_edges() {
        let g = fixture("k4_min").unwrap();
        let r = min_spanner_bruteforce(&g, SearchBudget::default())
            .unwrap()
            .unwrap();
        assert_eq!(r.size, 4);
        assert!(r.optimal);
        let cross =
            EdgeSubset::from_pairs(&g, [("1", "3"), ("2", "4"), ("2", "3"), ("1", "4")]).unwrap();
        assert_eq!(r.edges, cross);
    }

    #[test]
    fn bounded_search_reports_absence_and_exhaustion() {
        let g = fixture("fig2_k5").unwrap();
        assert_eq!(
            min_spanner_bruteforce(&g, SearchBudget::exact(4, Duration::from_secs(5))).unwrap(),
            None
        );
        let g = fixture("fig12_k8").unwrap();
        let err = min_spanner_bruteforce(&g, SearchBudget::exact(12, Duration::ZERO)).unwrap_err();
        assert!(matches!(err, OracleError::BudgetExhausted { size: 12, .. }));
    }

    #[test]
    fn greedy_outputs_are_minimal() {
        let g = fixture("fig2_k5").unwrap();
        for seed in 0..20 {
            let s = minimal_spanner_greedy(&g, seed).unwrap();
            assert!(verify_spanner(&g, &s).unwrap());
            assert!(is_minimal_spanner(&g, &s));
        }
        assert_eq!(
            minimal_spanner_greedy(&fixture("fig5_g3").unwrap(), 0).unwrap_err(),
            OracleError::NotTemporallyConnected
        );
    }

    #[test]
    fn dismountable_sets() {
        let g = fixture("fig2_k5").unwrap();
        let a = g.node("a").unwrap();
        assert_eq!(oracle_dismountable_nodes(&g, 1), BTreeMap::from([(a, 2)]));
        let g = fixture("k4_2hop").unwrap();
        let d = oracle_dismountable_nodes(&g, 2);
        assert_eq!(d.get(&g.node("4").unwrap()), Some(&3));
        assert_eq!(d.get(&g.node("2").unwrap()), Some(&3));
        assert!(oracle_dismountable_nodes(&fixture("fig12_k8").unwrap(), 6).is_empty());
    }

    #[test]
    fn pivot_sets() {
        assert!(oracle_pivot_edges(&fixture("fig12_k8").unwrap()).is_empty());
        let g = fixture("k4_fullrange").unwrap();
        assert!(oracle_pivot_edges(&g).contains(&g.edge_named("c", "d").unwrap()));
        assert!(oracle_pivot_edges(&fixture("fig1_gpp").unwrap()).is_empty());
    }

    #[test]
    fn degeneracy() {
        let tri = parse_graph("a b 1\nb c 2\na c 3").unwrap();
        assert!(footprint_2_degenerate(&tri, &EdgeSubset::full(&tri)));
        let k4 = fixture("k4_min").unwrap();
        assert!(!footprint_2_degenerate(&k4, &EdgeSubset::full(&k4)));
        let k5 = fixture("fig2_k5").unwrap();
        let s = EdgeSubset::from_pairs(
            &k5,
            [
                ("a", "c"),
                ("a", "e"),
                ("b", "e"),
                ("c", "e"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ],
        )
        .unwrap();
        assert!(footprint_2_degenerate(&k5, &s));
    }

    #[test]
    fn fixtures_validate() {
        for name in fixture_names() {
            fixture(name).unwrap();
        }
        let g = fixture("fig12_k8").unwrap();
        assert_eq!(g.edge_count(), 28);
        let mut labels: Vec<Label> = g.contacts().iter().map(|c| c.label).collect();
        labels.sort();
        assert_eq!(labels, (0..28).collect::<Vec<_>>());
        assert!(fixture("nope").is_err());
    }
}
