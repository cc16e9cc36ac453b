//! Non-strict temporal reachability.
//!
//! Contacts are scanned once in increasing label order. On a proper graph two
//! contacts with the same label never share a node, so one pass yields exact
//! earliest arrivals.

use super::{EdgeId, EdgeSubset, GraphError, Label, NodeId, NodeSet, TemporalGraph};

/// Reachability over ordered node pairs, with earliest arrival times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityMatrix {
    n: usize,
    reach: Vec<bool>,
    arrival: Vec<Option<Label>>,
}

impl ReachabilityMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn reachable(&self, from: NodeId, to: NodeId) -> bool {
        self.reach[from.0 * self.n + to.0]
    }

    /// Earliest arrival label at `to` when leaving `from`; `None` on the
    /// diagonal and for unreachable pairs.
    pub fn arrival(&self, from: NodeId, to: NodeId) -> Option<Label> {
        self.arrival[from.0 * self.n + to.0]
    }

    pub fn all_reachable(&self) -> bool {
        self.reach.iter().all(|&r| r)
    }

    /// Ordered pairs `(from, to)` that are not reachable.
    pub fn unreachable_pairs(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.reach[i * self.n + j] {
                    out.push((NodeId(i), NodeId(j)));
                }
            }
        }
        out
    }

    pub fn reachable_count(&self) -> usize {
        self.reach.iter().filter(|&&r| r).count()
    }
}

/// Earliest arrival at every node from `source`, using only edges accepted by
/// `permit`. The source itself is marked reached with no arrival label.
pub(crate) fn earliest_arrivals(
    g: &TemporalGraph,
    source: NodeId,
    permit: impl Fn(EdgeId) -> bool,
) -> (Vec<bool>, Vec<Option<Label>>) {
    let n = g.node_count();
    let mut reached = vec![false; n];
    let mut arrival = vec![None; n];
    reached[source.0] = true;
    for &e in g.edges_by_label() {
        if !permit(e) {
            continue;
        }
        let c = g.contact(e);
        match (reached[c.u.0], reached[c.v.0]) {
            (true, false) => {
                reached[c.v.0] = true;
                arrival[c.v.0] = Some(c.label);
            }
            (false, true) => {
                reached[c.u.0] = true;
                arrival[c.u.0] = Some(c.label);
            }
            _ => {}
        }
    }
    (reached, arrival)
}

/// Reachability restricted to the nodes in `restrict` and the edges in
/// `edges` (both optional). A node outside the restriction reaches only itself.
pub fn reachability(
    g: &TemporalGraph,
    restrict: Option<&NodeSet>,
    edges: Option<&EdgeSubset>,
) -> ReachabilityMatrix {
    let n = g.node_count();
    let node_ok = |v: NodeId| restrict.is_none_or(|s| s.contains(v));
    let permit = |e: EdgeId| {
        let c = g.contact(e);
        edges.is_none_or(|s| s.contains(e)) && node_ok(c.u) && node_ok(c.v)
    };
    let mut reach = vec![false; n * n];
    let mut arrival = vec![None; n * n];
    for s in g.nodes() {
        if !node_ok(s) {
            reach[s.0 * n + s.0] = true;
            continue;
        }
        let (r, a) = earliest_arrivals(g, s, permit);
        reach[s.0 * n..(s.0 + 1) * n].copy_from_slice(&r);
        arrival[s.0 * n..(s.0 + 1) * n].copy_from_slice(&a);
    }
    ReachabilityMatrix { n, reach, arrival }
}

/// Is every ordered pair of nodes joined by a temporal path?
pub fn is_temporally_connected(g: &TemporalGraph) -> bool {
    connected_with(g, |_| true)
}

pub(crate) fn connected_with(g: &TemporalGraph, permit: impl Fn(EdgeId) -> bool + Copy) -> bool {
    g.nodes()
        .all(|s| earliest_arrivals(g, s, permit).0.iter().all(|&r| r))
}

/// Is the subgraph on all nodes of `g` with only the edges of `s` temporally
/// connected?
pub fn verify_spanner(g: &TemporalGraph, s: &EdgeSubset) -> Result<bool, GraphError> {
    s.check_parent(g)?;
    Ok(connected_with(g, |e| s.contains(e)))
}

/// Is the footprint a complete graph?
pub fn is_clique(g: &TemporalGraph) -> bool {
    let n = g.node_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// Is the footprint complete bipartite over the two given parts, which must
/// partition the node set?
pub fn is_biclique(g: &TemporalGraph, left: &NodeSet, right: &NodeSet) -> bool {
    let n = g.node_count();
    if left.universe() != n || right.universe() != n || left.len() + right.len() != n {
        return false;
    }
    if left.iter().any(|v| right.contains(v)) {
        return false;
    }
    let crossing = g
        .contacts()
        .iter()
        .all(|c| left.contains(c.u) != left.contains(c.v));
    crossing && g.edge_count() == left.len() * right.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_double_prime() -> TemporalGraph {
        TemporalGraph::from_named([("a", "b", 2), ("b", "c", 3), ("c", "d", 1), ("a", "d", 4)])
            .unwrap()
    }

    fn g3() -> TemporalGraph {
        TemporalGraph::from_named([
            ("a", "b", 1),
            ("a", "c", 2),
            ("c", "d", 3),
            ("c", "e", 4),
            ("d", "e", 5),
            ("b", "d", 6),
        ])
        .unwrap()
    }

    #[test]
    fn four_cycle_spanner_is_connected() {
        let g = g_double_prime();
        let m = reachability(&g, None, None);
        assert!(m.all_reachable());
        assert!(is_temporally_connected(&g));
        assert!(!is_clique(&g));
        // c -> a: c-d at 1, d-a at 4
        assert_eq!(
            m.arrival(g.node("c").unwrap(), g.node("a").unwrap()),
            Some(4)
        );
    }

    #[test]
    fn single_node_matrix() {
        let g = TemporalGraph::new(vec!["x".into()], []).unwrap();
        let m = reachability(&g, None, None);
        assert_eq!(m.node_count(), 1);
        assert!(m.reachable(NodeId(0), NodeId(0)));
        assert!(is_temporally_connected(&g));
    }

    #[test]
    fn full_range_five_node_graph_is_not_connected() {
        let g = g3();
        let m = reachability(&g, None, None);
        let (d, a) = (g.node("d").unwrap(), g.node("a").unwrap());
        assert!(!m.reachable(d, a));
        assert!(m.reachable(a, d));
        assert!(!is_temporally_connected(&g));
    }

    #[test]
    fn restriction_hides_nodes_and_edges() {
        let g = g_double_prime();
        let scope = NodeSet::from_nodes(4, [NodeId(0), NodeId(1), NodeId(2)]);
        let m = reachability(&g, Some(&scope), None);
        // only a-b:2, b-c:3 survive
        assert!(m.reachable(NodeId(0), NodeId(2)));
        assert!(!m.reachable(NodeId(2), NodeId(0)));
        assert!(m.reachable(NodeId(3), NodeId(3)));
        assert!(!m.reachable(NodeId(3), NodeId(0)));
    }

    #[test]
    fn spanner_check_rejects_foreign_subset() {
        let g = g_double_prime();
        let other = g3();
        let s = EdgeSubset::full(&other);
        assert!(verify_spanner(&g, &s).is_err());
        assert!(verify_spanner(&g, &EdgeSubset::full(&g)).unwrap());
    }

    #[test]
    fn biclique_needs_all_cross_pairs() {
        let g =
            TemporalGraph::from_named([("a", "x", 1), ("a", "y", 2), ("b", "x", 3), ("b", "y", 4)])
                .unwrap();
        let left = NodeSet::from_nodes(4, [g.node("a").unwrap(), g.node("b").unwrap()]);
        let right = NodeSet::from_nodes(4, [g.node("x").unwrap(), g.node("y").unwrap()]);
        assert!(is_biclique(&g, &left, &right));
        assert!(!is_biclique(&g, &left, &left));
    }
}
