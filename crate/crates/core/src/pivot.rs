//! Pivot edges, pivot spanners and compressed labelings.
//!
//! An edge `e` is a pivot when every node reaches an endpoint of `e` by time
//! `λ(e)` and every node is reached from an endpoint of `e` leaving at time
//! `λ(e)` or later. A temporal in-tree into `e`, the edge itself and a temporal
//! out-tree from `e` then form a spanner with at most `2n - 3` edges.

use thiserror::Error;

use crate::certificate::{Phase, SpannerResult};
use crate::graph::{
    is_temporally_connected, verify_spanner, EdgeId, EdgeSubset, Label, NodeId, TemporalGraph,
    TemporalPath,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PivotError {
    #[error("graph is not temporally connected")]
    NotTemporallyConnected,
    #[error("no pivot edge")]
    NoPivot,
    #[error("invalid pivot certificate: {0}")]
    InvalidCertificate(String),
    #[error("graph is not full-range")]
    NotFullRange,
    #[error("need λ(e) < λ(f), got {0} and {1}")]
    LabelOrder(Label, Label),
}

/// A pivot edge with the parent pointers of its two trees.
///
/// `in_parent[v]` is the next hop `(node, edge)` of `v` toward `e`;
/// `out_parent[v]` the previous hop on the way from `e` to `v`. Both are
/// `None` exactly at the endpoints of `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotCertificate {
    pub edge: EdgeId,
    pub in_parent: Tree,
    pub out_parent: Tree,
}

impl PivotCertificate {
    /// In-tree, out-tree and the pivot edge.
    pub fn edges(&self, g: &TemporalGraph) -> EdgeSubset {
        let mut s = EdgeSubset::empty(g);
        s.insert(self.edge);
        for (_, e) in self.in_parent.iter().chain(&self.out_parent).flatten() {
            s.insert(*e);
        }
        s
    }
}

/// Parent pointer per node, `None` at the endpoints of the pivot.
pub type Tree = Vec<Option<(NodeId, EdgeId)>>;

/// Latest-departure tree into the endpoints of `e`, scanning edges by
/// decreasing label; `None` if some node cannot reach `e` in time.
fn in_tree(g: &TemporalGraph, e: EdgeId) -> Option<Tree> {
    let n = g.node_count();
    let pivot = g.contact(e);
    let mut dep: Vec<Option<Label>> = vec![None; n];
    let mut parent = vec![None; n];
    dep[pivot.u.0] = Some(pivot.label);
    dep[pivot.v.0] = Some(pivot.label);
    for &f in g.edges_by_label().iter().rev() {
        let c = g.contact(f);
        if f == e || c.label > pivot.label {
            continue;
        }
        for (a, b) in [(c.u, c.v), (c.v, c.u)] {
            if dep[b.0].is_some_and(|t| t >= c.label) && dep[a.0].is_none() {
                dep[a.0] = Some(c.label);
                parent[a.0] = Some((b, f));
            }
        }
    }
    dep.iter().all(Option::is_some).then_some(parent)
}

/// Earliest-arrival tree out of the endpoints of `e`, scanning edges by
/// increasing label.
fn out_tree(g: &TemporalGraph, e: EdgeId) -> Option<Tree> {
    let n = g.node_count();
    let pivot = g.contact(e);
    let mut arr: Vec<Option<Label>> = vec![None; n];
    let mut parent = vec![None; n];
    arr[pivot.u.0] = Some(pivot.label);
    arr[pivot.v.0] = Some(pivot.label);
    for &f in g.edges_by_label() {
        let c = g.contact(f);
        if f == e || c.label < pivot.label {
            continue;
        }
        for (a, b) in [(c.u, c.v), (c.v, c.u)] {
            if arr[a.0].is_some_and(|t| t <= c.label) && arr[b.0].is_none() {
                arr[b.0] = Some(c.label);
                parent[b.0] = Some((a, f));
            }
        }
    }
    arr.iter().all(Option::is_some).then_some(parent)
}

/// Trees for `e`, or `None` if `e` is not a pivot.
pub fn pivot_certificate(g: &TemporalGraph, e: EdgeId) -> Option<PivotCertificate> {
    let in_parent = in_tree(g, e)?;
    let out_parent = out_tree(g, e)?;
    Some(PivotCertificate {
        edge: e,
        in_parent,
        out_parent,
    })
}

pub fn is_pivot(g: &TemporalGraph, e: EdgeId) -> bool {
    pivot_certificate(g, e).is_some()
}

/// First pivot edge in label order.
pub fn find_pivot(g: &TemporalGraph) -> Result<Option<PivotCertificate>, PivotError> {
    if !is_temporally_connected(g) {
        return Err(PivotError::NotTemporallyConnected);
    }
    Ok(g.edges_by_label()
        .iter()
        .find_map(|&e| pivot_certificate(g, e)))
}

/// Follows parent pointers from every node and checks the trees are temporal.
fn check_certificate(g: &TemporalGraph, cert: &PivotCertificate) -> Result<(), String> {
    let n = g.node_count();
    if cert.edge.0 >= g.edge_count() || cert.in_parent.len() != n || cert.out_parent.len() != n {
        return Err("size mismatch".into());
    }
    let pivot = g.contact(cert.edge);
    let check_hop =
        |v: usize, hop: Option<(NodeId, EdgeId)>| -> Result<Option<(NodeId, Label)>, String> {
            let is_end = pivot.has(NodeId(v));
            match (hop, is_end) {
                (None, true) => Ok(None),
                (Some((x, f)), false) if x.0 < n && f.0 < g.edge_count() => {
                    let c = g.contact(f);
                    if c.has(NodeId(v)) && c.has(x) {
                        Ok(Some((x, c.label)))
                    } else {
                        Err(format!(
                            "{} is not an edge at {}",
                            g.describe(f),
                            g.name(NodeId(v))
                        ))
                    }
                }
                _ => Err(format!("bad parent at {}", g.name(NodeId(v)))),
            }
        };
    for v in 0..n {
        // in-tree: labels non-decreasing toward the pivot, ending by λ(e)
        let (mut at, mut last) = (v, None::<Label>);
        for _ in 0..n {
            match check_hop(at, cert.in_parent[at])? {
                None => break,
                Some((x, t)) => {
                    if last.is_some_and(|l| l > t) || t > pivot.label {
                        return Err(format!(
                            "in-tree from {} is not temporal",
                            g.name(NodeId(v))
                        ));
                    }
                    last = Some(t);
                    at = x.0;
                }
            }
        }
        if !pivot.has(NodeId(at)) {
            return Err(format!(
                "in-tree from {} does not reach the pivot",
                g.name(NodeId(v))
            ));
        }
        // out-tree: walking back from v, labels non-increasing, all >= λ(e)
        let (mut at, mut last) = (v, None::<Label>);
        for _ in 0..n {
            match check_hop(at, cert.out_parent[at])? {
                None => break,
                Some((x, t)) => {
                    if last.is_some_and(|l| l < t) || t < pivot.label {
                        return Err(format!("out-tree to {} is not temporal", g.name(NodeId(v))));
                    }
                    last = Some(t);
                    at = x.0;
                }
            }
        }
        if !pivot.has(NodeId(at)) {
            return Err(format!(
                "out-tree to {} does not start at the pivot",
                g.name(NodeId(v))
            ));
        }
    }
    Ok(())
}

/// Spanner made of the two trees and the pivot edge.
pub fn pivot_spanner(
    g: &TemporalGraph,
    cert: &PivotCertificate,
) -> Result<SpannerResult, PivotError> {
    check_certificate(g, cert).map_err(PivotError::InvalidCertificate)?;
    let edges = cert.edges(g);
    debug_assert!(verify_spanner(g, &edges).unwrap_or(false));
    Ok(SpannerResult {
        edges,
        steps: Vec::new(),
        phases: vec![Phase::Pivot(cert.clone())],
    })
}

/// A compressed copy of a graph; node and edge ids match the original.
#[derive(Debug, Clone)]
pub struct CompressedGraph {
    pub graph: TemporalGraph,
    /// Label of every edge in the original graph.
    pub original: Vec<Label>,
}

impl CompressedGraph {
    /// Largest compressed label, zero for an edgeless graph.
    pub fn lifetime(&self) -> Label {
        self.graph.max_label().unwrap_or(0)
    }
}

/// Smallest labels preserving the order of labels on adjacent edges: each
/// edge gets one more than the largest new label of an adjacent edge with a
/// smaller original label, or 1.
pub fn compress(g: &TemporalGraph) -> CompressedGraph {
    let mut new: Vec<Label> = vec![0; g.edge_count()];
    for &e in g.edges_by_label() {
        let c = g.contact(e);
        let mut best = 0;
        for x in [c.u, c.v] {
            for &(_, f) in g.incident(x) {
                if g.label(f) >= c.label {
                    break;
                }
                best = best.max(new[f.0]);
            }
        }
        new[e.0] = best + 1;
    }
    CompressedGraph {
        graph: g
            .relabeled(&new)
            .expect("compression keeps adjacent labels distinct"),
        original: g.edges().map(|e| g.label(e)).collect(),
    }
}

/// Does the compressed labeling use every label `1..=|E|`?
pub fn is_full_range(g: &TemporalGraph) -> bool {
    compress(g).lifetime() == g.edge_count() as Label
}

/// A temporal path from an endpoint of `e`, leaving no earlier than `λ(e)`,
/// that ends by traversing `f`. Requires a full-range graph and
/// `λ(e) < λ(f)`.
pub fn fullrange_reach(
    g: &TemporalGraph,
    e: EdgeId,
    f: EdgeId,
) -> Result<Option<TemporalPath>, PivotError> {
    if !is_full_range(g) {
        return Err(PivotError::NotFullRange);
    }
    let (ce, cf) = (g.contact(e), g.contact(f));
    if ce.label >= cf.label {
        return Err(PivotError::LabelOrder(ce.label, cf.label));
    }
    let n = g.node_count();
    let mut arr: Vec<Option<Label>> = vec![None; n];
    let mut parent: Vec<Option<(NodeId, EdgeId)>> = vec![None; n];
    arr[ce.u.0] = Some(ce.label);
    arr[ce.v.0] = Some(ce.label);
    for &h in g.edges_by_label() {
        let c = g.contact(h);
        if h == f || c.label < ce.label || c.label >= cf.label {
            continue;
        }
        for (a, b) in [(c.u, c.v), (c.v, c.u)] {
            if arr[a.0].is_some_and(|t| t <= c.label) && arr[b.0].is_none() {
                arr[b.0] = Some(c.label);
                parent[b.0] = Some((a, h));
            }
        }
    }
    let Some(start) = [cf.u, cf.v].into_iter().find(|x| arr[x.0].is_some()) else {
        return Ok(None);
    };
    let mut nodes = vec![cf.other(start), start];
    let mut edges = vec![f];
    let mut at = start;
    while let Some((x, h)) = parent[at.0] {
        nodes.push(x);
        edges.push(h);
        at = x;
    }
    nodes.reverse();
    edges.reverse();
    Ok(Some(TemporalPath { nodes, edges }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn k4_full_range() -> TemporalGraph {
        parse_graph("a b 1\nb c 2\na c 3\nc d 4\nb d 5\na d 6\n").unwrap()
    }

    fn g1() -> TemporalGraph {
        parse_graph("c d 1\nc e 2\na c 3\nb d 4\na b 5\nd e 17\n").unwrap()
    }

    fn g3() -> TemporalGraph {
        parse_graph("a b 1\na c 2\nc d 3\nc e 4\nd e 5\nb d 6\n").unwrap()
    }

    fn labels(g: &TemporalGraph) -> Vec<(String, String, Label)> {
        g.edges().map(|e| g.triple(e)).collect()
    }

    #[test]
    fn k4_pivot_and_spanner() {
        let g = k4_full_range();
        let cert = find_pivot(&g).unwrap().unwrap();
        assert_eq!(g.describe(cert.edge), "c-d:4");
        let r = pivot_spanner(&g, &cert).unwrap();
        let mut got: Vec<String> = r.edges.iter().map(|e| g.describe(e)).collect();
        got.sort();
        assert_eq!(got, ["a-c:3", "a-d:6", "b-c:2", "b-d:5", "c-d:4"]);
        assert!(verify_spanner(&g, &r.edges).unwrap());
    }

    #[test]
    fn four_cycle_has_no_pivot() {
        let g = parse_graph("a b 2\nb c 3\nc d 1\na d 4").unwrap();
        assert!(find_pivot(&g).unwrap().is_none());
        assert!(!is_pivot(&g, g.edge_named("b", "c").unwrap()));
    }

    #[test]
    fn pivot_needs_connectivity() {
        assert_eq!(
            find_pivot(&g3()).unwrap_err(),
            PivotError::NotTemporallyConnected
        );
    }

    #[test]
    fn k2_pivot() {
        let g = parse_graph("a b 7").unwrap();
        let cert = find_pivot(&g).unwrap().unwrap();
        assert_eq!(pivot_spanner(&g, &cert).unwrap().size(), 1);
    }

    #[test]
    fn forged_certificate_is_rejected() {
        let g = k4_full_range();
        let mut cert = find_pivot(&g).unwrap().unwrap();
        let a = g.node("a").unwrap();
        // a-d:6 is after the pivot label
        cert.in_parent[a.0] = Some((g.node("d").unwrap(), g.edge_named("a", "d").unwrap()));
        assert!(matches!(
            pivot_spanner(&g, &cert),
            Err(PivotError::InvalidCertificate(_))
        ));
    }

    #[test]
    fn compresses_g1_to_g2() {
        let c = compress(&g1());
        let want = parse_graph("c d 1\nc e 2\na c 3\nb d 2\na b 4\nd e 3\n").unwrap();
        assert_eq!(labels(&c.graph), labels(&want));
        assert_eq!(c.original, [1, 2, 3, 4, 5, 17]);
        assert_eq!(labels(&compress(&want).graph), labels(&want));
        assert!(!is_full_range(&want));
        assert!(is_full_range(&g3()));
    }

    #[test]
    fn single_edge_compresses_to_one() {
        let g = parse_graph("x y 9").unwrap();
        let c = compress(&g);
        assert_eq!(c.graph.label(EdgeId(0)), 1);
        assert!(is_full_range(&g));
    }

    #[test]
    fn reach_witnesses() {
        let g = g3();
        let p = fullrange_reach(
            &g,
            g.edge_named("a", "b").unwrap(),
            g.edge_named("c", "e").unwrap(),
        )
        .unwrap()
        .unwrap();
        let names: Vec<&str> = p.nodes.iter().map(|&v| g.name(v)).collect();
        assert_eq!(names, ["a", "c", "e"]);
        assert!(p.is_temporal(&g));

        let k = k4_full_range();
        let p = fullrange_reach(
            &k,
            k.edge_named("a", "b").unwrap(),
            k.edge_named("a", "d").unwrap(),
        )
        .unwrap()
        .unwrap();
        assert_eq!(p.edges.last(), Some(&k.edge_named("a", "d").unwrap()));
        // consecutive labels compose directly
        let p = fullrange_reach(
            &k,
            k.edge_named("a", "b").unwrap(),
            k.edge_named("b", "c").unwrap(),
        )
        .unwrap()
        .unwrap();
        assert_eq!(p.hops(), 1);
    }

    #[test]
    fn reach_preconditions() {
        let g = g3();
        let (e, f) = (
            g.edge_named("a", "b").unwrap(),
            g.edge_named("c", "e").unwrap(),
        );
        assert!(matches!(
            fullrange_reach(&g, f, e),
            Err(PivotError::LabelOrder(4, 1))
        ));
        assert_eq!(
            fullrange_reach(&g1(), e, f).unwrap_err(),
            PivotError::NotFullRange
        );
    }
}
