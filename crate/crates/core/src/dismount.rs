//! Extremal edges, k-hop dismountable nodes and recursive dismounting.
//!
//! A node `u` is k-hop dismountable inside a scope when
//!
//! - some temporal path `P-` of at most k hops leaves `u` and ends with the
//!   earliest in-scope edge `e-(v)` of its last node `v`, and
//! - some temporal path `P+` of at most k hops ends at `u` and starts with the
//!   latest in-scope edge `e+(w)` of its first node `w`.
//!
//! Everything `u` could send is then relayed by `v` (which nobody reaches
//! earlier than through `e-(v)`), and everything it could receive reaches `w`
//! before `e+(w)`, so a spanner of the scope without `u` plus the path edges is
//! a spanner of the scope.

use std::cmp::Reverse;

use thiserror::Error;

use crate::bipartite::{full_biclique_spanner, BipartiteError};
use crate::certificate::{Phase, SpannerResult};
use crate::graph::{
    is_clique, EdgeId, EdgeSubset, Label, NodeId, NodeSet, TemporalGraph, TemporalPath,
};
use crate::structure::{reduce_to_biclique, StructureError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DismountError {
    #[error("node {0} has no incident edge in scope")]
    Isolated(String),
    #[error("invalid dismount step: {0}")]
    InvalidStep(String),
    #[error("graph is not a temporal clique")]
    NotClique,
    #[error("hop bound must be at least {min}, got {got}")]
    HopBound { min: usize, got: usize },
    #[error("scope does not belong to this graph")]
    ScopeMismatch,
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
}

/// Earliest and latest incident edge of a node under some restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalInfo {
    pub node: NodeId,
    /// `e-`
    pub earliest: EdgeId,
    /// `e+`
    pub latest: EdgeId,
    /// `n-`
    pub earliest_neighbor: NodeId,
    /// `n+`
    pub latest_neighbor: NodeId,
}

/// Extremal edges of `node` among incident edges whose other endpoint is in
/// `scope` and which belong to `edges` (both default to everything).
pub fn extremal(
    g: &TemporalGraph,
    node: NodeId,
    scope: Option<&NodeSet>,
    edges: Option<&EdgeSubset>,
) -> Result<ExtremalInfo, DismountError> {
    let ok = |&&(x, e): &&(NodeId, EdgeId)| {
        scope.is_none_or(|s| s.contains(x)) && edges.is_none_or(|s| s.contains(e))
    };
    let incident = g.incident(node);
    let first = incident.iter().find(ok);
    let last = incident.iter().rev().find(ok);
    match (first, last) {
        (Some(&(n_minus, e_minus)), Some(&(n_plus, e_plus))) => Ok(ExtremalInfo {
            node,
            earliest: e_minus,
            latest: e_plus,
            earliest_neighbor: n_minus,
            latest_neighbor: n_plus,
        }),
        _ => Err(DismountError::Isolated(g.name(node).to_string())),
    }
}

fn scope_extremals(g: &TemporalGraph, scope: &NodeSet) -> Vec<Option<ExtremalInfo>> {
    g.nodes()
        .map(|v| {
            if scope.contains(v) {
                extremal(g, v, Some(scope), None).ok()
            } else {
                None
            }
        })
        .collect()
}

/// A removable node with its two witness paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DismountStep {
    pub removed: NodeId,
    pub k: usize,
    /// From `removed` to some `v`, ending with `e-(v)`.
    pub p_minus: TemporalPath,
    /// From some `w` to `removed`, starting with `e+(w)`.
    pub p_plus: TemporalPath,
}

impl DismountStep {
    pub fn cost(&self) -> usize {
        self.p_minus.hops() + self.p_plus.hops()
    }

    /// Distinct edges of both paths, sorted.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .p_minus
            .edges
            .iter()
            .chain(&self.p_plus.edges)
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A 1-hop witness: `n-(v) = u` and `n+(w) = u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneHop {
    pub u: NodeId,
    pub v: NodeId,
    pub w: NodeId,
}

/// First 1-hop dismountable node of the scope in node order.
///
/// Among the nodes `v` whose earliest neighbor is `u`, the one joined to `u`
/// by the latest edge is reported; among the `w` whose latest neighbor is `u`,
/// the one joined by the earliest edge. This matches [`find_k_hop`].
pub fn find_1hop(g: &TemporalGraph, scope: &NodeSet) -> Option<OneHop> {
    if scope.len() < 3 {
        return None;
    }
    let ext = scope_extremals(g, scope);
    for u in scope.iter() {
        let v = scope
            .iter()
            .filter_map(|v| ext[v.0].filter(|x| x.earliest_neighbor == u))
            .max_by_key(|x| (g.label(x.earliest), Reverse(x.node)));
        let w = scope
            .iter()
            .filter_map(|w| ext[w.0].filter(|x| x.latest_neighbor == u))
            .min_by_key(|x| (g.label(x.latest), x.node));
        if let (Some(v), Some(w)) = (v, w) {
            return Some(OneHop {
                u,
                v: v.node,
                w: w.node,
            });
        }
    }
    None
}

/// Fewest hops of a `P-` witness out of `u`, if any within `kmax`.
///
/// Layered earliest-arrival relaxation: after `h` rounds `arr[x]` is the
/// earliest arrival at `x` over temporal walks of at most `h` hops that do not
/// re-enter `u`. A walk ending with `e-(v)` can always be shortened to a simple
/// path ending with `e-(v)`, so walks suffice for the hop count.
fn emission_hops(
    g: &TemporalGraph,
    scope: &NodeSet,
    in_scope: &[EdgeId],
    ext: &[Option<ExtremalInfo>],
    u: NodeId,
    kmax: usize,
) -> Option<usize> {
    let mut arr: Vec<Option<Label>> = vec![None; g.node_count()];
    arr[u.0] = Some(0);
    for h in 1..=kmax {
        let hit = scope.iter().any(|v| {
            v != u && {
                let x = ext[v.0].expect("scope nodes have extremal edges");
                let t = g.label(x.earliest);
                arr[x.earliest_neighbor.0].is_some_and(|a| a <= t)
            }
        });
        if hit {
            return Some(h);
        }
        if h == kmax {
            break;
        }
        let prev = arr.clone();
        for &e in in_scope {
            let c = g.contact(e);
            for (a, b) in [(c.u, c.v), (c.v, c.u)] {
                if b == u {
                    continue;
                }
                if prev[a.0].is_some_and(|t| t <= c.label) && arr[b.0].is_none_or(|t| t > c.label) {
                    arr[b.0] = Some(c.label);
                }
            }
        }
    }
    None
}

/// Fewest hops of a `P+` witness into `u`; mirror image of [`emission_hops`]
/// with latest departures.
fn reception_hops(
    g: &TemporalGraph,
    scope: &NodeSet,
    in_scope: &[EdgeId],
    ext: &[Option<ExtremalInfo>],
    u: NodeId,
    kmax: usize,
) -> Option<usize> {
    let mut dep: Vec<Option<Label>> = vec![None; g.node_count()];
    dep[u.0] = Some(Label::MAX);
    for h in 1..=kmax {
        let hit = scope.iter().any(|w| {
            w != u && {
                let x = ext[w.0].expect("scope nodes have extremal edges");
                let t = g.label(x.latest);
                dep[x.latest_neighbor.0].is_some_and(|d| d >= t)
            }
        });
        if hit {
            return Some(h);
        }
        if h == kmax {
            break;
        }
        let prev = dep.clone();
        for &e in in_scope {
            let c = g.contact(e);
            for (a, b) in [(c.u, c.v), (c.v, c.u)] {
                if a == u {
                    continue;
                }
                if prev[b.0].is_some_and(|t| t >= c.label) && dep[a.0].is_none_or(|t| t < c.label) {
                    dep[a.0] = Some(c.label);
                }
            }
        }
    }
    None
}

/// Simple temporal paths of exactly `hops` hops from `u` ending with the
/// earliest edge of their last node; the one with the latest final edge wins,
/// ties by node sequence.
fn best_emission_path(
    g: &TemporalGraph,
    scope: &NodeSet,
    ext: &[Option<ExtremalInfo>],
    u: NodeId,
    hops: usize,
) -> Option<TemporalPath> {
    #[allow(clippy::too_many_arguments)]
    fn walk(
        g: &TemporalGraph,
        scope: &NodeSet,
        ext: &[Option<ExtremalInfo>],
        hops: usize,
        time: Label,
        nodes: &mut Vec<NodeId>,
        edges: &mut Vec<EdgeId>,
        best: &mut Option<(Reverse<Label>, TemporalPath)>,
    ) {
        let at = *nodes.last().unwrap();
        for &(y, e) in g.incident(at) {
            let t = g.label(e);
            if t < time || !scope.contains(y) || nodes.contains(&y) {
                continue;
            }
            nodes.push(y);
            edges.push(e);
            if edges.len() == hops {
                if ext[y.0].is_some_and(|x| x.earliest == e) {
                    let key = Reverse(t);
                    let better = best
                        .as_ref()
                        .is_none_or(|(k, p)| (key, &nodes[..]) < (*k, &p.nodes[..]));
                    if better {
                        *best = Some((
                            key,
                            TemporalPath {
                                nodes: nodes.clone(),
                                edges: edges.clone(),
                            },
                        ));
                    }
                }
            } else {
                walk(g, scope, ext, hops, t, nodes, edges, best);
            }
            nodes.pop();
            edges.pop();
        }
    }
    let mut best = None;
    walk(
        g,
        scope,
        ext,
        hops,
        0,
        &mut vec![u],
        &mut Vec::new(),
        &mut best,
    );
    best.map(|(_, p)| p)
}

/// Simple temporal paths of exactly `hops` hops into `u` starting with the
/// latest edge of their first node; the earliest first edge wins, ties by node
/// sequence.
fn best_reception_path(
    g: &TemporalGraph,
    scope: &NodeSet,
    ext: &[Option<ExtremalInfo>],
    u: NodeId,
    hops: usize,
) -> Option<TemporalPath> {
    // Walk from y onward to u using `left` more hops, never touching u early.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        g: &TemporalGraph,
        scope: &NodeSet,
        u: NodeId,
        left: usize,
        time: Label,
        nodes: &mut Vec<NodeId>,
        edges: &mut Vec<EdgeId>,
        found: &mut Vec<TemporalPath>,
    ) {
        let at = *nodes.last().unwrap();
        for &(y, e) in g.incident(at) {
            let t = g.label(e);
            if t < time || !scope.contains(y) || nodes.contains(&y) {
                continue;
            }
            if (left == 1) != (y == u) {
                continue;
            }
            nodes.push(y);
            edges.push(e);
            if left == 1 {
                found.push(TemporalPath {
                    nodes: nodes.clone(),
                    edges: edges.clone(),
                });
            } else {
                walk(g, scope, u, left - 1, t, nodes, edges, found);
            }
            nodes.pop();
            edges.pop();
        }
    }
    let mut found = Vec::new();
    for w in scope.iter() {
        if w == u {
            continue;
        }
        let x = ext[w.0].expect("scope nodes have extremal edges");
        let y = x.latest_neighbor;
        let t = g.label(x.latest);
        if (hops == 1) != (y == u) {
            continue;
        }
        let mut nodes = vec![w, y];
        let mut edges = vec![x.latest];
        if hops == 1 {
            found.push(TemporalPath { nodes, edges });
        } else {
            walk(g, scope, u, hops - 1, t, &mut nodes, &mut edges, &mut found);
        }
    }
    found
        .into_iter()
        .min_by(|p, q| (g.label(p.edges[0]), &p.nodes).cmp(&(g.label(q.edges[0]), &q.nodes)))
}

/// Minimum-cost dismount step with both witnesses of at most `kmax` hops.
///
/// Ties go to the smallest removed node. Among witnesses of the minimal
/// length, `P-` with the latest final edge and `P+` with the earliest first
/// edge are chosen, then the smallest node sequence.
pub fn find_k_hop(g: &TemporalGraph, scope: &NodeSet, kmax: usize) -> Option<DismountStep> {
    if scope.len() < 3 || kmax == 0 || scope.universe() != g.node_count() {
        return None;
    }
    let ext = scope_extremals(g, scope);
    let in_scope: Vec<EdgeId> = g
        .edges_by_label()
        .iter()
        .copied()
        .filter(|&e| {
            let c = g.contact(e);
            scope.contains(c.u) && scope.contains(c.v)
        })
        .collect();
    if scope.iter().any(|v| ext[v.0].is_none()) {
        // an isolated node cannot be dismounted and cannot relay either
        return None;
    }
    let mut best: Option<(usize, NodeId, usize, usize)> = None;
    for u in scope.iter() {
        let Some(m) = emission_hops(g, scope, &in_scope, &ext, u, kmax) else {
            continue;
        };
        if best.is_some_and(|(c, ..)| m + 1 >= c) {
            continue;
        }
        let Some(p) = reception_hops(g, scope, &in_scope, &ext, u, kmax) else {
            continue;
        };
        if best.is_none_or(|(c, ..)| m + p < c) {
            best = Some((m + p, u, m, p));
        }
    }
    let (_, u, m, p) = best?;
    let p_minus = best_emission_path(g, scope, &ext, u, m).expect("hop count has a simple witness");
    let p_plus = best_reception_path(g, scope, &ext, u, p).expect("hop count has a simple witness");
    Some(DismountStep {
        removed: u,
        k: m.max(p),
        p_minus,
        p_plus,
    })
}

/// Re-checks every witness condition of `step` against `scope`.
pub fn validate_step(
    g: &TemporalGraph,
    scope: &NodeSet,
    step: &DismountStep,
) -> Result<(), DismountError> {
    let bad = |msg: String| Err(DismountError::InvalidStep(msg));
    let u = step.removed;
    if scope.universe() != g.node_count() {
        return Err(DismountError::ScopeMismatch);
    }
    if !scope.contains(u) {
        return bad(format!("{} is not in scope", g.name(u)));
    }
    for (which, p) in [("P-", &step.p_minus), ("P+", &step.p_plus)] {
        if p.hops() == 0 || p.hops() > step.k {
            return bad(format!("{which} has {} hops, bound {}", p.hops(), step.k));
        }
        if !p.is_temporal(g) {
            return bad(format!("{which} is not a temporal path"));
        }
        if !p.is_simple() {
            return bad(format!("{which} repeats a node"));
        }
        if let Some(&v) = p.nodes.iter().find(|&&v| !scope.contains(v)) {
            return bad(format!("{which} leaves the scope at {}", g.name(v)));
        }
    }
    if step.p_minus.first() != u {
        return bad("P- does not start at the removed node".into());
    }
    let v = step.p_minus.last();
    if extremal(g, v, Some(scope), None)?.earliest != *step.p_minus.edges.last().unwrap() {
        return bad(format!(
            "P- does not end with the earliest edge of {}",
            g.name(v)
        ));
    }
    if step.p_plus.last() != u {
        return bad("P+ does not end at the removed node".into());
    }
    let w = step.p_plus.first();
    if extremal(g, w, Some(scope), None)?.latest != step.p_plus.edges[0] {
        return bad(format!(
            "P+ does not start with the latest edge of {}",
            g.name(w)
        ));
    }
    Ok(())
}

/// Validates `step`, then returns the scope without the removed node and the
/// distinct witness edges.
pub fn apply_dismount(
    g: &TemporalGraph,
    scope: &NodeSet,
    step: &DismountStep,
) -> Result<(NodeSet, Vec<EdgeId>), DismountError> {
    validate_step(g, scope, step)?;
    let mut next = scope.clone();
    next.remove(step.removed);
    Ok((next, step.edges()))
}

/// Dismounts with [`find_k_hop`] until two nodes remain and adds the edge
/// between them. `None` if some scope of three or more nodes has no
/// dismountable node.
pub fn recursively_dismount(g: &TemporalGraph, kmax: usize) -> Option<SpannerResult> {
    let mut scope = NodeSet::full(g.node_count());
    let mut edges = EdgeSubset::empty(g);
    let mut steps = Vec::new();
    while scope.len() > 2 {
        let step = find_k_hop(g, &scope, kmax)?;
        let (next, selected) = apply_dismount(g, &scope, &step).expect("found steps are valid");
        edges.extend(selected);
        steps.push(step);
        scope = next;
    }
    let mut phases = Vec::new();
    if scope.len() == 2 {
        let rest: Vec<NodeId> = scope.iter().collect();
        let e = g.edge_between(rest[0], rest[1])?;
        edges.insert(e);
        phases.push(Phase::FinalEdge { edge: e });
    }
    Some(SpannerResult {
        edges,
        steps,
        phases,
    })
}

/// Dismounts nodes of hop bound at most `kmax` while possible; a remaining
/// clique of three or more nodes is finished by the bi-clique construction.
pub fn algorithm1_spanner(g: &TemporalGraph, kmax: usize) -> Result<SpannerResult, DismountError> {
    if !is_clique(g) {
        return Err(DismountError::NotClique);
    }
    // Without 2-hop steps the remainder need not satisfy the bi-clique
    // preconditions.
    if kmax < 2 {
        return Err(DismountError::HopBound { min: 2, got: kmax });
    }
    let mut scope = NodeSet::full(g.node_count());
    let mut edges = EdgeSubset::empty(g);
    let mut steps = Vec::new();
    let mut phases = Vec::new();
    while scope.len() > 2 {
        let Some(step) = find_k_hop(g, &scope, kmax) else {
            break;
        };
        let (next, selected) = apply_dismount(g, &scope, &step)?;
        edges.extend(selected);
        steps.push(step);
        scope = next;
    }
    if scope.len() == 2 {
        let rest: Vec<NodeId> = scope.iter().collect();
        let e = g.edge_between(rest[0], rest[1]).expect("clique");
        edges.insert(e);
        phases.push(Phase::FinalEdge { edge: e });
    } else if scope.len() > 2 {
        let ind = g.induced(&scope);
        let reduction = reduce_to_biclique(&ind.graph)?;
        let inner = full_biclique_spanner(&ind.graph, &reduction)?;
        edges.extend(inner.edges.iter().map(|e| ind.parent_edge(e)));
        phases.extend(inner.phases.into_iter().map(|p| match p {
            Phase::Bipartite(b) => Phase::Bipartite(b.lift(&ind)),
            other => other,
        }));
    }
    Ok(SpannerResult {
        edges,
        steps,
        phases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn fig2() -> TemporalGraph {
        parse_graph("a b 0\na c 3\na d 2\na e 9\nb c 4\nb d 6\nb e 1\nc d 5\nc e 7\nd e 8\n")
            .unwrap()
    }

    fn k4(edges: &str) -> TemporalGraph {
        let triples: Vec<(String, String, Label)> = edges
            .split_whitespace()
            .map(|t| {
                let (pair, label) = t.split_once(':').unwrap();
                let b = pair.as_bytes();
                (
                    (b[0] as char).to_string(),
                    (b[1] as char).to_string(),
                    label.parse().unwrap(),
                )
            })
            .collect();
        TemporalGraph::from_named_with_order(&["1", "2", "3", "4"], triples).unwrap()
    }

    fn n(g: &TemporalGraph, s: &str) -> NodeId {
        g.node(s).unwrap()
    }

    #[test]
    fn extremal_edges_of_c() {
        let g = fig2();
        let c = n(&g, "c");
        let x = extremal(&g, c, None, None).unwrap();
        assert_eq!(g.describe(x.earliest), "a-c:3");
        assert_eq!(g.describe(x.latest), "c-e:7");
        assert_eq!(x.earliest_neighbor, n(&g, "a"));
        let scope = NodeSet::from_nodes(5, ["b", "c", "d", "e"].map(|s| n(&g, s)));
        let x = extremal(&g, c, Some(&scope), None).unwrap();
        assert_eq!(g.describe(x.earliest), "b-c:4");
        assert_eq!(g.describe(x.latest), "c-e:7");
    }

    #[test]
    fn extremal_of_k2_and_isolated() {
        let g = parse_graph("a b 5").unwrap();
        let x = extremal(&g, NodeId(0), None, None).unwrap();
        assert_eq!(x.earliest, x.latest);
        let scope = NodeSet::from_nodes(2, [NodeId(0)]);
        assert!(matches!(
            extremal(&g, NodeId(0), Some(&scope), None),
            Err(DismountError::Isolated(_))
        ));
    }

    #[test]
    fn one_hop_witness_on_k5() {
        let g = fig2();
        let w = find_1hop(&g, &NodeSet::full(5)).unwrap();
        assert_eq!((w.u, w.v, w.w), (n(&g, "a"), n(&g, "c"), n(&g, "e")));
    }

    #[test]
    fn one_hop_step_on_k5() {
        let g = fig2();
        let scope = NodeSet::full(5);
        let step = find_k_hop(&g, &scope, 1).unwrap();
        assert_eq!(step.removed, n(&g, "a"));
        assert_eq!(step.cost(), 2);
        assert_eq!(g.describe(step.p_minus.edges[0]), "a-c:3");
        assert_eq!(g.describe(step.p_plus.edges[0]), "a-e:9");
        let (next, edges) = apply_dismount(&g, &scope, &step).unwrap();
        assert_eq!(next.len(), 4);
        assert!(!next.contains(n(&g, "a")));
        let mut names: Vec<String> = edges.iter().map(|&e| g.describe(e)).collect();
        names.sort();
        assert_eq!(names, ["a-c:3", "a-e:9"]);
    }

    #[test]
    fn recursive_one_hop_reproduces_k5_spanner() {
        let g = fig2();
        let r = recursively_dismount(&g, 1).unwrap();
        let order: Vec<&str> = r.steps.iter().map(|s| g.name(s.removed)).collect();
        assert_eq!(order, ["a", "e", "b"]);
        let expected = EdgeSubset::from_pairs(
            &g,
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
        assert_eq!(r.edges, expected);
    }

    #[test]
    fn two_hop_fixture_prefers_smallest_node() {
        let g = k4("12:1 14:2 13:3 24:4 23:6 34:7");
        let scope = NodeSet::full(4);
        assert!(find_k_hop(&g, &scope, 1).is_none());
        let step = find_k_hop(&g, &scope, 2).unwrap();
        assert_eq!(step.cost(), 3);
        assert_eq!(step.removed, n(&g, "2"));
        validate_step(&g, &scope, &step).unwrap();
    }

    #[test]
    fn node_four_of_the_two_hop_fixture_is_removable() {
        let g = k4("12:1 14:2 13:3 24:4 23:6 34:7");
        let scope = NodeSet::full(4);
        let path = |s: &[&str]| {
            TemporalPath::from_nodes(&g, s.iter().map(|x| n(&g, x)).collect()).unwrap()
        };
        let step = DismountStep {
            removed: n(&g, "4"),
            k: 2,
            p_minus: path(&["4", "1", "3"]),
            p_plus: path(&["3", "4"]),
        };
        let (next, edges) = apply_dismount(&g, &scope, &step).unwrap();
        assert_eq!(next.len(), 3);
        let mut names: Vec<String> = edges.iter().map(|&e| g.describe(e)).collect();
        names.sort();
        assert_eq!(names, ["1-3:3", "1-4:2", "3-4:7"]);
    }

    #[test]
    fn rejects_forged_steps() {
        let g = fig2();
        let scope = NodeSet::full(5);
        let mut step = find_k_hop(&g, &scope, 1).unwrap();
        // a-d:2 is not the latest edge of d
        step.p_plus = TemporalPath::from_nodes(&g, vec![n(&g, "d"), n(&g, "a")]).unwrap();
        assert!(matches!(
            validate_step(&g, &scope, &step),
            Err(DismountError::InvalidStep(_))
        ));
        let mut step = find_k_hop(&g, &scope, 1).unwrap();
        step.k = 0;
        assert!(apply_dismount(&g, &scope, &step).is_err());
    }

    #[test]
    fn tiny_cliques() {
        let g = parse_graph("a b 5").unwrap();
        let r = recursively_dismount(&g, 1).unwrap();
        assert_eq!(r.size(), 1);
        let r = algorithm1_spanner(&g, 2).unwrap();
        assert_eq!(r.size(), 1);
        let k3 = parse_graph("a b 1\nb c 2\na c 3").unwrap();
        let scope = NodeSet::full(3);
        let step = find_k_hop(&k3, &scope, 1).unwrap();
        let (next, edges) = apply_dismount(&k3, &scope, &step).unwrap();
        assert_eq!((next.len(), edges.len()), (2, 2));
    }

    #[test]
    fn algorithm1_rejects_small_hop_bound_and_non_cliques() {
        let g = fig2();
        assert!(matches!(
            algorithm1_spanner(&g, 1),
            Err(DismountError::HopBound { .. })
        ));
        let path = parse_graph("a b 1\nb c 2").unwrap();
        assert_eq!(
            algorithm1_spanner(&path, 2).unwrap_err(),
            DismountError::NotClique
        );
    }

    #[test]
    fn algorithm1_matches_recursive_on_k5() {
        let g = fig2();
        let a = algorithm1_spanner(&g, 2).unwrap();
        let r = recursively_dismount(&g, 1).unwrap();
        assert_eq!(a.edges, r.edges);
    }
}
