//! Structure of cliques without 1- or 2-hop dismountable nodes.
//!
//! `V-` collects the nodes that are somebody's earliest neighbor, `V+` those
//! that are somebody's latest neighbor. In a clique with no {1,2}-hop
//! dismountable node the two sets partition the nodes, the earliest edges of
//! `V+` and the latest edges of `V-` form perfect matchings `M-` and `M+`
//! across the parts, and the cross edges alone are a temporal spanner.

use thiserror::Error;

use crate::dismount::{extremal, ExtremalInfo};
use crate::graph::{is_clique, EdgeId, NodeId, NodeSet, TemporalGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not a temporal clique on the given nodes")]
    NotClique,
    #[error("need at least two nodes, got {0}")]
    TooSmall(usize),
    #[error("V- and V+ do not partition the nodes")]
    PartitionFails,
    #[error("graph has a 1- or 2-hop dismountable node: {0}")]
    Dismountable(String),
}

/// One matched cross pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchedPair {
    pub minus: NodeId,
    pub plus: NodeId,
    pub edge: EdgeId,
}

/// A perfect matching between `V-` and `V+`, ordered by its `V-` node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<MatchedPair>,
}

impl Matching {
    pub fn pairs(&self) -> &[MatchedPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Matched edges in `V-` node order.
    pub fn edges(&self) -> Vec<EdgeId> {
        self.pairs.iter().map(|p| p.edge).collect()
    }

    /// The pair covering `v`, on either side.
    pub fn pair_of(&self, v: NodeId) -> Option<&MatchedPair> {
        self.pairs.iter().find(|p| p.minus == v || p.plus == v)
    }

    /// The matched edge at `v`.
    pub fn edge_at(&self, v: NodeId) -> Option<EdgeId> {
        self.pair_of(v).map(|p| p.edge)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInfo {
    pub v_minus: Vec<NodeId>,
    pub v_plus: Vec<NodeId>,
    pub v_zero: Vec<NodeId>,
    /// Edges earliest for at least one endpoint.
    pub e_minus: Vec<EdgeId>,
    /// Edges latest for at least one endpoint.
    pub e_plus: Vec<EdgeId>,
    /// `{e-(v) : v in V+}` when it is a perfect matching across the parts.
    pub m_minus: Option<Matching>,
    /// `{e+(u) : u in V-}` likewise.
    pub m_plus: Option<Matching>,
    /// Extremal edges of every scope node, indexed by node.
    pub extremal: Vec<Option<ExtremalInfo>>,
}

impl PartitionInfo {
    fn sets(&self, n: usize) -> (NodeSet, NodeSet) {
        (
            NodeSet::from_nodes(n, self.v_minus.iter().copied()),
            NodeSet::from_nodes(n, self.v_plus.iter().copied()),
        )
    }

    fn ext(&self, v: NodeId) -> ExtremalInfo {
        self.extremal[v.0].expect("scope node")
    }

    /// `V-` and `V+` have equal size and partition the nodes.
    pub fn is_partition(&self) -> bool {
        self.v_zero.is_empty()
            && self.v_minus.len() == self.v_plus.len()
            && !self.v_minus.iter().any(|v| self.v_plus.contains(v))
    }
}

/// `V-`, `V+`, `V0`, `E-`, `E+` and the matchings of the clique on `scope`
/// (all nodes when `None`). Node and edge ids refer to `g`.
pub fn partition(
    g: &TemporalGraph,
    scope: Option<&NodeSet>,
) -> Result<PartitionInfo, StructureError> {
    let scope = scope
        .cloned()
        .unwrap_or_else(|| NodeSet::full(g.node_count()));
    if scope.len() < 2 {
        return Err(StructureError::TooSmall(scope.len()));
    }
    let nodes: Vec<NodeId> = scope.iter().collect();
    for (i, &a) in nodes.iter().enumerate() {
        if nodes[i + 1..]
            .iter()
            .any(|&b| g.edge_between(a, b).is_none())
        {
            return Err(StructureError::NotClique);
        }
    }
    let n = g.node_count();
    let mut extremal_at = vec![None; n];
    for &v in &nodes {
        extremal_at[v.0] = Some(extremal(g, v, Some(&scope), None).expect("clique on scope"));
    }
    let ext = |v: NodeId| extremal_at[v.0].unwrap();
    let mut in_minus = vec![false; n];
    let mut in_plus = vec![false; n];
    let mut e_minus: Vec<EdgeId> = Vec::new();
    let mut e_plus: Vec<EdgeId> = Vec::new();
    for &v in &nodes {
        let x = ext(v);
        in_minus[x.earliest_neighbor.0] = true;
        in_plus[x.latest_neighbor.0] = true;
        e_minus.push(x.earliest);
        e_plus.push(x.latest);
    }
    e_minus.sort_unstable();
    e_minus.dedup();
    e_plus.sort_unstable();
    e_plus.dedup();
    let v_minus: Vec<NodeId> = nodes.iter().copied().filter(|v| in_minus[v.0]).collect();
    let v_plus: Vec<NodeId> = nodes.iter().copied().filter(|v| in_plus[v.0]).collect();
    let v_zero: Vec<NodeId> = nodes
        .iter()
        .copied()
        .filter(|v| !in_minus[v.0] && !in_plus[v.0])
        .collect();

    let disjoint = !v_minus.iter().any(|v| in_plus[v.0]);
    let balanced = v_minus.len() == v_plus.len();
    let matching = |from: &[NodeId],
                    to_side: &[bool],
                    pick: &dyn Fn(ExtremalInfo) -> (NodeId, EdgeId),
                    from_is_plus: bool| {
        if !disjoint || !balanced {
            return None;
        }
        let mut hit = vec![false; n];
        let mut pairs = Vec::with_capacity(from.len());
        for &v in from {
            let (x, e) = pick(ext(v));
            if !to_side[x.0] || hit[x.0] {
                return None;
            }
            hit[x.0] = true;
            let (minus, plus) = if from_is_plus { (x, v) } else { (v, x) };
            pairs.push(MatchedPair {
                minus,
                plus,
                edge: e,
            });
        }
        pairs.sort_by_key(|p| p.minus);
        Some(Matching { pairs })
    };
    let m_minus = matching(
        &v_plus,
        &in_minus,
        &|x| (x.earliest_neighbor, x.earliest),
        true,
    );
    let m_plus = matching(
        &v_minus,
        &in_plus,
        &|x| (x.latest_neighbor, x.latest),
        false,
    );
    Ok(PartitionInfo {
        v_minus,
        v_plus,
        v_zero,
        e_minus,
        e_plus,
        m_minus,
        m_plus,
        extremal: extremal_at,
    })
}

/// Why a structure condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Node in both `V-` and `V+`.
    SharedNode(NodeId),
    /// Node in neither part.
    ZeroNode(NodeId),
    Unbalanced {
        minus: usize,
        plus: usize,
    },
    /// Cross edge not later than an adjacent `E-` edge.
    CrossBeforeEarliest {
        cross: EdgeId,
        earliest: EdgeId,
    },
    /// Cross edge not earlier than an adjacent `E+` edge.
    CrossAfterLatest {
        cross: EdgeId,
        latest: EdgeId,
    },
    /// `M-` (`minus == true`) or `M+` is not a perfect matching.
    MatchingUndefined {
        minus: bool,
    },
    /// Intra-part edge strictly between the two incident matching edges.
    InsideMatchingGap {
        edge: EdgeId,
        first: EdgeId,
        second: EdgeId,
    },
    /// A matched edge that is not the earliest (`M-`) or latest (`M+`)
    /// cross edge at the reciprocal endpoint.
    NotReciprocal {
        matched: EdgeId,
        better: EdgeId,
    },
}

impl Witness {
    pub fn describe(&self, g: &TemporalGraph) -> String {
        match *self {
            Witness::SharedNode(v) => format!("{} is in both V- and V+", g.name(v)),
            Witness::ZeroNode(v) => format!("{} is in neither V- nor V+", g.name(v)),
            Witness::Unbalanced { minus, plus } => format!("|V-| = {minus} but |V+| = {plus}"),
            Witness::CrossBeforeEarliest { cross, earliest } => format!(
                "cross edge {} is not later than adjacent earliest edge {}",
                g.describe(cross),
                g.describe(earliest)
            ),
            Witness::CrossAfterLatest { cross, latest } => format!(
                "cross edge {} is not earlier than adjacent latest edge {}",
                g.describe(cross),
                g.describe(latest)
            ),
            Witness::MatchingUndefined { minus } => {
                format!(
                    "M{} is not a perfect matching",
                    if minus { "-" } else { "+" }
                )
            }
            Witness::InsideMatchingGap {
                edge,
                first,
                second,
            } => format!(
                "{} lies between matching edges {} and {}",
                g.describe(edge),
                g.describe(first),
                g.describe(second)
            ),
            Witness::NotReciprocal { matched, better } => format!(
                "matched edge {} is beaten by cross edge {}",
                g.describe(matched),
                g.describe(better)
            ),
        }
    }
}

/// Outcome of the structure predicates. Conditions that were not evaluated
/// are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub partition_ok: bool,
    pub cross_edge_order_ok: bool,
    pub matching_label_gap_ok: Option<bool>,
    pub reciprocity_ok: Option<bool>,
    pub witnesses: Vec<Witness>,
}

impl StructureReport {
    /// Both conditions characterizing "no 1- or 2-hop dismountable node".
    pub fn non_12(&self) -> bool {
        self.partition_ok && self.cross_edge_order_ok
    }

    /// The three conditions characterizing "no dismountable node at all".
    pub fn non_123(&self) -> bool {
        self.non_12() && self.matching_label_gap_ok == Some(true)
    }
}

fn partition_witnesses(p: &PartitionInfo) -> Vec<Witness> {
    let mut out: Vec<Witness> = p
        .v_minus
        .iter()
        .filter(|v| p.v_plus.contains(v))
        .map(|&v| Witness::SharedNode(v))
        .collect();
    out.extend(p.v_zero.iter().map(|&v| Witness::ZeroNode(v)));
    if p.v_minus.len() != p.v_plus.len() {
        out.push(Witness::Unbalanced {
            minus: p.v_minus.len(),
            plus: p.v_plus.len(),
        });
    }
    out
}

/// Cross edges are over pairs `(a, b)` with `a in V-`, `b in V+`, `a != b`.
fn cross_order_witnesses(g: &TemporalGraph, p: &PartitionInfo) -> Vec<Witness> {
    let mut is_e_minus = vec![false; g.edge_count()];
    let mut is_e_plus = vec![false; g.edge_count()];
    for &e in &p.e_minus {
        is_e_minus[e.0] = true;
    }
    for &e in &p.e_plus {
        is_e_plus[e.0] = true;
    }
    let scope: Vec<NodeId> = p.extremal.iter().flatten().map(|x| x.node).collect();
    let in_scope = NodeSet::from_nodes(g.node_count(), scope.iter().copied());
    let mut out = Vec::new();
    for &a in &p.v_minus {
        for &b in &p.v_plus {
            if a == b {
                continue;
            }
            let cross = g.edge_between(a, b).expect("clique");
            let t = g.label(cross);
            for x in [a, b] {
                for &(y, f) in g.incident(x) {
                    if f == cross || !in_scope.contains(y) {
                        continue;
                    }
                    if is_e_minus[f.0] && g.label(f) > t {
                        out.push(Witness::CrossBeforeEarliest { cross, earliest: f });
                    }
                    if is_e_plus[f.0] && g.label(f) < t {
                        out.push(Witness::CrossAfterLatest { cross, latest: f });
                    }
                }
            }
        }
    }
    out
}

fn gap_witnesses(g: &TemporalGraph, p: &PartitionInfo) -> Vec<Witness> {
    let mut out = Vec::new();
    for (part, m, minus) in [
        (&p.v_minus, &p.m_minus, true),
        (&p.v_plus, &p.m_plus, false),
    ] {
        let Some(m) = m else {
            out.push(Witness::MatchingUndefined { minus });
            continue;
        };
        for (i, &a) in part.iter().enumerate() {
            for &b in &part[i + 1..] {
                let e = g.edge_between(a, b).expect("clique");
                let (fa, fb) = (m.edge_at(a).unwrap(), m.edge_at(b).unwrap());
                let (lo, hi) = {
                    let (x, y) = (g.label(fa), g.label(fb));
                    (x.min(y), x.max(y))
                };
                if lo < g.label(e) && g.label(e) < hi {
                    out.push(Witness::InsideMatchingGap {
                        edge: e,
                        first: fa,
                        second: fb,
                    });
                }
            }
        }
    }
    out
}

fn clique_partition(g: &TemporalGraph) -> Result<PartitionInfo, StructureError> {
    if !is_clique(g) {
        return Err(StructureError::NotClique);
    }
    partition(g, None)
}

/// Evaluates the two conditions equivalent to "no 1- or 2-hop dismountable
/// node": the parts partition the nodes with equal sizes, and every cross edge
/// is later than all adjacent `E-` edges and earlier than all adjacent `E+`
/// edges.
pub fn check_non_12(g: &TemporalGraph) -> Result<StructureReport, StructureError> {
    let p = clique_partition(g)?;
    Ok(non_12_report(g, &p))
}

fn non_12_report(g: &TemporalGraph, p: &PartitionInfo) -> StructureReport {
    let mut witnesses = partition_witnesses(p);
    let partition_ok = witnesses.is_empty();
    let cross = cross_order_witnesses(g, p);
    let cross_edge_order_ok = cross.is_empty();
    witnesses.extend(cross);
    StructureReport {
        partition_ok,
        cross_edge_order_ok,
        matching_label_gap_ok: None,
        reciprocity_ok: None,
        witnesses,
    }
}

/// [`check_non_12`] plus the matching gap condition: no intra-part edge has a
/// label strictly between the labels of the matching edges at its endpoints
/// (`M-` inside `V-`, `M+` inside `V+`).
pub fn check_non_123(g: &TemporalGraph) -> Result<StructureReport, StructureError> {
    let p = clique_partition(g)?;
    let mut report = non_12_report(g, &p);
    let gap = gap_witnesses(g, &p);
    report.matching_label_gap_ok = Some(gap.is_empty());
    report.witnesses.extend(gap);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub ok: bool,
    pub witnesses: Vec<Witness>,
}

/// For every `M-` edge `uv` (`u in V-`), `v` must be the earliest neighbor of
/// `u` inside `V+`; for every `M+` edge `uv`, `u` the latest neighbor of `v`
/// inside `V-`. Requires the partition condition.
pub fn check_reciprocity(g: &TemporalGraph) -> Result<ReciprocityReport, StructureError> {
    let p = clique_partition(g)?;
    reciprocity(g, &p)
}

fn reciprocity(g: &TemporalGraph, p: &PartitionInfo) -> Result<ReciprocityReport, StructureError> {
    if !p.is_partition() {
        return Err(StructureError::PartitionFails);
    }
    let mut witnesses = Vec::new();
    for &v in &p.v_plus {
        let x = p.ext(v);
        let (u, matched) = (x.earliest_neighbor, x.earliest);
        for &w in &p.v_plus {
            if let Some(f) = g.edge_between(u, w) {
                if g.label(f) < g.label(matched) {
                    witnesses.push(Witness::NotReciprocal { matched, better: f });
                }
            }
        }
    }
    for &u in &p.v_minus {
        let x = p.ext(u);
        let (v, matched) = (x.latest_neighbor, x.latest);
        for &w in &p.v_minus {
            if let Some(f) = g.edge_between(v, w) {
                if g.label(f) > g.label(matched) {
                    witnesses.push(Witness::NotReciprocal { matched, better: f });
                }
            }
        }
    }
    Ok(ReciprocityReport {
        ok: witnesses.is_empty(),
        witnesses,
    })
}

/// All four structure flags at once. Reciprocity is only evaluated when the
/// partition condition holds.
pub fn structure_report(g: &TemporalGraph) -> Result<StructureReport, StructureError> {
    let p = clique_partition(g)?;
    let mut report = non_12_report(g, &p);
    let gap = gap_witnesses(g, &p);
    report.matching_label_gap_ok = Some(gap.is_empty());
    report.witnesses.extend(gap);
    if let Ok(r) = reciprocity(g, &p) {
        report.reciprocity_ok = Some(r.ok);
        report.witnesses.extend(r.witnesses);
    }
    Ok(report)
}

/// The cross edges of a clique with no 1- or 2-hop dismountable node, on the
/// parent's node ids.
#[derive(Debug, Clone)]
pub struct BicliqueReduction {
    /// All nodes of the clique, cross edges only.
    pub graph: TemporalGraph,
    /// Parent clique edge of every edge of `graph`.
    pub parent_edges: Vec<EdgeId>,
    pub v_plus: Vec<NodeId>,
    pub v_minus: Vec<NodeId>,
    /// In parent edge ids.
    pub m_minus: Matching,
    pub m_plus: Matching,
}

impl BicliqueReduction {
    /// Edge of `graph` for a parent clique edge.
    pub fn local_edge(&self, parent: EdgeId) -> Option<EdgeId> {
        self.parent_edges
            .iter()
            .position(|&e| e == parent)
            .map(EdgeId)
    }
}

/// Restricts the clique to its `V-`/`V+` cross edges.
pub fn reduce_to_biclique(g: &TemporalGraph) -> Result<BicliqueReduction, StructureError> {
    let p = clique_partition(g)?;
    let report = non_12_report(g, &p);
    if !report.non_12() {
        let why = report
            .witnesses
            .first()
            .map(|w| w.describe(g))
            .unwrap_or_default();
        return Err(StructureError::Dismountable(why));
    }
    let (minus, _) = p.sets(g.node_count());
    let subset = crate::graph::EdgeSubset::from_edges(
        g,
        g.edges().filter(|&e| {
            let c = g.contact(e);
            minus.contains(c.u) != minus.contains(c.v)
        }),
    )
    .expect("own edges");
    let (graph, parent_edges) = g.with_edges(&subset);
    Ok(BicliqueReduction {
        graph,
        parent_edges,
        v_plus: p.v_plus,
        v_minus: p.v_minus,
        m_minus: p.m_minus.expect("perfect under the two conditions"),
        m_plus: p.m_plus.expect("perfect under the two conditions"),
    })
}
