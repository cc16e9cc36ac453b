//! Source-to-target spanners of complete bipartite instances.
//!
//! While the target part is larger than the source part, two targets share
//! their latest source neighbor `s` (pigeonhole). The one joined to `s` later
//! can receive everything through `s` after the other one does, so it is
//! dropped from the instance and both edges to `s` are kept. Once the parts are
//! balanced the source part is halved and both halves recurse on the same
//! targets, which gives `O(n log n)` edges.

use thiserror::Error;

use crate::certificate::{Phase, SpannerResult};
use crate::graph::{EdgeId, EdgeSubset, Induced, Label, NodeId, TemporalGraph};
use crate::structure::BicliqueReduction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BipartiteError {
    #[error("source and target parts overlap at {0}")]
    Overlap(String),
    #[error("empty {0} part")]
    EmptyPart(&'static str),
    #[error("no edge between {0} and {1}")]
    MissingEdge(String, String),
    #[error("one-sided dismount needs |T| > |S| >= 1 (|S| = {sources}, |T| = {targets})")]
    Unbalanced { sources: usize, targets: usize },
    #[error("reduction does not belong to this clique")]
    ForeignReduction,
}

/// Source part `S`, target part `T` over a host graph; only `S x T` edges
/// matter.
#[derive(Debug, Clone)]
pub struct BipartiteInstance<'g> {
    graph: &'g TemporalGraph,
    source: Vec<NodeId>,
    target: Vec<NodeId>,
}

impl<'g> BipartiteInstance<'g> {
    /// Both parts are kept in node order.
    pub fn new(
        graph: &'g TemporalGraph,
        source: impl IntoIterator<Item = NodeId>,
        target: impl IntoIterator<Item = NodeId>,
    ) -> Result<Self, BipartiteError> {
        let mut source: Vec<NodeId> = source.into_iter().collect();
        let mut target: Vec<NodeId> = target.into_iter().collect();
        source.sort_unstable();
        source.dedup();
        target.sort_unstable();
        target.dedup();
        if source.is_empty() {
            return Err(BipartiteError::EmptyPart("source"));
        }
        if target.is_empty() {
            return Err(BipartiteError::EmptyPart("target"));
        }
        for &s in &source {
            if target.binary_search(&s).is_ok() {
                return Err(BipartiteError::Overlap(graph.name(s).to_string()));
            }
            for &t in &target {
                if graph.edge_between(s, t).is_none() {
                    return Err(BipartiteError::MissingEdge(
                        graph.name(s).to_string(),
                        graph.name(t).to_string(),
                    ));
                }
            }
        }
        Ok(BipartiteInstance {
            graph,
            source,
            target,
        })
    }

    pub fn graph(&self) -> &'g TemporalGraph {
        self.graph
    }

    pub fn source(&self) -> &[NodeId] {
        &self.source
    }

    pub fn target(&self) -> &[NodeId] {
        &self.target
    }

    fn edge(&self, s: NodeId, t: NodeId) -> EdgeId {
        self.graph
            .edge_between(s, t)
            .expect("checked at construction")
    }

    fn label(&self, s: NodeId, t: NodeId) -> Label {
        self.graph.label(self.edge(s, t))
    }

    fn with_parts(&self, source: Vec<NodeId>, target: Vec<NodeId>) -> Self {
        BipartiteInstance {
            graph: self.graph,
            source,
            target,
        }
    }

    /// Latest source neighbor of `t`.
    pub fn latest_source(&self, t: NodeId) -> NodeId {
        *self
            .source
            .iter()
            .max_by_key(|&&s| self.label(s, t))
            .expect("non-empty source")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteEvent {
    /// `removed` delegates its receptions to `kept` through `shared`.
    Dismount {
        shared: NodeId,
        kept: NodeId,
        removed: NodeId,
        kept_edge: EdgeId,
        removed_edge: EdgeId,
    },
    /// The source part is split in two halves that recurse separately.
    Split {
        source: Vec<NodeId>,
        first: Vec<NodeId>,
        second: Vec<NodeId>,
    },
    /// A single source is joined to a remaining target.
    Attach {
        source: NodeId,
        target: NodeId,
        edge: EdgeId,
    },
}

impl BipartiteEvent {
    /// Edges this event selects.
    pub fn edges(&self) -> Vec<EdgeId> {
        match self {
            BipartiteEvent::Dismount {
                kept_edge,
                removed_edge,
                ..
            } => vec![*kept_edge, *removed_edge],
            BipartiteEvent::Split { .. } => Vec::new(),
            BipartiteEvent::Attach { edge, .. } => vec![*edge],
        }
    }
}

/// Events in the order the recursion produced them (first half before second).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BipartitePhaseLog {
    pub events: Vec<BipartiteEvent>,
}

impl BipartitePhaseLog {
    /// Edges selected by replaying the events.
    pub fn replay(&self, g: &TemporalGraph) -> EdgeSubset {
        let mut s = EdgeSubset::empty(g);
        for ev in &self.events {
            s.extend(ev.edges());
        }
        s
    }
}

/// Bipartite part of a clique spanner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitePhase {
    pub v_plus: Vec<NodeId>,
    pub v_minus: Vec<NodeId>,
    pub m_minus: Vec<EdgeId>,
    pub m_plus: Vec<EdgeId>,
    pub log: BipartitePhaseLog,
}

impl BipartitePhase {
    /// Same phase with ids of the parent of an induced subgraph.
    pub fn lift(&self, ind: &Induced) -> Self {
        let nodes = |v: &[NodeId]| v.iter().map(|&x| ind.parent_node(x)).collect::<Vec<_>>();
        let edges = |v: &[EdgeId]| v.iter().map(|&x| ind.parent_edge(x)).collect::<Vec<_>>();
        let events = self
            .log
            .events
            .iter()
            .map(|ev| match ev {
                BipartiteEvent::Dismount {
                    shared,
                    kept,
                    removed,
                    kept_edge,
                    removed_edge,
                } => BipartiteEvent::Dismount {
                    shared: ind.parent_node(*shared),
                    kept: ind.parent_node(*kept),
                    removed: ind.parent_node(*removed),
                    kept_edge: ind.parent_edge(*kept_edge),
                    removed_edge: ind.parent_edge(*removed_edge),
                },
                BipartiteEvent::Split {
                    source,
                    first,
                    second,
                } => BipartiteEvent::Split {
                    source: nodes(source),
                    first: nodes(first),
                    second: nodes(second),
                },
                BipartiteEvent::Attach {
                    source,
                    target,
                    edge,
                } => BipartiteEvent::Attach {
                    source: ind.parent_node(*source),
                    target: ind.parent_node(*target),
                    edge: ind.parent_edge(*edge),
                },
            })
            .collect();
        BipartitePhase {
            v_plus: nodes(&self.v_plus),
            v_minus: nodes(&self.v_minus),
            m_minus: edges(&self.m_minus),
            m_plus: edges(&self.m_plus),
            log: BipartitePhaseLog { events },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSidedStep {
    /// Target part after the removal.
    pub target: Vec<NodeId>,
    pub edges: [EdgeId; 2],
    pub event: BipartiteEvent,
}

/// Removes one target whose latest source neighbor is shared with another.
///
/// The smallest source `s` shared by two targets is used with the two
/// smallest targets `t1, t2` having `s` as latest source neighbor; the one
/// joined to `s` later is removed.
pub fn one_sided_dismount(inst: &BipartiteInstance) -> Result<OneSidedStep, BipartiteError> {
    let (ns, nt) = (inst.source.len(), inst.target.len());
    if ns == 0 || nt <= ns {
        return Err(BipartiteError::Unbalanced {
            sources: ns,
            targets: nt,
        });
    }
    let owner: Vec<NodeId> = inst.target.iter().map(|&t| inst.latest_source(t)).collect();
    for &s in &inst.source {
        let mut it = inst
            .target
            .iter()
            .zip(&owner)
            .filter(|(_, &o)| o == s)
            .map(|(&t, _)| t);
        let (Some(a), Some(b)) = (it.next(), it.next()) else {
            continue;
        };
        let (kept, removed) = if inst.label(s, a) < inst.label(s, b) {
            (a, b)
        } else {
            (b, a)
        };
        let (kept_edge, removed_edge) = (inst.edge(s, kept), inst.edge(s, removed));
        let target = inst
            .target
            .iter()
            .copied()
            .filter(|&t| t != removed)
            .collect();
        return Ok(OneSidedStep {
            target,
            edges: [kept_edge, removed_edge],
            event: BipartiteEvent::Dismount {
                shared: s,
                kept,
                removed,
                kept_edge,
                removed_edge,
            },
        });
    }
    unreachable!("more targets than sources forces a shared latest neighbor")
}

/// Edges granting every source a temporal path to every target, with the
/// recursion log.
pub fn bipartite_spanner(inst: &BipartiteInstance) -> (EdgeSubset, BipartitePhaseLog) {
    let mut log = BipartitePhaseLog::default();
    recurse(inst.clone(), &mut log);
    (log.replay(inst.graph), log)
}

fn recurse(mut inst: BipartiteInstance, log: &mut BipartitePhaseLog) {
    while inst.target.len() > inst.source.len() {
        let step = one_sided_dismount(&inst).expect("unbalanced");
        log.events.push(step.event);
        inst.target = step.target;
    }
    if inst.source.len() == 1 {
        let s = inst.source[0];
        for &t in &inst.target {
            log.events.push(BipartiteEvent::Attach {
                source: s,
                target: t,
                edge: inst.edge(s, t),
            });
        }
        return;
    }
    let half = inst.source.len().div_ceil(2);
    let first = inst.source[..half].to_vec();
    let second = inst.source[half..].to_vec();
    log.events.push(BipartiteEvent::Split {
        source: inst.source.clone(),
        first: first.clone(),
        second: second.clone(),
    });
    let target = inst.target.clone();
    recurse(inst.with_parts(first, target.clone()), log);
    recurse(inst.with_parts(second, target), log);
}

/// `F(1) = 1`, `F(s) = 2s + F(ceil(s/2)) + F(floor(s/2))`: the most edges the
/// recursion selects on an `s x s` instance (each dismount adds two edges and
/// a half of size `h` facing `s` targets dismounts `s - h` of them).
pub fn balanced_size_bound(s: usize) -> usize {
    match s {
        0 => 0,
        1 => 1,
        _ => {
            let h = s.div_ceil(2);
            2 * (s - h) + 2 * h + balanced_size_bound(h) + balanced_size_bound(s - h)
        }
    }
}

/// `2 m ceil(log2 m) + 3 m`, a closed form dominating [`balanced_size_bound`].
pub fn balanced_size_closed_form(m: usize) -> usize {
    if m == 0 {
        return 0;
    }
    let log = usize::BITS - (m - 1).leading_zeros();
    2 * m * log as usize + 3 * m
}

/// Bipartite phase from `V+` to `V-` plus both matchings.
pub fn full_biclique_spanner(
    g: &TemporalGraph,
    reduction: &BicliqueReduction,
) -> Result<SpannerResult, BipartiteError> {
    if reduction.graph.node_count() != g.node_count()
        || reduction.parent_edges.iter().any(|e| e.0 >= g.edge_count())
    {
        return Err(BipartiteError::ForeignReduction);
    }
    let inst = BipartiteInstance::new(
        g,
        reduction.v_plus.iter().copied(),
        reduction.v_minus.iter().copied(),
    )?;
    let (mut edges, log) = bipartite_spanner(&inst);
    let m_minus = reduction.m_minus.edges();
    let m_plus = reduction.m_plus.edges();
    edges.extend(m_minus.iter().copied());
    edges.extend(m_plus.iter().copied());
    Ok(SpannerResult {
        edges,
        steps: Vec::new(),
        phases: vec![Phase::Bipartite(BipartitePhase {
            v_plus: reduction.v_plus.clone(),
            v_minus: reduction.v_minus.clone(),
            m_minus,
            m_plus,
            log,
        })],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn two_by_three() -> TemporalGraph {
        parse_graph("s1 t1 1\ns1 t2 2\ns1 t3 3\ns2 t1 4\ns2 t2 5\ns2 t3 6\n").unwrap()
    }

    fn ids(g: &TemporalGraph, names: &[&str]) -> Vec<NodeId> {
        names.iter().map(|s| g.node(s).unwrap()).collect()
    }

    fn described(g: &TemporalGraph, s: &EdgeSubset) -> Vec<String> {
        let mut v: Vec<String> = s.iter().map(|e| g.describe(e)).collect();
        v.sort();
        v
    }

    #[test]
    fn single_source_two_targets() {
        let g = parse_graph("s t1 1\ns t2 2").unwrap();
        let inst = BipartiteInstance::new(&g, ids(&g, &["s"]), ids(&g, &["t1", "t2"])).unwrap();
        let step = one_sided_dismount(&inst).unwrap();
        assert_eq!(step.target, ids(&g, &["t1"]));
        match step.event {
            BipartiteEvent::Dismount { removed, kept, .. } => {
                assert_eq!(g.name(removed), "t2");
                assert_eq!(g.name(kept), "t1");
            }
            _ => panic!(),
        }
    }

    #[test]
    fn shared_latest_neighbor_by_node_order() {
        let g = two_by_three();
        let inst = BipartiteInstance::new(&g, ids(&g, &["s1", "s2"]), ids(&g, &["t1", "t2", "t3"]))
            .unwrap();
        let step = one_sided_dismount(&inst).unwrap();
        assert_eq!(step.target, ids(&g, &["t1", "t3"]));
        let mut e: Vec<String> = step.edges.iter().map(|&e| g.describe(e)).collect();
        e.sort();
        assert_eq!(e, ["s2-t1:4", "s2-t2:5"]);
    }

    #[test]
    fn balanced_parts_cannot_dismount() {
        let g = parse_graph("s t 1").unwrap();
        let inst = BipartiteInstance::new(&g, ids(&g, &["s"]), ids(&g, &["t"])).unwrap();
        assert!(matches!(
            one_sided_dismount(&inst),
            Err(BipartiteError::Unbalanced { .. })
        ));
        let (s, _) = bipartite_spanner(&inst);
        assert_eq!(described(&g, &s), ["s-t:1"]);
    }

    #[test]
    fn two_by_three_spanner() {
        let g = two_by_three();
        let inst = BipartiteInstance::new(&g, ids(&g, &["s1", "s2"]), ids(&g, &["t1", "t2", "t3"]))
            .unwrap();
        let (s, log) = bipartite_spanner(&inst);
        assert_eq!(
            described(&g, &s),
            ["s1-t1:1", "s1-t3:3", "s2-t1:4", "s2-t2:5", "s2-t3:6"]
        );
        assert_eq!(log.replay(&g), s);
    }

    #[test]
    fn construction_checks_parts() {
        let g = two_by_three();
        assert!(matches!(
            BipartiteInstance::new(&g, ids(&g, &["s1"]), ids(&g, &["s1", "t1"])),
            Err(BipartiteError::Overlap(_))
        ));
        assert!(matches!(
            BipartiteInstance::new(&g, ids(&g, &["s1"]), ids(&g, &["s2"])),
            Err(BipartiteError::MissingEdge(..))
        ));
        assert!(BipartiteInstance::new(&g, [], ids(&g, &["t1"])).is_err());
    }

    #[test]
    fn recurrence_and_closed_form() {
        assert_eq!(balanced_size_bound(1), 1);
        assert_eq!(balanced_size_bound(2), 6);
        assert_eq!(balanced_size_bound(4), 20);
        for m in 1..200 {
            assert!(
                balanced_size_bound(m) <= balanced_size_closed_form(m),
                "m = {m}"
            );
        }
    }
}
