use super::{EdgeId, Label, NodeId, TemporalGraph};

/// A sequence of contacts walked in order, with the visited nodes.
///
/// `nodes.len() == edges.len() + 1`; edge `i` joins `nodes[i]` and
/// `nodes[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TemporalPath {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<EdgeId>,
}

impl TemporalPath {
    /// Rebuilds a path from its node sequence; `None` if two consecutive
    /// nodes are not adjacent.
    pub fn from_nodes(g: &TemporalGraph, nodes: Vec<NodeId>) -> Option<Self> {
        let edges = nodes
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]))
            .collect::<Option<Vec<_>>>()?;
        Some(TemporalPath { nodes, edges })
    }

    #[inline]
    pub fn hops(&self) -> usize {
        self.edges.len()
    }

    pub fn first(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn last(&self) -> NodeId {
        *self.nodes.last().expect("a path has at least one node")
    }

    pub fn labels(&self, g: &TemporalGraph) -> Vec<Label> {
        self.edges.iter().map(|&e| g.label(e)).collect()
    }

    /// Are the edges consistent with the nodes?
    pub fn is_well_formed(&self, g: &TemporalGraph) -> bool {
        self.nodes.len() == self.edges.len() + 1
            && self.edges.iter().zip(self.nodes.windows(2)).all(|(&e, w)| {
                e.0 < g.edge_count() && {
                    let c = g.contact(e);
                    c.has(w[0]) && c.has(w[1]) && w[0] != w[1]
                }
            })
    }

    /// Well formed with non-decreasing labels.
    pub fn is_temporal(&self, g: &TemporalGraph) -> bool {
        self.is_well_formed(g) && self.labels(g).windows(2).all(|w| w[0] <= w[1])
    }

    /// No node appears twice.
    pub fn is_simple(&self) -> bool {
        let mut seen: Vec<NodeId> = self.nodes.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// `[u, v, t]` triples with node names, in walking order.
    pub fn triples(&self, g: &TemporalGraph) -> Vec<(String, String, Label)> {
        self.edges
            .iter()
            .zip(self.nodes.windows(2))
            .map(|(&e, w)| {
                (
                    g.name(w[0]).to_string(),
                    g.name(w[1]).to_string(),
                    g.label(e),
                )
            })
            .collect()
    }
}
