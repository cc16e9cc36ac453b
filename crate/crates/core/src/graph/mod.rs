//! Simple, proper temporal graphs.
//!
//! A [`TemporalGraph`] is a set of named nodes plus undirected contacts, each
//! contact carrying exactly one integer label. Construction validates the
//! model used throughout the crate:
//!
//! - no self-loops and at most one contact per node pair (simple),
//! - edges sharing a node carry distinct labels (proper),
//! - node names are unique.
//!
//! Nodes get dense indices ([`NodeId`]) in first-appearance order, contacts
//! get [`EdgeId`]s in insertion order. Both are stable for the lifetime of the
//! graph, so they can be stored in certificates and subsets.

mod edgelist;
mod path;
mod reach;
mod sets;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use edgelist::{parse_graph, read_graph_file, write_edge_list, ReadError};
pub use path::TemporalPath;
pub(crate) use reach::connected_with;
pub use reach::{
    is_biclique, is_clique, is_temporally_connected, reachability, verify_spanner,
    ReachabilityMatrix,
};
pub use sets::{EdgeSubset, NodeSet};

/// Time label of a contact.
pub type Label = u64;

/// Dense node index, assigned in first-appearance order.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// Index of a contact in its parent graph.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// An undirected edge together with its single label.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub struct Contact {
    pub u: NodeId,
    pub v: NodeId,
    pub label: Label,
}

impl Contact {
    /// The endpoint opposite to `x`. `x` must be an endpoint.
    #[inline]
    pub fn other(&self, x: NodeId) -> NodeId {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    #[inline]
    pub fn has(&self, x: NodeId) -> bool {
        x == self.u || x == self.v
    }

    #[inline]
    pub fn is_adjacent(&self, other: &Contact) -> bool {
        self.has(other.u) || self.has(other.v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("self-loop on node {node} ({location})")]
    SelfLoop { node: String, location: String },
    #[error("duplicate edge {first} and {second}")]
    DuplicateEdge { first: String, second: String },
    #[error("adjacent contacts {first} and {second} share node {node} and label {label}")]
    ImproperLabeling {
        first: String,
        second: String,
        node: String,
        label: Label,
    },
    #[error("duplicate node name {0}")]
    DuplicateNode(String),
    #[error("unknown node {0}")]
    UnknownNode(String),
    #[error("edge {0} is not in the graph")]
    EdgeNotInGraph(String),
    #[error("edge subset over {subset} edges does not belong to a graph with {graph} edges")]
    SubsetMismatch { subset: usize, graph: usize },
}

/// Raw contact as it appears before validation, with an optional source line.
#[derive(Debug, Clone)]
pub(crate) struct RawContact {
    pub u: usize,
    pub v: usize,
    pub label: Label,
    pub line: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct TemporalGraph {
    names: Vec<String>,
    index: HashMap<String, NodeId>,
    contacts: Vec<Contact>,
    /// Incident `(neighbor, edge)` pairs per node, sorted by label.
    incident: Vec<Vec<(NodeId, EdgeId)>>,
    pair_index: HashMap<(usize, usize), EdgeId>,
    /// All edges sorted by label, ties by edge id.
    by_label: Vec<EdgeId>,
}

impl TemporalGraph {
    /// Builds a graph from node names and index-based contacts.
    pub fn new(
        names: Vec<String>,
        contacts: impl IntoIterator<Item = (NodeId, NodeId, Label)>,
    ) -> Result<Self, GraphError> {
        let raw = contacts
            .into_iter()
            .map(|(u, v, label)| RawContact {
                u: u.0,
                v: v.0,
                label,
                line: None,
            })
            .collect();
        Self::from_raw(names, raw)
    }

    /// Builds a graph from `(u, v, label)` triples of node names. Node order is
    /// first-appearance order.
    pub fn from_named<S: AsRef<str>>(
        contacts: impl IntoIterator<Item = (S, S, Label)>,
    ) -> Result<Self, GraphError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut raw = Vec::new();
        let mut intern = |s: &str, names: &mut Vec<String>| -> usize {
            *index.entry(s.to_string()).or_insert_with(|| {
                names.push(s.to_string());
                names.len() - 1
            })
        };
        for (u, v, label) in contacts {
            let u = intern(u.as_ref(), &mut names);
            let v = intern(v.as_ref(), &mut names);
            raw.push(RawContact {
                u,
                v,
                label,
                line: None,
            });
        }
        Self::from_raw(names, raw)
    }

    /// Like [`TemporalGraph::from_named`] but with an explicit node order;
    /// every contact endpoint must be listed.
    pub fn from_named_with_order<S: AsRef<str>>(
        order: &[&str],
        contacts: impl IntoIterator<Item = (S, S, Label)>,
    ) -> Result<Self, GraphError> {
        let names: Vec<String> = order.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> = order.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut raw = Vec::new();
        for (u, v, label) in contacts {
            let lookup = |s: &str| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownNode(s.to_string()))
            };
            raw.push(RawContact {
                u: lookup(u.as_ref())?,
                v: lookup(v.as_ref())?,
                label,
                line: None,
            });
        }
        Self::from_raw(names, raw)
    }

    pub(crate) fn from_raw(names: Vec<String>, raw: Vec<RawContact>) -> Result<Self, GraphError> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), NodeId(i)).is_some() {
                return Err(GraphError::DuplicateNode(name.clone()));
            }
        }
        let describe = |c: &RawContact| {
            let base = format!("{}-{}:{}", names[c.u], names[c.v], c.label);
            match c.line {
                Some(line) => format!("{base} (line {line})"),
                None => base,
            }
        };

        let mut pair_index: HashMap<(usize, usize), EdgeId> = HashMap::with_capacity(raw.len());
        // (node, label) -> edge, for the properness check
        let mut at_node: HashMap<(usize, Label), usize> = HashMap::with_capacity(2 * raw.len());
        for (i, c) in raw.iter().enumerate() {
            if c.u >= n || c.v >= n {
                return Err(GraphError::UnknownNode(format!("#{}", c.u.max(c.v))));
            }
            if c.u == c.v {
                return Err(GraphError::SelfLoop {
                    node: names[c.u].clone(),
                    location: describe(c),
                });
            }
            let key = (c.u.min(c.v), c.u.max(c.v));
            if let Some(prev) = pair_index.insert(key, EdgeId(i)) {
                return Err(GraphError::DuplicateEdge {
                    first: describe(&raw[prev.0]),
                    second: describe(c),
                });
            }
            for x in [c.u, c.v] {
                if let Some(&prev) = at_node.get(&(x, c.label)) {
                    return Err(GraphError::ImproperLabeling {
                        first: describe(&raw[prev]),
                        second: describe(c),
                        node: names[x].clone(),
                        label: c.label,
                    });
                }
                at_node.insert((x, c.label), i);
            }
        }

        let contacts: Vec<Contact> = raw
            .iter()
            .map(|c| Contact {
                u: NodeId(c.u),
                v: NodeId(c.v),
                label: c.label,
            })
            .collect();
        let mut incident: Vec<Vec<(NodeId, EdgeId)>> = vec![Vec::new(); n];
        for (i, c) in contacts.iter().enumerate() {
            incident[c.u.0].push((c.v, EdgeId(i)));
            incident[c.v.0].push((c.u, EdgeId(i)));
        }
        for list in &mut incident {
            list.sort_by_key(|&(_, e)| contacts[e.0].label);
        }
        let mut by_label: Vec<EdgeId> = (0..contacts.len()).map(EdgeId).collect();
        by_label.sort_by_key(|e| (contacts[e.0].label, e.0));

        Ok(TemporalGraph {
            names,
            index,
            contacts,
            incident,
            pair_index,
            by_label,
        })
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.contacts.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.names.len()).map(NodeId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.contacts.len()).map(EdgeId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn name(&self, v: NodeId) -> &str {
        &self.names[v.0]
    }

    pub fn node(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    /// Looks up a node by name, failing with [`GraphError::UnknownNode`].
    pub fn require_node(&self, name: &str) -> Result<NodeId, GraphError> {
        self.node(name)
            .ok_or_else(|| GraphError::UnknownNode(name.to_string()))
    }

    #[inline]
    pub fn contact(&self, e: EdgeId) -> Contact {
        self.contacts[e.0]
    }

    pub fn contacts(&self) -> &[Contact] {
        &self.contacts
    }

    #[inline]
    pub fn label(&self, e: EdgeId) -> Label {
        self.contacts[e.0].label
    }

    pub fn edge_between(&self, u: NodeId, v: NodeId) -> Option<EdgeId> {
        self.pair_index.get(&(u.0.min(v.0), u.0.max(v.0))).copied()
    }

    /// Edge between two named nodes.
    pub fn edge_named(&self, u: &str, v: &str) -> Result<EdgeId, GraphError> {
        let (a, b) = (self.require_node(u)?, self.require_node(v)?);
        self.edge_between(a, b)
            .ok_or_else(|| GraphError::EdgeNotInGraph(format!("{u}-{v}")))
    }

    /// Incident `(neighbor, edge)` pairs of `v`, sorted by label.
    #[inline]
    pub fn incident(&self, v: NodeId) -> &[(NodeId, EdgeId)] {
        &self.incident[v.0]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.incident[v.0].len()
    }

    /// All edges sorted by label (ties broken by edge id).
    pub fn edges_by_label(&self) -> &[EdgeId] {
        &self.by_label
    }

    pub fn min_label(&self) -> Option<Label> {
        self.by_label.first().map(|&e| self.label(e))
    }

    pub fn max_label(&self) -> Option<Label> {
        self.by_label.last().map(|&e| self.label(e))
    }

    /// Span of used labels, `max - min + 1`; zero for an edgeless graph.
    pub fn lifetime(&self) -> Label {
        match (self.min_label(), self.max_label()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 0,
        }
    }

    /// Human-readable `u-v:t` rendering of an edge.
    pub fn describe(&self, e: EdgeId) -> String {
        let c = self.contact(e);
        format!("{}-{}:{}", self.name(c.u), self.name(c.v), c.label)
    }

    /// `[u, v, t]` triple with node names, the wire form used in JSON output.
    pub fn triple(&self, e: EdgeId) -> (String, String, Label) {
        let c = self.contact(e);
        (
            self.name(c.u).to_string(),
            self.name(c.v).to_string(),
            c.label,
        )
    }

    /// Same nodes and edges with new labels (indexed by edge id).
    pub fn relabeled(&self, labels: &[Label]) -> Result<TemporalGraph, GraphError> {
        assert_eq!(labels.len(), self.edge_count());
        TemporalGraph::new(
            self.names.clone(),
            self.contacts
                .iter()
                .zip(labels)
                .map(|(c, &t)| (c.u, c.v, t)),
        )
    }

    /// All nodes, but only the edges in `subset`. Returns the new graph and the
    /// parent edge of every new edge.
    pub fn with_edges(&self, subset: &EdgeSubset) -> (TemporalGraph, Vec<EdgeId>) {
        let parents: Vec<EdgeId> = subset.iter().collect();
        let g = TemporalGraph::new(
            self.names.clone(),
            parents.iter().map(|&e| {
                let c = self.contact(e);
                (c.u, c.v, c.label)
            }),
        )
        .expect("a subgraph of a valid graph is valid");
        (g, parents)
    }

    /// Subgraph induced by `scope` with nodes renumbered in scope order.
    pub fn induced(&self, scope: &NodeSet) -> Induced {
        let nodes: Vec<NodeId> = scope.iter().collect();
        let mut local = vec![usize::MAX; self.node_count()];
        for (i, v) in nodes.iter().enumerate() {
            local[v.0] = i;
        }
        let mut edges = Vec::new();
        let mut raw = Vec::new();
        for e in self.edges() {
            let c = self.contact(e);
            if scope.contains(c.u) && scope.contains(c.v) {
                edges.push(e);
                raw.push((NodeId(local[c.u.0]), NodeId(local[c.v.0]), c.label));
            }
        }
        let names = nodes.iter().map(|&v| self.names[v.0].clone()).collect();
        let graph = TemporalGraph::new(names, raw).expect("an induced subgraph is valid");
        Induced {
            graph,
            nodes,
            edges,
        }
    }
}

impl fmt::Display for TemporalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_edge_list(self))
    }
}

/// An induced subgraph with maps back to its parent.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: TemporalGraph,
    /// Parent node of every local node.
    pub nodes: Vec<NodeId>,
    /// Parent edge of every local edge.
    pub edges: Vec<EdgeId>,
}

impl Induced {
    pub fn parent_node(&self, v: NodeId) -> NodeId {
        self.nodes[v.0]
    }

    pub fn parent_edge(&self, e: EdgeId) -> EdgeId {
        self.edges[e.0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loop() {
        let err = TemporalGraph::from_named([("a", "a", 1)]).unwrap_err();
        assert!(matches!(err, GraphError::SelfLoop { .. }));
    }

    #[test]
    fn rejects_duplicate_pair_in_either_orientation() {
        let err = TemporalGraph::from_named([("a", "b", 1), ("b", "a", 2)]).unwrap_err();
        assert!(matches!(err, GraphError::DuplicateEdge { .. }));
    }

    #[test]
    fn rejects_adjacent_equal_labels_naming_both() {
        let err = TemporalGraph::from_named([("a", "b", 1), ("a", "c", 1)]).unwrap_err();
        match err {
            GraphError::ImproperLabeling {
                first,
                second,
                node,
                label,
            } => {
                assert_eq!(first, "a-b:1");
                assert_eq!(second, "a-c:1");
                assert_eq!(node, "a");
                assert_eq!(label, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_adjacent_equal_labels_are_fine() {
        let g = TemporalGraph::from_named([("a", "b", 1), ("c", "d", 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn incident_lists_are_sorted_by_label() {
        let g = TemporalGraph::from_named([("a", "b", 5), ("a", "c", 2), ("a", "d", 9)]).unwrap();
        let a = g.node("a").unwrap();
        let labels: Vec<_> = g.incident(a).iter().map(|&(_, e)| g.label(e)).collect();
        assert_eq!(labels, vec![2, 5, 9]);
        assert_eq!(g.lifetime(), 8);
    }

    #[test]
    fn induced_renumbers_in_scope_order() {
        let g = TemporalGraph::from_named([("a", "b", 1), ("b", "c", 2), ("a", "c", 3)]).unwrap();
        let scope = NodeSet::from_nodes(3, [NodeId(0), NodeId(2)]);
        let ind = g.induced(&scope);
        assert_eq!(ind.graph.node_count(), 2);
        assert_eq!(ind.graph.edge_count(), 1);
        assert_eq!(ind.graph.names(), &["a".to_string(), "c".to_string()]);
        assert_eq!(ind.parent_edge(EdgeId(0)), EdgeId(2));
    }
}
