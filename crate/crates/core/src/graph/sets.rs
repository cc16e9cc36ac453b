use super::{EdgeId, GraphError, NodeId, TemporalGraph};

/// A subset of the nodes of a graph with `universe` nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    members: Vec<bool>,
    len: usize,
}

impl NodeSet {
    pub fn empty(universe: usize) -> Self {
        NodeSet {
            members: vec![false; universe],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        NodeSet {
            members: vec![true; universe],
            len: universe,
        }
    }

    pub fn from_nodes(universe: usize, nodes: impl IntoIterator<Item = NodeId>) -> Self {
        let mut s = Self::empty(universe);
        for v in nodes {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: NodeId) -> bool {
        self.members.get(v.0).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: NodeId) -> bool {
        let fresh = !self.members[v.0];
        if fresh {
            self.members[v.0] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: NodeId) -> bool {
        let present = self.members[v.0];
        if present {
            self.members[v.0] = false;
            self.len -= 1;
        }
        present
    }

    /// Members in node order.
    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(NodeId(i)))
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

/// A subset of the contacts of a parent [`TemporalGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    members: Vec<bool>,
    len: usize,
}

impl EdgeSubset {
    pub fn empty(g: &TemporalGraph) -> Self {
        Self::empty_over(g.edge_count())
    }

    pub fn full(g: &TemporalGraph) -> Self {
        EdgeSubset {
            members: vec![true; g.edge_count()],
            len: g.edge_count(),
        }
    }

    pub(crate) fn empty_over(universe: usize) -> Self {
        EdgeSubset {
            members: vec![false; universe],
            len: 0,
        }
    }

    /// Subset from edge ids; fails if an id does not belong to `g`.
    pub fn from_edges(
        g: &TemporalGraph,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Result<Self, GraphError> {
        let mut s = Self::empty(g);
        for e in edges {
            if e.0 >= g.edge_count() {
                return Err(GraphError::EdgeNotInGraph(format!("#{}", e.0)));
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Subset from named node pairs; fails on unknown nodes or absent edges.
    pub fn from_pairs<S: AsRef<str>>(
        g: &TemporalGraph,
        pairs: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Self, GraphError> {
        let mut s = Self::empty(g);
        for (u, v) in pairs {
            s.insert(g.edge_named(u.as_ref(), v.as_ref())?);
        }
        Ok(s)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.get(e.0).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        let fresh = !self.members[e.0];
        if fresh {
            self.members[e.0] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        let present = self.members[e.0];
        if present {
            self.members[e.0] = false;
            self.len -= 1;
        }
        present
    }

    pub fn extend(&mut self, edges: impl IntoIterator<Item = EdgeId>) {
        for e in edges {
            self.insert(e);
        }
    }

    pub fn union_with(&mut self, other: &EdgeSubset) {
        assert_eq!(self.universe(), other.universe());
        for e in other.iter() {
            self.insert(e);
        }
    }

    /// Members in edge-id order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(EdgeId(i)))
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// Fails unless this subset was built over `g`'s edges.
    pub fn check_parent(&self, g: &TemporalGraph) -> Result<(), GraphError> {
        if self.universe() != g.edge_count() {
            return Err(GraphError::SubsetMismatch {
                subset: self.universe(),
                graph: g.edge_count(),
            });
        }
        Ok(())
    }
}
