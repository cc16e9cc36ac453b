//! Temporal clique spanners through dismountability.
//!
//! Graphs are simple and properly labeled: one integer label per edge and
//! distinct labels on edges sharing a node. Temporal paths are non-strict
//! (labels non-decreasing along the path).
//!
//! - [`graph`]: the data model, edge-list I/O, reachability and spanner checks.
//! - [`dismount`]: k-hop dismountable nodes, recursive dismounting and the
//!   `O(n log n)` clique spanner.
//! - [`structure`]: predicates for cliques without 1- or 2-hop dismountable
//!   nodes and their reduction to a bi-clique.
//! - [`bipartite`]: one-sided dismounting and the split recursion.
//! - [`pivot`]: pivot edges, `2n - 3` pivot spanners, compression and
//!   full-range labelings.
//! - [`oracle`]: brute-force cross-checks, generators and fixtures.
//! - [`certificate`]: spanner results and their JSON trail.

pub mod bipartite;
pub mod certificate;
pub mod dismount;
pub mod graph;
pub mod oracle;
pub mod pivot;
pub mod structure;

pub use certificate::{Phase, SpannerResult};
pub use graph::{EdgeId, EdgeSubset, Label, NodeId, NodeSet, TemporalGraph};
