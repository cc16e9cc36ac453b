//! JSON documents printed by `analyze`, `spanner` and `oracle`.

use serde::{Deserialize, Serialize};

use temporal_spanner::certificate::TripleDoc;
use temporal_spanner::dismount::find_k_hop;
use temporal_spanner::graph::{is_clique, is_temporally_connected};
use temporal_spanner::pivot::{compress, find_pivot, is_full_range};
use temporal_spanner::structure::{partition, structure_report};
use temporal_spanner::{EdgeId, NodeId, NodeSet, TemporalGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub valid: bool,
    pub nodes: usize,
    pub contacts: usize,
    pub min_label: Option<u64>,
    pub max_label: Option<u64>,
    pub clique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub v_minus: Vec<String>,
    pub v_plus: Vec<String>,
    pub v_zero: Vec<String>,
    pub m_minus: Option<Vec<TripleDoc>>,
    pub m_plus: Option<Vec<TripleDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDoc {
    pub partition_ok: bool,
    pub cross_edge_order_ok: bool,
    pub matching_label_gap_ok: Option<bool>,
    pub reciprocity_ok: Option<bool>,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub node: String,
    pub cost: usize,
    pub p_minus: Vec<TripleDoc>,
    pub p_plus: Vec<TripleDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DismountDoc {
    pub k: usize,
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub validation: Validation,
    pub tc: bool,
    pub partition: Option<PartitionDoc>,
    pub structure: Option<StructureDoc>,
    /// Empty unless the graph is a clique.
    pub dismountable: Vec<DismountDoc>,
    pub pivot: Option<TripleDoc>,
    pub compressed_lifetime: u64,
    pub full_range: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpannerStats {
    pub method: String,
    pub n: usize,
    pub size: usize,
    pub valid: bool,
}

fn names(g: &TemporalGraph, v: &[NodeId]) -> Vec<String> {
    v.iter().map(|&x| g.name(x).to_string()).collect()
}

pub fn triples(g: &TemporalGraph, e: &[EdgeId]) -> Vec<TripleDoc> {
    e.iter().map(|&x| g.triple(x)).collect()
}

/// Hop bounds reported by `analyze`: 1, 2, 3, n - 2 and any extra, each at
/// least 1.
pub fn hop_bounds(n: usize, extra: Option<usize>) -> Vec<usize> {
    let mut ks = vec![1, 2, 3, n.saturating_sub(2)];
    ks.extend(extra);
    ks.retain(|&k| k >= 1);
    ks.sort_unstable();
    ks.dedup();
    ks
}

pub fn analyze(g: &TemporalGraph, extra_k: Option<usize>) -> AnalyzeReport {
    let clique = is_clique(g);
    let n = g.node_count();
    let validation = Validation {
        valid: true,
        nodes: n,
        contacts: g.edge_count(),
        min_label: g.min_label(),
        max_label: g.max_label(),
        clique,
    };
    let (partition_doc, structure) = if clique {
        let p = partition(g, None).ok().map(|p| PartitionDoc {
            v_minus: names(g, &p.v_minus),
            v_plus: names(g, &p.v_plus),
            v_zero: names(g, &p.v_zero),
            m_minus: p.m_minus.as_ref().map(|m| triples(g, &m.edges())),
            m_plus: p.m_plus.as_ref().map(|m| triples(g, &m.edges())),
        });
        let s = structure_report(g).ok().map(|r| StructureDoc {
            partition_ok: r.partition_ok,
            cross_edge_order_ok: r.cross_edge_order_ok,
            matching_label_gap_ok: r.matching_label_gap_ok,
            reciprocity_ok: r.reciprocity_ok,
            witnesses: r.witnesses.iter().map(|w| w.describe(g)).collect(),
        });
        (p, s)
    } else {
        (None, None)
    };
    let dismountable = if clique {
        let full = NodeSet::full(n);
        hop_bounds(n, extra_k)
            .into_iter()
            .map(|k| DismountDoc {
                k,
                witness: find_k_hop(g, &full, k).map(|s| WitnessDoc {
                    node: g.name(s.removed).to_string(),
                    cost: s.cost(),
                    p_minus: s.p_minus.triples(g),
                    p_plus: s.p_plus.triples(g),
                }),
            })
            .collect()
    } else {
        Vec::new()
    };
    let pivot = find_pivot(g).ok().flatten().map(|c| g.triple(c.edge));
    AnalyzeReport {
        validation,
        tc: is_temporally_connected(g),
        partition: partition_doc,
        structure,
        dismountable,
        pivot,
        compressed_lifetime: compress(g).lifetime(),
        full_range: is_full_range(g),
    }
}
