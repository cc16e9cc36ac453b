//! Spanner results and their JSON certificate trail.

use serde::{Deserialize, Serialize};

use crate::bipartite::{BipartiteEvent, BipartitePhase};
use crate::dismount::DismountStep;
use crate::graph::{verify_spanner, EdgeId, EdgeSubset, Label, NodeId, TemporalGraph};
use crate::pivot::PivotCertificate;

/// Selected edges plus the trail that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpannerResult {
    pub edges: EdgeSubset,
    /// Dismount steps in application order.
    pub steps: Vec<DismountStep>,
    /// What happened after the last step.
    pub phases: Vec<Phase>,
}

impl SpannerResult {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn verify(&self, g: &TemporalGraph) -> bool {
        verify_spanner(g, &self.edges).unwrap_or(false)
    }

    pub fn certificate(&self, g: &TemporalGraph) -> CertificateDoc {
        certificate_doc(g, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Phase {
    /// Edge between the last two nodes of a fully dismounted clique.
    FinalEdge {
        edge: EdgeId,
    },
    Bipartite(BipartitePhase),
    Pivot(PivotCertificate),
    /// Random minimal reduction with this seed.
    Greedy {
        seed: u64,
    },
    /// Exhaustive search; `optimal` when every smaller size was ruled out.
    Exhaustive {
        optimal: bool,
    },
}

/// `[u, v, t]` with node names.
pub type TripleDoc = (String, String, Label);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub removed: String,
    pub k: usize,
    pub p_minus: Vec<TripleDoc>,
    pub p_plus: Vec<TripleDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParentDoc {
    pub node: String,
    pub next: String,
    pub edge: TripleDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EventDoc {
    Dismount {
        shared: String,
        kept: String,
        removed: String,
        kept_edge: TripleDoc,
        removed_edge: TripleDoc,
    },
    Split {
        source: Vec<String>,
        first: Vec<String>,
        second: Vec<String>,
    },
    Attach {
        source: String,
        target: String,
        edge: TripleDoc,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PhaseDoc {
    FinalEdge {
        edge: TripleDoc,
    },
    Bipartite {
        v_plus: Vec<String>,
        v_minus: Vec<String>,
        m_minus: Vec<TripleDoc>,
        m_plus: Vec<TripleDoc>,
        events: Vec<EventDoc>,
    },
    Pivot {
        edge: TripleDoc,
        in_parent: Vec<ParentDoc>,
        out_parent: Vec<ParentDoc>,
    },
    Greedy {
        seed: u64,
    },
    Exhaustive {
        optimal: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub steps: Vec<StepDoc>,
    pub phases: Vec<PhaseDoc>,
}

fn names(g: &TemporalGraph, v: &[NodeId]) -> Vec<String> {
    v.iter().map(|&x| g.name(x).to_string()).collect()
}

fn triples(g: &TemporalGraph, e: &[EdgeId]) -> Vec<TripleDoc> {
    e.iter().map(|&x| g.triple(x)).collect()
}

fn event_doc(g: &TemporalGraph, ev: &BipartiteEvent) -> EventDoc {
    let name = |v: NodeId| g.name(v).to_string();
    match ev {
        BipartiteEvent::Dismount {
            shared,
            kept,
            removed,
            kept_edge,
            removed_edge,
        } => EventDoc::Dismount {
            shared: name(*shared),
            kept: name(*kept),
            removed: name(*removed),
            kept_edge: g.triple(*kept_edge),
            removed_edge: g.triple(*removed_edge),
        },
        BipartiteEvent::Split {
            source,
            first,
            second,
        } => EventDoc::Split {
            source: names(g, source),
            first: names(g, first),
            second: names(g, second),
        },
        BipartiteEvent::Attach {
            source,
            target,
            edge,
        } => EventDoc::Attach {
            source: name(*source),
            target: name(*target),
            edge: g.triple(*edge),
        },
    }
}

fn parents(g: &TemporalGraph, tree: &[Option<(NodeId, EdgeId)>]) -> Vec<ParentDoc> {
    tree.iter()
        .enumerate()
        .filter_map(|(v, hop)| {
            hop.map(|(x, e)| ParentDoc {
                node: g.name(NodeId(v)).to_string(),
                next: g.name(x).to_string(),
                edge: g.triple(e),
            })
        })
        .collect()
}

/// Serializable trail with node names and labels.
pub fn certificate_doc(g: &TemporalGraph, r: &SpannerResult) -> CertificateDoc {
    let steps = r
        .steps
        .iter()
        .map(|s| StepDoc {
            removed: g.name(s.removed).to_string(),
            k: s.k,
            p_minus: s.p_minus.triples(g),
            p_plus: s.p_plus.triples(g),
        })
        .collect();
    let phases = r
        .phases
        .iter()
        .map(|p| match p {
            Phase::FinalEdge { edge } => PhaseDoc::FinalEdge {
                edge: g.triple(*edge),
            },
            Phase::Bipartite(b) => PhaseDoc::Bipartite {
                v_plus: names(g, &b.v_plus),
                v_minus: names(g, &b.v_minus),
                m_minus: triples(g, &b.m_minus),
                m_plus: triples(g, &b.m_plus),
                events: b.log.events.iter().map(|ev| event_doc(g, ev)).collect(),
            },
            Phase::Pivot(c) => PhaseDoc::Pivot {
                edge: g.triple(c.edge),
                in_parent: parents(g, &c.in_parent),
                out_parent: parents(g, &c.out_parent),
            },
            Phase::Greedy { seed } => PhaseDoc::Greedy { seed: *seed },
            Phase::Exhaustive { optimal } => PhaseDoc::Exhaustive { optimal: *optimal },
        })
        .collect();
    CertificateDoc { steps, phases }
}

/// Edges named by a certificate trail: step paths, final edges, bipartite
/// events and matchings, pivot trees. Reconstructs the spanner of every
/// method except the greedy and exhaustive ones, whose trail is only a tag.
pub fn replay_certificate(
    g: &TemporalGraph,
    doc: &CertificateDoc,
) -> Result<EdgeSubset, crate::graph::GraphError> {
    let mut s = EdgeSubset::empty(g);
    let mut add = |t: &TripleDoc| -> Result<(), crate::graph::GraphError> {
        let e = g.edge_named(&t.0, &t.1)?;
        if g.label(e) != t.2 {
            return Err(crate::graph::GraphError::EdgeNotInGraph(format!(
                "{}-{}:{}",
                t.0, t.1, t.2
            )));
        }
        s.insert(e);
        Ok(())
    };
    for step in &doc.steps {
        for t in step.p_minus.iter().chain(&step.p_plus) {
            add(t)?;
        }
    }
    for p in &doc.phases {
        match p {
            PhaseDoc::FinalEdge { edge } => add(edge)?,
            PhaseDoc::Bipartite {
                m_minus,
                m_plus,
                events,
                ..
            } => {
                for t in m_minus.iter().chain(m_plus) {
                    add(t)?;
                }
                for ev in events {
                    match ev {
                        EventDoc::Dismount {
                            kept_edge,
                            removed_edge,
                            ..
                        } => {
                            add(kept_edge)?;
                            add(removed_edge)?;
                        }
                        EventDoc::Attach { edge, .. } => add(edge)?,
                        EventDoc::Split { .. } => {}
                    }
                }
            }
            PhaseDoc::Pivot {
                edge,
                in_parent,
                out_parent,
            } => {
                add(edge)?;
                for p in in_parent.iter().chain(out_parent) {
                    add(&p.edge)?;
                }
            }
            PhaseDoc::Greedy { .. } | PhaseDoc::Exhaustive { .. } => {}
        }
    }
    Ok(s)
}
