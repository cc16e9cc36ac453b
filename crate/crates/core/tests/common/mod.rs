#![allow(dead_code)]

use temporal_spanner::oracle::{gen_layered_clique, gen_random_clique};
use temporal_spanner::TemporalGraph;

pub struct Case {
    pub tag: String,
    pub graph: TemporalGraph,
}

/// Seeded random cliques for n in 4..=9, `per_n` seeds each.
pub fn random_cliques(per_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 4..=9 {
        for seed in 0..per_n {
            out.push(Case {
                tag: format!("clique n={n} seed={seed}"),
                graph: gen_random_clique(n, seed).unwrap(),
            });
        }
    }
    out
}

/// Layered cliques on 4, 6 and 8 nodes: the unperturbed ones are stuck, the
/// perturbed ones mostly are not.
pub fn layered_cliques(per_setting: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 2..=4 {
        for swaps in 0..4 {
            for seed in 0..per_setting {
                out.push(Case {
                    tag: format!("layered m={m} swaps={swaps} seed={seed}"),
                    graph: gen_layered_clique(m, swaps, seed).unwrap(),
                });
            }
        }
    }
    out
}

pub fn corpus() -> Vec<Case> {
    let mut c = random_cliques(100);
    c.extend(layered_cliques(10));
    c
}
