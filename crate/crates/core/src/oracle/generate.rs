//! Seeded instance generators. Node names are `"0"` to `"n-1"`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Label, NodeId, TemporalGraph};

use super::OracleError;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn build(n: usize, edges: &[(usize, usize)], labels: &[Label]) -> TemporalGraph {
    TemporalGraph::new(
        names(n),
        edges
            .iter()
            .zip(labels)
            .map(|(&(a, b), &t)| (NodeId(a), NodeId(b), t)),
    )
    .expect("generated labelings are proper")
}

/// Complete graph whose labels are a random permutation of `0..C(n,2)`.
pub fn gen_random_clique(n: usize, seed: u64) -> Result<TemporalGraph, OracleError> {
    if n < 2 {
        return Err(OracleError::InvalidParameter(format!(
            "clique needs n >= 2, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = pairs(n);
    let mut labels: Vec<Label> = (0..edges.len() as Label).collect();
    labels.shuffle(&mut rng);
    Ok(build(n, &edges, &labels))
}

/// Complete graph labeled `1..=|E|` along an ordering of the edges in which
/// consecutive edges share a node, found by randomized backtracking.
pub fn gen_full_range_clique(n: usize, seed: u64) -> Result<TemporalGraph, OracleError> {
    if !(3..=8).contains(&n) {
        return Err(OracleError::InvalidParameter(format!(
            "full-range generator supports 3 <= n <= 8, got {n}"
        )));
    }
    let edges = pairs(n);
    let m = edges.len();
    let adjacent = |a: usize, b: usize| {
        let (x, y) = (edges[a], edges[b]);
        x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const STEP_CAP: usize = 200_000;
    for _attempt in 0..16 {
        let start = rng.gen_range(0..m);
        let mut order = vec![start];
        let mut used = vec![false; m];
        used[start] = true;
        // candidate lists per depth, consumed from the back
        let mut stack: Vec<Vec<usize>> = Vec::new();
        let candidates = |last: usize, used: &[bool], rng: &mut ChaCha8Rng| {
            let mut c: Vec<usize> = (0..m).filter(|&x| !used[x] && adjacent(last, x)).collect();
            c.shuffle(rng);
            c
        };
        stack.push(candidates(start, &used, &mut rng));
        let mut steps = 0;
        while order.len() < m && steps < STEP_CAP {
            steps += 1;
            match stack.last_mut().and_then(|c| c.pop()) {
                Some(next) => {
                    used[next] = true;
                    order.push(next);
                    let c = candidates(next, &used, &mut rng);
                    stack.push(c);
                }
                None => {
                    stack.pop();
                    if let Some(last) = order.pop() {
                        used[last] = false;
                    }
                    if order.is_empty() {
                        break;
                    }
                }
            }
        }
        if order.len() == m {
            let mut labels = vec![0; m];
            for (i, &e) in order.iter().enumerate() {
                labels[e] = i as Label + 1;
            }
            return Ok(build(n, &edges, &labels));
        }
    }
    Err(OracleError::GenerationFailed(format!(
        "no full-range ordering for n = {n}"
    )))
}

/// Clique on `2m` nodes built in layers so that no node is dismountable:
/// edges inside `V- = {0..m-1}` first, then the matching `M-`, the other cross
/// edges, the matching `M+`, and edges inside `V+` last. Afterwards `swaps`
/// random label transpositions perturb the layering.
pub fn gen_layered_clique(m: usize, swaps: usize, seed: u64) -> Result<TemporalGraph, OracleError> {
    if m < 2 {
        return Err(OracleError::InvalidParameter(format!(
            "layered clique needs m >= 2, got {m}"
        )));
    }
    let n = 2 * m;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = pairs(n);
    let mut minus_match: Vec<usize> = (0..m).collect();
    minus_match.shuffle(&mut rng);
    // M+ must avoid M-; a random derangement relative to it
    let mut plus_match: Vec<usize>;
    loop {
        plus_match = (0..m).collect();
        plus_match.shuffle(&mut rng);
        if (0..m).all(|i| plus_match[i] != minus_match[i]) {
            break;
        }
    }
    let mut layers: [Vec<usize>; 5] = Default::default();
    for (e, &(a, b)) in edges.iter().enumerate() {
        let layer = match (a < m, b < m) {
            (true, true) => 0,
            (false, false) => 4,
            _ => {
                let (u, v) = (a.min(b), a.max(b) - m);
                if minus_match[u] == v {
                    1
                } else if plus_match[u] == v {
                    3
                } else {
                    2
                }
            }
        };
        layers[layer].push(e);
    }
    let mut labels = vec![0; edges.len()];
    let mut next: Label = 0;
    for layer in layers.iter_mut() {
        layer.shuffle(&mut rng);
        for &e in layer.iter() {
            labels[e] = next;
            next += 1;
        }
    }
    for _ in 0..swaps {
        let a = rng.gen_range(0..edges.len());
        let b = rng.gen_range(0..edges.len());
        labels.swap(a, b);
    }
    Ok(build(n, &edges, &labels))
}

/// Random proper graph: each pair is an edge with probability `p`, labels
/// drawn from `0..max_label` avoiding labels already used at either endpoint.
/// Non-adjacent edges may share labels.
pub fn gen_random_graph(
    n: usize,
    p: f64,
    max_label: Label,
    seed: u64,
) -> Result<TemporalGraph, OracleError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(OracleError::InvalidParameter(format!(
            "edge probability {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    edges.shuffle(&mut rng);
    let mut used: Vec<Vec<Label>> = vec![Vec::new(); n];
    let mut kept = Vec::new();
    let mut labels = Vec::new();
    for (a, b) in edges {
        let free: Vec<Label> = (0..max_label)
            .filter(|t| !used[a].contains(t) && !used[b].contains(t))
            .collect();
        let Some(&t) = free.choose(&mut rng) else {
            continue;
        };
        used[a].push(t);
        used[b].push(t);
        kept.push((a, b));
        labels.push(t);
    }
    Ok(build(n, &kept, &labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_clique, write_edge_list};
    use crate::pivot::is_full_range;
    use crate::structure::check_non_123;

    #[test]
    fn random_clique_is_a_permutation() {
        let g = gen_random_clique(4, 11).unwrap();
        let mut labels: Vec<Label> = g.contacts().iter().map(|c| c.label).collect();
        labels.sort();
        assert_eq!(labels, [0, 1, 2, 3, 4, 5]);
        assert_eq!(
            write_edge_list(&g),
            write_edge_list(&gen_random_clique(4, 11).unwrap())
        );
        assert_eq!(gen_random_clique(9, 0).unwrap().edge_count(), 36);
        assert!(gen_random_clique(1, 0).is_err());
    }

    #[test]
    fn full_range_generator() {
        for n in 3..=8 {
            for seed in 0..5 {
                let g = gen_full_range_clique(n, seed).unwrap();
                assert!(is_clique(&g));
                assert!(is_full_range(&g), "n = {n}, seed = {seed}");
            }
        }
        assert!(gen_full_range_clique(9, 0).is_err());
    }

    #[test]
    fn unperturbed_layers_are_not_dismountable() {
        for m in 2..=4 {
            let g = gen_layered_clique(m, 0, m as u64).unwrap();
            let r = check_non_123(&g).unwrap();
            assert!(r.non_123(), "m = {m}: {:?}", r.witnesses);
        }
    }

    #[test]
    fn random_graphs_are_proper_and_sparse() {
        let g = gen_random_graph(8, 0.5, 6, 3).unwrap();
        assert!(g.edge_count() <= 28);
    }
}
