//! Shared fixtures for the benchmarks.

use cliquelab::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi graph `G(n, p)` from a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid random graph")
}

/// A batch of random graphs with consecutive seeds.
pub fn random_graphs(count: usize, n: usize, p: f64, seed: u64) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| random_graph(n, p, seed + i))
        .collect()
}
