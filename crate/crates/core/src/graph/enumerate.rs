//! Exhaustive enumeration of labeled graphs and labeled trees.

use super::{bit, Graph, GraphError};

/// 2^21 = 2,097,152 labeled graphs at n = 7; beyond that, use an external generator.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> Result<u64, GraphError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok(1u64 << pair_count(n))
}

/// The `index`-th labeled graph in lexicographic order of its upper-triangle
/// bit string (pairs ordered `(0,1), (0,2), (1,2), (0,3), ...`, first pair
/// most significant).
pub fn labeled_graph_from_index(n: usize, index: u64) -> Graph {
    let pairs = pair_count(n);
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if index >> (pairs - 1 - k) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Every labeled graph on `n` vertices exactly once, keeping those that pass `filter`.
pub fn enumerate_labeled_graphs<F>(
    n: usize,
    mut filter: F,
) -> Result<impl Iterator<Item = Graph>, GraphError>
where
    F: FnMut(&Graph) -> bool,
{
    let total = labeled_graph_count(n)?;
    Ok((0..total)
        .map(move |i| labeled_graph_from_index(n, i))
        .filter(move |g| filter(g)))
}

/// `n^(n-2)` labeled trees on `n` vertices.
pub fn labeled_tree_count(n: usize) -> Result<u64, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    Ok((n as u64).pow(n as u32 - 2))
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    assert_eq!(seq.len(), n - 2, "Prüfer sequence length must be n - 2");
    let mut degree = vec![1usize; n];
    for &x in seq {
        if x >= n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges)
}

/// All labeled trees on `n` vertices, one per Prüfer sequence in lexicographic order.
pub fn enumerate_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    let total = labeled_tree_count(n)?;
    Ok((0..total).map(move |mut idx| {
        let mut seq = vec![0usize; n - 2];
        for slot in seq.iter_mut().rev() {
            *slot = (idx % n as u64) as usize;
            idx /= n as u64;
        }
        tree_from_prufer(n, &seq).expect("valid Prüfer sequence")
    }))
}
