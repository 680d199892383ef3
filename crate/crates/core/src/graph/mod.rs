//! Finite simple undirected graphs on at most 64 vertices.
//!
//! Each vertex keeps its neighbor set as a 64-bit row, which is a sorted set
//! by construction. All operations are pure; graphs are immutable once built.

mod enumerate;
mod io;
mod structure;

pub use enumerate::{
    enumerate_labeled_graphs, enumerate_labeled_trees, labeled_graph_count,
    labeled_graph_from_index, labeled_tree_count, tree_from_prufer, MAX_ENUMERATION_VERTICES,
};
pub use io::{parse_edge_list, Graph6Error, MAX_GRAPH6_VERTICES};

use std::fmt;

use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("builtin enumeration is limited to n <= {max} (got {n}); pipe an external graph6 stream instead")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("labeled trees need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Strictly increasing sequence of distinct vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(bits(mask).collect())
    }

    /// Bit mask of the set. Ids must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse into one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph directly from symmetric adjacency rows.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(v, &r)| r & bit(v) == 0));
        Graph {
            n: rows.len(),
            rows,
        }
    }

    pub fn complete(n: usize) -> Self {
        let full = full_mask(n);
        Graph::from_rows((0..n).map(|v| full & !bit(v)).collect())
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edge_list(n, &edges).expect("cycle")
    }

    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edge_list(n, &edges).expect("star")
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph { n, rows })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Neighbor set of `v` as a bit mask. Panics if `v` is out of range.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_mask(self.rows[v]))
    }

    /// `N(u) ∩ N(v)` for the edge `{u, v}`.
    pub fn edge_neighborhood(&self, e: (usize, usize)) -> Result<VertexSet, GraphError> {
        let (u, v) = e;
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(VertexSet::from_mask(self.rows[u] & self.rows[v]))
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in the order of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        Ok(self.induced_by_mask(s.mask()))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let ids: Vec<usize> = bits(mask).collect();
        let rows = ids
            .iter()
            .map(|&v| {
                let r = self.rows[v] & mask;
                ids.iter()
                    .enumerate()
                    .filter(|&(_, &w)| r & bit(w) != 0)
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Graph::from_rows(rows)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced_by_mask(self.vertex_mask() & !bit(v)))
    }

    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Graph, GraphError> {
        let (u, v) = e;
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut rows = self.rows.clone();
        rows[u] &= !bit(v);
        rows[v] &= !bit(u);
        Ok(Graph { n: self.n, rows })
    }
}
