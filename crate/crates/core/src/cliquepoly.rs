//! Clique counting and clique polynomials.
//!
//! Three independent routes produce the clique vector `[c_0, c_1, ..., c_ω]`:
//! the pivoting clique-tree counter used in production ([`clique_counts`]),
//! a brute-force scan over all vertex subsets ([`naive_clique_counts`]) and
//! the vertex-deletion recurrence ([`clique_polynomial_via_vertex_recurrence`]).

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, bits, Graph, GraphError};
use crate::poly::{isolate_real_roots, IntPolynomial, RootReport};

/// Vertex limit for the exponential oracle routes.
pub const MAX_ORACLE_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("oracle routes are limited to {MAX_ORACLE_VERTICES} vertices, got {0}")]
    TooLargeForOracle(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Number of `k`-cliques for `k = 0..=ω`, with `c_0 = 1`.
///
/// Counts are exact in 64 bits: a graph has at most 64 vertices and
/// `C(64, 32) < 2^64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CliqueVector(Vec<u64>);

impl CliqueVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn clique_number(&self) -> usize {
        self.0.len() - 1
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.0.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn from_accumulator(mut acc: Vec<u64>) -> Self {
        while acc.len() > 1 && acc.last() == Some(&0) {
            acc.pop();
        }
        CliqueVector(acc)
    }
}

fn binomials() -> &'static [[u64; 65]; 65] {
    static TABLE: OnceLock<Box<[[u64; 65]; 65]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Box::new([[0u64; 65]; 65]);
        for n in 0..65 {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
            }
        }
        t
    })
}

/// Bron–Kerbosch with pivoting, extended to count every clique rather than
/// only maximal ones. Each recursion leaf stands for the cliques
/// `held ∪ S` where `S` ranges over subsets of the pivots collected on the
/// way down; those are disjoint across leaves, so a leaf contributes
/// `C(pivots, j)` cliques of size `held + j`.
fn count_rec(g: &Graph, p: u64, held: usize, pivots: usize, acc: &mut [u64]) {
    if p == 0 {
        let row = &binomials()[pivots];
        for (j, &b) in row.iter().enumerate().take(pivots + 1) {
            acc[held + j] += b;
        }
        return;
    }
    let u = bits(p)
        .max_by(|&a, &b| {
            (p & g.row(a))
                .count_ones()
                .cmp(&(p & g.row(b)).count_ones())
                .then(b.cmp(&a))
        })
        .expect("p is nonempty");
    count_rec(g, p & g.row(u), held, pivots + 1, acc);
    let mut rest = p & !bit(u);
    for v in bits(p & !g.row(u) & !bit(u)) {
        count_rec(g, rest & g.row(v), held + 1, pivots, acc);
        rest &= !bit(v);
    }
}

/// Clique vector of the subgraph induced by `mask`.
pub fn clique_counts_in(g: &Graph, mask: u64) -> CliqueVector {
    let mut acc = vec![0u64; mask.count_ones() as usize + 1];
    count_rec(g, mask & g.vertex_mask(), 0, 0, &mut acc);
    CliqueVector::from_accumulator(acc)
}

pub fn clique_counts(g: &Graph) -> CliqueVector {
    clique_counts_in(g, g.vertex_mask())
}

/// `C(G, x) = Σ c_k x^k`.
pub fn clique_polynomial(g: &Graph) -> IntPolynomial {
    clique_counts(g).to_polynomial()
}

/// Tests every one of the `2^n` vertex subsets for pairwise adjacency.
pub fn naive_clique_counts(g: &Graph) -> Result<CliqueVector, CliqueError> {
    let n = g.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(CliqueError::TooLargeForOracle(n));
    }
    let mut acc = vec![0u64; n + 1];
    for s in 0u64..(1u64 << n) {
        let is_clique = bits(s).all(|v| s & !bit(v) & !g.row(v) == 0);
        if is_clique {
            acc[s.count_ones() as usize] += 1;
        }
    }
    Ok(CliqueVector::from_accumulator(acc))
}

/// Evaluates `C(G) = C(G - v) + x·C(G[N(v)])` on the lowest vertex,
/// memoized by vertex-subset mask of the original graph.
pub fn clique_polynomial_via_vertex_recurrence(g: &Graph) -> Result<IntPolynomial, CliqueError> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(CliqueError::TooLargeForOracle(g.n()));
    }
    fn go(g: &Graph, s: u64, memo: &mut HashMap<u64, IntPolynomial>) -> IntPolynomial {
        if s == 0 {
            return IntPolynomial::one();
        }
        if let Some(p) = memo.get(&s) {
            return p.clone();
        }
        let v = s.trailing_zeros() as usize;
        let without = go(g, s & !bit(v), memo);
        let link = go(g, s & g.row(v), memo);
        let p = &without + &link.shift(1);
        memo.insert(s, p.clone());
        p
    }
    let mut memo = HashMap::new();
    Ok(go(g, g.vertex_mask(), &mut memo))
}

/// Checks `C(G) = C(G - v) + x·C(G[N(v)])` exactly.
pub fn vertex_recurrence_check(g: &Graph, v: usize) -> Result<bool, CliqueError> {
    let lhs = clique_polynomial(g);
    let minus = clique_polynomial(&g.delete_vertex(v)?);
    let link = clique_polynomial(&g.induced_subgraph(&g.neighborhood(v)?)?);
    Ok(lhs == &minus + &link.shift(1))
}

/// Checks `C(G) = C(G - e) + x²·C(G[N(e)])` exactly, `N(e) = N(u) ∩ N(v)`.
pub fn edge_recurrence_check(g: &Graph, e: (usize, usize)) -> Result<bool, CliqueError> {
    let link_set = g.edge_neighborhood(e)?;
    let lhs = clique_polynomial(g);
    let minus = clique_polynomial(&g.delete_edge(e)?);
    let link = clique_polynomial(&g.induced_subgraph(&link_set)?);
    Ok(lhs == &minus + &link.shift(2))
}

/// `Σ_v C(G[N(v)], x)`.
pub fn vertex_link_sum(g: &Graph) -> IntPolynomial {
    (0..g.n())
        .map(|v| clique_counts_in(g, g.row(v)).to_polynomial())
        .fold(IntPolynomial::zero(), |acc, p| &acc + &p)
}

/// `Σ_{uv ∈ E} C(G[N(u) ∩ N(v)], x)`.
pub fn edge_link_sum(g: &Graph) -> IntPolynomial {
    g.edges()
        .map(|(u, v)| clique_counts_in(g, g.row(u) & g.row(v)).to_polynomial())
        .fold(IntPolynomial::zero(), |acc, p| &acc + &p)
}

/// `(1/2)·C''(G, x)`; exact because `k(k-1)/2` is an integer.
pub fn half_second_derivative(p: &IntPolynomial) -> IntPolynomial {
    p.derivative()
        .derivative()
        .checked_div(&IntPolynomial::constant(2.into()))
        .expect("k(k-1) is even")
}

/// Outcome of the four exact clique-polynomial identities on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `C(G) = C(G - v) + x·C(G[N(v)])` for every vertex.
    pub vertex_recurrence: bool,
    /// `C(G) = C(G - e) + x²·C(G[N(e)])` for every edge.
    pub edge_recurrence: bool,
    /// `C'(G) = Σ_v C(G[N(v)])`.
    pub first_derivative: bool,
    /// `C''(G)/2 = Σ_e C(G[N(e)])`.
    pub second_derivative: bool,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.vertex_recurrence
            && self.edge_recurrence
            && self.first_derivative
            && self.second_derivative
    }
}

pub fn check_identities(g: &Graph) -> IdentityReport {
    let c = clique_polynomial(g);
    let vertex_recurrence =
        (0..g.n()).all(|v| vertex_recurrence_check(g, v).expect("vertex in range"));
    let edge_recurrence = g
        .edges()
        .all(|e| edge_recurrence_check(g, e).expect("edge of g"));
    IdentityReport {
        vertex_recurrence,
        edge_recurrence,
        first_derivative: c.derivative() == vertex_link_sum(g),
        second_derivative: half_second_derivative(&c) == edge_link_sum(g),
    }
}

/// Real-root analysis of the clique polynomial. "Only clique roots" means
/// `is_real_rooted`.
pub fn clique_root_report(g: &Graph) -> RootReport {
    isolate_real_roots(&clique_polynomial(g)).expect("clique polynomials are nonzero")
}
