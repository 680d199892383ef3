//! Connectivity, chordality and clique-based structural predicates.

use std::collections::VecDeque;

use super::{bit, bits, Graph, VertexSet};
use crate::cliquepoly;

impl Graph {
    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s, self.vertex_mask());
            seen |= comp;
            out.push(VertexSet::from_mask(comp));
        }
        out
    }

    /// Vertices reachable from `s` inside `allowed`.
    fn reach(&self, s: usize, allowed: u64) -> u64 {
        let mut seen = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.row(v);
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_complete(&self) -> bool {
        let full = self.vertex_mask();
        (0..self.n()).all(|v| self.row(v) | bit(v) == full)
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Vertex connectivity. `K_n` gives `n - 1`; disconnected graphs, the
    /// single vertex and the empty graph give 0.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n();
        if n <= 1 || !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        let mut best = (0..n).map(|v| self.degree(v)).min().unwrap_or(0);
        for s in 0..n {
            for t in s + 1..n {
                if self.has_edge(s, t) {
                    continue;
                }
                best = best.min(self.local_connectivity(s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
        best
    }

    /// Maximum number of internally vertex-disjoint `s`-`t` paths between
    /// non-adjacent vertices, capped at `limit`. Unit-capacity augmenting
    /// paths on the split-vertex network: `v_in = 2v`, `v_out = 2v + 1`.
    fn local_connectivity(&self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.n();
        let m = 2 * n;
        let mut cap = vec![0i32; m * m];
        let big = n as i32 + 1;
        for v in 0..n {
            cap[(2 * v) * m + 2 * v + 1] = if v == s || v == t { big } else { 1 };
            for w in bits(self.row(v)) {
                cap[(2 * v + 1) * m + 2 * w] = big;
            }
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut prev = vec![usize::MAX; m];
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in 0..m {
                    if prev[y] == usize::MAX && cap[x * m + y] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let x = prev[y];
                cap[x * m + y] -= 1;
                cap[y * m + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// Maximum Cardinality Search order reversed, returned only if it is a
    /// perfect elimination ordering (which happens exactly for chordal graphs).
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered & bit(v) == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unnumbered vertex remains");
            numbered |= bit(v);
            visit.push(v);
            for w in bits(self.row(v) & !numbered) {
                weight[w] += 1;
            }
        }
        visit.reverse();
        self.is_perfect_elimination_ordering(&visit)
            .then_some(visit)
    }

    /// Each vertex's neighbors that come later in `order` must form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let mut later = self.vertex_mask();
        for &v in order {
            later &= !bit(v);
            let nb = self.row(v) & later;
            if bits(nb).any(|u| nb & !bit(u) & !self.row(u) != 0) {
                return false;
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// ω(G), the order of a largest clique.
    pub fn clique_number(&self) -> usize {
        cliquepoly::clique_counts(self).clique_number()
    }

    /// `true` when the graph contains no clique on `r` vertices.
    pub fn is_kr_free(&self, r: usize) -> bool {
        self.clique_number() < r
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.row(u) & self.row(v) == 0)
    }

    /// Largest number of triangles sharing a single edge; 0 without edges.
    pub fn max_triangles_per_edge(&self) -> usize {
        self.edges()
            .map(|(u, v)| (self.row(u) & self.row(v)).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}
