//! Simple graphs on bitset adjacency, exact clique machinery, and the
//! intersection graphs of subcube families.

mod bitset;
mod intersection;

pub use bitset::VertexSet;
pub use intersection::{grow_family, represent_graph, CliqueWitness, IntersectionGraph};

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        g
    }

    /// Circulant graph: `i ~ j` iff `|i - j| mod n` is one of `offsets`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for &o in offsets {
                let j = (i + o) % n;
                if j != i {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {a}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loop at vertex {a}");
        self.rows[a].insert(b);
        self.rows[b].insert(a);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| self.rows[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &u)| vertices[a + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// A maximum clique, found by branch and bound with a greedy colouring
    /// bound on bitset candidate sets. Among maximum cliques the first one
    /// reached in vertex order is returned, so the result is deterministic.
    pub fn max_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        let all = VertexSet::full(self.n);
        self.expand(&mut current, all, &mut best);
        best.sort_unstable();
        best
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }

    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }

    fn expand(&self, current: &mut Vec<usize>, mut cand: VertexSet, best: &mut Vec<usize>) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        let order = self.colour_order(&cand);
        for &(v, colour) in order.iter().rev() {
            if current.len() + colour <= best.len() {
                return;
            }
            current.push(v);
            let next = cand.intersection(&self.rows[v]);
            self.expand(current, next, best);
            current.pop();
            cand.remove(v);
        }
    }

    /// Greedy sequential colouring of `cand`; returns vertices in order of
    /// nondecreasing colour with their (1-based) colour.
    fn colour_order(&self, cand: &VertexSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.len());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(&self.rows[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    /// Whether the graph contains a clique of the given size.
    pub fn has_clique(&self, size: usize) -> bool {
        if size == 0 {
            return true;
        }
        self.clique_number() >= size
    }

    /// Exact number of cliques with exactly `size` vertices.
    pub fn count_cliques(&self, size: usize) -> u64 {
        if size == 0 {
            return 1;
        }
        let all = VertexSet::full(self.n);
        self.count_from(&all, size)
    }

    fn count_from(&self, cand: &VertexSet, remaining: usize) -> u64 {
        if remaining == 1 {
            return cand.len() as u64;
        }
        let mut total = 0;
        for v in cand.iter() {
            let mut next = cand.intersection(&self.rows[v]);
            next.retain_above(v);
            if next.len() + 1 >= remaining {
                total += self.count_from(&next, remaining - 1);
            }
        }
        total
    }
}

/// Searches for a graph on `n` vertices with no clique of size `clique` and
/// no independent set of size `independent`, deciding edges in lexicographic
/// order with backtracking. Returns the first such graph found.
pub fn find_ramsey_graph(n: usize, clique: usize, independent: usize) -> Option<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut g = Graph::empty(n);
    fn closes_forbidden(g: &Graph, j: usize, size: usize, edge: bool) -> bool {
        // With all pairs inside 0..=j decided, look for a monochromatic
        // `size`-set through j.
        let mut cand = VertexSet::new(g.vertex_count());
        for i in 0..j {
            if g.has_edge(i, j) == edge {
                cand.insert(i);
            }
        }
        let view = if edge { g.clone() } else { g.complement() };
        let sub: Vec<usize> = cand.iter().collect();
        view.induced(&sub).has_clique(size.saturating_sub(1))
    }
    fn go(g: &mut Graph, pairs: &[(usize, usize)], at: usize, clique: usize, independent: usize) -> bool {
        if at == pairs.len() {
            return true;
        }
        let (i, j) = pairs[at];
        // Column j is complete once the pair (j-1, j) is decided.
        let completes_row = i + 1 == j;
        for edge in [true, false] {
            if edge {
                g.add_edge(i, j);
            }
            let ok = !completes_row
                || !(closes_forbidden(g, j, clique, true) || closes_forbidden(g, j, independent, false));
            if ok && go(g, pairs, at + 1, clique, independent) {
                return true;
            }
            if edge {
                g.rows[i].remove(j);
                g.rows[j].remove(i);
            }
        }
        false
    }
    if n == 0 {
        return Some(g);
    }
    if clique <= 1 || independent <= 1 {
        return None;
    }
    if go(&mut g, &pairs, 0, clique, independent) {
        Some(g)
    } else {
        None
    }
}
