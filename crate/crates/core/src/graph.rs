//! Finite simple graphs with bitset adjacency.

use std::fmt;
use std::ops::Deref;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::cliques::{clique_number, count_cliques};
use crate::error::{Error, Result};

pub type Vertex = usize;

/// Strictly increasing list of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        VertexSet(bits.ones().collect())
    }

    pub fn to_bits(&self, len: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(len);
        for &v in &self.0 {
            b.insert(v);
        }
        b
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl Deref for VertexSet {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        VertexSet::new(v)
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex and is kept symmetric and
/// irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds edge `uv`. Panics on a loop or out-of-range index.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn all_vertices(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.n);
        b.insert_range(..);
        b
    }

    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> FixedBitSet {
        let mut c = self.adj[u].clone();
        c.intersect_with(&self.adj[v]);
        c
    }

    /// Common neighbourhood of every vertex in `set` (all vertices for the empty set).
    pub fn common_neighborhood(&self, set: &[Vertex]) -> FixedBitSet {
        let mut c = self.all_vertices();
        for &v in set {
            c.intersect_with(&self.adj[v]);
        }
        c
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.non_edges() {
            g.add_edge(u, v);
        }
        g
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union, `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    pub fn is_k_free(&self, r: usize) -> bool {
        if r <= 3 {
            count_cliques(self, r.max(1), None) == 0
        } else {
            clique_number(self) < r
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.is_k_free(3)
    }

    /// `K_r`-free and adding any non-edge creates a `K_r`.
    pub fn is_maximal_k_free(&self, r: usize) -> bool {
        if !self.is_k_free(r) {
            return false;
        }
        if r < 2 {
            return true;
        }
        self.non_edges().all(|(u, v)| {
            let within = VertexSet::from_bits(&self.common_neighbors(u, v));
            count_cliques(self, r - 2, Some(&within)) > 0
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn symmetric_and_irreflexive() {
        let g = c5();
        for u in 0..5 {
            assert!(!g.has_edge(u, u));
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.non_edges().count(), 5);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(matches!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop { .. })));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn maximal_triangle_free() {
        assert!(c5().is_maximal_k_free(3));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_triangle_free());
        assert!(!p4.is_maximal_k_free(3));
    }

    #[test]
    fn vertex_set_sorted() {
        let s = VertexSet::new(vec![4, 1, 4, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 4]);
        assert!(s.contains(2) && !s.contains(3));
    }
}
