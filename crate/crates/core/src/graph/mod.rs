//! Immutable simple undirected graphs stored as per-vertex bit rows.
//!
//! Every "mutating" operation returns a new graph. Vertex indices are
//! `0..n`; deleting a vertex shifts the indices above it down by one.

mod canon;
mod graph6;

pub use canon::{canonical_labeling, CanonicalLabeling};
pub(crate) use canon::same_orbit;
pub use graph6::{parse_graph6, to_graph6};

use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

/// Degree sequence together with its extremes and the edge count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.insert(i, j);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::EdgeOutOfRange(i, j, n));
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            g.insert(i, j);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Erdős–Rényi G(n, p).
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        Graph::from_fn(n, |_, _| rng.gen_bool(p.clamp(0.0, 1.0)))
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i < self.n && j < self.n);
        if !self.has_edge(i, j) {
            self.bits[i * self.words + j / 64] |= 1 << (j % 64);
            self.bits[j * self.words + i / 64] |= 1 << (i % 64);
            self.m += 1;
        }
    }

    fn remove(&mut self, i: usize, j: usize) {
        if self.has_edge(i, j) {
            self.bits[i * self.words + j / 64] &= !(1 << (j % 64));
            self.bits[j * self.words + i / 64] &= !(1 << (i % 64));
            self.m -= 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Bit row of vertex `v`: bit `j` of word `j / 64` is set iff `v ~ j`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    /// Edges `(i, j)` with `i < j` in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        DegreeProfile {
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            edge_count: self.m,
            degrees,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// `G ∨ H`: disjoint union plus every edge between the two vertex sets.
    /// Vertices of `other` are numbered after those of `self`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for i in 0..self.n {
            for j in 0..other.n {
                g.insert(i, self.n + j);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (i, j) in self.edges() {
            g.insert(i, j);
        }
        for (i, j) in other.edges() {
            g.insert(self.n + i, self.n + j);
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Deletes every listed vertex; remaining vertices keep their relative order.
    pub fn delete_vertices(&self, vs: &[usize]) -> Result<Graph> {
        let mut drop = vec![false; self.n];
        for &v in vs {
            if v >= self.n {
                return Err(Error::VertexOutOfRange(v, self.n));
            }
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| !drop[u]).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Subgraph induced by `vertices`; new vertex `k` is `vertices[k]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.insert(a, b);
                }
            }
        }
        g
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Result<Graph> {
        if i >= self.n || j >= self.n {
            return Err(Error::EdgeOutOfRange(i, j, self.n));
        }
        if i == j {
            return Err(Error::Loop(i));
        }
        let mut g = self.clone();
        g.insert(i, j);
        Ok(g)
    }

    /// Removes the listed edges; pairs that are not edges are ignored.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(i, j) in edges {
            if i < self.n && j < self.n && i != j {
                g.remove(i, j);
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Relabels so that new vertex `k` is old vertex `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n, "permutation length mismatch");
        self.induced_subgraph(order)
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (i, j) in self.edges() {
            t += self
                .row(i)
                .iter()
                .zip(self.row(j))
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>();
        }
        t / 3
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }

    /// Canonical relabeling: isomorphic graphs map to identical values.
    pub fn canonical_form(&self) -> Graph {
        canonical_labeling(self).graph
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.m != other.m {
            return false;
        }
        let mut a = self.degrees();
        let mut b = other.degrees();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        self.canonical_form() == other.canonical_form()
    }

    /// Checks symmetry, loop-freeness and the handshake identity.
    pub fn check_invariants(&self) -> bool {
        let symmetric = (0..self.n).all(|i| (0..self.n).all(|j| self.has_edge(i, j) == self.has_edge(j, i)));
        let loopless = (0..self.n).all(|i| !self.has_edge(i, i));
        let padding_clear = (0..self.n).all(|i| {
            let used = self.n - (self.words - 1) * 64;
            used >= 64 || self.row(i)[self.words - 1] >> used == 0
        });
        symmetric && loopless && padding_clear && self.degrees().iter().sum::<usize>() == 2 * self.m
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", to_graph6(self), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn from_edges_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let e4 = Graph::from_edges(4, &[]).unwrap();
        let p = e4.degree_profile();
        assert_eq!((p.min_degree, p.max_degree, p.edge_count), (0, 0, 0));
        let k2 = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_pairs() {
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(Error::EdgeOutOfRange(0, 3, 3)));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
    }

    #[test]
    fn join_examples() {
        let w6 = Graph::complete(1).join(&cycle(5));
        assert_eq!((w6.n(), w6.edge_count()), (6, 10));
        let k22 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(k22.edge_count(), 4);
        assert!(k22.is_isomorphic(&cycle(4)));
        let b23 = Graph::complete(2).join(&Graph::empty(3));
        assert_eq!(b23.edge_count(), 7);
    }

    #[test]
    fn delete_vertex_examples() {
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert_eq!(k4.delete_vertex(v).unwrap(), Graph::complete(3));
        }
        let c5 = cycle(5);
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        for v in 0..5 {
            let h = c5.delete_vertex(v).unwrap();
            assert_eq!(h.edge_count(), 3);
            assert!(h.is_isomorphic(&path));
        }
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.delete_vertex(0).unwrap(), Graph::empty(3));
        assert_eq!(star.delete_vertex(4), Err(Error::VertexOutOfRange(4, 4)));
    }

    #[test]
    fn delete_vertex_shifts_degrees() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]).unwrap();
        for v in 0..6 {
            let h = g.delete_vertex(v).unwrap();
            let rest: Vec<usize> = (0..6).filter(|&u| u != v).collect();
            for (k, &u) in rest.iter().enumerate() {
                let expected = g.degree(u) - usize::from(g.has_edge(u, v));
                assert_eq!(h.degree(k), expected);
            }
        }
    }

    #[test]
    fn degree_profile_examples() {
        let t73 = Graph::from_fn(7, |i, j| {
            let part = |v: usize| if v < 3 { 0 } else if v < 5 { 1 } else { 2 };
            part(i) != part(j)
        });
        let p = t73.degree_profile();
        let mut d = p.degrees.clone();
        d.sort_unstable();
        assert_eq!(d, vec![4, 4, 4, 5, 5, 5, 5]);
        assert_eq!((p.min_degree, p.max_degree, p.edge_count), (4, 5, 16));
        let k5 = Graph::complete(5).degree_profile();
        assert!(k5.degrees.iter().all(|&d| d == 4));
        assert_eq!(k5.edge_count, 10);
    }

    #[test]
    fn isomorphism_examples() {
        let k22 = Graph::empty(2).join(&Graph::empty(2));
        assert!(cycle(4).is_isomorphic(&k22));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!star.is_isomorphic(&path));
    }

    #[test]
    fn large_rows_span_words() {
        let g = Graph::from_edges(130, &[(0, 129), (64, 65), (3, 127)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert!(g.check_invariants());
        assert_eq!(g.edges().count(), 3);
    }
}
