//! Dense bitset graphs and the counting kernels built on them.

mod counting;
mod graph6;

pub use counting::{
    common_neighbors, is_c4_free, is_friendship, kst_check, non_two_path_pairs, C4Check, KstReport,
};
pub use graph6::{g6_decode, g6_encode};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("common-neighbour query needs a nonempty vertex set")]
    EmptyQuerySet,
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("malformed graph6 input at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: &'static str },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// A fixed-size set of vertices stored as 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        VertexSet { words: vec![0; words_for(order)] }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for v in 0..order {
            s.insert(v);
        }
        s
    }

    pub fn from_slice(order: usize, vertices: &[usize]) -> Self {
        let mut s = Self::empty(order);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / 64).is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        intersection_count(&self.words, &other.words)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[inline]
pub(crate) fn words_for(order: usize) -> usize {
    order.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

/// Simple undirected graph on vertices `0..order`, one adjacency bitset per vertex.
///
/// Symmetric and irreflexive: every mutator keeps both invariants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        let stride = words_for(order);
        Graph { order, stride, rows: vec![0; stride * order] }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let edges: Vec<_> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        Self::from_edges(order, &edges)
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    /// The friendship graph `F_k`: centre 0 and triangles `{0, 2i+1, 2i+2}`.
    pub fn friendship(k: usize) -> Self {
        let mut g = Self::empty(2 * k + 1);
        for i in 0..k {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            g.add_edge(0, a);
            g.add_edge(0, b);
            g.add_edge(a, b);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet { words: self.row(v).to_vec() }
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `uv`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order && v < self.order, "edge ({u},{v}) out of range");
        if u == v {
            return;
        }
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.stride + u / 64] &= !(1 << (u % 64));
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        intersection_count(self.row(u), self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| self.neighbor_iter(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled by increasing original index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.order) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, order: self.order });
        }
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.order);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        DegreeProfile {
            min: degrees.first().copied().unwrap_or(0),
            max: degrees.last().copied().unwrap_or(0),
            degrees,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order, self.edges())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeProfile {
    /// Sorted ascending.
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

impl DegreeProfile {
    /// `(degree, count)` pairs in increasing degree.
    pub fn histogram(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((deg, c)) if *deg == d => *c += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_structure() {
        let g = Graph::cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(4, 0) && g.has_edge(0, 4));
        assert!(!g.has_edge(0, 0));
        let mut h = g.clone();
        h.add_edge(2, 2);
        assert_eq!(g, h);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.is_regular() && comp.min_degree() == 2);
        // 0-2-4-1-3-0 is the complementary cycle.
        let perm = [0, 2, 4, 1, 3];
        let mut relabel = vec![0; 5];
        for (i, &v) in perm.iter().enumerate() {
            relabel[v] = i;
        }
        assert_eq!(comp.permuted(&relabel), c5);
    }

    #[test]
    fn induced_k3_in_k4() {
        let k4 = Graph::complete(4);
        for skip in 0..4 {
            let keep: Vec<usize> = (0..4).filter(|&v| v != skip).collect();
            assert_eq!(k4.induced_subgraph(&keep).unwrap(), Graph::complete(3));
        }
        assert!(matches!(
            k4.induced_subgraph(&[0, 7]),
            Err(GraphError::VertexOutOfRange { vertex: 7, order: 4 })
        ));
    }

    #[test]
    fn large_order_rows() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert_eq!(g.degree(129), 1);
        assert_eq!(g.neighbors(0).to_vec(), vec![129]);
        assert_eq!(g.complement().degree(0), 128);
        assert_eq!(g.edges(), vec![(0, 129), (64, 65)]);
    }

    #[test]
    fn histogram() {
        let p = Graph::star(3).degree_profile();
        assert_eq!(p.degrees, vec![1, 1, 1, 3]);
        assert_eq!(p.histogram(), vec![(1, 3), (3, 1)]);
        assert_eq!((p.min, p.max), (1, 3));
    }
}
