//! Dense bit-row graphs, vertex sets, and seeded G(n, p) generation.

use std::fmt;

use crate::error::{Error, Result};
use crate::rng::{bernoulli, bernoulli_threshold, mix64, Stream};

pub type Vertex = usize;

/// Default ceiling on adjacency storage for generated graphs (2 GiB).
pub const DEFAULT_MEMORY_CAP_BYTES: u64 = 2 << 30;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Word-slice helpers shared by the hot loops.
pub(crate) mod bits {
    #[inline]
    pub fn contains(words: &[u64], v: usize) -> bool {
        words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(words: &mut [u64], v: usize) {
        words[v >> 6] |= 1 << (v & 63);
    }

    #[inline]
    pub fn remove(words: &mut [u64], v: usize) {
        words[v >> 6] &= !(1 << (v & 63));
    }

    #[inline]
    pub fn count(words: &[u64]) -> usize {
        words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn and_into(out: &mut [u64], a: &[u64], b: &[u64]) {
        for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
            *o = x & y;
        }
    }

    /// Ascending iterator over set bits.
    pub fn iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
        words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn first(words: &[u64]) -> Option<usize> {
        words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * 64 + words[i].trailing_zeros() as usize)
    }
}

/// A subset of `0..n` for a fixed `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            bits::insert(&mut s.words, v);
        }
        s
    }

    /// Builds a set from vertex indices; errors on any index `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: usize, vertices: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range for n = {n}"
                )));
            }
            bits::insert(&mut s.words, v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet { n, words }
    }

    /// Size of the ground set this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        bits::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n && bits::contains(&self.words, v)
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        bits::insert(&mut self.words, v);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.n {
            bits::remove(&mut self.words, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        bits::iter(&self.words)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        bits::first(&self.words)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different ground sets");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Parameters of one G(n, p) draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, p: f64, seed: u64) -> Self {
        GenSpec { n, p, seed }
    }
}

/// Domain separator for the edge stream, so edge draws never coincide with
/// the sweep's per-trial seed mixing.
const EDGE_STREAM_DOMAIN: u64 = 0x6564_6765_735f_676e; // "edges_gn"

/// Simple undirected graph on `0..n` stored as `n` packed adjacency rows.
///
/// Rows are symmetric and loop-free; the type is immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    edges: usize,
}

/// Accumulates edges before freezing into a [`Graph`].
pub(crate) struct GraphBuilder {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub(crate) fn new(n: usize) -> Self {
        let stride = words_for(n);
        GraphBuilder {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub(crate) fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        bits::contains(&self.rows[u * self.stride..(u + 1) * self.stride], v)
    }

    /// Caller guarantees `u != v` and both `< n`.
    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        let s = self.stride;
        bits::insert(&mut self.rows[u * s..(u + 1) * s], v);
        bits::insert(&mut self.rows[v * s..(v + 1) * s], u);
    }

    pub(crate) fn build(self) -> Graph {
        let edges = bits::count(&self.rows) / 2;
        Graph {
            n: self.n,
            stride: self.stride,
            rows: self.rows,
            edges,
        }
    }
}

/// Bytes of adjacency storage a graph on `n` vertices needs.
pub fn adjacency_bytes(n: usize) -> u64 {
    (n as u64) * (words_for(n) as u64) * 8
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates, and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            if b.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u}, {v})")));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Number of unordered nonadjacent pairs, `C(n, 2) - |E|`.
    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edges
    }

    /// Fraction of vertex pairs that are edges; 0 when `n < 2`.
    pub fn edge_density(&self) -> f64 {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        if pairs == 0 {
            0.0
        } else {
            self.edges as f64 / pairs as f64
        }
    }

    #[inline]
    pub(crate) fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && bits::contains(self.row(u), v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        bits::count(self.row(v))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits::iter(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Nonadjacent pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !bits::contains(self.row(u), v))
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidInput(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    /// Neighbors of `v`.
    pub fn link(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_words(self.n, self.row(v).to_vec()))
    }

    /// Common neighbors of two distinct vertices.
    pub fn common_link(&self, u: Vertex, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!(
                "common link needs distinct vertices, got {u} twice"
            )));
        }
        let mut words = vec![0; self.stride];
        bits::and_into(&mut words, self.row(u), self.row(v));
        Ok(VertexSet::from_words(self.n, words))
    }

    /// `|common_link(u, v)|` without allocating.
    pub fn common_link_len(&self, u: Vertex, v: Vertex) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True iff every pair of `s` is adjacent. Sets of size at most one,
    /// the empty set included, are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        is_clique_words(self, s.words())
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominating_vertices(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.degree(v) + 1 == self.n {
                s.insert(v);
            }
        }
        s
    }

    /// Connected components of the complement graph, each sorted, listed
    /// in order of their smallest vertex. The complement is never built:
    /// the walk expands `unvisited & !row(x)`.
    pub fn complement_components(&self) -> Vec<Vec<Vertex>> {
        self.components_by(|row, unvisited, out| {
            for ((o, r), u) in out.iter_mut().zip(row).zip(unvisited) {
                *o = u & !r;
            }
        })
    }

    /// Connected components of the graph itself.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_by(|row, unvisited, out| bits::and_into(out, row, unvisited))
    }

    fn components_by(&self, step: impl Fn(&[u64], &[u64], &mut [u64])) -> Vec<Vec<Vertex>> {
        let mut unvisited = VertexSet::full(self.n).words;
        let mut next = vec![0u64; self.stride];
        let mut out = Vec::new();
        while let Some(root) = bits::first(&unvisited) {
            bits::remove(&mut unvisited, root);
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                step(self.row(x), &unvisited, &mut next);
                for y in bits::iter(&next) {
                    bits::remove(&mut unvisited, y);
                    comp.push(y);
                    stack.push(y);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in
    /// increasing order of the original labels.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut b = GraphBuilder::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
        }
        b.build()
    }
}

/// Clique test over raw words of a set.
#[inline]
pub(crate) fn is_clique_words(g: &Graph, set: &[u64]) -> bool {
    for x in bits::iter(set) {
        let row = g.row(x);
        for (i, (&s, &r)) in set.iter().zip(row).enumerate() {
            let mut missing = s & !r;
            if i == x >> 6 {
                missing &= !(1u64 << (x & 63));
            }
            if missing != 0 {
                return false;
            }
        }
    }
    true
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Lexicographic rank of the pair `u < v` among all pairs of `0..n`.
#[inline]
pub fn pair_rank(n: usize, u: Vertex, v: Vertex) -> u64 {
    debug_assert!(u < v && v < n);
    let (n, u, v) = (n as u64, u as u64, v as u64);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Samples G(n, p) under the default memory cap.
pub fn generate_gnp(spec: GenSpec) -> Result<Graph> {
    generate_gnp_capped(spec, DEFAULT_MEMORY_CAP_BYTES)
}

/// Samples G(n, p): pair `{u, v}` (u < v) is an edge iff draw number
/// `pair_rank(n, u, v)` of the seed's edge stream falls below `p * 2^64`.
/// The output is a pure function of `spec`.
pub fn generate_gnp_capped(spec: GenSpec, cap_bytes: u64) -> Result<Graph> {
    let GenSpec { n, p, seed } = spec;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let need = adjacency_bytes(n);
    if need > cap_bytes {
        return Err(Error::Resource(format!(
            "graph on {n} vertices needs {need} bytes of adjacency, cap is {cap_bytes}"
        )));
    }
    let stream = Stream::new(mix64(seed ^ EDGE_STREAM_DOMAIN));
    let threshold = bernoulli_threshold(p);
    let mut b = GraphBuilder::new(n);
    let mut rank = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if bernoulli(stream.at(rank), threshold) {
                b.add_edge(u, v);
            }
            rank += 1;
        }
    }
    Ok(b.build())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(
            a + b,
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
        )
        .unwrap()
    }

    /// Join of two graphs; `h` is relabelled to follow `g`.
    pub fn join(g: &Graph, h: &Graph) -> Graph {
        let (n, m) = (g.vertex_count(), h.vertex_count());
        let mut edges: Vec<_> = g.edges().collect();
        edges.extend(h.edges().map(|(u, v)| (u + n, v + n)));
        edges.extend((0..n).flat_map(|u| (n..n + m).map(move |v| (u, v))));
        Graph::from_edges(n + m, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    pub fn octahedron() -> Graph {
        let non = [(0, 1), (2, 3), (4, 5)];
        Graph::from_edges(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|e| !non.contains(e)),
        )
        .unwrap()
    }

    pub fn domino() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    /// Six diagonals {2k, 2k+1} joined consecutively.
    pub fn dc6() -> Graph {
        let mut e = Vec::new();
        for k in 0..5 {
            for a in [2 * k, 2 * k + 1] {
                for b in [2 * k + 2, 2 * k + 3] {
                    e.push((a, b));
                }
            }
        }
        Graph::from_edges(12, e).unwrap()
    }
}
