//! Induced 4-cycles ("squares") and the components of the square graph.
//!
//! The square graph has one node per induced 4-cycle and joins two cycles
//! when they share a diagonal. It is never built explicitly: each square
//! unions its two diagonals in a disjoint-set forest, so two squares end up
//! in the same component exactly when a chain of diagonal-sharing squares
//! connects them.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Vertex, VertexSet};
use crate::union_find::UnionFind;

/// Nonadjacent vertex pair, stored with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    lo: u32,
    hi: u32,
}

impl Diagonal {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "a diagonal needs two distinct vertices");
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Diagonal {
            lo: lo as u32,
            hi: hi as u32,
        }
    }

    pub fn lo(&self) -> Vertex {
        self.lo as Vertex
    }

    pub fn hi(&self) -> Vertex {
        self.hi as Vertex
    }

    pub fn vertices(&self) -> [Vertex; 2] {
        [self.lo(), self.hi()]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.lo() == v || self.hi() == v
    }

    fn key(&self) -> u64 {
        (self.lo as u64) << 32 | self.hi as u64
    }
}

impl fmt::Debug for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// Induced 4-cycle given by its two diagonals, ordered so that
/// `first.lo() < second.lo()`. The derived ordering is the canonical key.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Square {
    first: Diagonal,
    second: Diagonal,
}

impl Square {
    pub fn new(d1: Diagonal, d2: Diagonal) -> Self {
        if d1.lo < d2.lo {
            Square {
                first: d1,
                second: d2,
            }
        } else {
            Square {
                first: d2,
                second: d1,
            }
        }
    }

    pub fn diagonals(&self) -> [Diagonal; 2] {
        [self.first, self.second]
    }

    pub fn vertices(&self) -> [Vertex; 4] {
        [
            self.first.lo(),
            self.first.hi(),
            self.second.lo(),
            self.second.hi(),
        ]
    }

    /// Both diagonals are non-edges and all four cross pairs are edges.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.vertices();
        let distinct = a != c && a != d && b != c && b != d;
        distinct
            && !g.has_edge(a, b)
            && !g.has_edge(c, d)
            && [(a, c), (a, d), (b, c), (b, d)]
                .iter()
                .all(|&(x, y)| g.has_edge(x, y))
    }
}

/// Calls `f` on every induced 4-cycle of `g`, once each, in canonical order.
///
/// The outer diagonal `{u, v}` runs over non-edges in lexicographic order;
/// the inner one runs over non-edges `{a, b}` of `common_link(u, v)` with
/// `u < a < b`, which picks out the diagonal holding the smallest vertex.
pub fn for_each_square(g: &Graph, mut f: impl FnMut(Square)) {
    let n = g.vertex_count();
    let mut common = vec![0u64; g.stride()];
    let mut partners = vec![0u64; g.stride()];
    for u in 0..n {
        let row_u = g.row(u);
        for v in u + 1..n {
            if bits::contains(row_u, v) {
                continue;
            }
            bits::and_into(&mut common, row_u, g.row(v));
            // Only vertices above u can open the second diagonal.
            clear_through(&mut common, u);
            if bits::count(&common) < 2 {
                continue;
            }
            let outer = Diagonal::new(u, v);
            for a in bits::iter(&common) {
                for ((p, c), r) in partners.iter_mut().zip(&common).zip(g.row(a)) {
                    *p = c & !r;
                }
                clear_through(&mut partners, a);
                for b in bits::iter(&partners) {
                    let sq = Square {
                        first: outer,
                        second: Diagonal::new(a, b),
                    };
                    debug_assert!(sq.is_valid_in(g));
                    f(sq);
                }
            }
        }
    }
}

/// Clears bits `0..=v`.
#[inline]
fn clear_through(words: &mut [u64], v: Vertex) {
    let w = v >> 6;
    for x in &mut words[..w] {
        *x = 0;
    }
    let keep = if v & 63 == 63 { 0 } else { !0u64 << ((v & 63) + 1) };
    words[w] &= keep;
}

/// All induced 4-cycles, sorted by canonical key.
pub fn enumerate_squares(g: &Graph) -> Vec<Square> {
    let mut out = Vec::new();
    for_each_square(g, |s| out.push(s));
    out
}

pub fn count_squares(g: &Graph) -> u64 {
    let mut k = 0;
    for_each_square(g, |_| k += 1);
    k
}

/// A component of the square graph, named by the smallest diagonal it uses.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ComponentId(pub Diagonal);

#[derive(Clone, Debug)]
pub struct Component {
    pub id: ComponentId,
    /// Sorted vertices covered by the component's squares.
    pub support: Vec<Vertex>,
    pub square_count: usize,
}

/// Squares of a graph together with the component structure of its
/// square graph.
#[derive(Clone, Debug)]
pub struct SquareComplex {
    n: usize,
    squares: Vec<Square>,
    square_component: Vec<u32>,
    diagonal_component: HashMap<Diagonal, u32>,
    components: Vec<Component>,
}

impl SquareComplex {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    /// Components sorted by id.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, id: ComponentId) -> Option<&Component> {
        self.index_of(id).map(|i| &self.components[i])
    }

    fn index_of(&self, id: ComponentId) -> Option<usize> {
        self.components.binary_search_by_key(&id, |c| c.id).ok()
    }

    pub fn component_of_square(&self, i: usize) -> ComponentId {
        self.components[self.square_component[i] as usize].id
    }

    pub fn component_of_diagonal(&self, d: Diagonal) -> Option<ComponentId> {
        self.diagonal_component
            .get(&d)
            .map(|&i| self.components[i as usize].id)
    }

    pub fn support(&self, id: ComponentId) -> Option<VertexSet> {
        self.component(id)
            .map(|c| VertexSet::from_vertices(self.n, c.support.iter().copied()).unwrap())
    }

    /// Squares of one component, in canonical order.
    pub fn squares_in(&self, id: ComponentId) -> Vec<Square> {
        match self.index_of(id) {
            None => Vec::new(),
            Some(ci) => self
                .squares
                .iter()
                .zip(&self.square_component)
                .filter(|(_, &c)| c as usize == ci)
                .map(|(s, _)| *s)
                .collect(),
        }
    }

    pub fn largest_support(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.support.len())
            .max()
            .unwrap_or(0)
    }

    /// Largest component support as a fraction of all vertices.
    pub fn largest_support_fraction(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.largest_support() as f64 / self.n as f64
        }
    }
}

pub fn square_components(g: &Graph) -> SquareComplex {
    let mut uf = UnionFind::new();
    let mut ids: HashMap<u64, u32> = HashMap::new();
    let mut diagonals: Vec<Diagonal> = Vec::new();
    let mut squares = Vec::new();
    let mut square_diag = Vec::new();
    let mut intern = |d: Diagonal, uf: &mut UnionFind| -> u32 {
        *ids.entry(d.key()).or_insert_with(|| {
            diagonals.push(d);
            uf.push()
        })
    };
    for_each_square(g, |sq| {
        let i = intern(sq.first, &mut uf);
        let j = intern(sq.second, &mut uf);
        uf.union(i, j);
        squares.push(sq);
        square_diag.push(i);
    });

    // Name each root by its smallest diagonal, then order components by name.
    let mut root_min: HashMap<u32, Diagonal> = HashMap::new();
    for (i, d) in diagonals.iter().enumerate() {
        let r = uf.find(i as u32);
        root_min
            .entry(r)
            .and_modify(|m| *m = (*m).min(*d))
            .or_insert(*d);
    }
    let mut named: Vec<(Diagonal, u32)> = root_min.into_iter().map(|(r, d)| (d, r)).collect();
    named.sort_unstable();
    let root_index: HashMap<u32, u32> = named
        .iter()
        .enumerate()
        .map(|(i, &(_, r))| (r, i as u32))
        .collect();

    let mut supports: Vec<Vec<Vertex>> = vec![Vec::new(); named.len()];
    let mut counts = vec![0usize; named.len()];
    let square_component: Vec<u32> = squares
        .iter()
        .zip(&square_diag)
        .map(|(sq, &d)| {
            let c = root_index[&uf.find(d)];
            supports[c as usize].extend_from_slice(&sq.vertices());
            counts[c as usize] += 1;
            c
        })
        .collect();
    let components = named
        .iter()
        .zip(supports)
        .zip(counts)
        .map(|((&(d, _), mut support), square_count)| {
            support.sort_unstable();
            support.dedup();
            Component {
                id: ComponentId(d),
                support,
                square_count,
            }
        })
        .collect();
    let diagonal_component = diagonals
        .iter()
        .enumerate()
        .map(|(i, &d)| (d, root_index[&uf.find(i as u32)]))
        .collect();

    SquareComplex {
        n: g.vertex_count(),
        squares,
        square_component,
        diagonal_component,
        components,
    }
}

/// `max |support| / n` over square-graph components; 0 without squares.
pub fn largest_support_fraction(g: &Graph) -> f64 {
    square_components(g).largest_support_fraction()
}

/// Orders the support of a component so that every vertex from the third
/// on is adjacent to at least two earlier ones.
///
/// Starts from the component's smallest square (its first diagonal, then
/// the second), and repeatedly takes the smallest square that meets the
/// reached set in a whole diagonal and still has unreached vertices. A
/// square meeting the reached set in three vertices always contains a
/// reached diagonal, so it is covered by the same rule.
pub fn build_order(g: &Graph, complex: &SquareComplex, id: ComponentId) -> Result<Vec<Vertex>> {
    let component = complex
        .component(id)
        .ok_or_else(|| Error::InvalidInput(format!("no square component with id {:?}", id.0)))?;
    let squares = complex.squares_in(id);

    let mut by_diagonal: HashMap<Diagonal, Vec<usize>> = HashMap::new();
    let mut by_vertex: HashMap<Vertex, Vec<Diagonal>> = HashMap::new();
    for (i, sq) in squares.iter().enumerate() {
        for d in sq.diagonals() {
            let list = by_diagonal.entry(d).or_default();
            if list.is_empty() {
                for v in d.vertices() {
                    by_vertex.entry(v).or_default().push(d);
                }
            }
            list.push(i);
        }
    }

    let mut reached = VertexSet::empty(g.vertex_count());
    let mut order = Vec::with_capacity(component.support.len());
    let mut ready: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
    let mut reach = |v: Vertex, reached: &mut VertexSet, ready: &mut BinaryHeap<Reverse<usize>>| {
        reached.insert(v);
        order.push(v);
        for d in &by_vertex[&v] {
            let other = if d.lo() == v { d.hi() } else { d.lo() };
            if reached.contains(other) {
                ready.extend(by_diagonal[d].iter().map(|&i| Reverse(i)));
            }
        }
    };

    for v in squares[0].vertices() {
        reach(v, &mut reached, &mut ready);
    }
    while let Some(Reverse(i)) = ready.pop() {
        for v in squares[i].vertices() {
            if !reached.contains(v) {
                reach(v, &mut reached, &mut ready);
            }
        }
    }

    debug_assert_eq!(order.len(), component.support.len());
    debug_assert!(has_two_predecessor_property(g, &order));
    Ok(order)
}

/// Every vertex after the first two has at least two earlier neighbors.
pub fn has_two_predecessor_property(g: &Graph, order: &[Vertex]) -> bool {
    order.iter().enumerate().skip(2).all(|(i, &v)| {
        order[..i].iter().filter(|&&u| g.has_edge(u, v)).count() >= 2
    })
}

#[cfg(test)]
pub(crate) mod oracle {
    use super::*;

    /// Induced 4-cycles by scanning every 4-subset.
    pub fn brute_squares(g: &Graph) -> Vec<Square> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d];
                        let mut non = Vec::new();
                        let mut edges = 0;
                        for i in 0..4 {
                            for j in i + 1..4 {
                                if g.has_edge(q[i], q[j]) {
                                    edges += 1;
                                } else {
                                    non.push(Diagonal::new(q[i], q[j]));
                                }
                            }
                        }
                        // Four edges with two disjoint non-edges is exactly C4.
                        if edges == 4 && non[0].vertices().iter().all(|v| !non[1].contains(*v)) {
                            out.push(Square::new(non[0], non[1]));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Components of the explicit square graph as (sorted squares, support).
    pub fn brute_components(g: &Graph) -> Vec<(Vec<Square>, Vec<Vertex>)> {
        let sq = brute_squares(g);
        let mut seen = vec![false; sq.len()];
        let mut out = Vec::new();
        for s in 0..sq.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![];
            while let Some(x) = stack.pop() {
                comp.push(sq[x]);
                for y in 0..sq.len() {
                    let shared = sq[x].diagonals().iter().any(|d| sq[y].diagonals().contains(d));
                    if !seen[y] && shared {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort();
            let mut support: Vec<Vertex> = comp.iter().flat_map(|s| s.vertices()).collect();
            support.sort();
            support.dedup();
            out.push((comp, support));
        }
        out.sort();
        out
    }
}
