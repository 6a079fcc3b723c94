//! Exact clique-order test by branch and bound with greedy-coloring bounds.

use crate::graph::{bits, Graph};

/// True iff `g` contains a clique on `t` vertices. `t = 0` is always true
/// (the empty clique).
pub fn contains_clique_of_order(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    if t > g.vertex_count() {
        return false;
    }
    if t == 1 {
        return true;
    }
    if t == 2 {
        return g.edge_count() > 0;
    }
    // A t-clique needs t - 1 neighbors at each of its vertices.
    let mut cand = vec![0u64; g.stride()];
    for v in 0..g.vertex_count() {
        if g.degree(v) + 1 >= t {
            bits::insert(&mut cand, v);
        }
    }
    expand(g, cand, 0, t)
}

/// Size of a maximum clique.
pub fn clique_number(g: &Graph) -> usize {
    let mut t = 0;
    while contains_clique_of_order(g, t + 1) {
        t += 1;
    }
    t
}

/// Greedy sequential coloring of `cand`; returns vertices in nondecreasing
/// color order with their color numbers (1-based).
fn color_sort(g: &Graph, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.to_vec();
    let mut queue = vec![0u64; cand.len()];
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut color = 0;
    while uncolored.iter().any(|&w| w != 0) {
        color += 1;
        queue.copy_from_slice(&uncolored);
        while let Some(v) = bits::first(&queue) {
            bits::remove(&mut uncolored, v);
            bits::remove(&mut queue, v);
            for (q, r) in queue.iter_mut().zip(g.row(v)) {
                *q &= !r;
            }
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

fn expand(g: &Graph, mut cand: Vec<u64>, depth: usize, t: usize) -> bool {
    if depth >= t {
        return true;
    }
    let (order, colors) = color_sort(g, &cand);
    let mut next = vec![0u64; cand.len()];
    for i in (0..order.len()).rev() {
        if depth + colors[i] < t {
            return false;
        }
        let v = order[i];
        bits::and_into(&mut next, &cand, g.row(v));
        if depth + 1 >= t || expand(g, next.clone(), depth + 1, t) {
            return true;
        }
        bits::remove(&mut cand, v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::{generate_gnp, GenSpec, VertexSet};

    /// Every t-subset, checked pairwise.
    fn brute(g: &Graph, t: usize) -> bool {
        let n = g.vertex_count();
        if t > n {
            return false;
        }
        (0u32..1 << n).any(|mask| {
            mask.count_ones() as usize == t
                && g.is_clique(&VertexSet::from_vertices(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap())
        })
    }

    #[test]
    fn named_examples() {
        assert!(contains_clique_of_order(&Graph::complete(5), 5));
        assert!(!contains_clique_of_order(&Graph::complete(5), 6));
        assert!(!contains_clique_of_order(&complete_bipartite(5, 5), 3));
        assert!(contains_clique_of_order(&complete_bipartite(5, 5), 2));
        assert!(!brute(&petersen(), 3));
        assert!(!contains_clique_of_order(&petersen(), 3));
        assert!(contains_clique_of_order(&Graph::empty(0), 0));
        assert!(!contains_clique_of_order(&Graph::empty(0), 1));
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&octahedron()), 3);
    }

    #[test]
    fn agrees_with_brute_force_small_graphs() {
        for i in 0..1000u64 {
            let n = (i % 8) as usize;
            let p = [0.2, 0.5, 0.8][(i % 3) as usize];
            let g = generate_gnp(GenSpec::new(n, p, i)).unwrap();
            for t in 1..=n + 1 {
                assert_eq!(contains_clique_of_order(&g, t), brute(&g, t), "seed {i} t {t}");
            }
        }
    }
}
