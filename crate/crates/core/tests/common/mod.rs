//! Fixtures and definition-literal oracles shared by the integration tests.
#![allow(dead_code)]

use ascfs::{Graph, Vertex, VertexSet};

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// K_{2,2,2}: all pairs except {0,1}, {2,3}, {4,5}.
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

/// Two squares glued along an edge (the 2x3 grid).
pub fn domino() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// Six non-adjacent pairs {2k, 2k+1}, consecutive pairs completely joined.
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

/// The graph on `n` vertices whose edges are the set bits of `mask` over
/// pairs in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e))
        .unwrap()
}

fn subsets(items: &[Vertex]) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    (0u64..1 << items.len()).map(move |m| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

fn clique(g: &Graph, s: &[Vertex]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// AS by the definition: some non-adjacent pair with a non-clique sub-block
/// core such that every vertex outside sees a non-clique part of it.
pub fn as_by_definition(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|w| {
        (w + 1..n).filter(|&w2| !g.has_edge(w, w2)).any(|w2| {
            let common: Vec<Vertex> = (0..n)
                .filter(|&x| g.has_edge(w, x) && g.has_edge(w2, x))
                .collect();
            let found = subsets(&common).any(|core| {
                !clique(g, &core)
                    && (0..n)
                        .filter(|&v| v != w && v != w2 && !core.contains(&v))
                        .all(|v| {
                            let seen: Vec<Vertex> =
                                core.iter().copied().filter(|&c| g.has_edge(v, c)).collect();
                            !clique(g, &seen)
                        })
            });
            found
        })
    })
}

/// Induced 4-cycles, each as its sorted vertex quadruple plus its two
/// diagonals.
pub type BruteSquare = ([(Vertex, Vertex); 2], [Vertex; 4]);

pub fn brute_squares(g: &Graph) -> Vec<BruteSquare> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let mut non = Vec::new();
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if !g.has_edge(q[i], q[j]) {
                                non.push((q[i], q[j]));
                            }
                        }
                    }
                    let disjoint = non.len() == 2
                        && ![non[1].0, non[1].1].contains(&non[0].0)
                        && ![non[1].0, non[1].1].contains(&non[0].1);
                    if disjoint {
                        out.push(([non[0], non[1]], q));
                    }
                }
            }
        }
    }
    out
}

/// Vertex supports of the components of the square graph (squares adjacent
/// when they share a diagonal), each sorted.
pub fn brute_supports(g: &Graph) -> Vec<Vec<Vertex>> {
    let sq = brute_squares(g);
    let mut seen = vec![false; sq.len()];
    let mut out = Vec::new();
    for s in 0..sq.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut support = Vec::new();
        while let Some(x) = stack.pop() {
            support.extend(sq[x].1);
            for y in 0..sq.len() {
                if !seen[y] && sq[x].0.iter().any(|d| sq[y].0.contains(d)) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        support.sort();
        support.dedup();
        out.push(support);
    }
    out.sort();
    out
}

/// CFS by the definition: a clique `K` joined to a nonempty remainder whose
/// square graph has a component covering the remainder.
pub fn cfs_by_definition(g: &Graph) -> bool {
    let n = g.vertex_count();
    let all: Vec<Vertex> = (0..n).collect();
    let found = subsets(&all).any(|k| {
        if k.len() == n || !clique(g, &k) {
            return false;
        }
        let rest: Vec<Vertex> = all.iter().copied().filter(|v| !k.contains(v)).collect();
        if !k.iter().all(|&a| rest.iter().all(|&b| g.has_edge(a, b))) {
            return false;
        }
        let sub = g.induced(&VertexSet::from_vertices(n, rest.iter().copied()).unwrap());
        brute_supports(&sub).iter().any(|s| s.len() == rest.len())
    });
    found
}

/// Common-link size of `x` and `y` by direct scan.
pub fn common_link_size(g: &Graph, x: Vertex, y: Vertex) -> usize {
    (0..g.vertex_count())
        .filter(|&v| v != x && v != y && g.has_edge(x, v) && g.has_edge(y, v))
        .count()
}
