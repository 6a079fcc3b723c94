//! Deciders for augmented suspensions (AS), constructed-from-squares
//! graphs (CFS), nontrivial joins, and the resulting Coxeter-group label.

use serde::Serialize;

use crate::graph::{bits, is_clique_words, Graph, Vertex, VertexSet};
use crate::squares::{square_components, ComponentId, Diagonal, SquareComplex};

/// Maximal block: nonadjacent ends plus their entire common link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub ends: Diagonal,
    pub core: VertexSet,
}

impl Block {
    pub fn maximal(g: &Graph, ends: Diagonal) -> Block {
        Block {
            ends,
            core: g.common_link(ends.lo(), ends.hi()).expect("diagonal vertices are distinct"),
        }
    }

    /// Vertices of the block: ends and core.
    pub fn vertices(&self) -> VertexSet {
        let mut s = self.core.clone();
        s.insert(self.ends.lo());
        s.insert(self.ends.hi());
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsOutcome {
    pub verdict: bool,
    pub witness: Option<Block>,
    /// Nonadjacent pairs examined, the witness pair included.
    pub blocks_examined: u64,
}

/// Whether a maximal block on `ends` (with precomputed `core`) witnesses AS.
/// `scratch` must have the graph's row stride.
#[inline]
fn block_witnesses(g: &Graph, w: Vertex, w2: Vertex, core: &[u64], scratch: &mut [u64]) -> bool {
    if is_clique_words(g, core) {
        return false;
    }
    for v in 0..g.vertex_count() {
        if v == w || v == w2 || bits::contains(core, v) {
            continue;
        }
        bits::and_into(scratch, g.row(v), core);
        if bits::count(scratch) < 2 || is_clique_words(g, scratch) {
            return false;
        }
    }
    true
}

/// Decides AS by scanning maximal blocks over nonadjacent pairs in
/// lexicographic order and stopping at the first witness.
///
/// A block witnesses AS when its core is not a clique and every vertex
/// outside the block sees a non-clique part of the core. Maximal blocks
/// suffice: enlarging the core of a witnessing sub-block keeps it
/// non-clique, shrinks the set of outside vertices, and only enlarges each
/// `link(v) ∩ core`.
pub fn is_as(g: &Graph) -> AsOutcome {
    let n = g.vertex_count();
    let mut core = vec![0u64; g.stride()];
    let mut scratch = vec![0u64; g.stride()];
    let mut examined = 0u64;
    for w in 0..n {
        let row_w = g.row(w);
        for w2 in w + 1..n {
            if bits::contains(row_w, w2) {
                continue;
            }
            examined += 1;
            bits::and_into(&mut core, row_w, g.row(w2));
            if block_witnesses(g, w, w2, &core, &mut scratch) {
                return AsOutcome {
                    verdict: true,
                    witness: Some(Block {
                        ends: Diagonal::new(w, w2),
                        core: VertexSet::from_words(n, core),
                    }),
                    blocks_examined: examined,
                };
            }
        }
    }
    AsOutcome {
        verdict: false,
        witness: None,
        blocks_examined: examined,
    }
}

/// Evidence that a graph is CFS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CfsWitness {
    /// A square-graph component whose support is everything outside the
    /// clique factor.
    Component(ComponentId),
    /// An AS block; AS implies CFS, so the covering component was not
    /// computed. [`CfsOutcome::witness_component`] resolves it.
    AugmentedSuspension(Block),
}

#[derive(Clone, Debug)]
pub struct CfsOutcome {
    pub verdict: bool,
    /// Dominating vertices; the largest clique factor `K` with `Γ = Γ' ⋆ K`.
    pub clique_factor: VertexSet,
    pub witness: Option<CfsWitness>,
    /// Present when the square complex was computed.
    pub complex: Option<SquareComplex>,
}

impl CfsOutcome {
    /// The covering component, computing the square complex if the verdict
    /// came from the AS shortcut.
    pub fn witness_component(&mut self, g: &Graph) -> Option<ComponentId> {
        match &self.witness {
            None => None,
            Some(CfsWitness::Component(id)) => Some(*id),
            Some(CfsWitness::AugmentedSuspension(_)) => {
                let cx = self.complex.get_or_insert_with(|| square_components(g));
                covering_component(cx, &self.clique_factor)
            }
        }
    }
}

/// Edge density above which [`is_cfs`] tries the AS decider first.
pub const AS_SHORTCUT_DENSITY: f64 = 0.5;

fn covering_component(cx: &SquareComplex, clique_factor: &VertexSet) -> Option<ComponentId> {
    let need = cx.vertex_count() - clique_factor.len();
    if need == 0 {
        return None;
    }
    // Supports never contain a dominating vertex, so matching the size of
    // the non-dominating part is enough.
    cx.components()
        .iter()
        .find(|c| c.support.len() == need)
        .map(|c| c.id)
}

/// Decides CFS through the square complex of the whole graph.
pub fn is_cfs_exhaustive(g: &Graph) -> CfsOutcome {
    let clique_factor = g.dominating_vertices();
    let cx = square_components(g);
    let witness = covering_component(&cx, &clique_factor).map(CfsWitness::Component);
    CfsOutcome {
        verdict: witness.is_some(),
        clique_factor,
        witness,
        complex: Some(cx),
    }
}

/// Decides CFS.
///
/// The clique factor is taken to be all dominating vertices: no vertex
/// adjacent to all of `Γ'` can lie in an induced 4-cycle of `Γ'`, and
/// dominating vertices lie in no induced 4-cycle at all, so the square graph
/// of `Γ'` is that of `Γ`. On dense graphs (edge density above
/// [`AS_SHORTCUT_DENSITY`]) AS is tried first and a success settles CFS.
pub fn is_cfs(g: &Graph) -> CfsOutcome {
    if g.edge_density() > AS_SHORTCUT_DENSITY {
        let as_out = is_as(g);
        if let Some(block) = as_out.witness {
            return CfsOutcome {
                verdict: true,
                clique_factor: g.dominating_vertices(),
                witness: Some(CfsWitness::AugmentedSuspension(block)),
                complex: None,
            };
        }
    }
    is_cfs_exhaustive(g)
}

/// Sides `(A, B)` of a nontrivial join `Γ = A ⋆ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
}

/// A nontrivial join decomposition, if the complement is disconnected.
/// `A` is the complement component holding vertex 0, `B` the rest.
pub fn is_nontrivial_join(g: &Graph) -> Option<Bipartition> {
    let mut parts = g.complement_components();
    if parts.len() < 2 {
        return None;
    }
    let a = parts.remove(0);
    let mut b: Vec<Vertex> = parts.into_iter().flatten().collect();
    b.sort_unstable();
    Some(Bipartition { a, b })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoxeterLabel {
    /// CFS and not a join: the right-angled Coxeter group is thick of order
    /// exactly one.
    ThickOfOrderExactly1,
    NontrivialJoin,
    /// Neither criterion applies; no claim is made.
    Inconclusive,
}

impl CoxeterLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CoxeterLabel::ThickOfOrderExactly1 => "ThickOfOrderExactly1",
            CoxeterLabel::NontrivialJoin => "NontrivialJoin",
            CoxeterLabel::Inconclusive => "Inconclusive",
        }
    }
}

pub fn coxeter_label(g: &Graph) -> CoxeterLabel {
    if is_nontrivial_join(g).is_some() {
        CoxeterLabel::NontrivialJoin
    } else if is_cfs(g).verdict {
        CoxeterLabel::ThickOfOrderExactly1
    } else {
        CoxeterLabel::Inconclusive
    }
}

/// Everything the deciders report about one graph.
#[derive(Clone, Debug)]
pub struct Classification {
    pub as_outcome: AsOutcome,
    pub cfs_verdict: bool,
    pub clique_factor: VertexSet,
    pub cfs_component: Option<ComponentId>,
    pub join: Option<Bipartition>,
    pub coxeter_label: CoxeterLabel,
}

pub fn classify(g: &Graph) -> Classification {
    let as_outcome = is_as(g);
    let mut cfs = is_cfs_exhaustive(g);
    let cfs_component = cfs.witness_component(g);
    assert!(
        !as_outcome.verdict || cfs.verdict,
        "AS graph classified as not CFS: {g:?}"
    );
    let join = is_nontrivial_join(g);
    let coxeter_label = if join.is_some() {
        CoxeterLabel::NontrivialJoin
    } else if cfs.verdict {
        CoxeterLabel::ThickOfOrderExactly1
    } else {
        CoxeterLabel::Inconclusive
    };
    Classification {
        as_outcome,
        cfs_verdict: cfs.verdict,
        clique_factor: cfs.clique_factor,
        cfs_component,
        join,
        coxeter_label,
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    use super::*;
    use crate::squares::oracle::brute_components;

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

    /// AS straight from the definition: any nonadjacent ends, any subset
    /// of their common neighbors as the core.
    pub fn as_by_definition(g: &Graph) -> bool {
        let n = g.vertex_count();
        g.non_edges().any(|(w, w2)| {
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
    }

    /// CFS straight from the definition: any clique `K` joined to a
    /// nonempty remainder whose explicit square graph has a component
    /// covering the remainder.
    pub fn cfs_by_definition(g: &Graph) -> bool {
        let n = g.vertex_count();
        let all: Vec<Vertex> = (0..n).collect();
        let found = subsets(&all).any(|k| {
            if k.len() == n || !clique(g, &k) {
                return false;
            }
            let rest: Vec<Vertex> = all.iter().copied().filter(|v| !k.contains(v)).collect();
            let joined = k.iter().all(|&a| rest.iter().all(|&b| g.has_edge(a, b)));
            if !joined {
                return false;
            }
            let sub = g.induced(&VertexSet::from_vertices(n, rest.iter().copied()).unwrap());
            brute_components(&sub)
                .iter()
                .any(|(_, support)| support.len() == rest.len())
        });
        found
    }
}
