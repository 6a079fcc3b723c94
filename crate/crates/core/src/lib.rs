//! Deciders for two global properties of finite simple graphs and a
//! reproducible Monte Carlo harness for their thresholds in G(n, p).
//!
//! * **AS** (augmented suspension): some nonadjacent pair `{w, w'}` has a
//!   non-clique common neighborhood that every other vertex meets in a
//!   non-clique.
//! * **CFS** (constructed from squares): `Γ = Γ' ⋆ K` with `K` a clique and
//!   one component of the square graph of `Γ'` covering all of `Γ'`.
//!
//! AS implies CFS, and a CFS graph that is not a join presents a
//! right-angled Coxeter group that is thick of order exactly one.

pub mod analytic;
pub mod classify;
pub mod clique;
pub mod cli;
pub mod codec;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod rng;
pub mod squares;
pub mod union_find;

pub use classify::{
    classify, coxeter_label, is_as, is_cfs, is_nontrivial_join, AsOutcome, Bipartition, Block,
    CfsOutcome, CfsWitness, Classification, CoxeterLabel,
};
pub use clique::contains_clique_of_order;
pub use codec::{read_graph, write_graph};
pub use error::{Error, Result};
pub use graph::{generate_gnp, generate_gnp_capped, GenSpec, Graph, Vertex, VertexSet};
pub use squares::{
    build_order, enumerate_squares, largest_support_fraction, square_components, ComponentId,
    Diagonal, Square, SquareComplex,
};
