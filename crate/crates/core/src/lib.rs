//! Vertex connectivity of the bipartite double cover `G x K2`.
//!
//! The connectivity of `G x K2` equals `min{2κ(G), b(G)}`, where `b(G)` is
//! the least `|X| + 2|Y|` over b-pairs `(X, Y)` of `G`. This crate computes
//! both sides of that identity, builds minimum separating sets of the
//! product from `G` alone, and checks everything against exhaustive search.

pub mod bpair;
pub mod cli;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod io;
pub mod named;
pub mod product;
pub mod theorem;

pub use bpair::{b_bruteforce, b_number, canonical_cost, is_bpair, BPair};
pub use connectivity::{kappa_bruteforce, kappa_with_witness, min_vertex_cut_pair, SeparatingSet};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, Vertex};
pub use product::{double_cover, kronecker_product, weichsel_connected};
pub use theorem::{formula_value, verify_instance, witness_product_separator, VerificationReport};
