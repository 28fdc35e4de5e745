//! The Rees ring of a quadratic monomial ideal as a toric ring.
//!
//! `R(I) = T / P` with `T = K[x_1..x_n, y_e]`, one `y_e` per generator of
//! `I`, and `P` the kernel of `x_i -> x_i x_{n+1}`, `y_{ij} -> x_i x_j`.
//! The generators of `I` are the edges and loops of a graph, and adding a
//! cone vertex `n+1` turns `P` into the toric ideal of that graph.

mod binomial;
mod groebner;
mod omega;
mod toric;
mod walks;

pub use binomial::{Binomial, BinomialJson, OrderKind, TermOrder};
pub use groebner::{reduced_groebner, DEFAULT_STEP_BUDGET};
pub use omega::{build_omega, OmegaGraph};
pub use omega::OmegaJson;
pub use toric::{
    certify_toric, lattice_kernel, toric_ideal_gens, x_degree_check, XDegreeReport,
    DEFAULT_HILBERT_BOUND,
};
pub use walks::{
    enumerate_primitive_even_walks, find_realizing_walk, graver_vs_groebner_crosscheck,
    is_primitive, walk_to_binomial, ClosedWalk, CrosscheckEntry, CrosscheckReport,
    WalkEnumeration, DEFAULT_WALK_BUDGET,
};
