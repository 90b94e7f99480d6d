//! Exact integer linear algebra: Smith normal form, chain complexes,
//! homology with torsion, cokernels and integer solving.
//!
//! Everything here is generic over [`Scalar`]; the rest of the crate uses
//! `BigInt` through the aliases at the crate root.

mod chain;
mod group;
mod matrix;
mod snf;
mod solve;

pub use chain::{
    augmented_chain_complex, betti_numbers, chain_complex, homology, reduced_homology, reduced_homology_all,
    ChainComplex,
};
pub use group::{FGAbelianGroup, GroupElement};
pub use matrix::{Matrix, Scalar};
pub use snf::{invariant_factors, rank, snf, SnfResult};
pub use solve::{cokernel, solve_integer};
