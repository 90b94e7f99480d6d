//! Combinatorial machinery for Coxeter orbifolds and their relatives.
//!
//! The crate works entirely with exact integer arithmetic. Linear algebra in
//! [`homology`] is generic over the [`homology::Scalar`] trait; everything
//! built on top of it uses arbitrary-precision integers through the aliases
//! below.

pub mod corpus;
pub mod coxeter;
pub mod dualcells;
pub mod equivalence;
pub mod error;
pub mod ghs;
pub mod homology;
pub mod io;
pub mod quasitoric;
mod serde_bigint;
pub mod simplicial;

pub use error::{Error, Result};

/// Dense matrix of arbitrary-precision integers.
pub type IntegerMatrix = homology::Matrix<num_bigint::BigInt>;
/// Smith normal form over arbitrary-precision integers.
pub type IntegerSnf = homology::SnfResult<num_bigint::BigInt>;
/// Dense matrix of machine integers, for small inputs known not to overflow.
pub type SmallMatrix = homology::Matrix<i64>;
