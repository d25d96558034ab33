//! Exact arithmetic on f-vectors of convex polytopes: reduced additions,
//! lattice and monoid membership, the g-theorem oracle, dimension-4
//! approximation bounds, and a combinatorial face-lattice engine that
//! serves as the brute-force reference for every closed form.
//!
//! Numeric code is generic over [`Int`]; the aliases below fix the scalar
//! to arbitrary-precision integers.

pub mod combinat;
pub mod constructions;
pub mod dim4;
pub mod error;
pub mod fvec;
pub mod lattice;
pub mod monoid;
pub mod scalar;
pub mod simplicial;

pub use error::{Error, Result};
pub use scalar::{Int, Rational};

use num_bigint::BigInt;

pub type FVector = fvec::FVec<BigInt>;
pub type ExtendedFVector = fvec::ExtendedFVec<BigInt>;
pub type Matrix = lattice::IntegerMatrix<BigInt>;
pub type ConditionReport = dim4::ConditionReport<BigInt>;
pub type FVectorDataset = dim4::FVectorDataset<BigInt>;
pub type ClosureReport = dim4::ClosureReport<BigInt>;
pub type ApproximationReport = dim4::ApproximationReport<BigInt>;
