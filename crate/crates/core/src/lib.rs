//! Exact symbolic engine for finite-dimensional Lie superalgebras of 2x2
//! matrix-valued first-order differential operators on the complex line,
//! their invariant function modules, and the quasi-exactly-solvable
//! Hamiltonians built from them.
//!
//! Everything is computed over the Gaussian rationals; the only inexact step
//! in the whole crate is numeric root refinement in [`qes::spectrum`], which
//! is quarantined behind an exact characteristic polynomial.

pub mod bimodule;
pub mod catalog;
pub mod qes;
pub mod quasipoly;
pub mod scalar;
pub mod superop;
pub mod verify;

pub use quasipoly::{Poly, QuasiPoly, SuperFunction};
pub use scalar::Scalar;
pub use superop::{GeneralOperator, Grade, MatrixOperator, SuperOperator, TermKey};
