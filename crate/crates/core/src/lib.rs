//! Analysis toolkit for two-party controlled quantum gates.
//!
//! A controlled gate hands Alice a control register that selects one of N
//! unitaries {U_n} to apply to Bob's N-dimensional system. When the family
//! maps a reference state to N mutually orthogonal states the gate carries N
//! classical messages from Alice to Bob. This crate decides whether the same
//! is possible in reverse (the commuting-products criterion), builds the
//! witnesses (shared eigenbasis, eigenphase table, the T·C_n factorization,
//! reference/basis constructions), simulates both protocols on explicit state
//! vectors, and searches for the maximum zero-error reverse message count of
//! asymmetric gates.

pub mod capacity;
pub mod eigen;
pub mod error;
pub mod gate;
pub mod generate;
pub mod io;
pub mod matrix;
pub mod protocol;
pub mod simplex;
pub mod symmetry;

pub use error::{Error, Result};
pub use matrix::{gram, ComplexMatrix, ComplexVector};

/// Default numerical tolerance used whenever a caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-9;

pub use num_complex::Complex64;
