//! Exact immanants and immanantal polynomials of the graph matrices
//! `beta D(G) + gamma A(G)`.
//!
//! Everything is computed over arbitrary-precision integers and rationals.
//! The crate pairs each closed-form or structural result with a brute-force
//! route so the two can be checked against each other.

#![forbid(unsafe_code)]

pub mod atlas;
pub mod bounds;
pub mod character;
pub mod error;
pub mod graph;
pub mod hook;
pub mod immanant;
pub mod invariants;
pub mod laplace;
pub mod lr;
pub mod matrix;
pub mod oracle;
pub mod orientation;
pub mod partition;
pub mod polynomial;
pub mod star;
pub mod verify;
pub mod zero_block;

pub use character::{character, CharacterTable};
pub use error::{Error, Result};
pub use graph::{emit_graph6, parse_graph6, Family, Graph};
pub use immanant::{imm_poly, imm_poly_interpolated, immanant, CoefficientProfile, Limits};
pub use matrix::{ExactMatrix, MatrixKind, Rational};
pub use partition::{enumerate_partitions, Partition};
pub use polynomial::{root_multiplicity, ImmPolynomial, Polynomial, RootMultiplicity};
