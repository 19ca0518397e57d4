//! Exact linear algebra over rings, with two headline capabilities:
//!
//! 1. **Polynomial rings over arbitrary coefficient rings** — including
//!    noncommutative ones like matrix rings — with the commutation rule
//!    `r·x = x·r`. On top of them: division-free determinants, adjugates,
//!    characteristic polynomials, the two one-sided evaluations and linear
//!    divisions, and machine checks of the Cayley–Hamilton identity
//!    `f(A) = 0` and the adjugate identity `(xE−A)*·(xE−A) = E·f(x)` on
//!    concrete matrices.
//!
//! 2. **Exact Birkhoff decomposition** — every bistochastic matrix with
//!    rational entries is written as an exact convex combination of
//!    permutation matrices by walking alternating cycles through its
//!    support. No floats anywhere: weights sum to exactly 1 and
//!    reconstruction reproduces the input bit for bit.
//!
//! ```
//! use ringmat::birkhoff::{decompose, BistochasticMatrix};
//! use ringmat::matrix::{cayley_hamilton_check, SquareMatrix};
//! use ringmat::ring::Integers;
//!
//! let a = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
//! assert!(cayley_hamilton_check(&Integers, &a).unwrap());
//!
//! let m = BistochasticMatrix::new(SquareMatrix::from_str_rows(&[
//!     &["1/3", "1/3", "1/3"],
//!     &["1/3", "1/3", "1/3"],
//!     &["1/3", "1/3", "1/3"],
//! ]))
//! .unwrap();
//! let d = decompose(&m);
//! assert_eq!(d.reconstruct(), *m.as_matrix());
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `ringmat` binary exposes the same operations over JSON documents.

pub mod birkhoff;
pub mod cli;
pub mod document;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod ring;

pub use birkhoff::{BirkhoffDecomposition, BistochasticMatrix, Permutation};
pub use matrix::{MatrixRing, SquareMatrix};
pub use poly::{Degree, PolyRing, Polynomial};
pub use rational::Rational;
pub use ring::{Integers, Rationals, Ring};
