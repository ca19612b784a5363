//! Exact machinery for circulant nut graphs.
//!
//! Everything here runs on arbitrary-precision integers and rationals; no
//! floating point is used anywhere. The crate is organized as:
//!
//! - [`intpoly`]: dense integer polynomials with remainder by monic divisors,
//!   even/odd splitting and power substitution,
//! - [`cyclotomic`]: cyclotomic polynomials, totients, divisor enumeration and
//!   cyclotomic divisibility tests,
//! - [`circulant`]: circulant graph specs, adjacency matrices and the
//!   eigenvalue polynomial,
//! - [`nutcheck`]: two independent nut-graph certificates (spectral and exact
//!   rational kernel) plus a cross-checking harness,
//! - [`constructions`]: generator-set constructions realizing every admissible
//!   (order, degree) pair, with the membership predicate and a dispatcher,
//! - [`families`]: the polynomial families and fixed polynomials behind the
//!   constructions, with full finite divisibility sweeps,
//! - [`enumerate`]: exhaustive search over balanced generator sets.
//!
//! The `parallel` feature (on by default) runs the data-parallel sweeps on a
//! rayon pool; every such entry point also has a `_seq` variant that is always
//! available and is used as the sequential baseline by the benchmarks.

pub mod circulant;
pub mod constructions;
pub mod cyclotomic;
pub mod enumerate;
pub mod families;
pub mod intpoly;
pub mod nutcheck;

pub use circulant::{AdjacencyMatrix, CirculantSpec};
pub use intpoly::{IntPolynomial, SparseTerm};
pub use nutcheck::{cross_check, kernel_nut_test, spectral_nut_test, NutCertificate};
