//! Exact-arithmetic toolkit for the dilation operator `U_n` on the numerators
//! of Hilbert and Ehrhart series.
//!
//! Writing `h(t)/(1-t)^{d+1} = sum_{m>=0} g(m) t^m` for a counting polynomial
//! `g`, the operator `U_n` replaces `g(m)` by `g(nm)` and returns the new
//! numerator. The crate computes `U_n` by three independent routes, certifies
//! real-rootedness, log-concavity and the interlacing inequality chain of the
//! result with exact rational arithmetic, decomposes numerators into their
//! palindromic components, and counts lattice points of small polytopes to
//! tie the algebra back to Ehrhart delta-vectors.
//!
//! No floating point is used anywhere: every predicate is an exact integer or
//! rational comparison and every root statement is a Sturm certificate.

pub mod decomp;
pub mod diagnostics;
pub mod ehrhart;
pub mod error;
pub mod hecke;
mod memo;
pub mod poly;
pub mod roots;
pub mod seq;
pub mod series;
pub mod tables;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::DensePoly;
pub use series::{GPolynomial, HVector};
