//! Exact-arithmetic engine for finite-dimensional Hopf algebras given by
//! structure constants.
//!
//! The crate builds algebras over exact coefficient fields (`Q`, cyclotomic
//! extensions, prime fields), decides the various group-like projection
//! notions, constructs the associated left coideal subalgebras, and runs the
//! exhaustive classifications on Taft algebras at desk scale. Everything is
//! exact: set-level statements are decided through canonical reduced
//! row-echelon forms, never through floating point or sampling.

// Dense kernels are written with explicit row/column indices; iterator
// rewrites obscure which axis is which.
#![allow(clippy::needless_range_loop)]

pub mod builders;
pub mod coideals;
pub mod error;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod projections;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use scalar::{Field, FieldKind, Scalar};
