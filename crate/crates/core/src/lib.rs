//! Exact (g,K)-module structure of the standard representations of SL(3,R).
//!
//! Everything is computed over Gaussian rationals, with the continuous
//! parameters kept as formal polynomial variables.

pub mod error;
pub mod gamma;
pub mod ktype;
pub mod lie;
pub mod matrix;
pub mod scalar;
pub mod sl2;
pub mod standard;
pub mod su2;

pub use error::{Error, Result};
pub use scalar::{GaussianRational, Monomial, Point, Rational, Scalar, Symbol};
