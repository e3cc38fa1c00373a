//! Exact coefficient arithmetic.

mod gaussian;
mod poly;
mod rational;

pub use gaussian::GaussianRational;
pub use poly::{Monomial, Point, Scalar, Symbol};
pub use rational::Rational;
