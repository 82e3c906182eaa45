//! Exact computer algebra for quadratic nonsymmetric operads with two binary
//! operations: Koszul duals of relation matrices, self-duality obstruction
//! ideals, Gröbner bases, and the full classification of self-dual cases.

pub mod classify;
pub mod groebner;
pub mod linalg;
pub mod operad;
pub mod poly;
pub mod scalar;

pub use scalar::{rat, Coefficient, Rational};

/// Polynomials with exact rational coefficients.
pub type Poly = poly::Polynomial<Rational>;
