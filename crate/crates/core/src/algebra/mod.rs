//! Exact arithmetic: integers, rationals, sparse polynomials and rational functions.

pub mod gcd;
pub mod monomial;
pub mod poly;
pub mod ratfun;
pub mod scalar;

pub use gcd::{gcd, gcd_subresultant};
pub use monomial::{Monomial, Var, MAX_VARS};
pub use poly::Polynomial;
pub use ratfun::{degree_cap, set_degree_cap, RationalFunction, DEFAULT_DEGREE_CAP};
pub use scalar::{parse_scalar, ratio, scalar, ExactScalar};
