//! Exact arithmetic: big-integer and rational polynomials, integer and
//! polynomial-matrix determinants.

mod det;
mod matrix;
mod poly;

pub use det::{det_bigint, det_int, det_poly, det_rational};
pub use matrix::PolyMatrix;
pub use poly::{format_rational, IntPoly, RatPoly};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
