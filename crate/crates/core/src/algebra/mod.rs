//! Exact arithmetic over ℚ and ℚ(τ) and the small amount of linear algebra
//! the rest of the crate needs.

mod matrix;
mod quad;
mod scalar;

pub use matrix::{primitive_integer, projective_normalize, rank_of, Matrix};
pub use quad::QuadScalar;
pub use scalar::{dot, Field, Rational, Scalar};

/// Exact sign of a scalar in {-1, 0, 1}.
pub fn sign(x: &Scalar) -> i8 {
    x.signum()
}
