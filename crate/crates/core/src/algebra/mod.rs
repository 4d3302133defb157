//! Exact scalar arithmetic over ℚ(√2,√3) and dense linear algebra over any [`Scalar`].

mod field;
mod matrix;
pub mod numeric;
mod scalar;

pub use field::{FieldElement, ParseFieldElementError, Rational};
pub use matrix::{intersect_row_spaces, row_space_canonical, row_spaces_equal, Mat};
pub use scalar::{AlgebraError, Scalar};
