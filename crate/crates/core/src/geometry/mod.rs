//! Exact scalars, linear algebra and open-cone feasibility.

pub mod cone;
pub mod linalg;
pub mod scalar;

pub use cone::{strict_cone_witness, ConeProblem, StrictConstraint};
pub use linalg::{dot, nullspace, rank_of, solve_coordinates, span_key};
pub use scalar::{scalar_sign, FieldTag, QSqrt5, Scalar, Sign};
