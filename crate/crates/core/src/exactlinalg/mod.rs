//! Exact integer linear algebra: Hermite and Smith normal forms and
//! arithmetic on subgroups of `Z^n`. Every "is this element in that ideal"
//! question elsewhere in the crate is answered here.

mod echelon;
mod int;
mod matrix;
mod normal_form;
pub mod sparse;
mod submodule;

use thiserror::Error;

pub use echelon::Echelon;
pub use int::Int;
pub use matrix::IntMatrix;
pub use normal_form::{hnf, hnf_with_transform, invariant_factors, snf, Snf};
pub use sparse::SparseVec;
pub use submodule::{
    member, module_intersect, module_sum, quotient_structure, ElementaryDivisors, SubmoduleBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row {row} of the submodule is not contained in the ambient module")]
    NotContained { row: usize },
}
