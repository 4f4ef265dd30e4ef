//! The free associative ring on `m` generators and the free Lie ring inside
//! it, both truncated above a fixed degree.

mod basis;
mod lie;
mod lyndon;
mod poly;
mod word;

pub use basis::{LieVector, LyndonBasis};
pub use lie::{adjoint_action, eval_lie, LieExpr};
pub use lyndon::{bracketing, is_lyndon, lyndon_words, witt_number, LyndonWord};
pub use poly::{commutator, multiply, Poly};
pub use word::{Monomial, MonomialIndex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("malformed Lie expression: {0}")]
    MalformedExpr(String),
    #[error("polynomial is not in the image of the free Lie ring")]
    NotLieElement,
    #[error("operand truncated at degree {have}, product needs {need}")]
    TruncationMismatch { have: usize, need: usize },
}
