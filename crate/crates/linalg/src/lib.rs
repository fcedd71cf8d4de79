//! Exact scalars in cyclotomic fields and exact dense matrices over them.

pub mod cyclo;
pub mod matrix;
pub mod rational;
pub mod sparse;

pub use cyclo::{CycNum, CycOp};
pub use matrix::ExactMatrix;
pub use rational::Rational;
pub use sparse::RowReducer;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
}
