//! The fundamental representation of su(M|N) and its identities.
//!
//! Indices in the public API are 1-based, as in the usual matrix notation:
//! `a ∈ 1..=M+N`, with `1..=M` even and `M+1..=M+N` odd.

mod basis;
mod context;
pub mod field_eq;
pub mod gauge;
mod identities;
mod matrix;
pub mod verify;

pub use basis::{ehat, eq1_rhs, generator, Generator};
pub use context::{AlgebraContext, Grading};
pub use identities::{
    casimir, casimir_value, fierz_lhs, fierz_rhs, str2_closed, str3_closed, super_bracket, supertrace,
};
pub use matrix::GradedMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("M and N must be positive and distinct (got M={0}, N={1})")]
    InvalidContext(usize, usize),
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("H generator index {0} must lie in 1..={1}")]
    CartanIndex(usize, usize),
    #[error("E and F generators need distinct indices")]
    DiagonalGenerator,
    #[error("super bracket needs homogeneous (graded) arguments")]
    Ungraded,
    #[error("matrices of different shapes or contexts")]
    ShapeMismatch,
    #[error("test fields must have degree at most {max}, found {found}")]
    DegreeTooHigh { max: u32, found: u32 },
}
