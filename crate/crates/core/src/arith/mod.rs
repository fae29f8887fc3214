//! Exact arithmetic: rationals, Gaussian rationals, Laurent polynomials,
//! truncated series in `ε = 2π/k`, Grassmann numbers and polynomial test
//! fields in three variables.

mod gaussian;
mod grassmann;
mod laurent;
mod multipoly;
pub mod serial;
mod series;

pub use gaussian::{rat, GaussianRational};
pub use grassmann::Grassmann;
pub use laurent::{laurent_arith, specialize, AnyLaurent, LaurentBi, LaurentUni, RingOp};
pub use multipoly::{MultiPoly3, Scalar};
pub use series::{expand_laurent_to_series, q_power_series, EpsSeries, MAX_SERIES_ORDER};

/// Reduced arbitrary-precision fraction.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("polynomials in different variables: {0} and {1}")]
    VariableMismatch(String, String),
    #[error("cannot combine univariate and bivariate polynomials")]
    KindMismatch,
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("series truncation orders differ: {0} and {1}")]
    OrderMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed polynomial JSON: {0}")]
    Parse(String),
}
