//! The curl factor α, the crossing factor β, the skein variable z, t = αβ
//! and the unknot value δ for a given M − N.
//!
//! In q-exact mode every value is a Laurent polynomial in the uniformizer
//! `u = q^{1/(2(M−N))}`: α = u^{(M−N)²−1}, β = u, z = u^{M−N} − u^{−(M−N)},
//! t = u^{(M−N)²} and δ = (t − t⁻¹)/z, the quantum dimension. In
//! paper-literal mode the same q-powers are expanded in ε = 2π/k with
//! `q = e^{−iε}`, and the unknot value is the integer M − N.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::SkeinError;
use crate::arith::{q_power_series, EpsSeries, GaussianRational, LaurentUni, Rational, MAX_SERIES_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    QExact,
    PaperLiteral,
}

/// Value assigned to the crossingless unknot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// P(unknot) = 1.
    Unit,
    /// P(unknot) = δ.
    Paper,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::QExact => "q-exact",
            Mode::PaperLiteral => "paper-literal",
        }
    }
}

impl Normalization {
    pub fn as_str(self) -> &'static str {
        match self {
            Normalization::Unit => "unit",
            Normalization::Paper => "paper",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactParams {
    pub alpha: LaurentUni,
    pub beta: LaurentUni,
    pub z: LaurentUni,
    pub t: LaurentUni,
    pub delta: LaurentUni,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesParams {
    pub alpha: EpsSeries,
    pub beta: EpsSeries,
    pub z: EpsSeries,
    pub t: EpsSeries,
    pub delta: EpsSeries,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValues {
    Exact(ExactParams),
    Series(SeriesParams),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkeinParams {
    pub m: i64,
    pub n: i64,
    /// M − N.
    pub mn: i64,
    pub mode: Mode,
    pub normalization: Normalization,
    pub values: ParamValues,
}

impl SkeinParams {
    pub fn exact(&self) -> Result<&ExactParams, SkeinError> {
        match &self.values {
            ParamValues::Exact(p) => Ok(p),
            ParamValues::Series(_) => Err(SkeinError::NeedsExact),
        }
    }

    pub fn series(&self) -> Result<&SeriesParams, SkeinError> {
        match &self.values {
            ParamValues::Series(p) => Ok(p),
            ParamValues::Exact(_) => Err(SkeinError::NeedsSeries),
        }
    }

    pub fn with_normalization(mut self, normalization: Normalization) -> Self {
        self.normalization = normalization;
        self
    }

    /// The quadratic Casimir value ((M−N)² − 1)/(2(M−N)), the exponent of q in α.
    pub fn casimir(&self) -> Rational {
        casimir_exponent(self.mn)
    }

    /// Denominator of the uniformizer: `u = q^{1/(2(M−N))}`.
    pub fn u_denominator(&self) -> i64 {
        2 * self.mn
    }
}

pub(crate) fn casimir_exponent(mn: i64) -> Rational {
    Rational::new(BigInt::from(mn * mn - 1), BigInt::from(2 * mn))
}

/// Exact q-power values in `u`.
pub fn exact_values(mn: i64) -> Result<ExactParams, SkeinError> {
    if mn == 0 {
        return Err(SkeinError::Params("M - N must be nonzero".into()));
    }
    let u = 'u';
    let alpha = LaurentUni::power(u, mn * mn - 1);
    let beta = LaurentUni::power(u, 1);
    let z = &LaurentUni::power(u, mn) - &LaurentUni::power(u, -mn);
    let t = LaurentUni::power(u, mn * mn);
    let delta = (&t - &LaurentUni::power(u, -mn * mn)).div_exact(&z)?;
    Ok(ExactParams { alpha, beta, z, t, delta })
}

/// Series values: q-powers expanded to `order`, δ = M − N.
pub fn series_values(mn: i64, order: usize) -> Result<SeriesParams, SkeinError> {
    if mn == 0 {
        return Err(SkeinError::Params("M - N must be nonzero".into()));
    }
    let r = |num: i64, den: i64| Rational::new(BigInt::from(num), BigInt::from(den));
    let half_pos = q_power_series(&r(1, 2), order)?;
    let half_neg = q_power_series(&r(-1, 2), order)?;
    Ok(SeriesParams {
        alpha: q_power_series(&casimir_exponent(mn), order)?,
        beta: q_power_series(&r(1, 2 * mn), order)?,
        z: &half_pos - &half_neg,
        t: q_power_series(&r(mn, 2), order)?,
        delta: EpsSeries::constant(GaussianRational::from_int(mn), order),
    })
}

/// Parameters for (M, N). `order` is used by paper-literal mode only; the
/// normalization starts as [`Normalization::Paper`], under which W(unknot) = δ.
pub fn make_params(m: i64, n: i64, mode: Mode, order: usize) -> Result<SkeinParams, SkeinError> {
    if m == n {
        return Err(SkeinError::Params(format!("M = N = {m} is not allowed")));
    }
    if m < 0 || n < 0 {
        return Err(SkeinError::Params("M and N must be non-negative".into()));
    }
    if mode == Mode::PaperLiteral && order > MAX_SERIES_ORDER {
        return Err(SkeinError::Params(format!("series order {order} exceeds {MAX_SERIES_ORDER}")));
    }
    let mn = m - n;
    let values = match mode {
        Mode::QExact => ParamValues::Exact(exact_values(mn)?),
        Mode::PaperLiteral => ParamValues::Series(series_values(mn, order)?),
    };
    Ok(SkeinParams { m, n, mn, mode, normalization: Normalization::Paper, values })
}
