//! Truncated power series in `ε = 2π/k`, with `q = e^{-iε}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ArithError, GaussianRational, LaurentUni, Rational};

/// Highest truncation order accepted by [`q_power_series`].
pub const MAX_SERIES_ORDER: usize = 4;

/// `c_0 + c_1 ε + … + c_order ε^order + O(ε^{order+1})`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order, which is the only order at which the result is known.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpsSeries {
    coeffs: Vec<GaussianRational>,
}

impl EpsSeries {
    pub fn zero(order: usize) -> Self {
        EpsSeries { coeffs: vec![GaussianRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(GaussianRational::one(), order)
    }

    pub fn constant(c: GaussianRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Coefficients `c_0..=c_order`; missing entries are zero, extra ones are dropped.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>, order: usize) -> Self {
        coeffs.resize(order + 1, GaussianRational::zero());
        EpsSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &GaussianRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        EpsSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self, ArithError> {
        let c0inv = self.coeffs[0].inv().ok_or(ArithError::NotInvertible)?;
        let n = self.order();
        let mut out = vec![GaussianRational::zero(); n + 1];
        out[0] = c0inv.clone();
        for k in 1..=n {
            let mut acc = GaussianRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -(&acc * &c0inv);
        }
        Ok(EpsSeries { coeffs: out })
    }

    pub fn pow(&self, n: i64) -> Result<Self, ArithError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &EpsSeries {
    type Output = EpsSeries;
    fn add(self, o: &EpsSeries) -> EpsSeries {
        let n = self.order().min(o.order());
        EpsSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect() }
    }
}

impl Sub for &EpsSeries {
    type Output = EpsSeries;
    fn sub(self, o: &EpsSeries) -> EpsSeries {
        let n = self.order().min(o.order());
        EpsSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect() }
    }
}

impl Mul for &EpsSeries {
    type Output = EpsSeries;
    fn mul(self, o: &EpsSeries) -> EpsSeries {
        let n = self.order().min(o.order());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|j| &self.coeffs[j] * &o.coeffs[k - j]).sum())
            .collect();
        EpsSeries { coeffs }
    }
}

impl Neg for &EpsSeries {
    type Output = EpsSeries;
    fn neg(self) -> EpsSeries {
        EpsSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for EpsSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}·ε"),
                _ => format!("{c}·ε^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", super::laurent::join_terms(&parts))?;
        }
        write!(f, " + O(ε^{})", self.order() + 1)
    }
}

impl fmt::Debug for EpsSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EpsSeries({self})")
    }
}

/// `q^r = e^{-irε}` truncated at `order`: the `ε^n` coefficient is `(-ir)^n / n!`.
pub fn q_power_series(r: &Rational, order: usize) -> Result<EpsSeries, ArithError> {
    if order > MAX_SERIES_ORDER {
        return Err(ArithError::InvalidParameter(format!(
            "series order {order} exceeds the supported maximum {MAX_SERIES_ORDER}"
        )));
    }
    let step = GaussianRational::new(Rational::zero(), -r.clone());
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = GaussianRational::one();
    for n in 0..=order {
        if n > 0 {
            term = (&term * &step).scale(&Rational::new(BigInt::one(), BigInt::from(n)));
        }
        coeffs.push(term.clone());
    }
    Ok(EpsSeries { coeffs })
}

/// Read `u` as `q^{1/denom}` and expand `p(u)` term by term.
pub fn expand_laurent_to_series(p: &LaurentUni, denom: i64, order: usize) -> Result<EpsSeries, ArithError> {
    if denom == 0 {
        return Err(ArithError::InvalidParameter("uniformizer denominator must be nonzero".into()));
    }
    let mut acc = EpsSeries::zero(order);
    for (e, c) in p.terms() {
        let r = Rational::new(BigInt::from(e), BigInt::from(denom));
        acc = &acc + &q_power_series(&r, order)?.scale(c);
    }
    Ok(acc)
}
