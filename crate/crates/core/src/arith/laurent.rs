//! Exact Laurent polynomials with Gaussian-rational coefficients.
//!
//! [`LaurentUni`] is a one-variable Laurent polynomial carrying a variable
//! tag (the skein code uses `u`, a root of `q`). [`LaurentBi`] is a Laurent
//! polynomial in the two HOMFLY variables `t` and `z`. Neither type ever
//! stores a zero coefficient, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ArithError, GaussianRational};

type Coeff = GaussianRational;

fn insert_term<K: Ord>(map: &mut BTreeMap<K, Coeff>, k: K, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Univariate Laurent polynomial `Σ c_e · var^e`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentUni {
    var: char,
    terms: BTreeMap<i64, Coeff>,
}

impl LaurentUni {
    pub fn zero(var: char) -> Self {
        LaurentUni { var, terms: BTreeMap::new() }
    }

    pub fn one(var: char) -> Self {
        Self::monomial(var, 0, Coeff::one())
    }

    pub fn constant(var: char, c: Coeff) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: char, exp: i64, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, exp, c);
        LaurentUni { var, terms }
    }

    /// `var^exp` with unit coefficient.
    pub fn power(var: char, exp: i64) -> Self {
        Self::monomial(var, exp, Coeff::one())
    }

    /// Build from `(exponent, integer coefficient)` pairs; repeated exponents add up.
    pub fn from_ints(var: char, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(var, terms.iter().map(|&(e, c)| (e, Coeff::from_int(c))))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Coeff)>>(var: char, terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            insert_term(&mut map, e, c);
        }
        LaurentUni { var, terms: map }
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Coeff {
        self.terms.get(&exp).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coeff)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn check_var(&self, other: &Self) -> Result<(), ArithError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(ArithError::VariableMismatch(self.var.to_string(), other.var.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_var(other)?;
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            insert_term(&mut terms, e, c.clone());
        }
        Ok(LaurentUni { var: self.var, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_var(other)?;
        let mut terms = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                insert_term(&mut terms, e1 + e2, c1 * c2);
            }
        }
        Ok(LaurentUni { var: self.var, terms })
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(&e, x)| (e, x * c)))
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentUni { var: self.var, terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Integer power. Negative powers are allowed only for monomials.
    pub fn pow(&self, n: i64) -> Result<Self, ArithError> {
        if n < 0 {
            let inv = self.monomial_inverse().ok_or(ArithError::NotInvertible)?;
            return inv.pow(-n);
        }
        let mut acc = Self::one(self.var);
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Inverse of a single-term polynomial.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        Some(Self::monomial(self.var, -e, c.inv()?))
    }

    /// Substitute `var → var^{-1}`.
    pub fn invert_variable(&self) -> Self {
        LaurentUni { var: self.var, terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn with_var(&self, var: char) -> Self {
        LaurentUni { var, terms: self.terms.clone() }
    }

    /// Exact division in the Laurent ring. Fails unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ArithError> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        // Units of the Laurent ring are monomials, so strip the lowest powers
        // and divide the remaining ordinary polynomials.
        let nmin = self.min_exp().unwrap();
        let dmin = divisor.min_exp().unwrap();
        let num = self.shift(-nmin);
        let den = divisor.shift(-dmin);
        let den_deg = den.max_exp().unwrap();
        let lead = den.coeff(den_deg);
        let lead_inv = lead.inv().ok_or(ArithError::DivisionByZero)?;
        let mut rem = num;
        let mut quot = BTreeMap::new();
        while let Some(rdeg) = rem.max_exp() {
            if rdeg < den_deg {
                return Err(ArithError::InexactDivision);
            }
            let c = &rem.coeff(rdeg) * &lead_inv;
            let k = rdeg - den_deg;
            rem = &rem - &den.shift(k).scale(&c);
            insert_term(&mut quot, k, c);
        }
        Ok(LaurentUni { var: self.var, terms: quot }.shift(nmin - dmin))
    }
}

impl Add for &LaurentUni {
    type Output = LaurentUni;
    fn add(self, o: &LaurentUni) -> LaurentUni {
        self.checked_add(o).expect("adding Laurent polynomials in different variables")
    }
}

impl Sub for &LaurentUni {
    type Output = LaurentUni;
    fn sub(self, o: &LaurentUni) -> LaurentUni {
        self.checked_sub(o).expect("subtracting Laurent polynomials in different variables")
    }
}

impl Mul for &LaurentUni {
    type Output = LaurentUni;
    fn mul(self, o: &LaurentUni) -> LaurentUni {
        self.checked_mul(o).expect("multiplying Laurent polynomials in different variables")
    }
}

impl Neg for &LaurentUni {
    type Output = LaurentUni;
    fn neg(self) -> LaurentUni {
        LaurentUni { var: self.var, terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for LaurentUni {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, c)| format_term(c, &monomial_str(&[(self.var, e)])))
            .collect();
        write!(f, "{}", join_terms(&parts))
    }
}

impl fmt::Debug for LaurentUni {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentUni[{}]({})", self.var, self)
    }
}

/// Bivariate Laurent polynomial `Σ c_{a,b} · t^a z^b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentBi {
    terms: BTreeMap<(i64, i64), Coeff>,
}

impl LaurentBi {
    pub fn zero() -> Self {
        LaurentBi { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Coeff::one())
    }

    pub fn monomial(t_exp: i64, z_exp: i64, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, (t_exp, z_exp), c);
        LaurentBi { terms }
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, Coeff::one())
    }

    pub fn z() -> Self {
        Self::monomial(0, 1, Coeff::one())
    }

    /// Build from `(t-exponent, z-exponent, integer coefficient)` triples.
    pub fn from_ints(terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), Coeff::from_int(c))))
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), Coeff)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            insert_term(&mut map, k, c);
        }
        LaurentBi { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t_exp: i64, z_exp: i64) -> Coeff {
        self.terms.get(&(t_exp, z_exp)).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms ordered by `(t-exponent, z-exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &Coeff)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_z_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, x)| (k, x * c)))
    }

    /// Multiply by `t^a z^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        LaurentBi { terms: self.terms.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `P(t, z) → P(1/t, -z)`, the effect of mirroring a diagram.
    pub fn mirror(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, b), c)| {
            let c = if b.rem_euclid(2) == 1 { -c } else { c.clone() };
            ((-a, b), c)
        }))
    }

    /// `P(t, z) → P(1/t, z)`.
    pub fn invert_t(&self) -> Self {
        LaurentBi { terms: self.terms.iter().map(|(&(a, b), c)| ((-a, b), c.clone())).collect() }
    }
}

impl Add for &LaurentBi {
    type Output = LaurentBi;
    fn add(self, o: &LaurentBi) -> LaurentBi {
        let mut terms = self.terms.clone();
        for (&k, c) in &o.terms {
            insert_term(&mut terms, k, c.clone());
        }
        LaurentBi { terms }
    }
}

impl Sub for &LaurentBi {
    type Output = LaurentBi;
    fn sub(self, o: &LaurentBi) -> LaurentBi {
        self + &-o
    }
}

impl Mul for &LaurentBi {
    type Output = LaurentBi;
    fn mul(self, o: &LaurentBi) -> LaurentBi {
        let mut terms = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &o.terms {
                insert_term(&mut terms, (a1 + a2, b1 + b2), c1 * c2);
            }
        }
        LaurentBi { terms }
    }
}

impl Neg for &LaurentBi {
    type Output = LaurentBi;
    fn neg(self) -> LaurentBi {
        LaurentBi { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl fmt::Display for LaurentBi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Group by z-exponent (ascending), t descending inside, for readability.
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)));
        let parts: Vec<String> = keys
            .iter()
            .map(|&(a, b)| format_term(&self.terms[&(a, b)], &monomial_str(&[('t', a), ('z', b)])))
            .collect();
        write!(f, "{}", join_terms(&parts))
    }
}

impl fmt::Debug for LaurentBi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentBi({})", self)
    }
}

fn monomial_str(vars: &[(char, i64)]) -> String {
    let mut s = String::new();
    for &(v, e) in vars {
        match e {
            0 => {}
            1 => s.push(v),
            _ => s.push_str(&format!("{v}^{e}")),
        }
    }
    s
}

fn format_term(c: &Coeff, mono: &str) -> String {
    if mono.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        mono.to_string()
    } else if *c == -Coeff::one() {
        format!("-{mono}")
    } else {
        format!("{c}{mono}")
    }
}

pub(crate) fn join_terms(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

/// A Laurent polynomial of either kind, for code paths that only learn the
/// kind at runtime (JSON input, CLI arithmetic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyLaurent {
    Uni(LaurentUni),
    Bi(LaurentBi),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    /// Unary; the second operand is only kind-checked.
    Neg,
}

/// Exact ring operation on two polynomials of the same kind.
pub fn laurent_arith(a: &AnyLaurent, b: &AnyLaurent, op: RingOp) -> Result<AnyLaurent, ArithError> {
    match (a, b) {
        (AnyLaurent::Uni(x), AnyLaurent::Uni(y)) => Ok(AnyLaurent::Uni(match op {
            RingOp::Add => x.checked_add(y)?,
            RingOp::Sub => x.checked_sub(y)?,
            RingOp::Mul => x.checked_mul(y)?,
            RingOp::Neg => {
                x.check_var(y)?;
                -x
            }
        })),
        (AnyLaurent::Bi(x), AnyLaurent::Bi(y)) => Ok(AnyLaurent::Bi(match op {
            RingOp::Add => x + y,
            RingOp::Sub => x - y,
            RingOp::Mul => x * y,
            RingOp::Neg => -x,
        })),
        _ => Err(ArithError::KindMismatch),
    }
}

/// Substitute the HOMFLY variables by powers of `u = q^{1/(2·mn)}`:
/// `t ↦ u^{mn²}` (that is `q^{mn/2}`) and `z ↦ u^{mn} − u^{−mn}`
/// (that is `q^{1/2} − q^{−1/2}`). Negative powers of `z` are removed by
/// exact division, which fails for polynomials that no skein computation
/// could have produced.
pub fn specialize(p: &LaurentBi, mn: i64) -> Result<LaurentUni, ArithError> {
    if mn == 0 {
        return Err(ArithError::InvalidParameter("M - N must be nonzero".into()));
    }
    let u = 'u';
    let z_sub = &LaurentUni::power(u, mn) - &LaurentUni::power(u, -mn);
    let zmin = p.min_z_exp().unwrap_or(0);
    let lift = (-zmin).max(0);
    let mut z_pows: Vec<LaurentUni> = vec![LaurentUni::one(u)];
    let mut acc = LaurentUni::zero(u);
    for ((a, b), c) in p.terms() {
        let k = (b + lift) as usize;
        while z_pows.len() <= k {
            let next = &z_pows[z_pows.len() - 1] * &z_sub;
            z_pows.push(next);
        }
        let term = z_pows[k].shift(a * mn * mn).scale(c);
        acc = &acc + &term;
    }
    if lift > 0 {
        let den = z_sub.pow(lift)?;
        acc.div_exact(&den)
    } else {
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_powers_cancel() {
        let a = LaurentUni::power('u', 3);
        let b = LaurentUni::power('u', -3);
        assert_eq!(&a * &b, LaurentUni::one('u'));
    }

    #[test]
    fn divide_multiply_round_trip_in_z() {
        let p = &LaurentBi::t() - &LaurentBi::monomial(-1, 0, Coeff::one());
        let q = &(&p * &LaurentBi::monomial(0, -1, Coeff::one())) * &LaurentBi::z();
        assert_eq!(q, p);
    }

    #[test]
    fn square_of_half_power_difference() {
        // (q^{1/2} - q^{-1/2})^2 with u = q^{1/4}
        let z = LaurentUni::from_ints('u', &[(2, 1), (-2, -1)]);
        assert_eq!(&z * &z, LaurentUni::from_ints('u', &[(4, 1), (0, -2), (-4, 1)]));
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(specialize(&LaurentBi::t(), 2).unwrap(), LaurentUni::power('u', 4));
        assert_eq!(specialize(&LaurentBi::z(), 2).unwrap(), LaurentUni::from_ints('u', &[(2, 1), (-2, -1)]));
        let delta = LaurentBi::from_ints(&[(1, -1, 1), (-1, -1, -1)]);
        assert_eq!(specialize(&delta, 2).unwrap(), LaurentUni::from_ints('u', &[(2, 1), (-2, 1)]));
    }

    #[test]
    fn specialize_rejects_non_divisible() {
        let bad = LaurentBi::monomial(0, -1, Coeff::one());
        assert_eq!(specialize(&bad, 2), Err(ArithError::InexactDivision));
        assert!(specialize(&LaurentBi::one(), 0).is_err());
    }

    #[test]
    fn div_exact_detects_remainder() {
        let a = LaurentUni::from_ints('u', &[(2, 1), (0, 1)]);
        let b = LaurentUni::from_ints('u', &[(1, 1), (0, 1)]);
        assert_eq!(a.div_exact(&b), Err(ArithError::InexactDivision));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn mixing_kinds_or_variables_is_rejected() {
        let u = AnyLaurent::Uni(LaurentUni::one('u'));
        let q = AnyLaurent::Uni(LaurentUni::one('q'));
        let b = AnyLaurent::Bi(LaurentBi::one());
        assert_eq!(laurent_arith(&u, &b, RingOp::Add), Err(ArithError::KindMismatch));
        assert!(matches!(laurent_arith(&u, &q, RingOp::Mul), Err(ArithError::VariableMismatch(..))));
    }

    #[test]
    fn display() {
        let p = LaurentUni::from_ints('q', &[(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(p.to_string(), "q^-1 + q^-3 - q^-4");
    }
}
