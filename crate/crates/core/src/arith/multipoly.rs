//! Polynomials in the three coordinates `x¹, x², x³`, used as test gauge fields.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{GaussianRational, Grassmann, Rational};

/// Coefficient ring for [`MultiPoly3`]. Multiplication need not commute.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale_by(&self, c: &GaussianRational) -> Self;
}

impl Scalar for GaussianRational {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_by(&self, c: &GaussianRational) -> Self {
        self * c
    }
}

impl Scalar for Grassmann {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_by(&self, c: &GaussianRational) -> Self {
        self.scale(c)
    }
}

/// `Σ c_d · (x¹)^{d₁} (x²)^{d₂} (x³)^{d₃}`. Coordinates commute with every coefficient.
#[derive(Clone, PartialEq)]
pub struct MultiPoly3<C: Scalar = GaussianRational> {
    terms: BTreeMap<[u32; 3], C>,
}

impl<C: Scalar> Default for MultiPoly3<C> {
    fn default() -> Self {
        MultiPoly3 { terms: BTreeMap::new() }
    }
}

impl<C: Scalar> MultiPoly3<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: C) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn monomial(degs: [u32; 3], c: C) -> Self {
        let mut p = Self::default();
        p.add_term(degs, c);
        p
    }

    /// The coordinate `x^{μ+1}` (so `mu` is 0-based).
    pub fn coordinate(mu: usize) -> Self {
        let mut d = [0; 3];
        d[mu] = 1;
        Self::monomial(d, C::one())
    }

    fn add_term(&mut self, degs: [u32; 3], c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&degs) {
            Some(x) => {
                *x = x.add_ref(&c);
                if x.is_zero() {
                    self.terms.remove(&degs);
                }
            }
            None => {
                self.terms.insert(degs, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], &C)> + '_ {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|d| d.iter().sum()).max()
    }

    /// Exact partial derivative `∂/∂x^{μ+1}`.
    pub fn deriv(&self, mu: usize) -> Self {
        let mut p = Self::default();
        for (d, c) in &self.terms {
            if d[mu] == 0 {
                continue;
            }
            let mut nd = *d;
            nd[mu] -= 1;
            p.add_term(nd, c.scale_by(&GaussianRational::from_int(d[mu] as i64)));
        }
        p
    }

    /// Evaluate at a point with rational coordinates.
    pub fn eval(&self, x: &[Rational; 3]) -> C {
        let mut acc = C::zero();
        for (d, c) in &self.terms {
            let mut m = Rational::one();
            for k in 0..3 {
                for _ in 0..d[k] {
                    m *= &x[k];
                }
            }
            acc = acc.add_ref(&c.scale_by(&GaussianRational::real(m)));
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut p = Self::default();
        for (&d, x) in &self.terms {
            p.add_term(d, x.scale_by(c));
        }
        p
    }

    /// Multiply every coefficient on the left by `c`.
    pub fn left_mul(&self, c: &C) -> Self {
        let mut p = Self::default();
        for (&d, x) in &self.terms {
            p.add_term(d, c.mul_ref(x));
        }
        p
    }
}

impl<C: Scalar> Add for &MultiPoly3<C> {
    type Output = MultiPoly3<C>;
    fn add(self, o: &MultiPoly3<C>) -> MultiPoly3<C> {
        let mut p = self.clone();
        for (&d, c) in &o.terms {
            p.add_term(d, c.clone());
        }
        p
    }
}

impl<C: Scalar> Sub for &MultiPoly3<C> {
    type Output = MultiPoly3<C>;
    fn sub(self, o: &MultiPoly3<C>) -> MultiPoly3<C> {
        self + &-o
    }
}

impl<C: Scalar> Neg for &MultiPoly3<C> {
    type Output = MultiPoly3<C>;
    fn neg(self) -> MultiPoly3<C> {
        MultiPoly3 { terms: self.terms.iter().map(|(&d, c)| (d, c.neg_ref())).collect() }
    }
}

impl<C: Scalar> Mul for &MultiPoly3<C> {
    type Output = MultiPoly3<C>;
    fn mul(self, o: &MultiPoly3<C>) -> MultiPoly3<C> {
        let mut p = MultiPoly3::default();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &o.terms {
                p.add_term([d1[0] + d2[0], d1[1] + d2[1], d1[2] + d2[2]], c1.mul_ref(c2));
            }
        }
        p
    }
}

impl<C: Scalar> fmt::Debug for MultiPoly3<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c:?})·x^{d:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Integer rational as a point coordinate.
#[cfg(test)]
pub(crate) fn int_point(x: [i64; 3]) -> [Rational; 3] {
    x.map(|v| Rational::from_integer(v.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MultiPoly3<GaussianRational>;

    #[test]
    fn product_rule() {
        let x = P::coordinate(0);
        let y = P::coordinate(1);
        let f = &(&x * &x) + &y;
        let g = &(&x * &y) + &P::constant(GaussianRational::from_int(3));
        let lhs = (&f * &g).deriv(0);
        let rhs = &(&f.deriv(0) * &g) + &(&f * &g.deriv(0));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation() {
        let x = P::coordinate(2);
        let f = &(&x * &x) - &P::constant(GaussianRational::one());
        assert_eq!(f.eval(&int_point([0, 0, 3])), GaussianRational::from_int(8));
        assert_eq!(f.degree(), Some(2));
    }
}
