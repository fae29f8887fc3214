//! Grassmann numbers over the Gaussian rationals.
//!
//! Odd gauge-field components anticommute, so checking identities that
//! reorder them needs a coefficient ring where they really do. A
//! [`Grassmann`] value is a finite sum `Σ c_S θ_S` over subsets `S` of up to
//! 64 generators, with `θ_S` the ordered product of the generators in `S`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Grassmann {
    terms: BTreeMap<u64, GaussianRational>,
}

/// Sign from moving the generators of `b` past those of `a` when merging.
fn merge_sign(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j == 63 { 0 } else { a >> (j + 1) };
        swaps += above.count_ones();
    }
    swaps % 2 == 1
}

impl Grassmann {
    pub fn scalar(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        Grassmann { terms }
    }

    /// The generator `θ_k`.
    pub fn generator(k: u32) -> Self {
        assert!(k < 64, "at most 64 Grassmann generators");
        let mut terms = BTreeMap::new();
        terms.insert(1u64 << k, GaussianRational::one());
        Grassmann { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (u64, GaussianRational)>>(it: I) -> Self {
        let mut g = Grassmann::default();
        for (m, c) in it {
            g.add_term(m, c);
        }
        g
    }

    fn add_term(&mut self, mask: u64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_insert_with(GaussianRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussianRational)> + '_ {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    /// The parity when homogeneous (`0` even, `1` odd); `None` otherwise or for zero.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| (m.count_ones() % 2) as u8);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Grassmann::from_terms(self.terms.iter().map(|(&m, x)| (m, x * c)))
    }
}

impl Zero for Grassmann {
    fn zero() -> Self {
        Grassmann::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Grassmann {
    fn one() -> Self {
        Grassmann::scalar(GaussianRational::one())
    }
}

impl Add for &Grassmann {
    type Output = Grassmann;
    fn add(self, o: &Grassmann) -> Grassmann {
        let mut out = self.clone();
        for (&m, c) in &o.terms {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub for &Grassmann {
    type Output = Grassmann;
    fn sub(self, o: &Grassmann) -> Grassmann {
        self + &-o
    }
}

impl Neg for &Grassmann {
    type Output = Grassmann;
    fn neg(self) -> Grassmann {
        Grassmann { terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect() }
    }
}

impl Mul for &Grassmann {
    type Output = Grassmann;
    fn mul(self, o: &Grassmann) -> Grassmann {
        let mut out = Grassmann::default();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &o.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca * cb;
                out.add_term(a | b, if merge_sign(a, b) { -c } else { c });
            }
        }
        out
    }
}

impl Add for Grassmann {
    type Output = Grassmann;
    fn add(self, o: Grassmann) -> Grassmann {
        &self + &o
    }
}

impl Mul for Grassmann {
    type Output = Grassmann;
    fn mul(self, o: Grassmann) -> Grassmann {
        &self * &o
    }
}

impl fmt::Debug for Grassmann {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&m, c)| {
                let gens: Vec<String> = (0..64).filter(|k| m >> k & 1 == 1).map(|k| format!("θ{k}")).collect();
                if gens.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}·{}", gens.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_anticommute() {
        let a = Grassmann::generator(0);
        let b = Grassmann::generator(5);
        assert_eq!(&a * &b, -&(&b * &a));
        assert!((&a * &a).is_zero());
        assert_eq!((&a * &b).parity(), Some(0));
    }

    #[test]
    fn associativity_on_three_generators() {
        let x = &Grassmann::generator(2) + &Grassmann::one();
        let y = &Grassmann::generator(0) + &Grassmann::generator(1);
        let z = Grassmann::generator(1);
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }
}
