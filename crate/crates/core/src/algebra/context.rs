use super::AlgebraError;

/// Parity of an index or a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grading {
    Even,
    Odd,
}

impl Grading {
    pub fn from_bit(b: u8) -> Self {
        if b % 2 == 0 {
            Grading::Even
        } else {
            Grading::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Grading::Even => 0,
            Grading::Odd => 1,
        }
    }

    /// Parity of a product.
    pub fn add(self, o: Grading) -> Grading {
        Grading::from_bit(self.bit() + o.bit())
    }
}

/// The pair `(M, N)` fixing the superalgebra su(M|N).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    m: usize,
    n: usize,
}

impl AlgebraContext {
    /// Both must be positive and `M ≠ N`; `M − N` may be negative.
    pub fn new(m: usize, n: usize) -> Result<Self, AlgebraError> {
        if m == 0 || n == 0 || m == n {
            return Err(AlgebraError::InvalidContext(m, n));
        }
        Ok(AlgebraContext { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Signed `M − N`.
    pub fn mn(&self) -> i64 {
        self.m as i64 - self.n as i64
    }

    /// Grading of the 1-based index `a`.
    pub fn grading(&self, a: usize) -> Result<Grading, AlgebraError> {
        self.check(a)?;
        Ok(self.g0(a - 1))
    }

    pub(crate) fn check(&self, a: usize) -> Result<(), AlgebraError> {
        if a == 0 || a > self.dim() {
            Err(AlgebraError::IndexOutOfRange { index: a, dim: self.dim() })
        } else {
            Ok(())
        }
    }

    /// Grading bit of the 0-based index `i`.
    pub(crate) fn p(&self, i: usize) -> u8 {
        u8::from(i >= self.m)
    }

    pub(crate) fn g0(&self, i: usize) -> Grading {
        Grading::from_bit(self.p(i))
    }

    /// All contexts with `M + N ≤ max_dim`.
    pub fn all_up_to(max_dim: usize) -> Vec<AlgebraContext> {
        let mut out = Vec::new();
        for d in 2..=max_dim {
            for m in 1..d {
                if let Ok(c) = AlgebraContext::new(m, d - m) {
                    out.push(c);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading_examples() {
        let c31 = AlgebraContext::new(3, 1).unwrap();
        assert_eq!(c31.grading(1).unwrap(), Grading::Even);
        assert_eq!(c31.grading(4).unwrap(), Grading::Odd);
        assert_eq!(AlgebraContext::new(2, 1).unwrap().grading(3).unwrap(), Grading::Odd);
        assert!(c31.grading(5).is_err());
        assert!(c31.grading(0).is_err());
    }

    #[test]
    fn rejects_equal_sizes() {
        assert!(AlgebraContext::new(2, 2).is_err());
        assert_eq!(AlgebraContext::all_up_to(5).len(), 8);
    }
}
