use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgebraContext, AlgebraError, Grading};
use crate::arith::GaussianRational;

/// A square matrix over the `(M+N)`-dimensional graded index set.
///
/// `grading` is set when the matrix is known to be homogeneous. It is
/// propagated through sums of equal parity, products and scalings, and
/// dropped otherwise.
#[derive(Clone)]
pub struct GradedMatrix {
    ctx: AlgebraContext,
    entries: Vec<GaussianRational>,
    grading: Option<Grading>,
}

impl GradedMatrix {
    pub fn zero(ctx: AlgebraContext) -> Self {
        let d = ctx.dim();
        GradedMatrix { ctx, entries: vec![GaussianRational::zero(); d * d], grading: Some(Grading::Even) }
    }

    pub fn identity(ctx: AlgebraContext) -> Self {
        let mut m = Self::zero(ctx);
        for i in 0..ctx.dim() {
            m.entries[i * ctx.dim() + i] = GaussianRational::one();
        }
        m
    }

    /// The bare matrix unit `e_ab` (1-based indices).
    pub fn unit(ctx: AlgebraContext, a: usize, b: usize) -> Result<Self, AlgebraError> {
        ctx.check(a)?;
        ctx.check(b)?;
        let mut m = Self::zero(ctx);
        m.entries[(a - 1) * ctx.dim() + (b - 1)] = GaussianRational::one();
        m.grading = Some(ctx.g0(a - 1).add(ctx.g0(b - 1)));
        Ok(m)
    }

    /// Row-major entries; the grading tag is inferred from the nonzero pattern.
    pub fn from_entries(ctx: AlgebraContext, entries: Vec<GaussianRational>) -> Result<Self, AlgebraError> {
        if entries.len() != ctx.dim() * ctx.dim() {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut m = GradedMatrix { ctx, entries, grading: None };
        m.grading = m.infer_grading();
        Ok(m)
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn grading(&self) -> Option<Grading> {
        self.grading
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[(i - 1) * self.dim() + (j - 1)]
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.dim() + j]
    }

    pub(crate) fn at_mut(&mut self, i: usize, j: usize) -> &mut GaussianRational {
        let d = self.dim();
        self.grading = None;
        &mut self.entries[i * d + j]
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    /// Parity shared by every nonzero entry, if any. The zero matrix counts as even.
    pub fn infer_grading(&self) -> Option<Grading> {
        let d = self.dim();
        let mut found: Option<u8> = None;
        for i in 0..d {
            for j in 0..d {
                if self.at(i, j).is_zero() {
                    continue;
                }
                let p = (self.ctx.p(i) + self.ctx.p(j)) % 2;
                match found {
                    None => found = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        Some(Grading::from_bit(found.unwrap_or(0)))
    }

    /// Re-tag from the entries; used after entrywise edits.
    pub fn retagged(mut self) -> Self {
        self.grading = self.infer_grading();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        GradedMatrix {
            ctx: self.ctx,
            entries: self.entries.iter().map(|x| x * c).collect(),
            grading: if c.is_zero() { Some(Grading::Even) } else { self.grading },
        }
    }

    /// Plain conjugate transpose.
    pub fn dagger(&self) -> Self {
        let d = self.dim();
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                entries.push(self.at(j, i).conj());
            }
        }
        GradedMatrix { ctx: self.ctx, entries, grading: self.grading }
    }

    /// `Σ_i (−1)^{[i]} X_ii`.
    pub fn supertrace(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for i in 0..self.dim() {
            if self.ctx.p(i) == 0 {
                acc += self.at(i, i);
            } else {
                acc -= self.at(i, i);
            }
        }
        acc
    }

    fn zip(&self, o: &Self, f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational) -> Self {
        assert_eq!(self.ctx, o.ctx, "matrices from different contexts");
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect();
        let grading = match (self.grading, o.grading) {
            (Some(x), Some(y)) if x == y => Some(x),
            _ => None,
        };
        let mut m = GradedMatrix { ctx: self.ctx, entries, grading };
        if m.grading.is_none() {
            m.grading = m.infer_grading();
        }
        m
    }
}

/// Entrywise equality; the grading tag is bookkeeping and does not take part.
impl PartialEq for GradedMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.ctx == o.ctx && self.entries == o.entries
    }
}

impl Eq for GradedMatrix {}

impl Add for &GradedMatrix {
    type Output = GradedMatrix;
    fn add(self, o: &GradedMatrix) -> GradedMatrix {
        self.zip(o, |a, b| a + b)
    }
}

impl Sub for &GradedMatrix {
    type Output = GradedMatrix;
    fn sub(self, o: &GradedMatrix) -> GradedMatrix {
        self.zip(o, |a, b| a - b)
    }
}

impl Neg for &GradedMatrix {
    type Output = GradedMatrix;
    fn neg(self) -> GradedMatrix {
        self.scale(&-GaussianRational::one())
    }
}

impl Mul for &GradedMatrix {
    type Output = GradedMatrix;
    fn mul(self, o: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.ctx, o.ctx, "matrices from different contexts");
        let d = self.dim();
        let mut entries = vec![GaussianRational::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = o.at(k, j);
                    if !b.is_zero() {
                        entries[i * d + j] += a * b;
                    }
                }
            }
        }
        let grading = match (self.grading, o.grading) {
            (Some(x), Some(y)) => Some(x.add(y)),
            _ => None,
        };
        GradedMatrix { ctx: self.ctx, entries, grading }
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        writeln!(f, "GradedMatrix[{:?}] {{", self.grading)?;
        for i in 0..d {
            let row: Vec<String> = (0..d).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "}}")
    }
}
