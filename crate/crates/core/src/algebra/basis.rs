use num_traits::One;

use super::{AlgebraContext, AlgebraError, GradedMatrix};
use crate::arith::{rat, GaussianRational};

/// `ê_ab = e_ab − δ_ab (−1)^{[a]} / (M−N) · I`, tagged with parity `[a]+[b]`.
pub fn ehat(a: usize, b: usize, ctx: AlgebraContext) -> Result<GradedMatrix, AlgebraError> {
    let mut m = GradedMatrix::unit(ctx, a, b)?;
    if a == b {
        let shift = GaussianRational::from_ratio(if ctx.p(a - 1) == 0 { 1 } else { -1 }, ctx.mn());
        for i in 0..ctx.dim() {
            *m.at_mut(i, i) -= &shift;
        }
        m = m.retagged();
    }
    Ok(m)
}

/// The Hermitian generators built from the `ê` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `Ê_ab = (i/2)(ê_ab − ê_ba)`, `a ≠ b`.
    E(usize, usize),
    /// `F̂_ab = (1/2)(ê_ab + ê_ba)`, `a ≠ b`.
    F(usize, usize),
    /// `Ĥ_cc = Σ_{l=1}^{c} l (ê_ll − ê_{l+1,l+1})`, `1 ≤ c < M+N`.
    H(usize),
}

pub fn generator(g: Generator, ctx: AlgebraContext) -> Result<GradedMatrix, AlgebraError> {
    match g {
        Generator::E(a, b) | Generator::F(a, b) => {
            if a == b {
                ctx.check(a)?;
                return Err(AlgebraError::DiagonalGenerator);
            }
            let x = ehat(a, b, ctx)?;
            let y = ehat(b, a, ctx)?;
            Ok(match g {
                Generator::E(..) => (&x - &y).scale(&GaussianRational::new(rat(0, 1), rat(1, 2))),
                _ => (&x + &y).scale(&GaussianRational::from_ratio(1, 2)),
            })
        }
        Generator::H(c) => {
            if c == 0 || c >= ctx.dim() {
                return Err(AlgebraError::CartanIndex(c, ctx.dim() - 1));
            }
            let mut acc = GradedMatrix::zero(ctx);
            for l in 1..=c {
                let d = &ehat(l, l, ctx)? - &ehat(l + 1, l + 1, ctx)?;
                acc = &acc + &d.scale(&GaussianRational::from_int(l as i64));
            }
            Ok(acc)
        }
    }
}

/// Right side of the super-commutation relation:
/// `ê_ad δ_bc − (−1)^{([a]+[b])([c]+[d])} ê_cb δ_da`.
pub fn eq1_rhs(a: usize, b: usize, c: usize, d: usize, ctx: AlgebraContext) -> Result<GradedMatrix, AlgebraError> {
    for i in [a, b, c, d] {
        ctx.check(i)?;
    }
    let mut acc = GradedMatrix::zero(ctx);
    if b == c {
        acc = &acc + &ehat(a, d, ctx)?;
    }
    if d == a {
        let pab = ctx.p(a - 1) + ctx.p(b - 1);
        let pcd = ctx.p(c - 1) + ctx.p(d - 1);
        let s = if (pab * pcd) % 2 == 0 { GaussianRational::one() } else { -GaussianRational::one() };
        acc = &acc - &ehat(c, b, ctx)?.scale(&s);
    }
    if acc.is_zero() {
        return Ok(GradedMatrix::zero(ctx));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn ctx(m: usize, n: usize) -> AlgebraContext {
        AlgebraContext::new(m, n).unwrap()
    }

    fn diag(c: AlgebraContext, d: &[(i64, i64)]) -> GradedMatrix {
        let n = c.dim();
        let mut e = vec![GaussianRational::zero(); n * n];
        for (i, &(p, q)) in d.iter().enumerate() {
            e[i * n + i] = GaussianRational::from_ratio(p, q);
        }
        GradedMatrix::from_entries(c, e).unwrap()
    }

    #[test]
    fn ehat_examples() {
        let c = ctx(3, 1);
        assert_eq!(ehat(1, 2, c).unwrap(), GradedMatrix::unit(c, 1, 2).unwrap());
        assert_eq!(ehat(1, 1, c).unwrap(), diag(c, &[(1, 2), (-1, 2), (-1, 2), (-1, 2)]));
        assert_eq!(ehat(4, 4, c).unwrap(), diag(c, &[(1, 2), (1, 2), (1, 2), (3, 2)]));
    }

    #[test]
    fn generator_examples() {
        let c = ctx(3, 1);
        let f12 = generator(Generator::F(1, 2), c).unwrap();
        let expect = (&GradedMatrix::unit(c, 1, 2).unwrap() + &GradedMatrix::unit(c, 2, 1).unwrap())
            .scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(f12, expect);
        let e12 = generator(Generator::E(1, 2), c).unwrap();
        let expect = (&GradedMatrix::unit(c, 1, 2).unwrap() - &GradedMatrix::unit(c, 2, 1).unwrap())
            .scale(&GaussianRational::new(rat(0, 1), rat(1, 2)));
        assert_eq!(e12, expect);
        let c21 = ctx(2, 1);
        assert_eq!(generator(Generator::H(1), c21).unwrap(), diag(c21, &[(1, 1), (-1, 1), (0, 1)]));
        assert!(generator(Generator::H(3), c21).is_err());
        assert!(generator(Generator::E(2, 2), c21).is_err());
    }
}
