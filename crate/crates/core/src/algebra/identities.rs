use num_bigint::BigInt;
use num_traits::Zero;

use super::{ehat, AlgebraContext, AlgebraError, GradedMatrix};
use crate::arith::{GaussianRational, Rational};

pub fn supertrace(x: &GradedMatrix) -> GaussianRational {
    x.supertrace()
}

/// `XY − (−1)^{[X][Y]} YX` on homogeneous arguments.
pub fn super_bracket(x: &GradedMatrix, y: &GradedMatrix) -> Result<GradedMatrix, AlgebraError> {
    let (gx, gy) = match (x.grading(), y.grading()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(AlgebraError::Ungraded),
    };
    if x.ctx() != y.ctx() {
        return Err(AlgebraError::ShapeMismatch);
    }
    let xy = x * y;
    let yx = y * x;
    Ok(if gx.bit() * gy.bit() == 1 { &xy + &yx } else { &xy - &yx })
}

fn sgn(bits: u8) -> i64 {
    if bits % 2 == 0 {
        1
    } else {
        -1
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn check_all(ctx: AlgebraContext, idx: &[usize]) -> Result<(), AlgebraError> {
    idx.iter().try_for_each(|&i| ctx.check(i))
}

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Closed form of `Str(ê_ab ê_cd)`:
/// `(−1)^{[a]} δ_ad δ_bc − (−1)^{[a]+[c]} δ_ab δ_cd / (M−N)`.
pub fn str2_closed(a: usize, b: usize, c: usize, d: usize, ctx: AlgebraContext) -> Result<GaussianRational, AlgebraError> {
    check_all(ctx, &[a, b, c, d])?;
    let g = |i: usize| ctx.p(i - 1);
    let mn = ctx.mn();
    let r = frac(sgn(g(a)) * delta(a, d) * delta(b, c), 1)
        - frac(sgn(g(a) + g(c)) * delta(a, b) * delta(c, d), mn);
    Ok(r.into())
}

/// Closed form of `Str(ê_ab ê_cd ê_ef)`, five delta patterns.
#[allow(clippy::too_many_arguments)]
pub fn str3_closed(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e: usize,
    f: usize,
    ctx: AlgebraContext,
) -> Result<GaussianRational, AlgebraError> {
    check_all(ctx, &[a, b, c, d, e, f])?;
    let g = |i: usize| ctx.p(i - 1);
    let mn = ctx.mn();
    let r = frac(sgn(g(a)) * delta(a, f) * delta(b, c) * delta(d, e), 1)
        - frac(sgn(g(a) + g(c)) * delta(a, b) * delta(c, f) * delta(d, e), mn)
        - frac(sgn(g(c) + g(f)) * delta(c, d) * delta(a, f) * delta(b, e), mn)
        - frac(sgn(g(f) + g(a)) * delta(e, f) * delta(a, d) * delta(b, c), mn)
        + frac(2 * sgn(g(a) + g(c) + g(e)) * delta(a, b) * delta(c, d) * delta(e, f), mn * mn);
    Ok(r.into())
}

/// `(−1)^{[j]} δ_il δ_jk − δ_ij δ_kl / (M−N)`.
pub fn fierz_rhs(i: usize, j: usize, k: usize, l: usize, ctx: AlgebraContext) -> Result<GaussianRational, AlgebraError> {
    check_all(ctx, &[i, j, k, l])?;
    let r = frac(sgn(ctx.p(j - 1)) * delta(i, l) * delta(j, k), 1) - frac(delta(i, j) * delta(k, l), ctx.mn());
    Ok(r.into())
}

/// `Σ_{a,b} (−1)^{[b]} (ê_ab)_ij (ê_ba)_kl`, summed explicitly over the basis.
pub fn fierz_lhs(i: usize, j: usize, k: usize, l: usize, ctx: AlgebraContext) -> Result<GaussianRational, AlgebraError> {
    check_all(ctx, &[i, j, k, l])?;
    let n = ctx.dim();
    let mut acc = GaussianRational::zero();
    for a in 1..=n {
        for b in 1..=n {
            let x = ehat(a, b, ctx)?;
            let y = ehat(b, a, ctx)?;
            let t = x.get(i, j) * y.get(k, l);
            if ctx.p(b - 1) == 0 {
                acc += t;
            } else {
                acc -= &t;
            }
        }
    }
    Ok(acc)
}

/// `Σ_{a,b} (−1)^{[b]} ê_ab ê_ba`, by explicit matrix products.
pub fn casimir(ctx: AlgebraContext) -> GradedMatrix {
    let n = ctx.dim();
    let mut acc = GradedMatrix::zero(ctx);
    for a in 1..=n {
        for b in 1..=n {
            let p = &ehat(a, b, ctx).expect("in range") * &ehat(b, a, ctx).expect("in range");
            acc = if ctx.p(b - 1) == 0 { &acc + &p } else { &acc - &p };
        }
    }
    acc
}

/// `C₂ = ((M−N)² − 1) / (2(M−N))`.
pub fn casimir_value(ctx: AlgebraContext) -> Rational {
    let mn = ctx.mn();
    frac(mn * mn - 1, 2 * mn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, n: usize) -> AlgebraContext {
        AlgebraContext::new(m, n).unwrap()
    }

    fn q(p: i64, r: i64) -> GaussianRational {
        GaussianRational::from_ratio(p, r)
    }

    #[test]
    fn supertrace_examples() {
        let c = ctx(3, 1);
        assert_eq!(supertrace(&GradedMatrix::identity(c)), q(2, 1));
        assert!(supertrace(&ehat(1, 1, c).unwrap()).is_zero());
        assert_eq!(supertrace(&GradedMatrix::unit(c, 4, 4).unwrap()), q(-1, 1));
    }

    #[test]
    fn bracket_examples() {
        let c = ctx(3, 1);
        let e = |a, b| ehat(a, b, c).unwrap();
        assert_eq!(super_bracket(&e(1, 2), &e(2, 1)).unwrap(), &e(1, 1) - &e(2, 2));
        assert_eq!(super_bracket(&e(1, 4), &e(4, 1)).unwrap(), &e(1, 1) + &e(4, 4));
        assert!(super_bracket(&e(1, 2), &e(3, 4)).unwrap().is_zero());
        let mixed = &e(1, 2) + &e(1, 4);
        assert_eq!(super_bracket(&mixed, &e(1, 2)), Err(AlgebraError::Ungraded));
    }

    #[test]
    fn closed_form_examples() {
        let c = ctx(3, 1);
        assert_eq!(str2_closed(1, 2, 2, 1, c).unwrap(), q(1, 1));
        assert_eq!(str2_closed(1, 1, 1, 1, c).unwrap(), q(1, 2));
        assert_eq!(str2_closed(4, 4, 4, 4, c).unwrap(), q(-3, 2));
        assert_eq!(str3_closed(1, 2, 2, 3, 3, 1, ctx(2, 1)).unwrap(), q(1, 1));
        assert!(str3_closed(1, 2, 3, 4, 2, 3, ctx(4, 2)).unwrap().is_zero());
        assert!(str3_closed(1, 1, 1, 1, 1, 1, c).unwrap().is_zero());
    }

    #[test]
    fn fierz_examples() {
        let c = ctx(3, 1);
        for (idx, v) in [((1, 1, 1, 1), q(1, 2)), ((1, 2, 2, 1), q(1, 1)), ((1, 4, 4, 1), q(-1, 1))] {
            let (i, j, k, l) = idx;
            assert_eq!(fierz_rhs(i, j, k, l, c).unwrap(), v);
            assert_eq!(fierz_lhs(i, j, k, l, c).unwrap(), v);
        }
    }

    #[test]
    fn casimir_examples() {
        let c = ctx(3, 1);
        assert_eq!(casimir_value(c), frac(3, 4));
        assert_eq!(casimir(c), GradedMatrix::identity(c).scale(&q(3, 2)));
        assert!(casimir_value(ctx(2, 1)).is_zero());
        assert!(casimir(ctx(2, 1)).is_zero());
        assert_eq!(casimir(ctx(4, 2)), GradedMatrix::identity(ctx(4, 2)).scale(&q(3, 2)));
        assert_eq!(casimir_value(ctx(1, 3)), frac(-3, 4));
    }
}
