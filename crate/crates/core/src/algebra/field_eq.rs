//! The field-equation property of the action: contracting the
//! Euler–Lagrange expression of the component density with `ε^{μνρ}`
//! reproduces the field tensor.
//!
//! Gauge fields are polynomials of degree at most 2 in `x¹, x², x³`, and
//! every derivative is taken exactly. Odd components only make sense with
//! anticommuting values, so the check is normally run with [`Grassmann`]
//! coefficients; c-number coefficients are accepted as well.

use std::collections::HashMap;

use rand::seq::index::sample;
use rand::Rng;

use super::gauge::{component_terms, field_strength, permutations3, random_gq, CommutatorSign, Factor, GaugePoint};
use super::{AlgebraContext, AlgebraError};
use crate::arith::{GaussianRational, Grassmann, MultiPoly3, Rational, Scalar};

/// Highest polynomial degree accepted for test fields.
pub const MAX_FIELD_DEGREE: u32 = 2;

/// `A_μ^{ab}(x)` as polynomials, 0-based `μ, a, b`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyGaugeField<C: Scalar = GaussianRational> {
    n: usize,
    comps: Vec<MultiPoly3<C>>,
}

fn monomials(degree: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            for k in 0..=degree - i - j {
                out.push([i, j, k]);
            }
        }
    }
    out
}

impl<C: Scalar> PolyGaugeField<C> {
    pub fn zero(ctx: AlgebraContext) -> Self {
        let n = ctx.dim();
        PolyGaugeField { n, comps: vec![MultiPoly3::zero(); 3 * n * n] }
    }

    pub fn component(&self, mu: usize, a: usize, b: usize) -> &MultiPoly3<C> {
        &self.comps[(mu * self.n + a) * self.n + b]
    }

    pub fn set(&mut self, mu: usize, a: usize, b: usize, p: MultiPoly3<C>) {
        let n = self.n;
        self.comps[(mu * n + a) * n + b] = p;
    }

    pub fn degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(MultiPoly3::degree).max()
    }

    /// Component values and first derivatives at `x`.
    pub fn point(&self, x: &[Rational; 3]) -> GaugePoint<C> {
        let n = self.n;
        let mut p = GaugePoint::zero_dim(n);
        for mu in 0..3 {
            for a in 0..n {
                for b in 0..n {
                    let c = self.component(mu, a, b);
                    p.set_a(mu, a, b, c.eval(x));
                    for nu in 0..3 {
                        p.set_d(nu, mu, a, b, c.deriv(nu).eval(x));
                    }
                }
            }
        }
        p
    }
}

impl PolyGaugeField<GaussianRational> {
    /// Random c-number components of the given degree.
    pub fn random_cnumber<R: Rng>(ctx: AlgebraContext, rng: &mut R, degree: u32) -> Self {
        let mut f = Self::zero(ctx);
        let mons = monomials(degree);
        for c in f.comps.iter_mut() {
            for &m in &mons {
                *c = &*c + &MultiPoly3::monomial(m, random_gq(rng));
            }
        }
        f
    }
}

impl PolyGaugeField<Grassmann> {
    /// Random components valued in a Grassmann algebra on `generators`
    /// generators: each coefficient of an even component is `c + c′ θ_iθ_j`,
    /// each coefficient of an odd component is `c θ_i + c′ θ_j`, with real
    /// rational `c, c′` (the density has real coefficients, so complex ones
    /// would only cost time).
    pub fn random_grassmann<R: Rng>(ctx: AlgebraContext, rng: &mut R, degree: u32, generators: u32) -> Self {
        assert!((2..=64).contains(&generators));
        let n = ctx.dim();
        let mut f = Self::zero(ctx);
        let mons = monomials(degree);
        for mu in 0..3 {
            for a in 0..n {
                for b in 0..n {
                    let odd = (ctx.p(a) + ctx.p(b)) % 2 == 1;
                    let mut poly = MultiPoly3::zero();
                    for &m in &mons {
                        let pair = sample(rng, generators as usize, 2);
                        let (i, j) = (pair.index(0) as u32, pair.index(1) as u32);
                        let coeff = if odd {
                            &Grassmann::generator(i).scale(&random_q(rng))
                                + &Grassmann::generator(j).scale(&random_q(rng))
                        } else {
                            &Grassmann::scalar(random_q(rng))
                                + &(&Grassmann::generator(i) * &Grassmann::generator(j)).scale(&random_q(rng))
                        };
                        poly = &poly + &MultiPoly3::monomial(m, coeff);
                    }
                    f.set(mu, a, b, poly);
                }
            }
        }
        f
    }
}

fn random_q<R: Rng>(rng: &mut R) -> GaussianRational {
    GaussianRational::from_ratio(rng.random_range(-5..=5), rng.random_range(1..=4))
}

/// `∂L/∂A_ρ^{ab} − Σ_ν ∂_ν (∂L/∂(∂_ν A_ρ^{ab}))` at `x` for the component
/// density, indexed `[ρ][a][b]`. Derivatives with respect to a field variable
/// act from the left: removing a factor of parity `p` from behind factors of
/// total parity `q` costs `(−1)^{pq}`.
pub fn euler_lagrange<C: Scalar>(
    field: &PolyGaugeField<C>,
    x: &[Rational; 3],
    ctx: AlgebraContext,
) -> Result<Vec<C>, AlgebraError> {
    if let Some(d) = field.degree() {
        if d > MAX_FIELD_DEGREE {
            return Err(AlgebraError::DegreeTooHigh { max: MAX_FIELD_DEGREE, found: d });
        }
    }
    let n = ctx.dim();
    let pt = field.point(x);
    // Second derivatives ∂_σ∂_ν A_ρ^{ab}.
    let mut dd = vec![C::zero(); 27 * n * n];
    let ddi = |s: usize, nu: usize, rho: usize, a: usize, b: usize| (((s * 3 + nu) * 3 + rho) * n + a) * n + b;
    for rho in 0..3 {
        for a in 0..n {
            for b in 0..n {
                let c = field.component(rho, a, b);
                for nu in 0..3 {
                    let cn = c.deriv(nu);
                    for s in 0..3 {
                        dd[ddi(s, nu, rho, a, b)] = cn.deriv(s).eval(x);
                    }
                }
            }
        }
    }
    let grad = |f: &Factor, s: usize| -> C {
        match *f {
            Factor::A { mu, a, b } => pt.d(s, mu, a, b).clone(),
            Factor::D { nu, rho, a, b } => dd[ddi(s, nu, rho, a, b)].clone(),
        }
    };

    let mut el = vec![C::zero(); 3 * n * n];
    let mut pending: HashMap<(usize, Factor), C> = HashMap::new();
    for term in component_terms(ctx) {
        let mut before = 0u8;
        for (k, target) in term.factors.iter().enumerate() {
            let p = target.parity(ctx);
            let coeff = if p * before % 2 == 1 { -&term.coeff } else { term.coeff.clone() };
            before += p;
            let rest: Vec<&Factor> = term.factors.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, f)| f).collect();
            match *target {
                Factor::A { mu, a, b } => {
                    let i = (mu * n + a) * n + b;
                    if let [first, second] = rest[..] {
                        // Collect Σ c·g for a shared left factor f and multiply once: Σ c·f·g = f·Σ c·g.
                        let acc = pending.entry((i, *first)).or_insert_with(C::zero);
                        *acc = acc.add_ref(&second.eval(&pt).scale_by(&coeff));
                    } else {
                        let mut v = C::one();
                        for f in &rest {
                            v = v.mul_ref(f.eval(&pt));
                        }
                        el[i] = el[i].add_ref(&v.scale_by(&coeff));
                    }
                }
                Factor::D { nu, rho, a, b } => {
                    let mut total = C::zero();
                    for j in 0..rest.len() {
                        let mut v = C::one();
                        for (l, f) in rest.iter().enumerate() {
                            v = if l == j { v.mul_ref(&grad(f, nu)) } else { v.mul_ref(f.eval(&pt)) };
                        }
                        total = total.add_ref(&v);
                    }
                    let i = (rho * n + a) * n + b;
                    el[i] = el[i].sub_ref(&total.scale_by(&coeff));
                }
            }
        }
    }
    for ((i, first), acc) in pending {
        el[i] = el[i].add_ref(&first.eval(&pt).mul_ref(&acc));
    }
    Ok(el)
}

/// Matrix `Σ_{ab} X^{ab} ê_ab` from components `X^{ab}` (row-major).
fn expand_in_ehat<C: Scalar>(x: &[C], ctx: AlgebraContext) -> Vec<C> {
    let n = ctx.dim();
    let mut trace = C::zero();
    for a in 0..n {
        let v = &x[a * n + a];
        trace = if ctx.p(a) == 0 { trace.add_ref(v) } else { trace.sub_ref(v) };
    }
    let shift = trace.scale_by(&GaussianRational::from_ratio(1, ctx.mn()));
    let mut m = x.to_vec();
    for a in 0..n {
        m[a * n + a] = m[a * n + a].sub_ref(&shift);
    }
    m
}

/// Per-pair outcome of the field-equation comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldEquationOutcome<C: Scalar = GaussianRational> {
    /// First `(μ, ν)` (0-based) whose matrices differ, with both matrices row-major.
    pub mismatch: Option<((usize, usize), Vec<C>, Vec<C>)>,
}

impl<C: Scalar> FieldEquationOutcome<C> {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compare `(2π/k) ε^{μνρ} (−1)^{[b]} ∂S/∂A_ρ^{ab} ê_ba` with `F_μν^{ba} ê_ba`
/// as matrices for every `(μ, ν)`. With `S = (k/4π)∫L` the left side is
/// `(1/2) ε^{μνρ} (−1)^{[b]} EL_ρ^{ab} ê_ba`.
pub fn field_equation_compare<C: Scalar>(
    field: &PolyGaugeField<C>,
    x: &[Rational; 3],
    ctx: AlgebraContext,
    sign: CommutatorSign,
) -> Result<FieldEquationOutcome<C>, AlgebraError> {
    let n = ctx.dim();
    let el = euler_lagrange(field, x, ctx)?;
    let f = field_strength(&field.point(x), ctx, sign);
    let half = GaussianRational::from_ratio(1, 2);
    for mu in 0..3 {
        for nu in 0..3 {
            let mut lhs = vec![C::zero(); n * n];
            let mut rhs = vec![C::zero(); n * n];
            for b in 0..n {
                for a in 0..n {
                    let mut v = C::zero();
                    for (m, nn, rho, e) in permutations3() {
                        if m == mu && nn == nu {
                            let s = if ctx.p(b) == 0 { e } else { -e };
                            v = v.add_ref(&el[(rho * n + a) * n + b].scale_by(&GaussianRational::from_int(s)));
                        }
                    }
                    lhs[b * n + a] = v.scale_by(&half);
                    rhs[b * n + a] = f.get(mu, nu, b, a).clone();
                }
            }
            let lm = expand_in_ehat(&lhs, ctx);
            let rm = expand_in_ehat(&rhs, ctx);
            if lm != rm {
                return Ok(FieldEquationOutcome { mismatch: Some(((mu, nu), lm, rm)) });
            }
        }
    }
    Ok(FieldEquationOutcome { mismatch: None })
}

/// The field-equation property with the field tensor exactly as written
/// next to the action (see [`CommutatorSign::AsPrinted`]).
pub fn field_equation_check<C: Scalar>(
    field: &PolyGaugeField<C>,
    x: &[Rational; 3],
    ctx: AlgebraContext,
) -> Result<bool, AlgebraError> {
    Ok(field_equation_compare(field, x, ctx, CommutatorSign::AsPrinted)?.holds())
}

/// Random point with small integer coordinates.
pub fn random_point<R: Rng>(rng: &mut R) -> [Rational; 3] {
    std::array::from_fn(|_| Rational::from_integer(rng.random_range(-3i64..=3).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
        use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn origin() -> [Rational; 3] {
        std::array::from_fn(|_| Rational::zero())
    }

    #[test]
    fn zero_field_satisfies_both_conventions() {
        let c = AlgebraContext::new(2, 1).unwrap();
        let f = PolyGaugeField::<GaussianRational>::zero(c);
        assert!(field_equation_check(&f, &origin(), c).unwrap());
        let g = PolyGaugeField::<Grassmann>::zero(c);
        assert!(field_equation_compare(&g, &origin(), c, CommutatorSign::FromAction).unwrap().holds());
    }

    #[test]
    fn degree_ceiling() {
        let c = AlgebraContext::new(2, 1).unwrap();
        let mut f = PolyGaugeField::<GaussianRational>::zero(c);
        f.set(0, 0, 1, MultiPoly3::monomial([3, 0, 0], GaussianRational::from_int(1)));
        assert!(matches!(euler_lagrange(&f, &origin(), c), Err(AlgebraError::DegreeTooHigh { .. })));
    }

    #[test]
    fn grassmann_field_matches_action_convention() {
        let c = AlgebraContext::new(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = PolyGaugeField::random_grassmann(c, &mut rng, 1, 6);
        let x = random_point(&mut rng);
        assert!(field_equation_compare(&f, &x, c, CommutatorSign::FromAction).unwrap().holds());
    }
}
