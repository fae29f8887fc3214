//! Point values of a gauge potential and the quantities built from them:
//! the field tensor and the Chern–Simons density in two forms.
//!
//! The `k/4π` prefactor of the action is not included in any density here.

use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;

use super::{ehat, AlgebraContext, GradedMatrix};
use crate::arith::{GaussianRational, Scalar};

/// `ε^{μνρ}` on 0-based indices.
pub fn levi_civita(mu: usize, nu: usize, rho: usize) -> i64 {
    match (mu, nu, rho) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// The six `(μ, ν, ρ)` with nonzero `ε^{μνρ}`, with that sign.
pub fn permutations3() -> [(usize, usize, usize, i64); 6] {
    [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1), (0, 2, 1, -1), (2, 1, 0, -1), (1, 0, 2, -1)]
}

/// Sign convention for the quadratic term of the field tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommutatorSign {
    /// `F = ∂A − ∂A − (−1)^{…}(AA − AA)`, the form written alongside the action.
    AsPrinted,
    /// `F = ∂A − ∂A + (−1)^{…}(AA − AA)`, the form the cubic term of the action produces.
    FromAction,
}

impl CommutatorSign {
    fn factor(self) -> i64 {
        match self {
            CommutatorSign::AsPrinted => -1,
            CommutatorSign::FromAction => 1,
        }
    }
}

/// Components `A_μ^{ab}` and first derivatives `∂_ν A_ρ^{ab}` at one point.
/// Indices are 0-based; `μ, ν, ρ ∈ 0..3`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugePoint<C: Scalar = GaussianRational> {
    n: usize,
    a: Vec<C>,
    d: Vec<C>,
}

impl<C: Scalar> GaugePoint<C> {
    pub fn zero(ctx: AlgebraContext) -> Self {
        Self::zero_dim(ctx.dim())
    }

    pub(crate) fn zero_dim(n: usize) -> Self {
        GaugePoint { n, a: vec![C::zero(); 3 * n * n], d: vec![C::zero(); 9 * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn ai(&self, mu: usize, a: usize, b: usize) -> usize {
        (mu * self.n + a) * self.n + b
    }

    fn di(&self, nu: usize, rho: usize, a: usize, b: usize) -> usize {
        ((nu * 3 + rho) * self.n + a) * self.n + b
    }

    /// `A_μ^{ab}`.
    pub fn a(&self, mu: usize, a: usize, b: usize) -> &C {
        &self.a[self.ai(mu, a, b)]
    }

    /// `∂_ν A_ρ^{ab}`.
    pub fn d(&self, nu: usize, rho: usize, a: usize, b: usize) -> &C {
        &self.d[self.di(nu, rho, a, b)]
    }

    pub fn set_a(&mut self, mu: usize, a: usize, b: usize, v: C) {
        let i = self.ai(mu, a, b);
        self.a[i] = v;
    }

    pub fn set_d(&mut self, nu: usize, rho: usize, a: usize, b: usize, v: C) {
        let i = self.di(nu, rho, a, b);
        self.d[i] = v;
    }
}

impl GaugePoint<GaussianRational> {
    /// Independent random Gaussian-rational entries with small numerators and denominators.
    pub fn random<R: Rng>(ctx: AlgebraContext, rng: &mut R) -> Self {
        let mut p = Self::zero(ctx);
        for v in p.a.iter_mut().chain(p.d.iter_mut()) {
            *v = random_gq(rng);
        }
        p
    }
}

pub(crate) fn random_gq<R: Rng>(rng: &mut R) -> GaussianRational {
    let re = GaussianRational::from_ratio(rng.random_range(-5..=5), rng.random_range(1..=4));
    if rng.random_bool(0.5) {
        re
    } else {
        let im = GaussianRational::from_ratio(rng.random_range(-5..=5), rng.random_range(1..=4));
        &re + &(&im * &GaussianRational::i())
    }
}

/// `F_{μν}^{ab}` for all `μ, ν, a, b`, stored like the derivative block of [`GaugePoint`].
#[derive(Clone, Debug, PartialEq)]
pub struct FieldTensor<C: Scalar = GaussianRational> {
    n: usize,
    f: Vec<C>,
}

impl<C: Scalar> FieldTensor<C> {
    pub fn get(&self, mu: usize, nu: usize, a: usize, b: usize) -> &C {
        &self.f[((mu * 3 + nu) * self.n + a) * self.n + b]
    }
}

/// The field tensor from components,
/// `∂_μA_ν^{ab} − ∂_νA_μ^{ab} ∓ Σ_c (−1)^{([a]+[c])([c]+[b])}(A_μ^{ac}A_ν^{cb} − A_ν^{ac}A_μ^{cb})`.
pub fn field_strength<C: Scalar>(p: &GaugePoint<C>, ctx: AlgebraContext, sign: CommutatorSign) -> FieldTensor<C> {
    let n = ctx.dim();
    let s = GaussianRational::from_int(sign.factor());
    let mut f = Vec::with_capacity(9 * n * n);
    for mu in 0..3 {
        for nu in 0..3 {
            for a in 0..n {
                for b in 0..n {
                    let mut v = p.d(mu, nu, a, b).sub_ref(p.d(nu, mu, a, b));
                    for c in 0..n {
                        let comm = p.a(mu, a, c).mul_ref(p.a(nu, c, b)).sub_ref(&p.a(nu, a, c).mul_ref(p.a(mu, c, b)));
                        let odd = (ctx.p(a) + ctx.p(c)) * (ctx.p(c) + ctx.p(b)) % 2 == 1;
                        let k = if odd { -&s } else { s.clone() };
                        v = v.add_ref(&comm.scale_by(&k));
                    }
                    f.push(v);
                }
            }
        }
    }
    FieldTensor { n, f }
}

/// A field variable in the action density: `A_μ^{ab}` or `∂_ν A_ρ^{ab}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    A { mu: usize, a: usize, b: usize },
    D { nu: usize, rho: usize, a: usize, b: usize },
}

impl Factor {
    /// Grading `[a]+[b]` of the component.
    pub fn parity(&self, ctx: AlgebraContext) -> u8 {
        let (a, b) = match *self {
            Factor::A { a, b, .. } | Factor::D { a, b, .. } => (a, b),
        };
        (ctx.p(a) + ctx.p(b)) % 2
    }

    pub fn eval<'p, C: Scalar>(&self, p: &'p GaugePoint<C>) -> &'p C {
        match *self {
            Factor::A { mu, a, b } => p.a(mu, a, b),
            Factor::D { nu, rho, a, b } => p.d(nu, rho, a, b),
        }
    }
}

/// `coeff · f₁ f₂ (f₃)`, factors kept in the written order.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityTerm {
    pub coeff: GaussianRational,
    pub factors: Vec<Factor>,
}

impl DensityTerm {
    pub fn eval<C: Scalar>(&self, p: &GaugePoint<C>) -> C {
        let mut v = self.factors[0].eval(p).clone();
        for f in &self.factors[1..] {
            v = v.mul_ref(f.eval(p));
        }
        v.scale_by(&self.coeff)
    }
}

fn sign(bits: u8) -> i64 {
    if bits % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The component form of the density:
/// `ε^{μνρ}(−1)^{[b]}[A_μ^{ab}∂_νA_ρ^{ba} + (2/3)(−1)^{[c]+[a][b]+[b][c]+[c][a]}A_μ^{ab}A_ν^{bc}A_ρ^{ca}
///  − (−1)^{[a]}A_μ^{aa}∂_νA_ρ^{bb}/(M−N) − (2/3)(−1)^{[a]}A_μ^{aa}A_ν^{cb}A_ρ^{bc}/(M−N)
///  + (4/3)(−1)^{[a]+[c]}A_μ^{aa}A_ν^{bb}A_ρ^{cc}/(M−N)²]`.
pub fn component_terms(ctx: AlgebraContext) -> Vec<DensityTerm> {
    let n = ctx.dim();
    let mn = ctx.mn();
    let g = |i: usize| ctx.p(i);
    let mut out = Vec::new();
    let mut push = |num: i64, den: i64, factors: Vec<Factor>| {
        if num != 0 {
            out.push(DensityTerm { coeff: GaussianRational::from_ratio(num, den), factors });
        }
    };
    for (mu, nu, rho, e) in permutations3() {
        let am = |a, b| Factor::A { mu, a, b };
        let an = |a, b| Factor::A { mu: nu, a, b };
        let ar = |a, b| Factor::A { mu: rho, a, b };
        let dr = |a, b| Factor::D { nu, rho, a, b };
        for a in 0..n {
            for b in 0..n {
                let s = e * sign(g(b));
                push(s, 1, vec![am(a, b), dr(b, a)]);
                push(-s * sign(g(a)), mn, vec![am(a, a), dr(b, b)]);
                for c in 0..n {
                    let s3 = sign(g(c) + g(a) * g(b) + g(b) * g(c) + g(c) * g(a));
                    push(2 * s * s3, 3, vec![am(a, b), an(b, c), ar(c, a)]);
                    push(-2 * s * sign(g(a)), 3 * mn, vec![am(a, a), an(c, b), ar(b, c)]);
                    push(4 * s * sign(g(a) + g(c)), 3 * mn * mn, vec![am(a, a), an(b, b), ar(c, c)]);
                }
            }
        }
    }
    out
}

/// Density from the component form.
pub fn action_density_component<C: Scalar>(p: &GaugePoint<C>, ctx: AlgebraContext) -> C {
    component_terms(ctx).iter().fold(C::zero(), |acc, t| acc.add_ref(&t.eval(p)))
}

/// Supertrace tables for `ε^{μνρ} Str(A_μ ∂_ν A_ρ + (2/3) A_μ A_ν A_ρ)` expanded in components.
///
/// Writing `A = Σ A^{x} ê_x` and moving each component to the front past
/// the basis elements to its left gives the graded signs
/// `(−1)^{p_x p_y}` and `(−1)^{p_x p_y + p_z (p_x + p_y)}`.
pub struct StrForm {
    ctx: AlgebraContext,
    quad: Vec<((usize, usize), (usize, usize), GaussianRational)>,
    cubic: Vec<((usize, usize), (usize, usize), (usize, usize), GaussianRational)>,
}

impl StrForm {
    /// Tables from direct products of `ê` matrices, keeping nonzero entries only.
    pub fn new(ctx: AlgebraContext) -> Self {
        let n = ctx.dim();
        let idx: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let e: HashMap<(usize, usize), GradedMatrix> =
            idx.iter().map(|&(a, b)| ((a, b), ehat(a + 1, b + 1, ctx).expect("in range"))).collect();
        let par = |x: (usize, usize)| (ctx.p(x.0) + ctx.p(x.1)) % 2;
        let mut quad = Vec::new();
        let mut cubic = Vec::new();
        for &x in &idx {
            for &y in &idx {
                let xy = &e[&x] * &e[&y];
                let s2 = xy.supertrace();
                if !s2.is_zero() {
                    let s = if par(x) * par(y) == 1 { -s2 } else { s2 };
                    quad.push((x, y, s));
                }
                for &z in &idx {
                    let s3 = (&xy * &e[&z]).supertrace();
                    if !s3.is_zero() {
                        let bits = par(x) * par(y) + par(z) * (par(x) + par(y));
                        let s = if bits % 2 == 1 { -s3 } else { s3 };
                        cubic.push((x, y, z, s.scale(&crate::arith::rat(2, 3))));
                    }
                }
            }
        }
        StrForm { ctx, quad, cubic }
    }

    pub fn density<C: Scalar>(&self, p: &GaugePoint<C>) -> C {
        assert_eq!(p.dim(), self.ctx.dim());
        let mut acc = C::zero();
        for (mu, nu, rho, e) in permutations3() {
            let e = GaussianRational::from_int(e);
            for (x, y, c) in &self.quad {
                let v = p.a(mu, x.0, x.1).mul_ref(p.d(nu, rho, y.0, y.1));
                acc = acc.add_ref(&v.scale_by(&(c * &e)));
            }
            for (x, y, z, c) in &self.cubic {
                let v = p.a(mu, x.0, x.1).mul_ref(p.a(nu, y.0, y.1)).mul_ref(p.a(rho, z.0, z.1));
                acc = acc.add_ref(&v.scale_by(&(c * &e)));
            }
        }
        acc
    }
}

/// Density from the supertrace form. Builds the tables on every call; keep a
/// [`StrForm`] around to evaluate many points.
pub fn action_density_strform<C: Scalar>(p: &GaugePoint<C>, ctx: AlgebraContext) -> C {
    StrForm::new(ctx).density(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(m: usize, n: usize) -> AlgebraContext {
        AlgebraContext::new(m, n).unwrap()
    }

    #[test]
    fn zero_field() {
        let c = ctx(2, 1);
        let p = GaugePoint::<GaussianRational>::zero(c);
        assert!(action_density_component(&p, c).is_zero());
        assert!(action_density_strform(&p, c).is_zero());
        let f = field_strength(&p, c, CommutatorSign::AsPrinted);
        assert!(f.f.iter().all(Zero::is_zero));
    }

    #[test]
    fn single_component_has_no_density() {
        let c = ctx(2, 1);
        let mut p = GaugePoint::zero(c);
        p.set_a(0, 0, 1, GaussianRational::from_int(3));
        assert!(action_density_component(&p, c).is_zero());
        assert!(action_density_strform(&p, c).is_zero());
    }

    #[test]
    fn equal_diagonal_potentials_have_no_field() {
        let c = ctx(3, 1);
        let mut p = GaugePoint::zero(c);
        for mu in 0..3 {
            for (a, v) in [(0, 2), (1, -1), (2, 5), (3, 7)] {
                p.set_a(mu, a, a, GaussianRational::from_int(v));
            }
        }
        let f = field_strength(&p, c, CommutatorSign::AsPrinted);
        assert!(f.f.iter().all(Zero::is_zero));
    }

    #[test]
    fn densities_agree_on_a_sample() {
        let c = ctx(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let forms = StrForm::new(c);
        for _ in 0..5 {
            let p = GaugePoint::random(c, &mut rng);
            assert_eq!(action_density_component(&p, c), forms.density(&p));
        }
    }
}
