//! Identity sweeps over the fundamental representation, collected into a
//! serializable report.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::field_eq::{field_equation_compare, random_point, PolyGaugeField};
use super::gauge::{action_density_component, CommutatorSign, GaugePoint, StrForm};
use super::{
    casimir, casimir_value, ehat, eq1_rhs, fierz_lhs, fierz_rhs, generator, str2_closed, str3_closed,
    super_bracket, AlgebraContext, Generator, GradedMatrix,
};
use crate::arith::GaussianRational;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    /// 1-based index tuple, or the sample number for randomized checks.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl IdentityResult {
    fn new(name: &str) -> Self {
        IdentityResult { name: name.to_string(), checked: 0, failed: 0, first_counterexample: None }
    }

    fn record<T: std::fmt::Debug + PartialEq>(&mut self, indices: &[usize], lhs: &T, rhs: &T) {
        self.checked += 1;
        if lhs != rhs {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample =
                    Some(Counterexample { indices: indices.to_vec(), lhs: format!("{lhs:?}"), rhs: format!("{rhs:?}") });
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AlgebraReport {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub identities: Vec<IdentityResult>,
}

impl AlgebraReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(IdentityResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.name == name)
    }
}

/// What [`verify_algebra`] runs beyond the exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraSuiteOptions {
    pub density_samples: usize,
    pub field_samples: usize,
    pub field_sign: CommutatorSign,
    pub seed: u64,
}

impl Default for AlgebraSuiteOptions {
    fn default() -> Self {
        AlgebraSuiteOptions { density_samples: 100, field_samples: 20, field_sign: CommutatorSign::FromAction, seed: 0 }
    }
}

fn basis(ctx: AlgebraContext) -> Vec<Vec<GradedMatrix>> {
    let n = ctx.dim();
    (1..=n).map(|a| (1..=n).map(|b| ehat(a, b, ctx).expect("in range")).collect()).collect()
}

pub fn check_super_commutation(ctx: AlgebraContext) -> IdentityResult {
    let n = ctx.dim();
    let e = basis(ctx);
    let mut r = IdentityResult::new("super_commutation");
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    let lhs = super_bracket(&e[a - 1][b - 1], &e[c - 1][d - 1]).expect("basis is graded");
                    let rhs = eq1_rhs(a, b, c, d, ctx).expect("in range");
                    r.record(&[a, b, c, d], &lhs, &rhs);
                }
            }
        }
    }
    r
}

pub fn check_ehat_supertrace(ctx: AlgebraContext) -> IdentityResult {
    let n = ctx.dim();
    let e = basis(ctx);
    let mut r = IdentityResult::new("ehat_supertrace_zero");
    for a in 1..=n {
        for b in 1..=n {
            r.record(&[a, b], &e[a - 1][b - 1].supertrace(), &GaussianRational::from_int(0));
        }
    }
    r
}

pub fn check_ehat_diagonal_sum(ctx: AlgebraContext) -> IdentityResult {
    let e = basis(ctx);
    let mut r = IdentityResult::new("ehat_diagonal_sum_zero");
    let sum = (0..ctx.dim()).fold(GradedMatrix::zero(ctx), |acc, a| &acc + &e[a][a]);
    r.record(&[], &sum, &GradedMatrix::zero(ctx));
    r
}

pub fn check_str2(ctx: AlgebraContext) -> IdentityResult {
    let n = ctx.dim();
    let e = basis(ctx);
    let mut r = IdentityResult::new("str2_closed_form");
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    let direct = (&e[a - 1][b - 1] * &e[c - 1][d - 1]).supertrace();
                    r.record(&[a, b, c, d], &direct, &str2_closed(a, b, c, d, ctx).expect("in range"));
                }
            }
        }
    }
    r
}

/// Every index tuple when `tuples` is `None`, else that many random tuples.
pub fn check_str3(ctx: AlgebraContext, tuples: Option<(usize, u64)>) -> IdentityResult {
    let n = ctx.dim();
    let e = basis(ctx);
    let mut r = IdentityResult::new("str3_closed_form");
    let mut run = |t: [usize; 6], prod: &GradedMatrix| {
        let direct = (prod * &e[t[4] - 1][t[5] - 1]).supertrace();
        let closed = str3_closed(t[0], t[1], t[2], t[3], t[4], t[5], ctx).expect("in range");
        r.record(&t, &direct, &closed);
    };
    match tuples {
        None => {
            for a in 1..=n {
                for b in 1..=n {
                    for c in 1..=n {
                        for d in 1..=n {
                            let prod = &e[a - 1][b - 1] * &e[c - 1][d - 1];
                            for x in 1..=n {
                                for f in 1..=n {
                                    run([a, b, c, d, x, f], &prod);
                                }
                            }
                        }
                    }
                }
            }
        }
        Some((count, seed)) => {
            use rand::Rng;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let t: [usize; 6] = std::array::from_fn(|_| rng.random_range(1..=n));
                let prod = &e[t[0] - 1][t[1] - 1] * &e[t[2] - 1][t[3] - 1];
                run(t, &prod);
            }
        }
    }
    r
}

pub fn check_fierz(ctx: AlgebraContext) -> IdentityResult {
    let n = ctx.dim();
    let mut r = IdentityResult::new("fierz");
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let lhs = fierz_lhs(i, j, k, l, ctx).expect("in range");
                    r.record(&[i, j, k, l], &lhs, &fierz_rhs(i, j, k, l, ctx).expect("in range"));
                }
            }
        }
    }
    r
}

pub fn check_casimir(ctx: AlgebraContext) -> IdentityResult {
    let mut r = IdentityResult::new("casimir");
    let two_c2 = GaussianRational::real(casimir_value(ctx) * crate::arith::rat(2, 1));
    r.record(&[], &casimir(ctx), &GradedMatrix::identity(ctx).scale(&two_c2));
    r
}

fn all_generators(ctx: AlgebraContext) -> Vec<(Vec<usize>, GradedMatrix)> {
    let n = ctx.dim();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                out.push((vec![0, a, b], generator(Generator::E(a, b), ctx).expect("valid")));
                out.push((vec![1, a, b], generator(Generator::F(a, b), ctx).expect("valid")));
            }
        }
    }
    for c in 1..n {
        out.push((vec![2, c], generator(Generator::H(c), ctx).expect("valid")));
    }
    out
}

/// Tracelessness and Hermiticity of `Ê, F̂, Ĥ`. Counterexample indices start
/// with the kind (0 = E, 1 = F, 2 = H).
pub fn check_generators(ctx: AlgebraContext) -> (IdentityResult, IdentityResult) {
    let mut tr = IdentityResult::new("generators_traceless");
    let mut herm = IdentityResult::new("generators_hermitian");
    for (idx, g) in all_generators(ctx) {
        tr.record(&idx, &g.supertrace(), &GaussianRational::from_int(0));
        herm.record(&idx, &g.dagger(), &g);
    }
    (tr, herm)
}

/// Component form against supertrace form on random exact points.
pub fn check_action_density(ctx: AlgebraContext, samples: usize, seed: u64) -> IdentityResult {
    let mut r = IdentityResult::new("action_density");
    let forms = StrForm::new(ctx);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let p = GaugePoint::random(ctx, &mut rng);
        r.record(&[s], &action_density_component(&p, ctx), &forms.density(&p));
    }
    r
}

/// Field equation on random Grassmann-valued fields of degree 2.
pub fn check_field_equation(ctx: AlgebraContext, fields: usize, seed: u64, sign: CommutatorSign) -> IdentityResult {
    let name = match sign {
        CommutatorSign::AsPrinted => "field_equation_as_printed",
        CommutatorSign::FromAction => "field_equation",
    };
    let mut r = IdentityResult::new(name);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..fields {
        let f = PolyGaugeField::random_grassmann(ctx, &mut rng, 2, 6);
        let x = random_point(&mut rng);
        let out = field_equation_compare(&f, &x, ctx, sign).expect("degree 2 is allowed");
        r.checked += 1;
        if let Some(((mu, nu), l, rr)) = out.mismatch {
            r.failed += 1;
            if r.first_counterexample.is_none() {
                r.first_counterexample =
                    Some(Counterexample { indices: vec![s, mu + 1, nu + 1], lhs: format!("{l:?}"), rhs: format!("{rr:?}") });
            }
        }
    }
    r
}

/// Every exhaustive identity plus the randomized density and field-equation checks.
pub fn verify_algebra(ctx: AlgebraContext, opts: AlgebraSuiteOptions) -> AlgebraReport {
    let (tr, herm) = check_generators(ctx);
    let str3_mode = if ctx.dim() <= 5 { None } else { Some((2000, opts.seed)) };
    let mut identities = vec![
        check_super_commutation(ctx),
        check_ehat_supertrace(ctx),
        check_ehat_diagonal_sum(ctx),
        check_str2(ctx),
        check_str3(ctx, str3_mode),
        check_fierz(ctx),
        check_casimir(ctx),
        tr,
        herm,
    ];
    if opts.density_samples > 0 {
        identities.push(check_action_density(ctx, opts.density_samples, opts.seed));
    }
    if opts.field_samples > 0 {
        identities.push(check_field_equation(ctx, opts.field_samples, opts.seed, opts.field_sign));
    }
    AlgebraReport { m: ctx.m(), n: ctx.n(), identities }
}
