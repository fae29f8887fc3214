//! Identities at M + N = 6, where the six-index supertrace sweep is sampled.

use superskein::algebra::verify::{
    check_action_density, check_casimir, check_fierz, check_generators, check_str2, check_str3, check_super_commutation,
};
use superskein::algebra::AlgebraContext;

fn six() -> Vec<AlgebraContext> {
    [(1, 5), (2, 4), (4, 2), (5, 1)].iter().map(|&(m, n)| AlgebraContext::new(m, n).unwrap()).collect()
}

#[test]
fn closed_forms_at_dimension_six() {
    for ctx in six() {
        let (tr, herm) = check_generators(ctx);
        for r in [
            check_super_commutation(ctx),
            check_str2(ctx),
            check_str3(ctx, Some((3000, 11))),
            check_fierz(ctx),
            check_casimir(ctx),
            tr,
            herm,
        ] {
            assert!(r.passed(), "({}, {}) {r:?}", ctx.m(), ctx.n());
            assert!(r.checked > 0);
        }
    }
}

#[test]
fn action_density_on_other_gradings() {
    for (m, n) in [(1, 2), (2, 3), (1, 3)] {
        let r = check_action_density(AlgebraContext::new(m, n).unwrap(), 30, 5);
        assert!(r.passed(), "({m}, {n}) {r:?}");
    }
}
