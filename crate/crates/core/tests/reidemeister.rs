mod common;

use common::{corpus, walk};
use superskein::diagram::moves::simplify;
use superskein::skein::{make_params, HomflyRing, Mode, Normalization, SkeinEngine};

#[test]
fn random_moves_preserve_homfly_and_scale_w() {
    let engine = SkeinEngine::new(HomflyRing::new());
    let starts: Vec<_> =
        corpus().into_iter().filter(|(_, d)| d.num_crossings() <= 6).map(|(e, d)| (e.name, d)).collect();
    for (m, n, seed) in [(3, 1, 7), (4, 1, 8), (1, 3, 9)] {
        let params = make_params(m, n, Mode::QExact, 1).unwrap();
        let r = walk::run(&starts, 12, seed, &engine, &params);
        assert!(r.failures.is_empty(), "{:?}", r.failures);
        assert!(r.total() >= 100, "{:?}", r.counts);
        for k in ["R1Plus", "R1Minus", "R2", "R3"] {
            assert!(r.counts.get(k).copied().unwrap_or(0) >= 5, "{:?}", r.counts);
        }
    }
}

#[test]
fn simplify_keeps_the_invariant() {
    let engine = SkeinEngine::new(HomflyRing::new());
    for (e, d) in corpus() {
        let s = simplify(&d);
        assert!(s.num_crossings() <= d.num_crossings());
        assert_eq!(
            engine.homfly(&s, Normalization::Unit).unwrap(),
            engine.homfly(&d, Normalization::Unit).unwrap(),
            "{}",
            e.name
        );
    }
}
