//! Oracles shared by the integration tests. They compute the same invariants
//! as the library by unrelated methods and use only the public diagram API.
#![allow(dead_code)]

use std::collections::BTreeMap;

use superskein::arith::{GaussianRational, LaurentBi, LaurentUni};
use superskein::diagram::corpus::{extended_corpus, CorpusEntry};
use superskein::diagram::{braid_closure, parse_braid, LinkDiagram};

pub fn closure(word: &str, strands: usize) -> LinkDiagram {
    braid_closure(&parse_braid(word, strands).unwrap())
}

pub fn corpus() -> Vec<(CorpusEntry, LinkDiagram)> {
    extended_corpus().into_iter().map(|e| {
        let d = e.diagram().unwrap();
        (e, d)
    }).collect()
}

fn mono(a: i64, b: i64, c: i64) -> LaurentBi {
    LaurentBi::monomial(a, b, GaussianRational::from_int(c))
}

type Hecke = BTreeMap<Vec<u8>, LaurentBi>;

fn add_to(x: &mut Hecke, w: Vec<u8>, c: LaurentBi) {
    let entry = x.entry(w).or_insert_with(LaurentBi::zero);
    *entry = &*entry + &c;
}

/// Right multiplication by the generator swapping positions i, i+1, in the
/// algebra with g² = t⁻¹z·g + t⁻² (the skein relation t·g − t⁻¹·g⁻¹ = z).
fn right_gen(x: &Hecke, i: usize) -> Hecke {
    let (a, b) = (mono(-1, 1, 1), mono(-2, 0, 1));
    let mut out = Hecke::new();
    for (w, c) in x {
        let mut ws = w.clone();
        ws.swap(i, i + 1);
        if w[i] < w[i + 1] {
            add_to(&mut out, ws, c.clone());
        } else {
            add_to(&mut out, w.clone(), &a * c);
            add_to(&mut out, ws, &b * c);
        }
    }
    out
}

fn left_gen(i: usize, x: &Hecke) -> Hecke {
    let (a, b) = (mono(-1, 1, 1), mono(-2, 0, 1));
    let mut out = Hecke::new();
    for (w, c) in x {
        let pi = w.iter().position(|&v| v as usize == i).unwrap();
        let pj = w.iter().position(|&v| v as usize == i + 1).unwrap();
        let mut sw = w.clone();
        sw.swap(pi, pj);
        if pi < pj {
            add_to(&mut out, sw, c.clone());
        } else {
            add_to(&mut out, w.clone(), &a * c);
            add_to(&mut out, sw, &b * c);
        }
    }
    out
}

fn delta() -> LaurentBi {
    &mono(1, -1, 1) - &mono(-1, -1, 1)
}

/// Ocneanu-type trace: tr(1) on one strand is 1, an extra idle strand
/// multiplies by δ, and tr(x·g_{n−1}) = tr(x) for x on n−1 strands.
fn trace_perm(w: &[u8]) -> LaurentBi {
    let n = w.len();
    if n == 1 {
        return LaurentBi::one();
    }
    let j = w.iter().position(|&v| v as usize == n - 1).unwrap();
    if j == n - 1 {
        return &delta() * &trace_perm(&w[..n - 1]);
    }
    // w = w'·s_{n−2}···s_j with w' fixing the last strand.
    let mut wp = w.to_vec();
    for k in j..n - 1 {
        wp.swap(k, k + 1);
    }
    let mut x = Hecke::new();
    x.insert(wp[..n - 1].to_vec(), LaurentBi::one());
    for k in j..n - 2 {
        x = left_gen(k, &x);
    }
    x.iter().map(|(v, c)| c * &trace_perm(v)).fold(LaurentBi::zero(), |acc, y| &acc + &y)
}

/// HOMFLY of a braid closure through the Hecke algebra, unit normalization.
pub fn hecke_homfly(word: &str, strands: usize) -> LaurentBi {
    let mut x = Hecke::new();
    x.insert((0..strands as u8).collect(), LaurentBi::one());
    for tok in word.split_whitespace() {
        let l: i32 = tok.parse().unwrap();
        let i = l.unsigned_abs() as usize - 1;
        let g = right_gen(&x, i);
        x = if l > 0 {
            g
        } else {
            // g⁻¹ = t²·g − t·z
            let mut y = Hecke::new();
            for (w, c) in g {
                add_to(&mut y, w, &mono(2, 0, 1) * &c);
            }
            for (w, c) in &x {
                add_to(&mut y, w.clone(), &mono(1, 1, -1) * c);
            }
            y
        };
    }
    x.iter().map(|(w, c)| c * &trace_perm(w)).fold(LaurentBi::zero(), |acc, y| &acc + &y)
}

/// Kauffman bracket state sum with A = u, turned into the skein module's
/// Jones convention: (−1)^{c−1}·(−A³)^{−writhe}·⟨D⟩. At a positive crossing
/// the A-smoothing joins under-in with over-out; at a negative one it joins
/// under-in with over-in.
pub fn kauffman_jones_u(d: &LinkDiagram) -> LaurentUni {
    let n = d.num_crossings();
    let m = 4 * n;
    let loop_value = LaurentUni::from_ints('u', &[(2, -1), (-2, -1)]);
    let mut bracket = LaurentUni::zero('u');
    for state in 0u64..(1u64 << n) {
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        for e in 0..m {
            union(&mut parent, e, d.link(e));
        }
        let mut a_count = 0i64;
        for c in 0..n {
            let a_smoothing = state >> c & 1 == 0;
            a_count += i64::from(a_smoothing);
            let joins_oo = a_smoothing == (d.sign(c) > 0);
            let (ui, uo, oi, oo) = (4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3);
            if joins_oo {
                union(&mut parent, ui, oo);
                union(&mut parent, uo, oi);
            } else {
                union(&mut parent, ui, oi);
                union(&mut parent, uo, oo);
            }
        }
        let mut roots: Vec<usize> = (0..m).map(|e| find(&mut parent, e)).collect();
        roots.sort_unstable();
        roots.dedup();
        let loops = roots.len() + d.free_loops();
        let term = loop_value.pow(loops as i64 - 1).unwrap().shift(a_count - (n as i64 - a_count));
        bracket = &bracket + &term;
    }
    let w = d.writhe();
    let framing = LaurentUni::monomial('u', -3 * w, GaussianRational::from_int(if w % 2 == 0 { 1 } else { -1 }));
    let sign = if d.component_count() % 2 == 1 { 1 } else { -1 };
    (&framing * &bracket).scale(&GaussianRational::from_int(sign))
}

/// Rewrite a polynomial in `u = q^{1/4}` as one in `q` (all exponents divisible by 4).
pub fn u_to_q(p: &LaurentUni) -> LaurentUni {
    assert!(p.terms().all(|(e, _)| e % 4 == 0), "not a polynomial in q: {p}");
    LaurentUni::from_terms('q', p.terms().map(|(e, c)| (e / 4, c.clone())))
}

pub mod walk {
    use std::collections::BTreeMap;

    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use superskein::arith::LaurentUni;
    use superskein::diagram::faces::is_planar;
    use superskein::diagram::moves::{applicable_moves, random_move, reidemeister};
    use superskein::diagram::{LinkDiagram, Move, MoveKind};
    use superskein::skein::{HomflyRing, Normalization, SkeinEngine, SkeinParams};

    #[derive(Debug, Default)]
    pub struct WalkReport {
        pub counts: BTreeMap<String, usize>,
        pub failures: Vec<String>,
    }

    impl WalkReport {
        pub fn total(&self) -> usize {
            self.counts.values().sum()
        }
    }

    /// A move that does not add crossings, to keep diagrams small.
    fn shrinking_move(d: &LinkDiagram, rng: &mut ChaCha8Rng) -> Option<(Move, LinkDiagram)> {
        let mut moves: Vec<Move> = applicable_moves(d)
            .into_iter()
            .filter(|m| matches!(m, Move::R1Remove { .. } | Move::R2Remove { .. } | Move::R3 { .. }))
            .collect();
        moves.shuffle(rng);
        moves.into_iter().find_map(|m| reidemeister(d, &m).ok().map(|r| (m, r)))
    }

    /// Random Reidemeister walks from each diagram. Every step checks
    /// planarity, component count, the writhe change, HOMFLY invariance and
    /// the W transformation law W ↦ α^{±1}W under R1± (unchanged otherwise).
    pub fn run(
        starts: &[(String, LinkDiagram)],
        steps: usize,
        seed: u64,
        engine: &SkeinEngine<HomflyRing>,
        params: &SkeinParams,
    ) -> WalkReport {
        let alpha = params.exact().unwrap().alpha.clone();
        let alpha_inv = alpha.monomial_inverse().unwrap();
        let kinds = [MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2, MoveKind::R3];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut report = WalkReport::default();
        for (name, start) in starts {
            let mut d = start.clone();
            for step in 0..steps {
                let picked = if d.num_crossings() >= 10 {
                    shrinking_move(&d, &mut rng)
                } else {
                    random_move(&d, Some(kinds[step % 4]), &mut rng).or_else(|| random_move(&d, None, &mut rng))
                };
                let Some((mv, next)) = picked else { continue };
                let mut fail = |what: &str| report.failures.push(format!("{name} step {step} {mv:?}: {what}"));
                if !is_planar(&next) {
                    fail("not planar");
                }
                if next.component_count() != d.component_count() {
                    fail("component count changed");
                }
                if next.writhe() != d.writhe() + mv.writhe_change(&d) {
                    fail("writhe change");
                }
                let p0 = engine.homfly(&d, Normalization::Unit).unwrap();
                let p1 = engine.homfly(&next, Normalization::Unit).unwrap();
                if p0 != p1 {
                    fail("homfly changed");
                }
                let w0 = engine.w_invariant(&d, params).unwrap();
                let w1 = engine.w_invariant(&next, params).unwrap();
                let factor = match mv.writhe_change(&d) {
                    1 => alpha.clone(),
                    -1 => alpha_inv.clone(),
                    _ => LaurentUni::one('u'),
                };
                if w1 != &factor * &w0 {
                    fail("W transformation law");
                }
                *report.counts.entry(format!("{:?}", mv.kind(&d))).or_default() += 1;
                d = next;
            }
        }
        report
    }
}
