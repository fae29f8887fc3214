//! The skein recursion shared by every engine.
//!
//! Each strand component gets a base point (an in-endpoint) and the
//! components are ordered. Walking them in that order, a crossing first met
//! on its under-strand is "bad". A diagram with no bad crossing is
//! descending, hence an unlink. Otherwise the first bad crossing `c` is
//! resolved by the skein relation into `switch(d, c)`, which keeps the base
//! points and has one bad crossing fewer, and `smooth(d, c)`, which has one
//! crossing fewer and gets fresh base points. The pair (crossings, bad
//! crossings) decreases lexicographically, so the recursion terminates.

use dashmap::DashMap;

use super::params::SeriesParams;
use super::{SkeinError, MAX_HOMFLY_CROSSINGS};
use crate::arith::{EpsSeries, GaussianRational, LaurentBi};
use crate::diagram::{DiagramKey, LinkDiagram, UI};

/// Below this size both children are evaluated on the current thread.
const PARALLEL_MIN_CROSSINGS: usize = 5;

/// Value ring of a skein evaluation.
pub trait SkeinRing: Send + Sync {
    type Value: Clone + Send + Sync;

    /// A descending diagram with `components` components, unit normalization.
    fn unlink(&self, components: usize) -> Self::Value;

    /// Value of a diagram whose crossing of sign `sign` has switched value
    /// `switched` and smoothed value `smoothed`.
    fn resolve(&self, sign: i8, switched: &Self::Value, smoothed: &Self::Value) -> Self::Value;
}

/// Generic HOMFLY values in `t` and `z`, with δ = (t − t⁻¹)/z.
#[derive(Debug, Clone)]
pub struct HomflyRing {
    delta: LaurentBi,
    plus: (LaurentBi, LaurentBi),
    minus: (LaurentBi, LaurentBi),
}

impl HomflyRing {
    pub fn new() -> Self {
        let one = GaussianRational::from_int(1);
        let m = |a: i64, b: i64, c: i64| LaurentBi::monomial(a, b, GaussianRational::from_int(c));
        HomflyRing {
            delta: &LaurentBi::monomial(1, -1, one.clone()) - &LaurentBi::monomial(-1, -1, one),
            // P₊ = t⁻²P₋ + t⁻¹zP₀ and P₋ = t²P₊ − tzP₀.
            plus: (m(-2, 0, 1), m(-1, 1, 1)),
            minus: (m(2, 0, 1), m(1, 1, -1)),
        }
    }

    pub fn delta(&self) -> &LaurentBi {
        &self.delta
    }
}

impl Default for HomflyRing {
    fn default() -> Self {
        Self::new()
    }
}

impl SkeinRing for HomflyRing {
    type Value = LaurentBi;

    fn unlink(&self, components: usize) -> LaurentBi {
        self.delta.pow(components.saturating_sub(1) as u32)
    }

    fn resolve(&self, sign: i8, switched: &LaurentBi, smoothed: &LaurentBi) -> LaurentBi {
        let (a, b) = if sign > 0 { &self.plus } else { &self.minus };
        &(a * switched) + &(b * smoothed)
    }
}

/// ε-series values with the literal unknot value δ = M − N.
#[derive(Debug, Clone)]
pub struct SeriesRing {
    delta: EpsSeries,
    plus: (EpsSeries, EpsSeries),
    minus: (EpsSeries, EpsSeries),
}

impl SeriesRing {
    pub fn new(p: &SeriesParams) -> Result<Self, SkeinError> {
        let tinv = p.t.inv()?;
        Ok(SeriesRing {
            delta: p.delta.clone(),
            plus: (&tinv * &tinv, &tinv * &p.z),
            minus: (&p.t * &p.t, -&(&p.t * &p.z)),
        })
    }

    pub fn delta(&self) -> &EpsSeries {
        &self.delta
    }
}

impl SkeinRing for SeriesRing {
    type Value = EpsSeries;

    fn unlink(&self, components: usize) -> EpsSeries {
        self.delta.pow(components.saturating_sub(1) as i64).expect("nonnegative power")
    }

    fn resolve(&self, sign: i8, switched: &EpsSeries, smoothed: &EpsSeries) -> EpsSeries {
        let (a, b) = if sign > 0 { &self.plus } else { &self.minus };
        &(a * switched) + &(b * smoothed)
    }
}

/// The first crossing met on its under-strand when walking from `starts`.
pub(crate) fn first_bad(d: &LinkDiagram, starts: &[usize]) -> Option<usize> {
    let mut seen = vec![false; d.num_crossings()];
    for &s in starts {
        for e in d.component_from(s) {
            let c = e / 4;
            if !seen[c] {
                seen[c] = true;
                if e % 4 == UI {
                    return Some(c);
                }
            }
        }
    }
    None
}

/// Base points after switching `c`: the strand keeps its place, its slot changes.
pub(crate) fn carry_starts(starts: &[usize], c: usize) -> Vec<usize> {
    starts.iter().map(|&e| if e / 4 == c { e ^ 2 } else { e }).collect()
}

/// Base points chosen to make few crossings bad: each component starts where
/// the fewest of its self-crossings are met from below, and components that
/// lie mostly on top of the others come first.
pub(crate) fn choose_starts(d: &LinkDiagram) -> Vec<usize> {
    let comps = d.strand_components();
    let k = comps.len();
    let mut owner = vec![usize::MAX; 4 * d.num_crossings()];
    for (i, comp) in comps.iter().enumerate() {
        for &e in comp {
            owner[e] = i;
        }
    }
    let mut over = vec![vec![0i64; k]; k];
    for c in 0..d.num_crossings() {
        let (u, o) = (owner[4 * c], owner[4 * c + 2]);
        if u != o {
            over[o][u] += 1;
        }
    }
    let mut remaining: Vec<usize> = (0..k).collect();
    let mut order = Vec::with_capacity(k);
    while !remaining.is_empty() {
        let score = |i: usize| remaining.iter().map(|&j| over[i][j] - over[j][i]).sum::<i64>();
        let (pos, _) = remaining
            .iter()
            .enumerate()
            .max_by_key(|&(p, &i)| (score(i), std::cmp::Reverse(p)))
            .expect("nonempty");
        order.push(remaining.remove(pos));
    }
    order.into_iter().map(|i| best_base(&comps[i])).collect()
}

fn best_base(comp: &[usize]) -> usize {
    let len = comp.len();
    let mut pos_u = std::collections::HashMap::new();
    let mut pos_o = std::collections::HashMap::new();
    for (i, &e) in comp.iter().enumerate() {
        if e % 4 == UI {
            pos_u.insert(e / 4, i);
        } else {
            pos_o.insert(e / 4, i);
        }
    }
    let selfs: Vec<(usize, usize)> = pos_u.iter().filter_map(|(c, &u)| pos_o.get(c).map(|&o| (u, o))).collect();
    let bad = |r: usize| selfs.iter().filter(|&&(u, o)| (u + len - r) % len < (o + len - r) % len).count();
    let r = (0..len).min_by_key(|&r| (bad(r), r)).unwrap_or(0);
    comp[r]
}

/// Memoized skein evaluation. The memo maps canonical diagram keys to values;
/// concurrent evaluations of one key may both compute, and the first insert wins.
pub struct SkeinEngine<R: SkeinRing> {
    ring: R,
    memo: DashMap<DiagramKey, R::Value>,
    parallel: bool,
    max_crossings: usize,
}

impl<R: SkeinRing> SkeinEngine<R> {
    pub fn new(ring: R) -> Self {
        SkeinEngine { ring, memo: DashMap::new(), parallel: true, max_crossings: MAX_HOMFLY_CROSSINGS }
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn with_ceiling(mut self, max_crossings: usize) -> Self {
        self.max_crossings = max_crossings;
        self
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Value of `d` in the unit normalization.
    pub fn evaluate(&self, d: &LinkDiagram) -> Result<R::Value, SkeinError> {
        if d.num_crossings() > self.max_crossings {
            return Err(SkeinError::CeilingExceeded { found: d.num_crossings(), max: self.max_crossings });
        }
        Ok(self.go(d, None))
    }

    fn go(&self, d: &LinkDiagram, starts: Option<Vec<usize>>) -> R::Value {
        if d.num_crossings() == 0 {
            return self.ring.unlink(d.free_loops());
        }
        let key = DiagramKey::of(d);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let starts = starts.unwrap_or_else(|| choose_starts(d));
        let v = match first_bad(d, &starts) {
            None => self.ring.unlink(d.component_count()),
            Some(c) => {
                let switched = d.switch_crossing(c).expect("crossing in range");
                let switched_starts = carry_starts(&starts, c);
                let smoothed = d.smooth_crossing(c).expect("crossing in range");
                let (a, b) = if self.parallel && d.num_crossings() >= PARALLEL_MIN_CROSSINGS {
                    rayon::join(|| self.go(&switched, Some(switched_starts)), || self.go(&smoothed, None))
                } else {
                    (self.go(&switched, Some(switched_starts)), self.go(&smoothed, None))
                };
                self.ring.resolve(d.sign(c), &a, &b)
            }
        };
        self.memo.entry(key).or_insert(v).clone()
    }
}
