//! A deliberately plain HOMFLY evaluator used as an oracle for the memoized
//! engine: no canonical keys, no memo, no threads and no base-point
//! heuristic. Base points are the smallest in-endpoint of each component,
//! components are walked in order of that endpoint, and the skein relation
//! t·P₊ − t⁻¹·P₋ = z·P₀ is solved for the crossing at hand on every call.
//! Running time is exponential in the number of crossings.

use super::params::Normalization;
use crate::arith::{specialize, GaussianRational, LaurentBi, LaurentUni};
use crate::diagram::LinkDiagram;

pub fn naive_homfly(d: &LinkDiagram, normalization: Normalization) -> LaurentBi {
    let p = resolve(d, None);
    match normalization {
        Normalization::Unit => p,
        Normalization::Paper => &p * &delta(),
    }
}

/// The naive engine's value specialized to `M − N = 2`.
pub fn naive_jones_u(d: &LinkDiagram) -> LaurentUni {
    specialize(&naive_homfly(d, Normalization::Unit), 2).expect("skein values specialize")
}

fn mono(a: i64, b: i64, c: i64) -> LaurentBi {
    LaurentBi::monomial(a, b, GaussianRational::from_int(c))
}

fn delta() -> LaurentBi {
    &mono(1, -1, 1) - &mono(-1, -1, 1)
}

fn resolve(d: &LinkDiagram, bases: Option<Vec<usize>>) -> LaurentBi {
    let bases = bases.unwrap_or_else(|| {
        let mut firsts: Vec<usize> =
            d.strand_components().iter().map(|c| *c.iter().min().expect("nonempty")).collect();
        firsts.sort_unstable();
        firsts
    });
    let mut met = vec![false; d.num_crossings()];
    let mut bad = None;
    'walk: for &b in &bases {
        let mut e = b;
        loop {
            let c = e / 4;
            if !met[c] {
                met[c] = true;
                if e % 4 == 0 {
                    bad = Some(c);
                    break 'walk;
                }
            }
            // Leave through the other end of the same strand, follow the arc.
            e = d.link(e + 1);
            if e == b {
                break;
            }
        }
    }
    let Some(c) = bad else {
        return delta().pow(d.component_count().saturating_sub(1) as u32);
    };
    let flipped_bases: Vec<usize> = bases.iter().map(|&e| if e / 4 == c { e ^ 2 } else { e }).collect();
    let other = resolve(&d.switch_crossing(c).expect("in range"), Some(flipped_bases));
    let zero = resolve(&d.smooth_crossing(c).expect("in range"), None);
    let t = mono(1, 0, 1);
    let tinv = mono(-1, 0, 1);
    let z = mono(0, 1, 1);
    if d.sign(c) > 0 {
        // t·P₊ = t⁻¹·P₋ + z·P₀
        &tinv * &(&(&tinv * &other) + &(&z * &zero))
    } else {
        // t⁻¹·P₋ = t·P₊ − z·P₀
        &t * &(&(&t * &other) - &(&z * &zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid};

    #[test]
    fn figure_eight_is_symmetric() {
        let d = braid_closure(&parse_braid("1 -2 1 -2", 3).unwrap());
        let p = naive_homfly(&d, Normalization::Unit);
        assert_eq!(p, LaurentBi::from_ints(&[(2, 0, 1), (-2, 0, 1), (0, 0, -1), (0, 2, -1)]));
        assert_eq!(p.invert_t(), p);
    }
}
