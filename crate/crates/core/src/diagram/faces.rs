//! Faces of the planar embedding carried by a diagram.
//!
//! Around a positive crossing the endpoints read counter-clockwise
//! `under-in, over-out, under-out, over-in`; around a negative one
//! `under-in, over-in, under-out, over-out`. Faces are the orbits of
//! "follow the arc, then turn to the next endpoint counter-clockwise".

use super::{LinkDiagram, OI, OO, UI, UO};

const POS: [usize; 4] = [UI, OO, UO, OI];
const NEG: [usize; 4] = [UI, OI, UO, OO];

/// The endpoint after `e` counter-clockwise around its crossing.
pub fn ccw_next(d: &LinkDiagram, e: usize) -> usize {
    let c = e / 4;
    let order = if d.sign(c) > 0 { &POS } else { &NEG };
    let k = order.iter().position(|&s| s == e % 4).expect("slot in rotation");
    4 * c + order[(k + 1) % 4]
}

/// Each face as the cyclic list of endpoints where it turns a corner.
pub fn faces(d: &LinkDiagram) -> Vec<Vec<usize>> {
    let n = 4 * d.num_crossings();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut face = Vec::new();
        let mut e = s;
        while !seen[e] {
            seen[e] = true;
            face.push(e);
            e = ccw_next(d, d.link(e));
        }
        out.push(face);
    }
    out
}

/// True when every connected piece satisfies `V − E + F = 2` on the sphere.
pub fn is_planar(d: &LinkDiagram) -> bool {
    let fs = faces(d);
    let pieces = d.pieces();
    let mut piece_of = vec![0; d.num_crossings()];
    for (k, p) in pieces.iter().enumerate() {
        for &c in p {
            piece_of[c] = k;
        }
    }
    let mut face_count = vec![0i64; pieces.len()];
    for f in &fs {
        face_count[piece_of[f[0] / 4]] += 1;
    }
    pieces.iter().zip(face_count).all(|(p, f)| {
        let v = p.len() as i64;
        v - 2 * v + f == 2
    })
}

/// Crossings around a face, in face order (with repeats when a crossing touches twice).
pub fn face_crossings(face: &[usize]) -> Vec<usize> {
    face.iter().map(|e| e / 4).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid};

    #[test]
    fn braid_closures_are_planar() {
        for (w, n) in [("1 1 1", 2), ("1 -2 1 -2", 3), ("1 1", 2), ("1 -1", 2), ("-1 -1 -1", 2), ("1 2 1 2 1 2 1 2", 3)] {
            let d = braid_closure(&parse_braid(w, n).unwrap());
            assert!(is_planar(&d), "{w}");
        }
    }

    #[test]
    fn trefoil_has_five_faces() {
        let d = braid_closure(&parse_braid("1 1 1", 2).unwrap());
        let f = faces(&d);
        assert_eq!(f.len(), 5);
        let mut sizes: Vec<usize> = f.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
    }
}
