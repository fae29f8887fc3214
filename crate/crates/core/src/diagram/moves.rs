//! Reidemeister moves, located through the faces of the diagram.
//!
//! Removals are recognized by their faces: a curl is a one-sided face, a
//! removable pair of crossings bounds a two-sided face with one strand over
//! at both corners, and a movable triangle is a three-sided face with one
//! edge over at both ends and another under at both ends. Insertions build
//! the new crossings combinatorially and keep only results that are still
//! planar and contain the expected face.

use std::collections::BTreeSet;

use super::faces::{faces, is_planar};
use super::{is_out, through, DiagramError, LinkDiagram, OI, OO, UI, UO};

/// Where a curl or a crossing pair is inserted: an arc (named by its
/// out-endpoint) or one of the free loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    Arc(usize),
    FreeLoop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// Add or remove a positive curl.
    R1Plus,
    /// Add or remove a negative curl.
    R1Minus,
    R2,
    R3,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// New curl of the given sign; `over_first` says whether the strand
    /// reaches the new crossing on its over-strand first.
    R1Insert { edge: Edge, sign: i8, over_first: bool },
    R1Remove { crossing: usize },
    /// New pair of crossings between two arcs on a common face; the first arc goes over when `first_over`.
    R2Insert { first: usize, second: usize, first_over: bool },
    R2Remove { crossings: (usize, usize) },
    /// Slide across the triangle face that has a corner at `corner`.
    R3 { corner: usize },
}

impl Move {
    pub fn kind(&self, d: &LinkDiagram) -> MoveKind {
        match *self {
            Move::R1Insert { sign, .. } => {
                if sign > 0 {
                    MoveKind::R1Plus
                } else {
                    MoveKind::R1Minus
                }
            }
            Move::R1Remove { crossing } => {
                if d.sign(crossing) > 0 {
                    MoveKind::R1Plus
                } else {
                    MoveKind::R1Minus
                }
            }
            Move::R2Insert { .. } | Move::R2Remove { .. } => MoveKind::R2,
            Move::R3 { .. } => MoveKind::R3,
        }
    }

    /// Writhe change caused by the move.
    pub fn writhe_change(&self, d: &LinkDiagram) -> i64 {
        match *self {
            Move::R1Insert { sign, .. } => sign as i64,
            Move::R1Remove { crossing } => -(d.sign(crossing) as i64),
            _ => 0,
        }
    }
}

fn is_over(e: usize) -> bool {
    e % 4 >= OI
}

/// Out-endpoint → in-endpoint pairs of the diagram.
fn succ_pairs(d: &LinkDiagram) -> Vec<(usize, usize)> {
    (0..4 * d.num_crossings()).filter(|&e| is_out(e)).map(|e| (e, d.link(e))).collect()
}

fn straight(e: usize) -> usize {
    through(e)
}

pub fn insert_curl(d: &LinkDiagram, edge: Edge, sign: i8, over_first: bool) -> Result<LinkDiagram, DiagramError> {
    let x = d.num_crossings();
    let mut signs = d.signs().to_vec();
    signs.push(sign);
    let (first_in, first_out, second_in, second_out) =
        if over_first { (OI, OO, UI, UO) } else { (UI, UO, OI, OO) };
    let mut succ = succ_pairs(d);
    let mut free = d.free_loops();
    match edge {
        Edge::Arc(o) => {
            if o >= 4 * x || !is_out(o) {
                return Err(DiagramError::MoveNotApplicable(format!("{o} is not an out-endpoint")));
            }
            let target = d.link(o);
            succ.retain(|&(a, _)| a != o);
            succ.push((o, 4 * x + first_in));
            succ.push((4 * x + first_out, 4 * x + second_in));
            succ.push((4 * x + second_out, target));
        }
        Edge::FreeLoop => {
            if free == 0 {
                return Err(DiagramError::MoveNotApplicable("no free loop".into()));
            }
            free -= 1;
            succ.push((4 * x + first_out, 4 * x + second_in));
            succ.push((4 * x + second_out, 4 * x + first_in));
        }
    }
    LinkDiagram::from_parts(signs, &succ, free)
}

/// Crossings touched by each one-sided face.
fn monogons(d: &LinkDiagram) -> Vec<usize> {
    faces(d).into_iter().filter(|f| f.len() == 1).map(|f| f[0] / 4).collect()
}

/// Two-sided faces with one edge over at both ends and the other under at both ends.
fn r2_bigons(d: &LinkDiagram) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for f in faces(d) {
        if f.len() != 2 {
            continue;
        }
        let (e1, e2) = (f[0], f[1]);
        let (a, b) = (e1 / 4, e2 / 4);
        if a == b {
            continue;
        }
        let edge1 = (is_over(e1), is_over(d.link(e1)));
        let edge2 = (is_over(e2), is_over(d.link(e2)));
        if edge1.0 == edge1.1 && edge2.0 == edge2.1 && edge1.0 != edge2.0 {
            out.insert((a.min(b), a.max(b)));
        }
    }
    out.into_iter().collect()
}

fn remove_straight(d: &LinkDiagram, crossings: &[usize]) -> LinkDiagram {
    d.rebuild(crossings, straight)
}

pub fn remove_curl(d: &LinkDiagram, crossing: usize) -> Result<LinkDiagram, DiagramError> {
    if !monogons(d).contains(&crossing) {
        return Err(DiagramError::MoveNotApplicable(format!("crossing {crossing} is not a curl")));
    }
    Ok(remove_straight(d, &[crossing]))
}

pub fn remove_pair(d: &LinkDiagram, a: usize, b: usize) -> Result<LinkDiagram, DiagramError> {
    if !r2_bigons(d).contains(&(a.min(b), a.max(b))) {
        return Err(DiagramError::MoveNotApplicable(format!("crossings {a}, {b} do not bound a removable bigon")));
    }
    Ok(remove_straight(d, &[a, b]))
}

fn has_face_on(d: &LinkDiagram, len: usize, crossings: &[usize]) -> bool {
    let want: BTreeSet<usize> = crossings.iter().copied().collect();
    faces(d).iter().any(|f| f.len() == len && f.iter().map(|e| e / 4).collect::<BTreeSet<_>>() == want)
}

pub fn insert_pair(d: &LinkDiagram, first: usize, second: usize, first_over: bool) -> Result<LinkDiagram, DiagramError> {
    let n = d.num_crossings();
    if first == second || first >= 4 * n || second >= 4 * n || !is_out(first) || !is_out(second) {
        return Err(DiagramError::MoveNotApplicable("need two distinct arcs".into()));
    }
    let (x, y) = (n, n + 1);
    let (s_in, s_out, t_in, t_out) = if first_over { (OI, OO, UI, UO) } else { (UI, UO, OI, OO) };
    let (i1, i2) = (d.link(first), d.link(second));
    for (x_first, sign) in [(true, 1i8), (true, -1), (false, 1), (false, -1)] {
        let mut succ = succ_pairs(d);
        succ.retain(|&(a, _)| a != first && a != second);
        succ.push((first, 4 * x + s_in));
        succ.push((4 * x + s_out, 4 * y + s_in));
        succ.push((4 * y + s_out, i1));
        let (p, q) = if x_first { (x, y) } else { (y, x) };
        succ.push((second, 4 * p + t_in));
        succ.push((4 * p + t_out, 4 * q + t_in));
        succ.push((4 * q + t_out, i2));
        let mut signs = d.signs().to_vec();
        signs.push(sign);
        signs.push(-sign);
        let cand = LinkDiagram::from_parts(signs, &succ, d.free_loops())?;
        if is_planar(&cand) && r2_bigons(&cand).contains(&(x, y)) {
            return Ok(cand);
        }
    }
    Err(DiagramError::MoveNotApplicable(format!("arcs from {first} and {second} do not share a face")))
}

/// Triangle faces admitting the third move, named by one corner each.
fn r3_triangles(d: &LinkDiagram) -> Vec<Vec<usize>> {
    faces(d)
        .into_iter()
        .filter(|f| {
            if f.len() != 3 {
                return false;
            }
            let cs: BTreeSet<usize> = f.iter().map(|e| e / 4).collect();
            if cs.len() != 3 {
                return false;
            }
            let kinds: Vec<(bool, bool)> = f.iter().map(|&e| (is_over(e), is_over(d.link(e)))).collect();
            kinds.contains(&(true, true)) && kinds.contains(&(false, false))
        })
        .collect()
}

pub fn slide_triangle(d: &LinkDiagram, corner: usize) -> Result<LinkDiagram, DiagramError> {
    let na = || DiagramError::MoveNotApplicable(format!("no movable triangle at endpoint {corner}"));
    let face = r3_triangles(d).into_iter().find(|f| f.contains(&corner)).ok_or_else(na)?;
    let tri: BTreeSet<usize> = face.iter().map(|e| e / 4).collect();
    let mut link: Vec<usize> = (0..4 * d.num_crossings()).map(|e| d.link(e)).collect();
    let mut updates = Vec::new();
    for &e in &face {
        let (o_x, i_y) = if is_out(e) { (e, d.link(e)) } else { (d.link(e), e) };
        let i_x = through(o_x);
        let o_y = through(i_y);
        let p = d.link(i_x);
        let s = d.link(o_y);
        if tri.contains(&(p / 4)) || tri.contains(&(s / 4)) {
            return Err(DiagramError::MoveNotApplicable("triangle strands are too short to slide".into()));
        }
        updates.push((p, i_y));
        updates.push((o_y, i_x));
        updates.push((o_x, s));
    }
    for &(o, i) in &updates {
        link[o] = i;
        link[i] = o;
    }
    let succ: Vec<(usize, usize)> = (0..link.len()).filter(|&e| is_out(e)).map(|e| (e, link[e])).collect();
    let cand = LinkDiagram::from_parts(d.signs().to_vec(), &succ, d.free_loops())?;
    let tri_v: Vec<usize> = tri.into_iter().collect();
    if !is_planar(&cand) || !has_face_on(&cand, 3, &tri_v) {
        return Err(DiagramError::MoveNotApplicable("slide does not give a planar diagram".into()));
    }
    Ok(cand)
}

pub fn reidemeister(d: &LinkDiagram, mv: &Move) -> Result<LinkDiagram, DiagramError> {
    match *mv {
        Move::R1Insert { edge, sign, over_first } => insert_curl(d, edge, sign, over_first),
        Move::R1Remove { crossing } => remove_curl(d, crossing),
        Move::R2Insert { first, second, first_over } => insert_pair(d, first, second, first_over),
        Move::R2Remove { crossings: (a, b) } => remove_pair(d, a, b),
        Move::R3 { corner } => slide_triangle(d, corner),
    }
}

/// Arcs (by out-endpoint) bordering each face.
fn face_arcs(d: &LinkDiagram) -> Vec<Vec<usize>> {
    faces(d)
        .iter()
        .map(|f| {
            let mut arcs: Vec<usize> = f.iter().map(|&e| if is_out(e) { e } else { d.link(e) }).collect();
            arcs.sort_unstable();
            arcs.dedup();
            arcs
        })
        .collect()
}

/// Every move that applies to `d`, in a deterministic order. Insertions of
/// crossing pairs are listed for arc pairs sharing a face and may still be
/// rejected by [`reidemeister`] when no planar variant exists.
pub fn applicable_moves(d: &LinkDiagram) -> Vec<Move> {
    let mut out = Vec::new();
    let mut edges: Vec<Edge> = (0..4 * d.num_crossings()).filter(|&e| is_out(e)).map(Edge::Arc).collect();
    if d.free_loops() > 0 {
        edges.push(Edge::FreeLoop);
    }
    for &edge in &edges {
        for sign in [1, -1] {
            for over_first in [true, false] {
                out.push(Move::R1Insert { edge, sign, over_first });
            }
        }
    }
    let mut seen = BTreeSet::new();
    for c in monogons(d) {
        if seen.insert(c) {
            out.push(Move::R1Remove { crossing: c });
        }
    }
    let mut pairs = BTreeSet::new();
    for arcs in face_arcs(d) {
        for (i, &a) in arcs.iter().enumerate() {
            for &b in &arcs[i + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    for (a, b) in pairs {
        for first_over in [true, false] {
            out.push(Move::R2Insert { first: a, second: b, first_over });
        }
    }
    for (a, b) in r2_bigons(d) {
        out.push(Move::R2Remove { crossings: (a, b) });
    }
    for f in r3_triangles(d) {
        out.push(Move::R3 { corner: *f.iter().min().expect("nonempty") });
    }
    out
}

/// A uniformly chosen move among those of `kind` (any kind when `None`)
/// that applies to `d`, with its result.
pub fn random_move<R: rand::Rng + ?Sized>(
    d: &LinkDiagram,
    kind: Option<MoveKind>,
    rng: &mut R,
) -> Option<(Move, LinkDiagram)> {
    use rand::seq::SliceRandom;
    let mut moves: Vec<Move> = applicable_moves(d).into_iter().filter(|m| kind.is_none_or(|k| m.kind(d) == k)).collect();
    moves.shuffle(rng);
    moves.into_iter().find_map(|m| reidemeister(d, &m).ok().map(|r| (m, r)))
}

/// Remove curls and removable crossing pairs until none is left.
pub fn simplify(d: &LinkDiagram) -> LinkDiagram {
    let mut cur = d.clone();
    loop {
        if let Some(&c) = monogons(&cur).first() {
            cur = remove_straight(&cur, &[c]);
            continue;
        }
        if let Some(&(a, b)) = r2_bigons(&cur).first() {
            cur = remove_straight(&cur, &[a, b]);
            continue;
        }
        return cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid};

    fn closure(w: &str, n: usize) -> LinkDiagram {
        braid_closure(&parse_braid(w, n).unwrap())
    }

    #[test]
    fn canceling_pair_simplifies_to_unknot() {
        let s = simplify(&closure("1 -1", 2));
        assert_eq!((s.num_crossings(), s.free_loops()), (0, 2));
    }

    #[test]
    fn trefoil_is_already_reduced() {
        let t = closure("1 1 1", 2);
        assert_eq!(simplify(&t), t);
    }

    #[test]
    fn curl_on_unknot() {
        let c = reidemeister(&LinkDiagram::unknot(), &Move::R1Insert { edge: Edge::FreeLoop, sign: 1, over_first: true })
            .unwrap();
        assert_eq!((c.num_crossings(), c.writhe(), c.component_count()), (1, 1, 1));
        assert!(is_planar(&c));
        let back = reidemeister(&c, &Move::R1Remove { crossing: 0 }).unwrap();
        assert_eq!(back, LinkDiagram::unknot());
    }

    #[test]
    fn switched_trefoil_unknots() {
        let s = closure("1 1 1", 2).switch_crossing(0).unwrap();
        assert_eq!(simplify(&s).num_crossings(), 0);
        let h = closure("1 1", 2).switch_crossing(1).unwrap();
        let h = simplify(&h);
        assert_eq!((h.num_crossings(), h.free_loops()), (0, 2));
    }

    #[test]
    fn every_listed_move_keeps_planarity() {
        let d = closure("1 -2 1 -2", 3);
        for mv in applicable_moves(&d) {
            if let Ok(r) = reidemeister(&d, &mv) {
                assert!(is_planar(&r), "{mv:?}");
                assert_eq!(r.component_count(), d.component_count());
                assert_eq!(r.writhe(), d.writhe() + mv.writhe_change(&d));
            }
        }
    }
}
