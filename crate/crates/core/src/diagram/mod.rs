//! Oriented link diagrams.
//!
//! A diagram is a list of signed crossings whose strand endpoints are wired
//! together, plus a count of crossingless circles. Each crossing has four
//! endpoints, numbered `4c + slot` with slots
//! `0 = under-in, 1 = under-out, 2 = over-in, 3 = over-out`. The arcs of the
//! diagram pair every out-endpoint with exactly one in-endpoint.
//!
//! Signs follow the right-hand rule: with both strands pointing up, the
//! crossing is positive when the over-strand runs from bottom-left to
//! top-right. Together with the signs, the slot labels fix the cyclic order
//! of the four endpoints around each crossing, so a diagram carries its
//! planar embedding with it (see [`faces`]).

mod braid;
pub mod canon;
pub mod corpus;
pub mod faces;
mod json;
pub mod moves;

use std::collections::HashMap;
use std::fmt;

pub use braid::{braid_closure, parse_braid, BraidWord};
pub use canon::DiagramKey;
pub use json::DiagramJson;
pub use moves::{Edge, Move, MoveKind};

pub type ArcId = u64;

pub const UI: usize = 0;
pub const UO: usize = 1;
pub const OI: usize = 2;
pub const OO: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("invalid braid word: {0}")]
    Braid(String),
    #[error("crossing index {0} out of range (diagram has {1})")]
    CrossingIndex(usize, usize),
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("move does not apply: {0}")]
    MoveNotApplicable(String),
}

/// One crossing with the arc labels of its four strand ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: i8,
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub over_in: ArcId,
    pub over_out: ArcId,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    signs: Vec<i8>,
    /// Involution pairing each out-endpoint with the in-endpoint its arc enters.
    link: Vec<usize>,
    free_loops: usize,
}

pub(crate) fn is_out(e: usize) -> bool {
    e % 2 == 1
}

/// The other end of the strand through the crossing: under-in ↔ under-out, over-in ↔ over-out.
pub(crate) fn through(e: usize) -> usize {
    e ^ 1
}

impl LinkDiagram {
    /// `n` crossingless circles.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram { signs: Vec::new(), link: Vec::new(), free_loops: n }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// Build from signs and an out-endpoint → in-endpoint map given as pairs.
    pub(crate) fn from_parts(signs: Vec<i8>, succ: &[(usize, usize)], free_loops: usize) -> Result<Self, DiagramError> {
        let n = signs.len() * 4;
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(DiagramError::Malformed("crossing signs must be +1 or -1".into()));
        }
        let mut link = vec![usize::MAX; n];
        for &(o, i) in succ {
            if o >= n || i >= n || !is_out(o) || is_out(i) {
                return Err(DiagramError::Malformed(format!("bad arc {o} -> {i}")));
            }
            if link[o] != usize::MAX || link[i] != usize::MAX {
                return Err(DiagramError::Malformed(format!("endpoint used twice in arc {o} -> {i}")));
            }
            link[o] = i;
            link[i] = o;
        }
        if link.iter().any(|&x| x == usize::MAX) {
            return Err(DiagramError::Malformed("unconnected endpoint".into()));
        }
        Ok(LinkDiagram { signs, link, free_loops })
    }

    pub fn num_crossings(&self) -> usize {
        self.signs.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn sign(&self, c: usize) -> i8 {
        self.signs[c]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// For an out-endpoint, the in-endpoint it feeds; for an in-endpoint, the out-endpoint feeding it.
    pub fn link(&self, e: usize) -> usize {
        self.link[e]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    fn check(&self, c: usize) -> Result<(), DiagramError> {
        if c < self.num_crossings() {
            Ok(())
        } else {
            Err(DiagramError::CrossingIndex(c, self.num_crossings()))
        }
    }

    /// In-endpoints visited along one component, starting at `start` (an in-endpoint).
    pub fn component_from(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut e = self.link[through(start)];
        while e != start {
            out.push(e);
            e = self.link[through(e)];
        }
        out
    }

    /// Components that pass through crossings, each as its list of in-endpoints in
    /// traversal order starting from the smallest.
    pub fn strand_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.link.len()];
        let mut comps = Vec::new();
        for e in (0..self.link.len()).step_by(2) {
            if !seen[e] {
                let comp = self.component_from(e);
                for &x in &comp {
                    seen[x] = true;
                }
                comps.push(comp);
            }
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.strand_components().len() + self.free_loops
    }

    /// Crossings with arc labels in canonical numbering: the arc leaving
    /// endpoint `4c+1` is `2c`, the arc leaving `4c+3` is `2c+1`.
    pub fn crossings(&self) -> Vec<Crossing> {
        let arc_out = |e: usize| (e / 4 * 2 + usize::from(e % 4 == OO)) as ArcId;
        let arc_in = |e: usize| arc_out(self.link[e]);
        (0..self.num_crossings())
            .map(|c| Crossing {
                sign: self.signs[c],
                under_in: arc_in(4 * c + UI),
                under_out: arc_out(4 * c + UO),
                over_in: arc_in(4 * c + OI),
                over_out: arc_out(4 * c + OO),
            })
            .collect()
    }

    /// Remove the crossings in `removed`, routing each of their in-endpoints to the
    /// out-endpoint given by `pass`. Strands that close up inside the removed
    /// crossings become free loops.
    pub(crate) fn rebuild(&self, removed: &[usize], pass: impl Fn(usize) -> usize) -> LinkDiagram {
        let n = self.num_crossings();
        let mut gone = vec![false; n];
        for &c in removed {
            gone[c] = true;
        }
        let mut new_index = vec![usize::MAX; n];
        let mut signs = Vec::new();
        for c in 0..n {
            if !gone[c] {
                new_index[c] = signs.len();
                signs.push(self.signs[c]);
            }
        }
        let renum = |e: usize| 4 * new_index[e / 4] + e % 4;
        let mut visited = vec![false; 4 * n];
        let mut succ = Vec::new();
        for c in 0..n {
            if gone[c] {
                continue;
            }
            for slot in [UO, OO] {
                let mut e = self.link[4 * c + slot];
                while gone[e / 4] {
                    visited[e] = true;
                    e = self.link[pass(e)];
                }
                succ.push((renum(4 * c + slot), renum(e)));
            }
        }
        let mut free = self.free_loops;
        for &c in removed {
            for slot in [UI, OI] {
                let start = 4 * c + slot;
                if visited[start] {
                    continue;
                }
                free += 1;
                let mut e = start;
                loop {
                    visited[e] = true;
                    e = self.link[pass(e)];
                    if e == start {
                        break;
                    }
                }
            }
        }
        LinkDiagram::from_parts(signs, &succ, free).expect("rebuild preserves well-formedness")
    }

    /// Exchange over and under at `c`; the sign flips.
    pub fn switch_crossing(&self, c: usize) -> Result<LinkDiagram, DiagramError> {
        self.check(c)?;
        let swap = |e: usize| if e / 4 == c { e ^ 2 } else { e };
        let mut link = vec![0; self.link.len()];
        for (e, &f) in self.link.iter().enumerate() {
            link[swap(e)] = swap(f);
        }
        let mut signs = self.signs.clone();
        signs[c] = -signs[c];
        Ok(LinkDiagram { signs, link, free_loops: self.free_loops })
    }

    /// Oriented smoothing: under-in continues to over-out, over-in to under-out.
    pub fn smooth_crossing(&self, c: usize) -> Result<LinkDiagram, DiagramError> {
        self.check(c)?;
        Ok(self.rebuild(&[c], |e| match e % 4 {
            UI => e - UI + OO,
            _ => e - OI + UO,
        }))
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        let mut link = vec![0; self.link.len()];
        for (e, &f) in self.link.iter().enumerate() {
            link[e ^ 2] = f ^ 2;
        }
        LinkDiagram { signs: self.signs.iter().map(|s| -s).collect(), link, free_loops: self.free_loops }
    }

    /// The second diagram's crossings are renumbered after the first's.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let off = self.link.len();
        let mut link = self.link.clone();
        link.extend(other.link.iter().map(|&e| e + off));
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        LinkDiagram { signs, link, free_loops: self.free_loops + other.free_loops }
    }

    /// Parse the JSON diagram format.
    pub fn from_json(text: &str) -> Result<LinkDiagram, DiagramError> {
        let j: DiagramJson = serde_json::from_str(text).map_err(|e| DiagramError::Malformed(e.to_string()))?;
        j.to_diagram()
    }

    /// Serialize in canonical arc numbering with no closures.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiagramJson::from_diagram(self)).expect("serializable")
    }

    /// Crossings grouped into pieces connected by arcs, each sorted.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.num_crossings();
        let mut piece = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if piece[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            piece[s] = id;
            let mut i = 0;
            while i < members.len() {
                let c = members[i];
                for slot in 0..4 {
                    let d = self.link[4 * c + slot] / 4;
                    if piece[d] == usize::MAX {
                        piece[d] = id;
                        members.push(d);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The strand component (index into [`strand_components`](Self::strand_components))
    /// through every endpoint.
    pub fn component_of_endpoints(&self) -> (Vec<Vec<usize>>, HashMap<usize, usize>) {
        let comps = self.strand_components();
        let mut map = HashMap::new();
        for (k, comp) in comps.iter().enumerate() {
            for &e in comp {
                map.insert(e, k);
                map.insert(through(e), k);
            }
        }
        (comps, map)
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkDiagram{}", self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closure(word: &str, n: usize) -> LinkDiagram {
        braid_closure(&parse_braid(word, n).unwrap())
    }

    #[test]
    fn writhe_and_components() {
        let t = closure("1 1 1", 2);
        assert_eq!((t.writhe(), t.num_crossings(), t.component_count()), (3, 3, 1));
        let h = closure("1 1", 2);
        assert_eq!(h.component_count(), 2);
        let u = closure("1 -1", 2);
        assert_eq!((u.writhe(), u.component_count()), (0, 2));
        let e = closure("", 2);
        assert_eq!((e.num_crossings(), e.free_loops()), (0, 2));
    }

    #[test]
    fn switch_is_an_involution() {
        let t = closure("1 1 1", 2);
        let s = t.switch_crossing(1).unwrap();
        assert_eq!(s.writhe(), 1);
        assert_eq!(s.switch_crossing(1).unwrap(), t);
        assert!(t.switch_crossing(3).is_err());
    }

    #[test]
    fn smoothing_examples() {
        let h = closure("1 1", 2);
        let s = h.smooth_crossing(0).unwrap();
        assert_eq!((s.num_crossings(), s.component_count()), (1, 1));
        let t = closure("1 1 1", 2).smooth_crossing(0).unwrap();
        assert_eq!((t.num_crossings(), t.component_count()), (2, 2));
        let split = s.smooth_crossing(0).unwrap();
        assert_eq!((split.num_crossings(), split.component_count(), split.free_loops()), (0, 2, 2));
    }

    #[test]
    fn mirror_and_union() {
        let t = closure("1 1 1", 2);
        assert_eq!(t.mirror().writhe(), -3);
        assert_eq!(t.mirror().mirror(), t);
        let u = LinkDiagram::unknot().disjoint_union(&t);
        assert_eq!((u.component_count(), u.num_crossings()), (2, 3));
    }
}
