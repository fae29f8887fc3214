//! The full branch tree of the HOMFLY recursion, without memo collapsing.

use serde::Serialize;

use super::engine::{carry_starts, choose_starts, first_bad, SkeinRing};
use super::{SkeinError, MAX_TREE_CROSSINGS};
use crate::diagram::{DiagramJson, LinkDiagram};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkeinTreeNode {
    pub diagram: DiagramJson,
    pub crossings: usize,
    pub components: usize,
    pub writhe: i64,
    #[serde(flatten)]
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    /// Resolution of `crossing` (sign `sign`) into its switched and smoothed diagrams.
    Branch { crossing: usize, sign: i8, switched: Box<SkeinTreeNode>, smoothed: Box<SkeinTreeNode> },
    /// A descending diagram: an unlink. `component_writhes` sums the
    /// self-crossing signs of each strand component; free loops are omitted.
    Leaf { component_writhes: Vec<i64> },
}

impl SkeinTreeNode {
    pub fn leaf_count(&self) -> usize {
        match &self.kind {
            NodeKind::Leaf { .. } => 1,
            NodeKind::Branch { switched, smoothed, .. } => switched.leaf_count() + smoothed.leaf_count(),
        }
    }

    /// Number of levels; a single leaf has depth 1.
    pub fn depth(&self) -> usize {
        match &self.kind {
            NodeKind::Leaf { .. } => 1,
            NodeKind::Branch { switched, smoothed, .. } => 1 + switched.depth().max(smoothed.depth()),
        }
    }

    /// Fold the tree with a skein ring; equals the engine's value.
    pub fn evaluate<R: SkeinRing>(&self, ring: &R) -> R::Value {
        match &self.kind {
            NodeKind::Leaf { .. } => ring.unlink(self.components),
            NodeKind::Branch { sign, switched, smoothed, .. } => {
                ring.resolve(*sign, &switched.evaluate(ring), &smoothed.evaluate(ring))
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

pub fn skein_tree(d: &LinkDiagram) -> Result<SkeinTreeNode, SkeinError> {
    if d.num_crossings() > MAX_TREE_CROSSINGS {
        return Err(SkeinError::CeilingExceeded { found: d.num_crossings(), max: MAX_TREE_CROSSINGS });
    }
    Ok(build(d, None))
}

fn build(d: &LinkDiagram, starts: Option<Vec<usize>>) -> SkeinTreeNode {
    let starts = starts.unwrap_or_else(|| choose_starts(d));
    let kind = match first_bad(d, &starts) {
        None => NodeKind::Leaf { component_writhes: component_writhes(d) },
        Some(c) => {
            let switched = d.switch_crossing(c).expect("crossing in range");
            let smoothed = d.smooth_crossing(c).expect("crossing in range");
            NodeKind::Branch {
                crossing: c,
                sign: d.sign(c),
                switched: Box::new(build(&switched, Some(carry_starts(&starts, c)))),
                smoothed: Box::new(build(&smoothed, None)),
            }
        }
    };
    SkeinTreeNode {
        diagram: DiagramJson::from_diagram(d),
        crossings: d.num_crossings(),
        components: d.component_count(),
        writhe: d.writhe(),
        kind,
    }
}

fn component_writhes(d: &LinkDiagram) -> Vec<i64> {
    let (comps, owner) = d.component_of_endpoints();
    let mut w = vec![0i64; comps.len()];
    for c in 0..d.num_crossings() {
        let (u, o) = (owner[&(4 * c)], owner[&(4 * c + 2)]);
        if u == o {
            w[u] += d.sign(c) as i64;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid};
    use crate::skein::engine::HomflyRing;
    use crate::skein::{homfly, Normalization};

    fn closure(w: &str, n: usize) -> LinkDiagram {
        braid_closure(&parse_braid(w, n).unwrap())
    }

    #[test]
    fn small_trees() {
        let u = skein_tree(&LinkDiagram::unknot()).unwrap();
        assert_eq!((u.leaf_count(), u.depth()), (1, 1));
        let h = skein_tree(&closure("1 1", 2)).unwrap();
        assert_eq!((h.leaf_count(), h.depth()), (2, 2));
        let t = skein_tree(&closure("1 1 1", 2)).unwrap();
        assert_eq!(t.leaf_count(), 3);
    }

    #[test]
    fn tree_value_matches_engine() {
        let d = closure("1 -2 1 -2", 3);
        let t = skein_tree(&d).unwrap();
        assert!(t.leaf_count() <= 1 << d.num_crossings());
        assert_eq!(t.evaluate(&HomflyRing::new()), homfly(&d, Normalization::Unit).unwrap());
    }

    #[test]
    fn ceiling() {
        let d = closure("1 1 1 1 1 1 1 1 1 1 1", 2);
        assert!(matches!(skein_tree(&d), Err(SkeinError::CeilingExceeded { .. })));
    }
}
