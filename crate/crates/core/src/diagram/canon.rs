//! A relabeling-invariant key for diagrams, used to memoize skein values.

use super::LinkDiagram;

/// Equal keys mean the diagrams agree up to renumbering crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey(Vec<u32>);

/// Breadth-first relabeling of one piece from `start`, visiting endpoint slots in order.
fn encode_from(d: &LinkDiagram, start: usize, size: usize) -> Vec<u32> {
    let mut label = std::collections::HashMap::with_capacity(size);
    let mut order = Vec::with_capacity(size);
    label.insert(start, 0u32);
    order.push(start);
    let mut out = Vec::with_capacity(9 * size + 1);
    out.push(size as u32);
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        out.push(u32::from(d.sign(c) > 0));
        for slot in 0..4 {
            let e = d.link(4 * c + slot);
            let next = e / 4;
            let l = *label.entry(next).or_insert_with(|| {
                order.push(next);
                (order.len() - 1) as u32
            });
            out.push(4 * l + (e % 4) as u32);
        }
        i += 1;
    }
    out
}

impl DiagramKey {
    pub fn of(d: &LinkDiagram) -> DiagramKey {
        let mut pieces: Vec<Vec<u32>> = d
            .pieces()
            .iter()
            .map(|p| p.iter().map(|&s| encode_from(d, s, p.len())).min().expect("pieces are nonempty"))
            .collect();
        pieces.sort();
        let mut key: Vec<u32> = pieces.concat();
        key.push(u32::MAX);
        key.push(d.free_loops() as u32);
        DiagramKey(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid};

    #[test]
    fn conjugate_braids_share_a_key() {
        // Cyclic rotation of the word only renumbers crossings.
        let a = braid_closure(&parse_braid("1 -2 1 -2", 3).unwrap());
        let b = braid_closure(&parse_braid("-2 1 -2 1", 3).unwrap());
        assert_eq!(DiagramKey::of(&a), DiagramKey::of(&b));
        let t = braid_closure(&parse_braid("1 1 1", 2).unwrap());
        assert_ne!(DiagramKey::of(&t), DiagramKey::of(&t.mirror()));
    }
}
