use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{ArcId, DiagramError, LinkDiagram, OI, OO, UI, UO};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub sign: i8,
    pub ui: ArcId,
    pub uo: ArcId,
    pub oi: ArcId,
    pub oo: ArcId,
}

/// `{"crossings":[{"sign":1,"ui":0,"uo":1,"oi":2,"oo":3},…],"closures":[[1,2],…],"free_loops":0}`
///
/// An arc id that leaves one crossing and enters another needs no closure.
/// A closure `[a, b]` says the arc `a` continues as the arc `b`; closures may
/// chain, and a chain of closures that closes on itself is a free loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<CrossingJson>,
    #[serde(default)]
    pub closures: Vec<[ArcId; 2]>,
    #[serde(default)]
    pub free_loops: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Src {
    Crossing(usize),
    Closure(usize),
}

impl DiagramJson {
    pub fn from_diagram(d: &LinkDiagram) -> Self {
        DiagramJson {
            crossings: d
                .crossings()
                .into_iter()
                .map(|c| CrossingJson { sign: c.sign, ui: c.under_in, uo: c.under_out, oi: c.over_in, oo: c.over_out })
                .collect(),
            closures: Vec::new(),
            free_loops: d.free_loops(),
        }
    }

    pub fn to_diagram(&self) -> Result<LinkDiagram, DiagramError> {
        let bad = |m: String| Err(DiagramError::Malformed(m));
        // Where each arc starts (an out-endpoint or a closure) and where it ends.
        let mut start: HashMap<ArcId, Src> = HashMap::new();
        let mut end: HashMap<ArcId, Src> = HashMap::new();
        let put = |map: &mut HashMap<ArcId, Src>, arc: ArcId, s: Src, what: &str| {
            if map.insert(arc, s).is_some() {
                return Err(DiagramError::Malformed(format!("arc {arc} has more than one {what}")));
            }
            Ok(())
        };
        for (c, x) in self.crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                return bad(format!("crossing {c} has sign {}", x.sign));
            }
            put(&mut end, x.ui, Src::Crossing(4 * c + UI), "end")?;
            put(&mut end, x.oi, Src::Crossing(4 * c + OI), "end")?;
            put(&mut start, x.uo, Src::Crossing(4 * c + UO), "start")?;
            put(&mut start, x.oo, Src::Crossing(4 * c + OO), "start")?;
        }
        for (k, &[a, b]) in self.closures.iter().enumerate() {
            put(&mut end, a, Src::Closure(k), "end")?;
            put(&mut start, b, Src::Closure(k), "start")?;
        }
        for arc in start.keys() {
            if !end.contains_key(arc) {
                return bad(format!("arc {arc} never ends"));
            }
        }
        for arc in end.keys() {
            if !start.contains_key(arc) {
                return bad(format!("arc {arc} never starts"));
            }
        }
        let mut closure_used = vec![false; self.closures.len()];
        let mut succ = Vec::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for (slot, arc) in [(UO, x.uo), (OO, x.oo)] {
                let mut a = arc;
                loop {
                    match end[&a] {
                        Src::Crossing(e) => {
                            succ.push((4 * c + slot, e));
                            break;
                        }
                        Src::Closure(k) => {
                            closure_used[k] = true;
                            a = self.closures[k][1];
                        }
                    }
                }
            }
        }
        // Closures not reached from a crossing form closed chains.
        let mut free = self.free_loops;
        for k in 0..self.closures.len() {
            if closure_used[k] {
                continue;
            }
            free += 1;
            let mut j = k;
            loop {
                closure_used[j] = true;
                match end[&self.closures[j][1]] {
                    Src::Closure(next) if !closure_used[next] => j = next,
                    Src::Closure(_) => break,
                    Src::Crossing(_) => return bad("closure chain from nowhere".into()),
                }
            }
        }
        let signs = self.crossings.iter().map(|x| x.sign).collect();
        let d = LinkDiagram::from_parts(signs, &succ, free)?;
        if !super::faces::is_planar(&d) {
            return bad("crossing data does not describe a planar diagram".into());
        }
        Ok(d)
    }
}
