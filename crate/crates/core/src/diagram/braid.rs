use super::{DiagramError, LinkDiagram, OI, OO, UI, UO};

/// A word in the braid generators: letter `i` is `σ_i`, `-i` is `σ_i⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

/// Whitespace-separated nonzero integers with `|letter| < strands`.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::Braid("a braid needs at least one strand".into()));
    }
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let v: i32 = tok.parse().map_err(|_| DiagramError::Braid(format!("not an integer: {tok:?}")))?;
        if v == 0 || v.unsigned_abs() as usize >= strands {
            return Err(DiagramError::Braid(format!("letter {v} out of range for {strands} strands")));
        }
        letters.push(v);
    }
    Ok(BraidWord { strands, letters })
}

#[derive(Clone, Copy)]
enum End {
    Bottom,
    Out(usize),
}

/// Closure of a braid whose strands run upward. For `σ_i` the over-strand
/// moves from position `i` to `i+1`; for `σ_i⁻¹` the under-strand does.
/// Positions no letter touches become free loops.
pub fn braid_closure(w: &BraidWord) -> LinkDiagram {
    let n = w.strands;
    let mut ends = vec![End::Bottom; n];
    let mut first_in: Vec<Option<usize>> = vec![None; n];
    let mut succ = Vec::new();
    let mut signs = Vec::new();
    let mut enter = |pos: usize, e: usize, ends: &mut Vec<End>, succ: &mut Vec<(usize, usize)>| match ends[pos] {
        End::Bottom => first_in[pos] = Some(e),
        End::Out(o) => succ.push((o, e)),
    };
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize - 1;
        let c = signs.len();
        let (up, down) = if l > 0 { ((OI, OO), (UI, UO)) } else { ((UI, UO), (OI, OO)) };
        enter(i, 4 * c + up.0, &mut ends, &mut succ);
        enter(i + 1, 4 * c + down.0, &mut ends, &mut succ);
        ends[i + 1] = End::Out(4 * c + up.1);
        ends[i] = End::Out(4 * c + down.1);
        signs.push(if l > 0 { 1 } else { -1 });
    }
    let mut free = 0;
    for p in 0..n {
        match (ends[p], first_in[p]) {
            (End::Out(o), Some(i)) => succ.push((o, i)),
            _ => free += 1,
        }
    }
    LinkDiagram::from_parts(signs, &succ, free).expect("braid closures are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors() {
        assert!(parse_braid("1 2", 2).is_err());
        assert!(parse_braid("0", 3).is_err());
        assert!(parse_braid("a", 3).is_err());
        assert_eq!(parse_braid("  -2 1 ", 3).unwrap().letters, vec![-2, 1]);
    }
}
