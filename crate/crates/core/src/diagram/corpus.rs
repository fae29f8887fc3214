//! JSON-lines corpus files: `{"name":"trefoil","braid":"1 1 1","strands":2}`
//! or `{"name":…,"pd":{…diagram JSON…}}`.

use serde::{Deserialize, Serialize};

use super::{braid_closure, parse_braid, DiagramError, DiagramJson, LinkDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<DiagramJson>,
}

impl CorpusEntry {
    pub fn diagram(&self) -> Result<LinkDiagram, DiagramError> {
        match (&self.braid, &self.pd) {
            (Some(b), None) => {
                let n = self.strands.ok_or_else(|| DiagramError::Malformed(format!("{}: braid needs strands", self.name)))?;
                Ok(braid_closure(&parse_braid(b, n)?))
            }
            (None, Some(pd)) => pd.to_diagram(),
            _ => Err(DiagramError::Malformed(format!("{}: give exactly one of braid and pd", self.name))),
        }
    }
}

/// One entry per nonblank line; `#` starts a comment line.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, DiagramError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| DiagramError::Malformed(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

/// The corpus shipped with the crate (unknot, Hopf links, both trefoils, figure-eight).
pub const DEFAULT_CORPUS: &str = include_str!("../../../../corpus/default.jsonl");

/// Larger knots and links used by the test suites.
pub const EXTENDED_CORPUS: &str = include_str!("../../../../corpus/extended.jsonl");

pub fn default_corpus() -> Vec<CorpusEntry> {
    parse_corpus(DEFAULT_CORPUS).expect("bundled corpus parses")
}

pub fn extended_corpus() -> Vec<CorpusEntry> {
    parse_corpus(EXTENDED_CORPUS).expect("bundled corpus parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpora_parse() {
        let d = default_corpus();
        assert_eq!(d.len(), 6);
        for e in d.iter().chain(extended_corpus().iter()) {
            assert!(crate::diagram::faces::is_planar(&e.diagram().unwrap()), "{}", e.name);
        }
    }

    #[test]
    fn entry_needs_exactly_one_source() {
        let e: CorpusEntry = serde_json::from_str(r#"{"name":"x"}"#).unwrap();
        assert!(e.diagram().is_err());
    }
}
