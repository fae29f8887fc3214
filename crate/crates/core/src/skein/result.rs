//! Result JSON: `{"name", "invariant", "M", "N", "mode", "normalization",
//! "writhe", "components", "poly"}` with polynomials in the exact
//! serialization of [`crate::arith::serial`].

use serde_json::{json, Value};

use super::engine::{HomflyRing, SkeinEngine};
use super::invariants::{jones_in_q, w_series};
use super::params::{Mode, Normalization, SkeinParams};
use super::SkeinError;
use crate::arith::serial::{bi_to_value, series_to_value, uni_to_value};
use crate::arith::specialize;
use crate::diagram::LinkDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    Homfly,
    W,
    Jones,
}

impl InvariantKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InvariantKind::Homfly => "homfly",
            InvariantKind::W => "w",
            InvariantKind::Jones => "jones",
        }
    }
}

/// Compute one invariant and wrap it in the result object. `params` is
/// required for W and ignored otherwise; HOMFLY and Jones use
/// `normalization`, W uses the normalization inside `params`.
pub fn invariant_result(
    engine: &SkeinEngine<HomflyRing>,
    name: &str,
    d: &LinkDiagram,
    kind: InvariantKind,
    normalization: Normalization,
    params: Option<&SkeinParams>,
) -> Result<Value, SkeinError> {
    let (m, n, mode, norm, poly) = match kind {
        InvariantKind::Homfly => {
            (Value::Null, Value::Null, Mode::QExact, normalization, bi_to_value(&engine.homfly(d, normalization)?))
        }
        InvariantKind::Jones => {
            let p = specialize(&engine.homfly(d, normalization)?, 2)?;
            (Value::Null, Value::Null, Mode::QExact, normalization, uni_to_value(&jones_in_q(&p)))
        }
        InvariantKind::W => {
            let p = params.ok_or_else(|| SkeinError::Params("W needs M and N".into()))?;
            let poly = match p.mode {
                Mode::QExact => uni_to_value(&engine.w_invariant(d, p)?),
                Mode::PaperLiteral => series_to_value(&w_series(d, p)?),
            };
            (json!(p.m), json!(p.n), p.mode, p.normalization, poly)
        }
    };
    Ok(json!({
        "name": name,
        "invariant": kind.as_str(),
        "M": m,
        "N": n,
        "mode": mode.as_str(),
        "normalization": norm.as_str(),
        "writhe": d.writhe(),
        "components": d.component_count(),
        "poly": poly,
    }))
}
