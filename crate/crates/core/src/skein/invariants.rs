use super::engine::{HomflyRing, SeriesRing, SkeinEngine};
use super::params::{Normalization, SkeinParams};
use super::SkeinError;
use crate::arith::{specialize, EpsSeries, LaurentBi, LaurentUni};
use crate::diagram::LinkDiagram;

impl SkeinEngine<HomflyRing> {
    /// HOMFLY polynomial with this engine's memo.
    pub fn homfly(&self, d: &LinkDiagram, normalization: Normalization) -> Result<LaurentBi, SkeinError> {
        let p = self.evaluate(d)?;
        Ok(match normalization {
            Normalization::Unit => p,
            Normalization::Paper => &p * self.ring().delta(),
        })
    }

    /// W with this engine's memo; needs q-exact parameters.
    pub fn w_invariant(&self, d: &LinkDiagram, params: &SkeinParams) -> Result<LaurentUni, SkeinError> {
        let e = params.exact()?;
        let p = specialize(&self.homfly(d, params.normalization)?, params.mn)?;
        Ok(&e.alpha.pow(d.writhe())? * &p)
    }
}

/// The ambient-isotopy invariant P(t, z) satisfying t·P₊ − t⁻¹·P₋ = z·P₀.
pub fn homfly(d: &LinkDiagram, normalization: Normalization) -> Result<LaurentBi, SkeinError> {
    SkeinEngine::new(HomflyRing::new()).homfly(d, normalization)
}

/// The regular-isotopy invariant W = α^{writhe}·P specialized to `u`.
pub fn w_invariant(d: &LinkDiagram, params: &SkeinParams) -> Result<LaurentUni, SkeinError> {
    SkeinEngine::new(HomflyRing::new()).w_invariant(d, params)
}

/// W in paper-literal mode: the same recursion run on ε-series with unknot
/// value M − N. Agrees with the q-exact W expanded in ε at first order.
pub fn w_series(d: &LinkDiagram, params: &SkeinParams) -> Result<EpsSeries, SkeinError> {
    let s = params.series()?;
    let engine = SkeinEngine::new(SeriesRing::new(s)?);
    let mut p = engine.evaluate(d)?;
    if params.normalization == Normalization::Paper {
        p = &p * &s.delta;
    }
    Ok(&s.alpha.pow(d.writhe())? * &p)
}

/// `specialize(homfly(d, unit), 2)`, a polynomial in `u = q^{1/4}`.
pub fn jones_u(d: &LinkDiagram) -> Result<LaurentUni, SkeinError> {
    Ok(specialize(&homfly(d, Normalization::Unit)?, 2)?)
}

/// The Jones specialization written in `q` when every exponent is an
/// integer power of q, and otherwise in `s = q^{1/2}`.
pub fn jones(d: &LinkDiagram) -> Result<LaurentUni, SkeinError> {
    Ok(jones_in_q(&jones_u(d)?))
}

pub(crate) fn jones_in_q(p: &LaurentUni) -> LaurentUni {
    let step = if p.terms().all(|(e, _)| e % 4 == 0) { 4 } else { 2 };
    let var = if step == 4 { 'q' } else { 's' };
    debug_assert!(p.terms().all(|(e, _)| e % 2 == 0));
    LaurentUni::from_terms(var, p.terms().map(|(e, c)| (e / step, c.clone())))
}
