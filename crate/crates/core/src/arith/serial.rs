//! JSON encoding of exact polynomials.
//!
//! Univariate: `{"var":"u","terms":[{"e":-4,"re":"-1","im":"0"}, …]}`.
//! Bivariate: `{"var":"t,z","terms":[{"et":1,"ez":-1,"re":"1","im":"0"}, …]}`.
//! Coefficients are decimal rationals `"p/q"` (or `"p"` when integral).
//! Terms are written in ascending exponent order, so encoding is canonical.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{AnyLaurent, ArithError, EpsSeries, GaussianRational, LaurentBi, LaurentUni, Rational};

#[derive(Serialize, Deserialize)]
struct UniTerm {
    e: i64,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct UniJson {
    var: String,
    terms: Vec<UniTerm>,
}

#[derive(Serialize, Deserialize)]
struct BiTerm {
    et: i64,
    ez: i64,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct BiJson {
    var: String,
    terms: Vec<BiTerm>,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    var: String,
    order: usize,
    coeffs: Vec<CoeffJson>,
}

const BI_VAR: &str = "t,z";

fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let r = Rational::from_str(s.trim()).map_err(|_| ArithError::Parse(format!("bad rational {s:?}")))?;
    Ok(r)
}

fn parse_coeff(re: &str, im: &str) -> Result<GaussianRational, ArithError> {
    Ok(GaussianRational::new(parse_rational(re)?, parse_rational(im)?))
}

pub fn uni_to_value(p: &LaurentUni) -> Value {
    let j = UniJson {
        var: p.var().to_string(),
        terms: p.terms().map(|(e, c)| UniTerm { e, re: c.re.to_string(), im: c.im.to_string() }).collect(),
    };
    serde_json::to_value(j).expect("serializable")
}

pub fn bi_to_value(p: &LaurentBi) -> Value {
    let j = BiJson {
        var: BI_VAR.to_string(),
        terms: p
            .terms()
            .map(|((et, ez), c)| BiTerm { et, ez, re: c.re.to_string(), im: c.im.to_string() })
            .collect(),
    };
    serde_json::to_value(j).expect("serializable")
}

pub fn any_to_value(p: &AnyLaurent) -> Value {
    match p {
        AnyLaurent::Uni(u) => uni_to_value(u),
        AnyLaurent::Bi(b) => bi_to_value(b),
    }
}

pub fn uni_from_value(v: &Value) -> Result<LaurentUni, ArithError> {
    let j: UniJson = serde_json::from_value(v.clone()).map_err(|e| ArithError::Parse(e.to_string()))?;
    let mut chars = j.var.chars();
    let var = match (chars.next(), chars.next()) {
        (Some(c), None) => c,
        _ => return Err(ArithError::Parse(format!("variable must be one character, got {:?}", j.var))),
    };
    let terms = j
        .terms
        .iter()
        .map(|t| Ok((t.e, parse_coeff(&t.re, &t.im)?)))
        .collect::<Result<Vec<_>, ArithError>>()?;
    Ok(LaurentUni::from_terms(var, terms))
}

pub fn bi_from_value(v: &Value) -> Result<LaurentBi, ArithError> {
    let j: BiJson = serde_json::from_value(v.clone()).map_err(|e| ArithError::Parse(e.to_string()))?;
    if j.var != BI_VAR {
        return Err(ArithError::Parse(format!("bivariate polynomials use var \"{BI_VAR}\", got {:?}", j.var)));
    }
    let terms = j
        .terms
        .iter()
        .map(|t| Ok(((t.et, t.ez), parse_coeff(&t.re, &t.im)?)))
        .collect::<Result<Vec<_>, ArithError>>()?;
    Ok(LaurentBi::from_terms(terms))
}

/// Decide the kind from the `var` field.
pub fn any_from_value(v: &Value) -> Result<AnyLaurent, ArithError> {
    match v.get("var").and_then(Value::as_str) {
        Some(BI_VAR) => Ok(AnyLaurent::Bi(bi_from_value(v)?)),
        Some(_) => Ok(AnyLaurent::Uni(uni_from_value(v)?)),
        None => Err(ArithError::Parse("missing \"var\"".into())),
    }
}

pub fn series_to_value(s: &EpsSeries) -> Value {
    let j = SeriesJson {
        var: "eps".into(),
        order: s.order(),
        coeffs: s.coeffs().iter().map(|c| CoeffJson { re: c.re.to_string(), im: c.im.to_string() }).collect(),
    };
    serde_json::to_value(j).expect("serializable")
}

pub fn series_from_value(v: &Value) -> Result<EpsSeries, ArithError> {
    let j: SeriesJson = serde_json::from_value(v.clone()).map_err(|e| ArithError::Parse(e.to_string()))?;
    let coeffs = j.coeffs.iter().map(|c| parse_coeff(&c.re, &c.im)).collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != j.order + 1 {
        return Err(ArithError::Parse("coefficient count does not match order".into()));
    }
    Ok(EpsSeries::from_coeffs(coeffs, j.order))
}

pub fn coeff_to_value(c: &GaussianRational) -> Value {
    serde_json::to_value(CoeffJson { re: c.re.to_string(), im: c.im.to_string() }).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_shape() {
        let p = LaurentUni::from_ints('u', &[(-4, -1)]);
        assert_eq!(
            serde_json::to_string(&uni_to_value(&p)).unwrap(),
            r#"{"var":"u","terms":[{"e":-4,"re":"-1","im":"0"}]}"#
        );
    }

    #[test]
    fn round_trips() {
        let p = LaurentUni::from_terms(
            'q',
            [(3, GaussianRational::new(crate::arith::rat(-7, 3), crate::arith::rat(1, 2))), (-1, 2.into())],
        );
        assert_eq!(uni_from_value(&uni_to_value(&p)).unwrap(), p);
        let b = LaurentBi::from_ints(&[(-1, -1, 1), (-3, -1, -1), (-1, 1, 1)]);
        assert_eq!(bi_from_value(&bi_to_value(&b)).unwrap(), b);
        assert_eq!(any_from_value(&bi_to_value(&b)).unwrap(), AnyLaurent::Bi(b));
    }

    #[test]
    fn rejects_garbage() {
        let v: Value = serde_json::from_str(r#"{"var":"u","terms":[{"e":1,"re":"x","im":"0"}]}"#).unwrap();
        assert!(uni_from_value(&v).is_err());
        let v: Value = serde_json::from_str(r#"{"var":"u","terms":[{"e":1,"re":"1/0","im":"0"}]}"#).unwrap();
        assert!(uni_from_value(&v).is_err());
    }
}
