//! Plain-text rendering for `--output table`.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::Value;
use superskein::arith::serial::{any_from_value, series_from_value};
use superskein::arith::{GaussianRational, Rational};
use superskein::skein::tree::{NodeKind, SkeinTreeNode};

/// Human-readable form of an encoded polynomial or series.
fn poly(v: &Value) -> String {
    if v.get("var").and_then(Value::as_str) == Some("eps") {
        return series_from_value(v).map(|s| s.to_string()).unwrap_or_else(|e| e.to_string());
    }
    match any_from_value(v) {
        Ok(superskein::arith::AnyLaurent::Uni(p)) => p.to_string(),
        Ok(superskein::arith::AnyLaurent::Bi(p)) => p.to_string(),
        Err(e) => e.to_string(),
    }
}

fn coeff(v: &Value) -> String {
    let part = |k: &str| v[k].as_str().and_then(|s| Rational::from_str(s).ok());
    match (part("re"), part("im")) {
        (Some(re), Some(im)) => GaussianRational::new(re, im).to_string(),
        _ => cell(v),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let last = cells.len() - 1;
        for (i, c) in cells.iter().enumerate() {
            if i == last {
                out.push_str(c);
            } else {
                let pad = width[i] - c.chars().count();
                let _ = write!(out, "{c}{}  ", " ".repeat(pad));
            }
        }
        out.push('\n');
    };
    line(header.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

pub fn invariants(rows: &[Value]) -> String {
    let header = ["name", "invariant", "M", "N", "mode", "norm", "writhe", "comps", "value"];
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            if let Some(err) = r.get("error") {
                let mut v = vec![cell(&r["name"]), "error".into()];
                v.extend(std::iter::repeat_n("-".to_string(), 6));
                v.push(cell(err));
                return v;
            }
            let mut value = poly(&r["poly"]);
            if let Some(p) = r.get("params").and_then(Value::as_object) {
                for (k, s) in p {
                    let _ = write!(value, "; {k} = {}", poly(s));
                }
            }
            vec![
                cell(&r["name"]),
                cell(&r["invariant"]),
                cell(&r["M"]),
                cell(&r["N"]),
                cell(&r["mode"]),
                cell(&r["normalization"]),
                cell(&r["writhe"]),
                cell(&r["components"]),
                value,
            ]
        })
        .collect();
    render(&header, &body)
}

pub fn verify(reports: &[Value], all_passed: bool) -> String {
    let mut body = Vec::new();
    let status = |ok: bool| if ok { "pass" } else { "FAIL" }.to_string();
    for r in reports {
        match r["suite"].as_str() {
            Some("algebra") => {
                let group = format!("algebra ({},{})", r["M"], r["N"]);
                for id in r["identities"].as_array().into_iter().flatten() {
                    let failed = id["failed"].as_u64().unwrap_or(0);
                    body.push(vec![
                        group.clone(),
                        cell(&id["name"]),
                        cell(&id["checked"]),
                        failed.to_string(),
                        status(failed == 0),
                        "-".into(),
                    ]);
                }
            }
            Some("skein") => {
                for row in r["relations"].as_array().into_iter().flatten() {
                    if row.get("skipped").is_some() {
                        body.push(vec!["skein".into(), cell(&row["name"]), "0".into(), "0".into(), "skipped".into(), "-".into()]);
                        continue;
                    }
                    let failed = row["failed"].as_u64().unwrap_or(0);
                    let name = format!("{} {}", cell(&row["name"]), cell(&row["check"]));
                    body.push(vec!["skein".into(), name, cell(&row["checked"]), failed.to_string(), status(failed == 0), "-".into()]);
                }
            }
            _ => {
                let group = format!("perturbative ({},{})", r["M"], r["N"]);
                for c in r["checks"].as_array().into_iter().flatten() {
                    let ok = c["passed"] == Value::Bool(true);
                    let failed = if ok { "0" } else { "1" };
                    body.push(vec![group.clone(), cell(&c["name"]), "1".into(), failed.into(), status(ok), coeff(&c["actual"])]);
                }
            }
        }
    }
    let mut out = render(&["suite", "check", "checked", "failed", "status", "value"], &body);
    let _ = writeln!(out, "overall: {}", if all_passed { "pass" } else { "FAIL" });
    out
}

pub fn expand(v: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "M = {}, N = {}, mode {}, u = {}, C2 = {}", v["M"], v["N"], cell(&v["mode"]), cell(&v["u"]), cell(&v["casimir"]));
    let mut body = Vec::new();
    for (k, p) in v["params"].as_object().into_iter().flatten() {
        body.push(vec![k.clone(), poly(p), poly(&v["series"][k])]);
    }
    out.push_str(&render(&["param", "value", "eps expansion"], &body));
    out
}

fn components(k: usize) -> String {
    if k == 1 {
        "1 component".into()
    } else {
        format!("{k} components")
    }
}

fn tree_node(out: &mut String, t: &SkeinTreeNode, depth: usize, label: &str) {
    let indent = "  ".repeat(depth);
    match &t.kind {
        NodeKind::Branch { crossing, sign, switched, smoothed } => {
            let _ = writeln!(
                out,
                "{indent}{label}{} crossings, {}, writhe {}: resolve crossing {crossing} ({sign:+})",
                t.crossings,
                components(t.components),
                t.writhe
            );
            tree_node(out, switched, depth + 1, "switched: ");
            tree_node(out, smoothed, depth + 1, "smoothed: ");
        }
        NodeKind::Leaf { component_writhes } => {
            let _ = writeln!(
                out,
                "{indent}{label}unlink ({}), writhe {}, component writhes {component_writhes:?}",
                components(t.components),
                t.writhe
            );
        }
    }
}

pub fn tree(t: &SkeinTreeNode) -> String {
    let mut out = String::new();
    tree_node(&mut out, t, 0, "");
    let _ = writeln!(out, "{} leaves, depth {}", t.leaf_count(), t.depth());
    out
}
