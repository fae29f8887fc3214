use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn superskein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superskein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

/// `(exponent, re)` pairs of a univariate result.
fn uni_terms(poly: &Value) -> Vec<(i64, String)> {
    poly["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            assert_eq!(t["im"], "0");
            (t["e"].as_i64().unwrap(), t["re"].as_str().unwrap().to_string())
        })
        .collect()
}

fn mirrored(terms: &[(i64, String)]) -> Vec<(i64, String)> {
    let mut m: Vec<_> = terms.iter().map(|(e, c)| (-e, c.clone())).collect();
    m.sort();
    m
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn jones_of_trefoil() {
    let o = superskein(&["invariant", "--kind", "jones", "--braid", "1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &rows(&o)[0];
    assert_eq!(r["poly"]["var"], "q");
    assert_eq!(uni_terms(&r["poly"]), vec![(-4, "-1".into()), (-3, "1".into()), (-1, "1".into())]);
}

#[test]
fn homfly_of_hopf_link() {
    let o = superskein(&["invariant", "--kind", "homfly", "--braid", "1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &rows(&o)[0];
    let terms: Vec<(i64, i64, String)> = r["poly"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["et"].as_i64().unwrap(), t["ez"].as_i64().unwrap(), t["re"].as_str().unwrap().into()))
        .collect();
    assert_eq!(terms, vec![(-3, -1, "-1".into()), (-1, -1, "1".into()), (-1, 1, "1".into())]);
    assert_eq!(r["normalization"], "unit");
    assert_eq!(r["components"], 2);
}

#[test]
fn w_of_unknot_is_quantum_dimension() {
    let o = superskein(&["invariant", "--kind", "w", "--M", "3", "--N", "1", "--braid", "", "--strands", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &rows(&o)[0];
    assert_eq!(r["normalization"], "paper");
    assert_eq!(r["poly"]["var"], "u");
    assert_eq!(uni_terms(&r["poly"]), vec![(-2, "1".into()), (2, "1".into())]);
}

#[test]
fn sl_reports_parameters() {
    let o = superskein(&["invariant", "--kind", "sl", "--M", "3", "--N", "1", "--braid", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &rows(&o)[0];
    assert_eq!(r["invariant"], "sl");
    assert_eq!(uni_terms(&r["params"]["alpha"]), vec![(3, "1".into())]);
    assert_eq!(uni_terms(&r["params"]["beta"]), vec![(1, "1".into())]);
    // A single curl multiplies the unknot value by α.
    assert_eq!(uni_terms(&r["poly"]), vec![(1, "1".into()), (5, "1".into())]);
}

#[test]
fn w_requires_ranks() {
    let o = superskein(&["invariant", "--kind", "w", "--braid", "1 1 1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = superskein(&["invariant", "--kind", "w", "--M", "2", "--N", "2", "--braid", "1 1 1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(superskein(&["invariant", "--braid", "1 x"]).status.code(), Some(2));
    assert_eq!(superskein(&["invariant", "--braid", "3", "--strands", "2"]).status.code(), Some(2));
    assert_eq!(superskein(&["invariant"]).status.code(), Some(2));
    assert_eq!(superskein(&["invariant", "--kind", "nope", "--braid", "1"]).status.code(), Some(2));
    let bad = temp_file("{\"crossings\": [");
    assert_eq!(superskein(&["invariant", "--pd-file", bad.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn ceiling_exits_3() {
    let o = superskein(&["invariant", "--braid", "1 1 1", "--max-crossings", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = superskein(&["tree", "--braid", "1 1 1 1 1 1 1 1 1 1 1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn pd_file_matches_braid() {
    let pd = temp_file(
        r#"{"crossings":[{"sign":1,"ui":0,"uo":1,"oi":2,"oo":3},{"sign":1,"ui":3,"uo":2,"oi":1,"oo":0}]}"#,
    );
    let from_pd = rows(&superskein(&["invariant", "--pd-file", pd.path().to_str().unwrap()]));
    let from_braid = rows(&superskein(&["invariant", "--braid", "1 1"]));
    assert_eq!(from_pd[0]["poly"], from_braid[0]["poly"]);
}

#[test]
fn default_corpus_jones() {
    let o = superskein(&["corpus", "--kind", "jones"]);
    assert_eq!(o.status.code(), Some(0));
    let rs = rows(&o);
    assert_eq!(rs.len(), 6);
    let by_name = |n: &str| rs.iter().find(|r| r["name"] == n).unwrap();
    let right = uni_terms(&by_name("trefoil_right")["poly"]);
    let left = uni_terms(&by_name("trefoil_left")["poly"]);
    assert_eq!(mirrored(&right), left);
}

#[test]
fn default_corpus_homfly_figure_eight_symmetric() {
    let rs = rows(&superskein(&["corpus", "--kind", "homfly"]));
    let f8 = rs.iter().find(|r| r["name"] == "figure_eight").unwrap();
    let mut terms: Vec<(i64, i64, String)> = f8["poly"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["et"].as_i64().unwrap(), t["ez"].as_i64().unwrap(), t["re"].as_str().unwrap().into()))
        .collect();
    let original = terms.clone();
    for t in &mut terms {
        t.0 = -t.0;
    }
    terms.sort();
    assert_eq!(terms, original);
}

#[test]
fn empty_corpus_gives_no_rows() {
    let f = temp_file("");
    let o = superskein(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn unreadable_corpus_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.jsonl");
    assert_eq!(superskein(&["corpus", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn corpus_failures_are_per_row() {
    let f = temp_file(concat!(
        "{\"name\":\"a\",\"braid\":\"1 1 1\",\"strands\":2}\n",
        "{\"name\":\"b\",\"braid\":\"5\",\"strands\":2}\n",
        "{\"name\":\"c\",\"braid\":\"1 1 1 1 1\",\"strands\":2}\n",
        "{\"name\":\"d\",\"braid\":\"1 -2 1 -2\",\"strands\":3}\n",
    ));
    let o = superskein(&["corpus", f.path().to_str().unwrap(), "--max-crossings", "4"]);
    let rs = rows(&o);
    assert_eq!(rs.iter().map(|r| r["name"].as_str().unwrap()).collect::<Vec<_>>(), ["a", "b", "c", "d"]);
    assert!(rs[0].get("poly").is_some() && rs[3].get("poly").is_some());
    assert_eq!(rs[1]["code"], 2);
    assert_eq!(rs[2]["code"], 3);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for kind in ["homfly", "jones"] {
        let a = superskein(&["corpus", "--kind", kind]);
        let b = superskein(&["corpus", "--kind", kind]);
        assert_eq!(a.stdout, b.stdout);
    }
    let args = ["corpus", "--kind", "w", "--M", "3", "--N", "1", "--mode", "paper-literal", "--output", "table"];
    assert_eq!(superskein(&args).stdout, superskein(&args).stdout);
}

#[test]
fn verify_algebra_passes() {
    let o = superskein(&["verify", "--suite", "algebra", "--M", "3", "--N", "1", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_passed"], true);
    let ids = v["reports"][0]["identities"].as_array().unwrap();
    assert!(ids.iter().any(|i| i["name"] == "fierz"));
}

#[test]
fn verify_rejects_equal_ranks() {
    assert_eq!(superskein(&["verify", "--suite", "algebra", "--M", "2", "--N", "2"]).status.code(), Some(2));
}

#[test]
fn verify_perturbative_reports_t() {
    let o = superskein(&["verify", "--suite", "perturbative", "--M", "4", "--N", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    let t = checks.iter().find(|c| c["name"] == "t_eps1").unwrap();
    assert_eq!(t["actual"]["re"], "0");
    assert_eq!(t["actual"]["im"], "-3/2");
}

#[test]
fn verify_skein_on_default_corpus() {
    let o = superskein(&["verify", "--suite", "skein"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn printed_field_sign_fails_verification() {
    let o = superskein(&["verify", "--suite", "algebra", "--M", "2", "--N", "1", "--samples", "5", "--field-sign", "as-printed"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn expand_prints_parameters() {
    let o = superskein(&["expand", "--M", "3", "--N", "1", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["casimir"], "3/4");
    assert_eq!(v["series"]["alpha"]["coeffs"][1]["im"], "-3/4");
    assert_eq!(superskein(&["expand"]).status.code(), Some(2));
}

#[test]
fn tree_dump() {
    let o = superskein(&["tree", "--braid", "1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["branch"]["crossing"], 0);
    assert_eq!(v["branch"]["switched"]["components"], 2);
    assert_eq!(v["branch"]["smoothed"]["components"], 1);
}

#[test]
fn table_output() {
    let o = superskein(&["corpus", "--kind", "jones", "--output", "table"]);
    let text = stdout(&o);
    assert!(text.starts_with("name"));
    assert!(text.contains("q^2 - q + 1 - q^-1 + q^-2"));
}
