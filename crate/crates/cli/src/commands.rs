use std::fmt;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Map, Value};
use superskein::algebra::verify::{verify_algebra, AlgebraSuiteOptions};
use superskein::algebra::AlgebraContext;
use superskein::arith::serial::{series_to_value, uni_to_value};
use superskein::diagram::corpus::{parse_corpus, CorpusEntry, DEFAULT_CORPUS};
use superskein::diagram::{braid_closure, parse_braid, DiagramError, LinkDiagram};
use superskein::skein::result::{invariant_result, InvariantKind};
use superskein::skein::{
    make_params, perturbative_check, skein_tree, verify_skein, HomflyRing, Mode, Normalization, ParamValues,
    SkeinCheck, SkeinEngine, SkeinError, SkeinParams,
};

use crate::args::{Cli, Command, InputArgs, Kind, Output, RunArgs, Suite};
use crate::table;

/// Rank pairs checked by the perturbative suite when M and N are not given.
const PERTURBATIVE_DEFAULT: [(i64, i64); 5] = [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2)];

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Ceiling(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Ceiling(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Ceiling(m) => f.write_str(m),
        }
    }
}

impl From<SkeinError> for CliError {
    fn from(e: SkeinError) -> Self {
        match e {
            SkeinError::CeilingExceeded { .. } => CliError::Ceiling(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Text to print and the exit code to finish with.
pub struct Finished {
    pub text: String,
    pub code: u8,
}

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub mode: Mode,
    pub normalization: Option<Normalization>,
    pub max_crossings: usize,
    pub series_order: usize,
    pub output: Output,
}

impl From<&RunArgs> for RunConfig {
    fn from(a: &RunArgs) -> Self {
        RunConfig {
            m: a.m,
            n: a.n,
            mode: a.mode.into(),
            normalization: a.normalization.map(Into::into),
            max_crossings: a.max_crossings,
            series_order: a.order,
            output: a.output,
        }
    }
}

impl RunConfig {
    fn ranks(&self) -> Result<Option<(i64, i64)>, CliError> {
        match (self.m, self.n) {
            (None, None) => Ok(None),
            (Some(m), Some(n)) if m == n => Err(CliError::Input(format!("M = N = {m} is not allowed"))),
            (Some(m), Some(n)) if m < 0 || n < 0 => Err(CliError::Input("M and N must be non-negative".into())),
            (Some(m), Some(n)) => Ok(Some((m, n))),
            _ => Err(CliError::Input("give both --M and --N".into())),
        }
    }

    fn required_ranks(&self, what: &str) -> Result<(i64, i64), CliError> {
        self.ranks()?.ok_or_else(|| CliError::Input(format!("{what} needs --M and --N")))
    }

    fn params(&self, what: &str) -> Result<SkeinParams, CliError> {
        let (m, n) = self.required_ranks(what)?;
        let p = make_params(m, n, self.mode, self.series_order)?;
        Ok(p.with_normalization(self.normalization.unwrap_or(Normalization::Paper)))
    }

    fn engine(&self) -> SkeinEngine<HomflyRing> {
        SkeinEngine::new(HomflyRing::new()).with_ceiling(self.max_crossings)
    }

    fn check_ceiling(&self, d: &LinkDiagram) -> Result<(), CliError> {
        if d.num_crossings() > self.max_crossings {
            return Err(SkeinError::CeilingExceeded { found: d.num_crossings(), max: self.max_crossings }.into());
        }
        Ok(())
    }
}

pub fn run(cli: Cli) -> Result<Finished, CliError> {
    match &cli.command {
        Command::Invariant { input, run, kind } => {
            let cfg = RunConfig::from(run);
            let (name, d) = read_input(input)?;
            let row = compute(&cfg, &cfg.engine(), &name, &d, *kind)?;
            Ok(done(render_rows(cfg.output, &[row]), 0))
        }
        Command::Corpus { file, run, kind } => {
            let cfg = RunConfig::from(run);
            let text = match file {
                Some(p) => read_file(p)?,
                None => DEFAULT_CORPUS.to_string(),
            };
            corpus(&cfg, &text, *kind)
        }
        Command::Verify { run, suite, field_sign, samples, seed, corpus } => {
            let cfg = RunConfig::from(run);
            let opts = AlgebraSuiteOptions {
                density_samples: *samples,
                field_samples: (*samples / 5).max(1).min(*samples),
                field_sign: (*field_sign).into(),
                seed: *seed,
            };
            let corpus_text = match corpus {
                Some(p) => read_file(p)?,
                None => DEFAULT_CORPUS.to_string(),
            };
            verify(&cfg, *suite, opts, &corpus_text)
        }
        Command::Expand { run } => {
            let cfg = RunConfig::from(run);
            expand(&cfg)
        }
        Command::Tree { input, run } => {
            let cfg = RunConfig::from(run);
            let (_, d) = read_input(input)?;
            cfg.check_ceiling(&d)?;
            let t = skein_tree(&d)?;
            let text = match cfg.output {
                Output::Json => format!("{}\n", t.to_json()),
                Output::Table => table::tree(&t),
            };
            Ok(Finished { text, code: 0 })
        }
    }
}

fn done(text: String, code: u8) -> Finished {
    Finished { text, code }
}

fn read_file(p: &Path) -> Result<String, CliError> {
    fs::read_to_string(p).map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))
}

/// Strand count implied by a braid word: one more than the largest generator.
fn default_strands(word: &str) -> usize {
    word.split(|c: char| c.is_whitespace() || c == ',')
        .filter_map(|t| t.parse::<i64>().ok())
        .map(|g| g.unsigned_abs() as usize + 1)
        .max()
        .unwrap_or(1)
}

fn read_input(input: &InputArgs) -> Result<(String, LinkDiagram), CliError> {
    match (&input.braid, &input.pd_file) {
        (Some(word), None) => {
            let strands = input.strands.unwrap_or_else(|| default_strands(word));
            let d = braid_closure(&parse_braid(word, strands)?);
            Ok((format!("braid {word:?}"), d))
        }
        (None, Some(path)) => {
            let d = LinkDiagram::from_json(&read_file(path)?)?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok((name, d))
        }
        _ => Err(CliError::Input("give --braid or --pd-file".into())),
    }
}

fn params_value(p: &SkeinParams) -> Value {
    match &p.values {
        ParamValues::Exact(e) => json!({
            "alpha": uni_to_value(&e.alpha),
            "beta": uni_to_value(&e.beta),
            "z": uni_to_value(&e.z),
            "t": uni_to_value(&e.t),
            "delta": uni_to_value(&e.delta),
        }),
        ParamValues::Series(s) => json!({
            "alpha": series_to_value(&s.alpha),
            "beta": series_to_value(&s.beta),
            "z": series_to_value(&s.z),
            "t": series_to_value(&s.t),
            "delta": series_to_value(&s.delta),
        }),
    }
}

fn compute(
    cfg: &RunConfig,
    engine: &SkeinEngine<HomflyRing>,
    name: &str,
    d: &LinkDiagram,
    kind: Kind,
) -> Result<Value, CliError> {
    cfg.check_ceiling(d)?;
    let unit = cfg.normalization.unwrap_or(Normalization::Unit);
    match kind {
        Kind::Homfly => Ok(invariant_result(engine, name, d, InvariantKind::Homfly, unit, None)?),
        Kind::Jones => Ok(invariant_result(engine, name, d, InvariantKind::Jones, unit, None)?),
        Kind::W => {
            let p = cfg.params("the w invariant")?;
            Ok(invariant_result(engine, name, d, InvariantKind::W, p.normalization, Some(&p))?)
        }
        Kind::Sl => {
            let p = cfg.params("the sl invariant")?;
            let mut v = invariant_result(engine, name, d, InvariantKind::W, p.normalization, Some(&p))?;
            v["invariant"] = json!("sl");
            v["params"] = params_value(&p);
            Ok(v)
        }
    }
}

fn render_rows(output: Output, rows: &[Value]) -> String {
    match output {
        Output::Json => rows.iter().map(|r| format!("{r}\n")).collect(),
        Output::Table => table::invariants(rows),
    }
}

fn corpus(cfg: &RunConfig, text: &str, kind: Kind) -> Result<Finished, CliError> {
    let entries = parse_corpus(text)?;
    // Parameter errors apply to every row, so report them once.
    if matches!(kind, Kind::W | Kind::Sl) {
        cfg.params("this invariant")?;
    }
    let engine = cfg.engine();
    let results: Vec<Result<Value, CliError>> = entries
        .par_iter()
        .map(|e: &CorpusEntry| {
            let d = e.diagram()?;
            compute(cfg, &engine, &e.name, &d, kind)
        })
        .collect();
    let mut code = 0;
    let rows: Vec<Value> = entries
        .iter()
        .zip(results)
        .map(|(e, r)| match r {
            Ok(v) => v,
            Err(err) => {
                code = code.max(err.code());
                json!({"name": e.name, "error": err.to_string(), "code": err.code()})
            }
        })
        .collect();
    Ok(done(render_rows(cfg.output, &rows), code))
}

fn algebra_contexts(cfg: &RunConfig) -> Result<Vec<AlgebraContext>, CliError> {
    match cfg.ranks()? {
        Some((m, n)) => {
            let ctx = AlgebraContext::new(m as usize, n as usize).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(vec![ctx])
        }
        None => Ok(AlgebraContext::all_up_to(5)),
    }
}

fn skein_checks(cfg: &RunConfig) -> Result<Vec<(String, SkeinCheck)>, CliError> {
    let pairs = match cfg.ranks()? {
        Some(mn) => vec![mn],
        None => vec![(3, 1), (4, 1)],
    };
    let mut checks = vec![("homfly".to_string(), SkeinCheck::Homfly)];
    for (m, n) in pairs {
        let p = make_params(m, n, Mode::QExact, 1)?;
        checks.push((format!("w({m},{n})"), SkeinCheck::W(p)));
    }
    Ok(checks)
}

fn skein_report(cfg: &RunConfig, corpus_text: &str) -> Result<Value, CliError> {
    let checks = skein_checks(cfg)?;
    let mut rows = Vec::new();
    let mut all = true;
    for e in parse_corpus(corpus_text)? {
        let d = e.diagram()?;
        if d.num_crossings() > cfg.max_crossings {
            rows.push(json!({"name": e.name, "crossings": d.num_crossings(), "skipped": true}));
            continue;
        }
        for (label, check) in &checks {
            let mut failed = Vec::new();
            for c in 0..d.num_crossings() {
                if !verify_skein(&d, c, check)? {
                    failed.push(c);
                }
            }
            all &= failed.is_empty();
            rows.push(json!({
                "name": e.name,
                "check": label,
                "checked": d.num_crossings(),
                "failed": failed.len(),
                "first_counterexample": failed.first(),
            }));
        }
    }
    Ok(json!({"suite": "skein", "all_passed": all, "relations": rows}))
}

fn verify(cfg: &RunConfig, suite: Suite, opts: AlgebraSuiteOptions, corpus_text: &str) -> Result<Finished, CliError> {
    let mut reports = Vec::new();
    if matches!(suite, Suite::Algebra | Suite::All) {
        for ctx in algebra_contexts(cfg)? {
            let r = verify_algebra(ctx, opts);
            let mut v = serde_json::to_value(&r).expect("serializable");
            let obj = v.as_object_mut().expect("object");
            let mut head = Map::new();
            head.insert("suite".into(), json!("algebra"));
            head.insert("all_passed".into(), json!(r.all_passed()));
            head.append(obj);
            reports.push(Value::Object(head));
        }
    }
    if matches!(suite, Suite::Skein | Suite::All) {
        reports.push(skein_report(cfg, corpus_text)?);
    }
    if matches!(suite, Suite::Perturbative | Suite::All) {
        let pairs = match cfg.ranks()? {
            Some(mn) => vec![mn],
            None => PERTURBATIVE_DEFAULT.to_vec(),
        };
        for (m, n) in pairs {
            reports.push(perturbative_check(m, n, cfg.series_order)?.to_json());
        }
    }
    let all_passed = reports.iter().all(|r| r["all_passed"] == json!(true));
    let text = match cfg.output {
        Output::Json => format!("{}\n", json!({"all_passed": all_passed, "reports": reports})),
        Output::Table => table::verify(&reports, all_passed),
    };
    Ok(done(text, if all_passed { 0 } else { 4 }))
}

fn expand(cfg: &RunConfig) -> Result<Finished, CliError> {
    let (m, n) = cfg.required_ranks("expand")?;
    let p = make_params(m, n, cfg.mode, cfg.series_order)?;
    let report = perturbative_check(m, n, cfg.series_order)?;
    let series: Map<String, Value> = report.expanded.iter().map(|(k, s)| (k.clone(), series_to_value(s))).collect();
    let v = json!({
        "M": m,
        "N": n,
        "mode": p.mode.as_str(),
        "order": report.order,
        "casimir": p.casimir().to_string(),
        "u": format!("q^(1/{})", p.u_denominator()),
        "params": params_value(&p),
        "series": series,
    });
    let text = match cfg.output {
        Output::Json => format!("{v}\n"),
        Output::Table => table::expand(&v),
    };
    Ok(Finished { text, code: 0 })
}
