//! Command-line front end: load a JSON document, run one command, emit a JSON report.

pub mod document;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use indexmap::IndexMap;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::abcat::LinMap;
use crate::brown::{cospanical_extend, spanical_extend, verify_all, BrownFunctor, ExtendedMorphism};
use crate::cospan::{
    canonical_cosp, canonical_span, compose_cosp, compose_span, dagger_cosp, dagger_span,
    equiv_cosp, equiv_span, leq_cosp, leq_span, tensor_cosp, tensor_span, transpose_cosp,
    transpose_span, CanonicalClass, Cospan, Span,
};
use crate::cw::{augmented_chain, dimension_filter, homology, mv_exactness_check};
use crate::exactlin::{Matrix, Scalar};
use crate::generate::{LinearSizes, SpaceSizes};
use crate::suites::{self, SuiteResult};
pub use document::{load, parse, validate, Document, Loaded};

pub const COMMANDS: [&str; 14] = [
    "canon",
    "equiv",
    "leq",
    "compose",
    "transpose",
    "tensor",
    "dagger",
    "homology",
    "mv-check",
    "extend-cospan",
    "extend-span",
    "verify",
    "oracle",
    "random-suite",
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("unknown command '{0}'")]
    UnknownCommand(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{context}: {source}")]
    Module {
        context: String,
        source: crate::Error,
    },
}

fn module(context: impl Into<String>) -> impl FnOnce(crate::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Module { context, source }
}

/// `--d N` or `--d inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimBound(pub Option<usize>);

impl std::str::FromStr for DimBound {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(DimBound(None))
        } else {
            s.parse().map(|d| DimBound(Some(d))).map_err(|_| format!("expected an integer or 'inf', got '{s}'"))
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "abcosp", version, about = "Cospans of vector spaces and simplicial Brown functor extensions")]
pub struct Args {
    /// One of: canon, equiv, leq, compose, transpose, tensor, dagger, homology,
    /// mv-check, extend-cospan, extend-span, verify, oracle, random-suite
    pub command: String,
    /// Input document (JSON)
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Homology degree
    #[arg(long)]
    pub q: Option<i64>,
    /// Dimension bound for the space-cospan filter, an integer or `inf`
    #[arg(long)]
    pub d: Option<DimBound>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timing in the report
    #[arg(long)]
    pub timing: bool,
    /// Comma-separated input names to operate on, in order
    #[arg(long, value_delimiter = ',')]
    pub names: Vec<String>,
    /// Instances per random suite
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 3)]
    pub max_foot: usize,
    #[arg(long, default_value_t = 4)]
    pub max_bulk: usize,
    #[arg(long, default_value_t = 8)]
    pub max_vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub flags: Value,
    pub inputs_digest: String,
    pub outcome: Outcome,
    pub value: Value,
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match self.outcome {
            Outcome::Fail => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Residue(r) => json!(r),
        Scalar::Rational(_) => json!(s.to_string()),
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    let data: Vec<Vec<Value>> = m.to_rows().iter().map(|r| r.iter().map(scalar_json).collect()).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "data": data})
}

fn class_json(c: &CanonicalClass) -> Value {
    json!({"foot0": c.foot0().dim, "foot1": c.foot1().dim, "dim": c.dim(), "basis": matrix_json(c.basis())})
}

fn cospan_json(l: &Cospan) -> Value {
    json!({"bulk": l.bulk().dim, "f0": matrix_json(l.f0().matrix()), "f1": matrix_json(l.f1().matrix()),
           "class": class_json(&canonical_cosp(l))})
}

fn span_json(v: &Span) -> Value {
    json!({"apex": v.apex().dim, "g0": matrix_json(v.g0().matrix()), "g1": matrix_json(v.g1().matrix()),
           "class": class_json(&canonical_span(v))})
}

fn extension_json(e: &ExtendedMorphism) -> Value {
    json!({"degree": e.degree, "bulk_dim": e.bulk_dim, "class": class_json(&e.class)})
}

fn suite_json(results: &[SuiteResult]) -> (Outcome, Value, Option<String>) {
    let passed = results.iter().all(SuiteResult::passed);
    let counterexample = results
        .iter()
        .find_map(|r| r.counterexample.as_ref().map(|c| format!("{}: {c}", r.name)));
    let outcome = if passed { Outcome::Pass } else { Outcome::Fail };
    (outcome, serde_json::to_value(results).expect("serializable"), counterexample)
}

/// Pick the entries named by `--names`, or the first `n` in document order.
fn pick<'a, T>(map: &'a IndexMap<String, T>, names: &[String], n: usize, kind: &str) -> Result<Vec<(&'a str, &'a T)>, CliError> {
    if names.is_empty() {
        if map.len() < n {
            return Err(CliError::Usage(format!("need at least {n} {kind} in the document, found {}", map.len())));
        }
        return Ok(map.iter().take(n).map(|(k, v)| (k.as_str(), v)).collect());
    }
    if names.len() != n {
        return Err(CliError::Usage(format!("expected {n} names, got {}", names.len())));
    }
    names
        .iter()
        .map(|name| {
            map.get_key_value(name)
                .map(|(k, v)| (k.as_str(), v))
                .ok_or_else(|| CliError::Usage(format!("no {kind} named '{name}'")))
        })
        .collect()
}

fn require(doc: Option<&Loaded>) -> Result<&Loaded, CliError> {
    doc.ok_or_else(|| CliError::Usage("this command needs --in <file>".into()))
}

fn flags_json(args: &Args) -> Value {
    json!({
        "q": args.q,
        "d": args.d.map(|d| d.0.map_or(json!("inf"), |v| json!(v))),
        "seed": args.seed,
        "names": args.names,
        "count": args.count,
        "max_foot": args.max_foot,
        "max_bulk": args.max_bulk,
        "max_vertices": args.max_vertices,
    })
}

type Body = (Outcome, Value, Option<String>);

fn two_linear<R>(
    doc: &Loaded,
    names: &[String],
    on_cosp: impl FnOnce(&str, &Cospan, &str, &Cospan) -> Result<R, CliError>,
    on_span: impl FnOnce(&str, &Span, &str, &Span) -> Result<R, CliError>,
) -> Result<R, CliError> {
    let use_spans = if names.is_empty() {
        doc.cospans.len() < 2 && doc.spans.len() >= 2
    } else {
        !doc.cospans.contains_key(&names[0]) && doc.spans.contains_key(&names[0])
    };
    if use_spans {
        let p = pick(&doc.spans, names, 2, "spans")?;
        on_span(p[0].0, p[0].1, p[1].0, p[1].1)
    } else {
        let p = pick(&doc.cospans, names, 2, "cospans")?;
        on_cosp(p[0].0, p[0].1, p[1].0, p[1].1)
    }
}

fn witness_json(w: &Option<LinMap>) -> Value {
    w.as_ref().map_or(Value::Null, |g| matrix_json(g.matrix()))
}

fn decision(holds: bool, value: Value, detail: impl FnOnce() -> String) -> Body {
    if holds {
        (Outcome::Pass, value, None)
    } else {
        (Outcome::Fail, value, Some(detail()))
    }
}

fn run_command(args: &Args, doc: Option<&Loaded>) -> Result<Body, CliError> {
    let names = &args.names;
    match args.command.as_str() {
        "canon" => {
            let doc = require(doc)?;
            let mut out = serde_json::Map::new();
            for (name, l) in &doc.cospans {
                out.insert(name.clone(), json!({"kind": "cospan", "class": class_json(&canonical_cosp(l))}));
            }
            for (name, v) in &doc.spans {
                out.insert(name.clone(), json!({"kind": "span", "class": class_json(&canonical_span(v))}));
            }
            Ok((Outcome::Value, Value::Object(out), None))
        }
        "equiv" => {
            let doc = require(doc)?;
            two_linear(
                doc,
                names,
                |a, l, b, m| {
                    let e = equiv_cosp(l, m).map_err(module(format!("equiv {a} {b}")))?;
                    let (cl, cm) = (canonical_cosp(l), canonical_cosp(m));
                    Ok(decision(e, json!({"left": a, "right": b, "equivalent": e}), || format!("{a}: {cl}; {b}: {cm}")))
                },
                |a, v, b, w| {
                    let e = equiv_span(v, w).map_err(module(format!("equiv {a} {b}")))?;
                    let (cv, cw) = (canonical_span(v), canonical_span(w));
                    Ok(decision(e, json!({"left": a, "right": b, "equivalent": e}), || format!("{a}: {cv}; {b}: {cw}")))
                },
            )
        }
        "leq" => {
            let doc = require(doc)?;
            two_linear(
                doc,
                names,
                |a, l, b, m| {
                    let w = leq_cosp(l, m).map_err(module(format!("leq {a} {b}")))?;
                    let found = w.is_some();
                    Ok(decision(found, json!({"left": a, "right": b, "leq": found, "witness": witness_json(&w)}), || {
                        format!("no mono of bulks carries {a} onto {b}")
                    }))
                },
                |a, v, b, m| {
                    let w = leq_span(v, m).map_err(module(format!("leq {a} {b}")))?;
                    let found = w.is_some();
                    Ok(decision(found, json!({"left": a, "right": b, "leq": found, "witness": witness_json(&w)}), || {
                        format!("no epi of apexes carries {b} onto {a}")
                    }))
                },
            )
        }
        "compose" => {
            let doc = require(doc)?;
            two_linear(
                doc,
                names,
                |a, l, b, m| {
                    let c = compose_cosp(l, m).map_err(module(format!("compose {a} {b}")))?;
                    Ok((Outcome::Value, json!({"first": a, "second": b, "cospan": cospan_json(&c)}), None))
                },
                |a, v, b, w| {
                    let c = compose_span(v, w).map_err(module(format!("compose {a} {b}")))?;
                    Ok((Outcome::Value, json!({"first": a, "second": b, "span": span_json(&c)}), None))
                },
            )
        }
        "tensor" => {
            let doc = require(doc)?;
            two_linear(
                doc,
                names,
                |a, l, b, m| {
                    let c = tensor_cosp(l, m).map_err(module(format!("tensor {a} {b}")))?;
                    Ok((Outcome::Value, json!({"first": a, "second": b, "cospan": cospan_json(&c)}), None))
                },
                |a, v, b, w| {
                    let c = tensor_span(v, w).map_err(module(format!("tensor {a} {b}")))?;
                    Ok((Outcome::Value, json!({"first": a, "second": b, "span": span_json(&c)}), None))
                },
            )
        }
        "transpose" | "dagger" => {
            let doc = require(doc)?;
            let transpose = args.command == "transpose";
            let mut out = serde_json::Map::new();
            for (name, l) in &doc.cospans {
                let v = if transpose {
                    json!({"kind": "span", "span": span_json(&transpose_cosp(l))})
                } else {
                    json!({"kind": "cospan", "cospan": cospan_json(&dagger_cosp(l))})
                };
                out.insert(name.clone(), v);
            }
            for (name, s) in &doc.spans {
                let v = if transpose {
                    json!({"kind": "cospan", "cospan": cospan_json(&transpose_span(s))})
                } else {
                    json!({"kind": "span", "span": span_json(&dagger_span(s))})
                };
                out.insert(name.clone(), v);
            }
            Ok((Outcome::Value, Value::Object(out), None))
        }
        "homology" => {
            let doc = require(doc)?;
            let mut out = serde_json::Map::new();
            for (name, k) in &doc.complexes {
                let c = augmented_chain(k, doc.field);
                let degrees: Vec<i64> = match args.q {
                    Some(q) => vec![q],
                    None => (0..=k.dim() as i64).collect(),
                };
                let per: Vec<Value> = degrees
                    .iter()
                    .map(|&q| {
                        let h = homology(&c, q);
                        json!({"q": q, "dim": h.space.dim, "cycles": matrix_json(&h.cycles)})
                    })
                    .collect();
                out.insert(name.clone(), Value::Array(per));
            }
            Ok((Outcome::Value, Value::Object(out), None))
        }
        "mv-check" => {
            let doc = require(doc)?;
            let degrees: Vec<i64> = args.q.map_or((0..=3).collect(), |q| vec![q]);
            let mut out = serde_json::Map::new();
            let mut failure = None;
            for (name, t) in &doc.triads {
                let mut per = Vec::new();
                for &q in &degrees {
                    let ok = mv_exactness_check(&t.l, &t.k0, &t.k1, &t.t, q, doc.field)
                        .map_err(module(format!("triad '{name}'")))?;
                    if !ok && failure.is_none() {
                        failure = Some(format!("triad '{name}' is not exact in degree {q}"));
                    }
                    per.push(json!({"q": q, "exact": ok}));
                }
                out.insert(name.clone(), Value::Array(per));
            }
            let outcome = if failure.is_none() { Outcome::Pass } else { Outcome::Fail };
            Ok((outcome, Value::Object(out), failure))
        }
        "extend-cospan" | "extend-span" => {
            let doc = require(doc)?;
            let spanical = args.command == "extend-span";
            let q = args.q.unwrap_or(if spanical { 1 } else { 0 });
            let e = BrownFunctor::new(doc.field, q).map_err(module("degree"))?;
            let mut out = serde_json::Map::new();
            for (name, l) in &doc.space_cospans {
                let ext = if spanical {
                    spanical_extend(&e, l).map_err(module(format!("space cospan '{name}'")))?
                } else {
                    cospanical_extend(&e, l)
                };
                let mut v = extension_json(&ext);
                if let Some(d) = args.d {
                    v["in_filter"] = json!(dimension_filter(l, d.0));
                }
                out.insert(name.clone(), v);
            }
            Ok((Outcome::Value, Value::Object(out), None))
        }
        "verify" => {
            let doc = require(doc)?;
            let q = args.q.unwrap_or(0);
            let e = BrownFunctor::new(doc.field, q).map_err(module("degree"))?;
            let p = pick(&doc.space_cospans, names, 2, "space cospans")?;
            let (a, l) = p[0];
            let (b, m) = p[1];
            let report = verify_all(&e, l, m).map_err(module(format!("verify {a} {b}")))?;
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "counterexample": c.counterexample}))
                .collect();
            let failure = report
                .first_failure()
                .map(|c| format!("{}: {}", c.name, c.counterexample.clone().unwrap_or_default()));
            let outcome = if report.passed() { Outcome::Pass } else { Outcome::Fail };
            Ok((outcome, json!({"first": a, "second": b, "q": q, "checks": checks}), failure))
        }
        "oracle" => Ok(suite_json(&suites::oracle_suite(args.seed))),
        "random-suite" => {
            let linear = LinearSizes {
                max_foot: args.max_foot,
                max_bulk: args.max_bulk,
            };
            let spaces = SpaceSizes {
                max_vertices: args.max_vertices,
                ..SpaceSizes::default()
            };
            if args.count > 0 && args.max_vertices < 2 {
                return Err(CliError::Usage("--max-vertices must be at least 2".into()));
            }
            Ok(suite_json(&suites::random_suite(args.seed, args.count, linear, spaces)))
        }
        other => Err(CliError::UnknownCommand(other.to_string())),
    }
}

/// Run one command against an optional document; `bytes` are the raw input for the digest.
pub fn run(args: &Args, doc: Option<&Loaded>, bytes: &[u8]) -> Result<Report, CliError> {
    if !COMMANDS.contains(&args.command.as_str()) {
        return Err(CliError::UnknownCommand(args.command.clone()));
    }
    let start = Instant::now();
    let (outcome, value, counterexample) = run_command(args, doc)?;
    Ok(Report {
        command: args.command.clone(),
        flags: flags_json(args),
        inputs_digest: hex::encode(Sha256::digest(bytes)),
        outcome,
        value,
        counterexample,
        timing_ms: args.timing.then(|| start.elapsed().as_millis()),
    })
}

/// Parse arguments, run, write the report; returns the process exit code.
pub fn main_with(argv: impl IntoIterator<Item = String>) -> ExitCode {
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("abcosp: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(args: &Args) -> Result<u8, CliError> {
    let (doc, bytes) = match &args.input {
        Some(path) => {
            let (doc, bytes) = load(path)?;
            (Some(doc), bytes)
        }
        None => (None, Vec::new()),
    };
    let report = run(args, doc.as_ref(), &bytes)?;
    let text = report.to_json();
    match &args.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(report.exit_code())
}
