mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::{corpus, corpus_dir, member};
use freediv::Ring;
use freediv_cli::{analyze, run_corpus, AnalysisReport, Field, Flags};
use serde_json::Value;

fn freediv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freediv"))
        .args(args)
        .env_remove("FREEDIV_STEP_BUDGET")
        .output()
        .expect("binary runs")
}

fn write_input(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let out = freediv(args);
    let v = serde_json::from_slice(&out.stdout).expect("json on stdout");
    (out.status.code().unwrap(), v)
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("bad.toml", "label = \"bad\"\nvariables = [\"x\"]\nf = \"x +* 1\"\n", 2),
        ("constant.toml", "label = \"c\"\nvariables = [\"x\", \"y\"]\nf = \"3\"\n", 2),
        ("shape.toml", "label = \"s\"\nvariables = [\"x\", \"y\"]\nf = \"x*y\"\nweights = [1]\n", 2),
        ("square.toml", "label = \"q\"\nvariables = [\"x\", \"y\"]\nf = \"x^2*y\"\n", 3),
        ("planes.toml", "label = \"p\"\nvariables = [\"x\", \"y\", \"z\"]\nf = \"x*y*z*(x + y + z)\"\n", 4),
        ("ok.toml", "label = \"ok\"\nvariables = [\"x\", \"y\"]\nf = \"x*y\"\n", 0),
    ];
    for (name, body, code) in cases {
        let path = write_input(dir.path(), name, body);
        let out = freediv(&["analyze", &path]);
        assert_eq!(out.status.code(), Some(code), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let out = freediv(&["analyze", dir.path().join("missing.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_analysis_still_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_input(dir.path(), "q.toml", "label = \"q\"\nvariables = [\"x\", \"y\"]\nf = \"x^2*y\"\n");
    let (code, v) = json_report(&["analyze", &path, "--json"]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "NonReduced");
    assert_eq!(v["ft1"], "not computed");
}

#[test]
fn json_to_file_and_stdout_agree() {
    let dir = tempfile::tempdir().unwrap();
    let input = corpus_dir().join("four_lines.toml");
    let target = dir.path().join("report.json");
    let out = freediv(&["analyze", input.to_str().unwrap(), "--ft1", "--json", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("four_lines"));
    let from_file: AnalysisReport = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    let (_, v) = json_report(&["analyze", input.to_str().unwrap(), "--ft1", "--json"]);
    let from_stdout: AnalysisReport = serde_json::from_value(v).unwrap();
    assert_eq!(from_file.canonical_json(), from_stdout.canonical_json());
}

#[test]
fn four_lines_deformation() {
    let input = corpus_dir().join("four_lines.toml");
    let (code, v) = json_report(&["analyze", input.to_str().unwrap(), "--ft1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ft1"]["dimension"], 1);
    assert_eq!(v["ft1"]["degree"], 4);
    assert_eq!(v["ft1"]["representatives"], serde_json::json!(["x^2*y^2"]));
    assert_eq!(v["lft1"], "not computed");
}

#[test]
fn five_variable_linear_deformations() {
    let input = corpus_dir().join("five_variable.toml");
    let (code, v) = json_report(&["analyze", input.to_str().unwrap(), "--lft1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["profile"]["linear"], true);
    assert_eq!(v["lft1"]["method"], "lie-algebra");
    assert_eq!(v["lft1"]["dimension"], 1);
}

#[test]
fn timeout_is_reported() {
    let input = corpus_dir().join("five_variable.toml");
    let out = Command::new(env!("CARGO_BIN_EXE_freediv"))
        .args(["analyze", input.to_str().unwrap(), "--all", "--json"])
        .env("FREEDIV_STEP_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "Timeout");
}

#[test]
fn corpus_is_green() {
    let out = freediv(&["corpus", corpus_dir().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn corrupted_golden_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["four_lines.toml", "four_lines.golden.json"] {
        std::fs::copy(corpus_dir().join(name), dir.path().join(name)).unwrap();
    }
    let golden = dir.path().join("four_lines.golden.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&golden).unwrap()).unwrap();
    v["ft1"]["dimension"] = Value::from(7);
    std::fs::write(&golden, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let out = freediv(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let table = String::from_utf8_lossy(&out.stdout);
    assert!(table.contains("ft1.dimension"), "{table}");

    let out = freediv(&["corpus", dir.path().to_str().unwrap(), "--bless"]);
    assert_eq!(out.status.code(), Some(0));
    let out = freediv(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let summary = run_corpus(dir.path(), None, false).unwrap();
    assert!(summary.entries.is_empty());
    assert!(summary.all_green());
    assert_eq!(freediv(&["corpus", dir.path().to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn reports_are_deterministic() {
    for label in ["four_lines", "conic_and_line", "cylinder_four_lines"] {
        let d = member(label);
        let a = analyze(&d, &Flags::all()).report.canonical_json();
        let b = analyze(&d, &Flags::all()).report.canonical_json();
        assert_eq!(a, b, "{label}");
    }
}

fn polynomial_texts<'a>(v: &'a Value, key: &str, out: &mut Vec<&'a str>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                polynomial_texts(x, k, out);
            }
        }
        Value::Array(a) => a.iter().for_each(|x| polynomial_texts(x, key, out)),
        Value::String(s) if matches!(key, "reduced" | "representatives" | "saito_matrix" | "saito_unit" | "trace") => out.push(s),
        Value::String(s) if key == "lifts" => out.extend(field_components(s).into_iter().map(|(c, _)| c)),
        _ => {}
    }
}

/// Splits `(p1)*d/dx + (p2)*d/dy` into its components.
fn field_components(text: &str) -> Vec<(&str, &str)> {
    let mut out = Vec::new();
    let mut rest = if text == "0" { "" } else { text };
    while !rest.is_empty() {
        assert!(rest.starts_with('('), "{text}");
        let mut depth = 0;
        let close = rest
            .char_indices()
            .find(|&(_, c)| {
                depth += match c {
                    '(' => 1,
                    ')' => -1,
                    _ => 0,
                };
                depth == 0
            })
            .unwrap()
            .0;
        let tail = rest[close + 1..].strip_prefix("*d/d").expect("derivation");
        let end = tail.find(" + ").unwrap_or(tail.len());
        out.push((&rest[1..close], &tail[..end]));
        rest = tail[end..].strip_prefix(" + ").unwrap_or("");
    }
    out
}

#[test]
fn report_polynomials_reparse() {
    for d in corpus() {
        let out = analyze(&d, &Flags::all());
        let r = Ring::new(&d.variables).unwrap();
        let v = serde_json::to_value(&out.report).unwrap();
        let mut texts = Vec::new();
        polynomial_texts(&v, "", &mut texts);
        for t in texts {
            let p = r.parse(t).unwrap_or_else(|e| panic!("{}: {t:?}: {e}", d.label));
            assert_eq!(r.format(&p), t, "{}", d.label);
        }
        if let Some(w) = out.report.profile.value().and_then(|p| p.trace_witness.as_ref()) {
            for (c, var) in field_components(&w.field) {
                assert!(d.variables.iter().any(|v| v == var), "{}", d.label);
                r.parse(c).unwrap_or_else(|e| panic!("{}: {c:?}: {e}", d.label));
            }
        }
    }
}

#[test]
fn reports_round_trip_through_serde() {
    for d in corpus() {
        let report = analyze(&d, &Flags::all()).report;
        let text = serde_json::to_string(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report, "{}", d.label);
    }
}

#[test]
fn given_saito_matrix_is_checked() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_input(
        dir.path(),
        "wrong.toml",
        "label = \"w\"\nvariables = [\"x\", \"y\"]\nf = \"x*y\"\nsaito_matrix = [[\"x\", \"0\"], [\"0\", \"x\"]]\n",
    );
    let out = freediv(&["analyze", &path]);
    assert_ne!(out.status.code(), Some(0));
    let d = member("four_lines");
    let report = analyze(&d, &Flags::default()).report;
    match &report.profile {
        Field::Value(p) => assert_eq!(p.saito_matrix, vec![vec!["x", "0"], vec!["y", "x^2*y - y^3"]]),
        Field::Marker(m) => panic!("{m}"),
    }
}
