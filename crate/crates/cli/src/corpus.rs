use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::input::{DivisorInput, InputError};
use crate::pipeline::{analyze, Flags};
use crate::report::AnalysisReport;

/// Result of re-running one corpus member.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub file: PathBuf,
    pub exit: i32,
    /// Differing fields against the golden, as `path: expected … found …`.
    pub mismatches: Vec<String>,
    pub report: Option<AnalysisReport>,
}

impl CorpusEntry {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct CorpusSummary {
    pub entries: Vec<CorpusEntry>,
}

impl CorpusSummary {
    pub fn all_green(&self) -> bool {
        self.entries.iter().all(CorpusEntry::ok)
    }

    pub fn table(&self) -> String {
        let width = self.entries.iter().map(|e| e.label.len()).max().unwrap_or(5).max(5);
        let mut out = format!("{:<width$}  exit  result\n", "label");
        for e in &self.entries {
            let result = if e.ok() { "ok".to_string() } else { format!("MISMATCH ({})", e.mismatches.len()) };
            out.push_str(&format!("{:<width$}  {:>4}  {result}\n", e.label, e.exit));
            for m in &e.mismatches {
                out.push_str(&format!("{:<width$}        {m}\n", ""));
            }
        }
        out
    }
}

/// Path of the golden report next to an input file.
pub fn golden_path(input: &Path) -> PathBuf {
    let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    input.with_file_name(format!("{stem}.golden.json"))
}

fn flags_from_names(names: &[String]) -> Flags {
    let has = |n: &str| names.iter().any(|s| s == n);
    Flags {
        ft1: has("ft1"),
        lft1: has("lft1"),
        koszul: has("koszul"),
        ..Flags::default()
    }
}

/// Re-runs every `*.toml` input in `dir` and compares against its golden.
/// Without explicit `flags`, each member runs with the flags recorded in its
/// golden (all stages when there is none). With `bless`, goldens are written.
pub fn run_corpus(dir: &Path, flags: Option<&Flags>, bless: bool) -> Result<CorpusSummary, InputError> {
    let io = |e: std::io::Error| InputError::Io {
        path: dir.display().to_string(),
        source: e,
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    files.sort();
    let mut entries = Vec::new();
    for file in files {
        let input = DivisorInput::from_path(&file);
        let gpath = golden_path(&file);
        let golden: Option<Value> = std::fs::read_to_string(&gpath)
            .ok()
            .and_then(|t| serde_json::from_str(&t).ok());
        let input = match input {
            Ok(i) => i,
            Err(e) => {
                entries.push(CorpusEntry {
                    label: file.display().to_string(),
                    file,
                    exit: 2,
                    mismatches: vec![format!("input: {e}")],
                    report: None,
                });
                continue;
            }
        };
        let run_flags = match (flags, &golden) {
            (Some(f), _) => f.clone(),
            (None, Some(g)) => {
                let names: Vec<String> = g["flags"]
                    .as_array()
                    .map(|a| a.iter().filter_map(|v| v.as_str().map(String::from)).collect())
                    .unwrap_or_default();
                flags_from_names(&names)
            }
            (None, None) => Flags::all(),
        };
        let out = analyze(&input, &run_flags);
        let mismatches = if bless {
            let text = out.report.canonical_json() + "\n";
            std::fs::write(&gpath, text).map_err(|e| InputError::Io {
                path: gpath.display().to_string(),
                source: e,
            })?;
            Vec::new()
        } else {
            match &golden {
                Some(g) => {
                    let actual = serde_json::to_value(&out.report).expect("serializable");
                    diff_reports(g, &actual)
                }
                None => vec![format!("missing golden {}", gpath.display())],
            }
        };
        entries.push(CorpusEntry {
            label: input.label.clone(),
            file,
            exit: out.exit,
            mismatches,
            report: Some(out.report),
        });
    }
    entries.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(CorpusSummary { entries })
}

/// Field-by-field differences between two reports, ignoring `timings`.
pub fn diff_reports(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff("", expected, actual, &mut out);
    out
}

fn diff(path: &str, e: &Value, a: &Value, out: &mut Vec<String>) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match (e, a) {
        (Value::Object(eo), Value::Object(ao)) => {
            let mut keys: Vec<&String> = eo.keys().chain(ao.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                if path.is_empty() && k == "timings" {
                    continue;
                }
                match (eo.get(k), ao.get(k)) {
                    (Some(x), Some(y)) => diff(&join(k), x, y, out),
                    (Some(x), None) => out.push(format!("{}: expected {x}, missing", join(k))),
                    (None, Some(y)) => out.push(format!("{}: unexpected {y}", join(k))),
                    (None, None) => unreachable!(),
                }
            }
        }
        (Value::Array(ea), Value::Array(aa)) if ea.len() == aa.len() => {
            for (i, (x, y)) in ea.iter().zip(aa).enumerate() {
                diff(&format!("{path}[{i}]"), x, y, out);
            }
        }
        _ if e == a => {}
        _ => out.push(format!("{path}: expected {e}, found {a}")),
    }
}
