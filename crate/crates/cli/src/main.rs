use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use freediv_cli::{analyze, run_corpus, AnalysisReport, DivisorInput, Field, Flags, STEP_BUDGET_VAR};

/// Logarithmic vector fields, classification and deformations of free divisors.
#[derive(Parser, Debug)]
#[command(name = "freediv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one divisor described by a TOML file.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        stages: StageArgs,
        /// Write the JSON report to FILE, or to stdout when FILE is omitted.
        #[arg(long, value_name = "FILE", num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
    },
    /// Re-run a directory of inputs and compare with their golden reports.
    Corpus {
        dir: PathBuf,
        #[command(flatten)]
        stages: StageArgs,
        /// Overwrite the goldens with the current results.
        #[arg(long)]
        bless: bool,
    },
}

#[derive(Args, Debug)]
struct StageArgs {
    /// Compute FT¹ (weighted homogeneous divisors).
    #[arg(long)]
    ft1: bool,
    /// Compute LFT¹ (linear free divisors).
    #[arg(long)]
    lft1: bool,
    /// Classification only (the default).
    #[arg(long)]
    classify: bool,
    /// Test Koszul freeness.
    #[arg(long)]
    koszul: bool,
    /// All stages.
    #[arg(long)]
    all: bool,
    /// Wall-clock limit in seconds.
    #[arg(long, value_name = "SECONDS")]
    timeout: Option<f64>,
    /// Largest absolute weight of a graded piece in the FT¹ slice.
    #[arg(long, value_name = "N")]
    max_weight: Option<i64>,
}

impl StageArgs {
    fn explicit(&self) -> bool {
        self.ft1 || self.lft1 || self.classify || self.koszul || self.all
    }

    fn flags(&self) -> Result<Flags, String> {
        let mut f = if self.all { Flags::all() } else { Flags::default() };
        f.ft1 |= self.ft1;
        f.lft1 |= self.lft1;
        f.koszul |= self.koszul;
        if let Some(t) = self.timeout {
            if !(t.is_finite() && t > 0.0) {
                return Err(format!("invalid timeout {t}"));
            }
            f.timeout = Some(Duration::from_secs_f64(t));
        }
        if let Some(w) = self.max_weight {
            f.max_weight = w;
        }
        if let Ok(v) = std::env::var(STEP_BUDGET_VAR) {
            f.steps = Some(v.trim().parse().map_err(|_| format!("{STEP_BUDGET_VAR} must be an integer"))?);
        }
        Ok(f)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { file, stages, json } => run_analyze(&file, &stages, json),
        Command::Corpus { dir, stages, bless } => run_corpus_cmd(&dir, &stages, bless),
    };
    ExitCode::from(code as u8)
}

fn run_analyze(file: &Path, stages: &StageArgs, json: Option<Option<PathBuf>>) -> i32 {
    let flags = match stages.flags() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let input = match DivisorInput::from_path(file) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let out = analyze(&input, &flags);
    match json {
        Some(target) => {
            let text = serde_json::to_string_pretty(&out.report).expect("serializable") + "\n";
            match target {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                    print!("{}", render(&out.report));
                }
                None => print!("{text}"),
            }
        }
        None => print!("{}", render(&out.report)),
    }
    if out.exit != 0 {
        eprintln!("error: {}", out.report.status);
    }
    out.exit
}

fn run_corpus_cmd(dir: &Path, stages: &StageArgs, bless: bool) -> i32 {
    let flags = match stages.flags() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let explicit = (stages.explicit() || flags.timeout.is_some() || flags.steps.is_some()).then_some(&flags);
    match run_corpus(dir, explicit, bless) {
        Ok(summary) => {
            print!("{}", summary.table());
            if summary.all_green() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn marker<T>(f: &Field<T>, show: impl Fn(&T) -> String) -> String {
    match f {
        Field::Value(v) => show(v),
        Field::Marker(m) => m.clone(),
    }
}

fn render(r: &AnalysisReport) -> String {
    let mut out = format!("{} [{}]\n", r.input.label, r.status);
    out.push_str(&format!("  f = {}\n", r.input.f));
    if let Field::Value(c) = &r.cylinder {
        if !c.dropped.is_empty() {
            out.push_str(&format!("  cylinder over {}: reduced to {}\n", c.dropped.join(", "), c.reduced));
        }
    }
    if let Field::Value(p) = &r.profile {
        out.push_str(&format!("  free: {}  linear: {}\n", p.free, p.linear));
        let w = p.weights.as_ref().map(|w| format!("{w:?}, degree {}", p.degree.unwrap_or(0)));
        out.push_str(&format!("  weights: {}\n", w.unwrap_or_else(|| "none".into())));
        out.push_str("  Saito matrix:\n");
        for row in &p.saito_matrix {
            out.push_str(&format!("    [{}]\n", row.join(", ")));
        }
        out.push_str(&format!("  Saito unit: {}\n", p.saito_unit));
        out.push_str(&format!("  koszul: {}\n", marker(&p.koszul, |b| b.to_string())));
        if let Some(red) = p.reductive {
            out.push_str(&format!("  reductive: {red}\n"));
        }
        if let Some(t) = &p.trace_witness {
            out.push_str(&format!("  trace witness: {} (trace {})\n", t.field, t.trace));
        }
        if let Some([a, b]) = p.connection_conditions {
            out.push_str(&format!("  connection conditions: {a}, {b}\n"));
        }
        for n in &p.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
    } else {
        out.push_str(&format!("  profile: {}\n", marker(&r.profile, |_| String::new())));
    }
    for (name, field) in [("FT1", &r.ft1), ("LFT1", &r.lft1)] {
        out.push_str(&format!(
            "  {name}: {}\n",
            marker(field, |d| {
                if d.representatives.is_empty() {
                    format!("dimension {}", d.dimension)
                } else {
                    format!("dimension {}, f' in {{{}}}", d.dimension, d.representatives.join(", "))
                }
            })
        ));
    }
    out.push_str(&format!("  H0: {}\n", marker(&r.h0, |h| h.to_string())));
    out.push_str(&format!(
        "  Jacobian degree bound: {}\n",
        marker(&r.bounds, |b| b.jacobian_degree_bound.to_string())
    ));
    for s in r.stages.iter().filter(|s| s.status == "error") {
        out.push_str(&format!(
            "  stage {} failed: {}\n",
            s.name,
            s.message.as_deref().unwrap_or("")
        ));
    }
    out
}
