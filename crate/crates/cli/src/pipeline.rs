use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use freediv::classify::{classify, ClassifyOptions, DivisorProfile};
use freediv::cohomology::{ft1_for_basis, jacobian_degree_bound, lft1_for_basis, DeformationReport, DEFAULT_MAX_WEIGHT};
use freediv::poly::{is_squarefree, weighted_degree};
use freediv::reduce::split_cylindrical;
use freediv::{Budget, Error, Polynomial, Ring, SaitoBasis};

use crate::input::DivisorInput;
use crate::report::{
    AnalysisReport, BoundsReport, CylinderReport, DeformationSummary, Field, ProfileReport, StageReport,
    TraceWitness, SCHEMA_VERSION,
};

/// Environment variable holding an optional step budget, read by the binary.
pub const STEP_BUDGET_VAR: &str = "FREEDIV_STEP_BUDGET";

/// Which stages to run.
#[derive(Clone, Debug, PartialEq)]
pub struct Flags {
    pub ft1: bool,
    pub lft1: bool,
    pub koszul: bool,
    pub timeout: Option<Duration>,
    pub steps: Option<u64>,
    pub max_weight: i64,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            ft1: false,
            lft1: false,
            koszul: false,
            timeout: None,
            steps: None,
            max_weight: DEFAULT_MAX_WEIGHT,
        }
    }
}

impl Flags {
    pub fn all() -> Self {
        Flags {
            ft1: true,
            lft1: true,
            koszul: true,
            ..Flags::default()
        }
    }

    /// Stage names recorded in the report.
    pub fn names(&self) -> Vec<String> {
        let mut v = vec!["classify".to_string()];
        if self.ft1 {
            v.push("ft1".into());
        }
        if self.koszul {
            v.push("koszul".into());
        }
        if self.lft1 {
            v.push("lft1".into());
        }
        v
    }
}

/// A report and the process exit code it maps to.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: AnalysisReport,
    pub exit: i32,
}

/// Exit code for an error that stops the pipeline.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::ZeroOrConstantInput | Error::Shape(_) => 2,
        Error::NonReduced => 3,
        Error::NotFree(_) => 4,
        Error::Timeout => 5,
        _ => 6,
    }
}

struct Run {
    report: AnalysisReport,
    clock: Instant,
}

impl Run {
    fn stage(&mut self, name: &str, result: Result<(), &Error>) {
        let ms = self.clock.elapsed().as_secs_f64() * 1000.0;
        self.report.timings.insert(name.to_string(), (ms * 1000.0).round() / 1000.0);
        self.clock = Instant::now();
        let (status, code, message) = match result {
            Ok(()) => ("ok", None, None),
            Err(e) => ("error", Some(e.code().to_string()), Some(e.to_string())),
        };
        self.report.stages.push(StageReport {
            name: name.to_string(),
            status: status.to_string(),
            code,
            message,
        });
    }

    fn skip(&mut self, name: &str) {
        self.report.stages.push(StageReport {
            name: name.to_string(),
            status: "skipped".into(),
            code: None,
            message: None,
        });
    }

    fn stop(mut self, e: &Error) -> Outcome {
        self.report.status = e.code().to_string();
        Outcome {
            report: self.report,
            exit: exit_code(e),
        }
    }
}

/// Runs cylinder reduction, the squarefree check, `Der(-log D)`, the Saito
/// basis, classification and the requested deformation spaces.
pub fn analyze(input: &DivisorInput, flags: &Flags) -> Outcome {
    let mut run = Run {
        report: AnalysisReport {
            schema: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input: input.clone(),
            flags: flags.names(),
            status: "ok".into(),
            cylinder: Field::not_computed(),
            profile: Field::not_computed(),
            ft1: Field::not_computed(),
            lft1: Field::not_computed(),
            h0: Field::not_computed(),
            bounds: Field::not_computed(),
            stages: Vec::new(),
            timings: BTreeMap::new(),
        },
        clock: Instant::now(),
    };
    let budget = Budget::unlimited().and_timeout(flags.timeout).and_steps(flags.steps);

    let parsed = parse(input);
    run.stage("parse", parsed.as_ref().map(|_| ()));
    let (ring, f, saito_input) = match parsed {
        Ok(v) => v,
        Err(e) => return run.stop(&e),
    };

    let split = split_cylindrical(&f);
    let used: Vec<bool> = (0..ring.nvars()).map(|i| split.kept.contains(&i)).collect();
    let sub = ring.restrict(&used);
    let g = split.reduced.clone();
    run.report.cylinder = Field::Value(CylinderReport {
        dropped: split.dropped.iter().map(|&i| ring.names()[i].clone()).collect(),
        variables: sub.names().to_vec(),
        reduced: sub.format(&g),
    });
    run.stage("cylinder", Ok(()));

    let sq = is_squarefree(&g, &budget).and_then(|ok| if ok { Ok(()) } else { Err(Error::NonReduced) });
    run.stage("squarefree", sq.as_ref().map(|_| ()));
    if let Err(e) = sq {
        return run.stop(&e);
    }

    let mut notes = Vec::new();
    let saito = match (saito_input, split.is_identity()) {
        (Some(fields), true) => Some(fields),
        (Some(fields), false) => {
            let check = SaitoBasis::new(fields, &f, &budget);
            notes.push(match check {
                Ok(_) => "given Saito matrix verified on the full divisor; reduced divisor uses a computed basis".into(),
                Err(e) => format!("given Saito matrix rejected: {e}"),
            });
            None
        }
        (None, _) => None,
    };
    let opts = ClassifyOptions {
        koszul: flags.koszul,
        weights: input
            .weights
            .as_ref()
            .map(|w| split.kept.iter().map(|&i| w[i]).collect()),
        saito,
    };
    let profile = classify(&g, &opts, &budget);
    run.stage("classify", profile.as_ref().map(|_| ()));
    let profile = match profile {
        Ok(p) => p,
        Err(e) => return run.stop(&e),
    };
    let saito = profile.saito.clone().expect("free divisor has a basis");
    let weights = profile.weights.as_ref().map(|w| w.weights().to_vec());
    run.report.profile = Field::Value(profile_report(&profile, &sub, flags.koszul, notes));

    let mut h0 = None;
    if flags.ft1 {
        let res = match &weights {
            Some(w) => ft1_for_basis(&saito, w, flags.max_weight, &budget),
            None => Err(Error::NotWeightedHomogeneous),
        };
        run.stage("ft1", res.as_ref().map(|_| ()));
        match res {
            Ok(r) => {
                h0 = h0.or(r.h0);
                run.report.ft1 = Field::Value(summary(&r, &sub));
            }
            Err(Error::Timeout) => return run.stop(&Error::Timeout),
            Err(e) => run.report.ft1 = Field::error(e.code()),
        }
        let bound = match &weights {
            Some(w) => jacobian_degree_bound(&g, w, &budget),
            None => Err(Error::NotWeightedHomogeneous),
        };
        run.stage("bounds", bound.as_ref().map(|_| ()));
        match bound {
            Ok(b) => run.report.bounds = Field::Value(BoundsReport { jacobian_degree_bound: b }),
            Err(Error::Timeout) => return run.stop(&Error::Timeout),
            Err(e) => run.report.bounds = Field::error(e.code()),
        }
    } else {
        run.skip("ft1");
        run.skip("bounds");
    }

    if flags.lft1 {
        let res = if profile.linear {
            lft1_for_basis(&saito, &budget)
        } else {
            Err(Error::NotLinear)
        };
        run.stage("lft1", res.as_ref().map(|_| ()));
        match res {
            Ok(r) => {
                h0 = h0.or(r.h0);
                run.report.lft1 = Field::Value(summary(&r, &sub));
            }
            Err(Error::Timeout) => return run.stop(&Error::Timeout),
            Err(e) => run.report.lft1 = Field::error(e.code()),
        }
    } else {
        run.skip("lft1");
    }
    if let Some(h) = h0 {
        run.report.h0 = Field::Value(h);
    }
    Outcome {
        report: run.report,
        exit: 0,
    }
}

type Parsed = (Ring, Polynomial, Option<Vec<freediv::VectorField>>);

fn parse(input: &DivisorInput) -> Result<Parsed, Error> {
    let shape = |e: crate::input::InputError| match e {
        crate::input::InputError::Polynomial { source, .. } => Error::Parse(source),
        other => Error::Shape(other.to_string()),
    };
    let ring = input.ring().map_err(shape)?;
    let f = input.polynomial(&ring).map_err(shape)?;
    if f.is_zero() || f.is_constant() {
        return Err(Error::ZeroOrConstantInput);
    }
    let fields = input.saito_fields(&ring).map_err(shape)?;
    Ok((ring, f, fields))
}

fn profile_report(p: &DivisorProfile, ring: &Ring, koszul: bool, mut notes: Vec<String>) -> ProfileReport {
    let saito = p.saito.as_ref().expect("free divisor has a basis");
    let m = saito.matrix();
    let n = m.size();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| ring.format(m.get(i, j))).collect())
        .collect();
    let weights = p.weights.as_ref().map(|w| w.weights().to_vec());
    let degree = weights.as_ref().and_then(|w| weighted_degree(&p.f, w).ok());
    notes.extend(p.notes.iter().cloned());
    ProfileReport {
        free: p.free,
        weighted_homogeneous: weights.is_some(),
        weights,
        degree,
        linear: p.linear,
        saito_matrix: rows,
        saito_unit: ring.format(saito.unit()),
        koszul: match (koszul, p.koszul) {
            (true, Some(k)) => Field::Value(k),
            _ => Field::not_computed(),
        },
        reductive: p.reductive,
        trace_witness: p.trace.as_ref().and_then(|t| {
            t.witness.as_ref().map(|(v, tr)| TraceWitness {
                field: v.format(ring.names()),
                trace: tr.to_string(),
            })
        }),
        annihilator_dimension: p.trace.as_ref().map(|t| t.dimension),
        lie_algebra_dimension: p.lie_algebra.as_ref().map(|g| g.dim()),
        structure_constants_constant: p.structure.as_ref().map(|b| b.all_constant()),
        connection_conditions: p.connection_ok.map(|(a, b)| [a, b]),
        notes,
    }
}

fn summary(r: &DeformationReport, ring: &Ring) -> DeformationSummary {
    DeformationSummary {
        method: r.method.tag().to_string(),
        dimension: r.dimension,
        degree: r.degree,
        representatives: r.representatives.iter().map(|d| ring.format(&d.equation)).collect(),
        lifts: r
            .representatives
            .iter()
            .map(|d| d.lifts.iter().map(|l| l.format(ring.names())).collect())
            .collect(),
        cochain_dimensions: r.cochain_dims,
        betti: r.betti.clone(),
    }
}
