use super::lie::{is_reductive, LieAlgebraMatrices};
use super::predicates::{connection_conditions, is_koszul, is_linear, lie_algebra, trace_test, TraceTest};
use super::weights::detect_weights;
use crate::error::Result;
use crate::groebner::Budget;
use crate::logder::{
    annihilator_fields, compute_der_log, find_saito_basis, structure_constants, SaitoBasis, StructureConstants,
    VectorField,
};
use crate::poly::{Polynomial, WeightSystem};

/// Classification of a divisor.
#[derive(Clone, Debug)]
pub struct DivisorProfile {
    pub f: Polynomial,
    pub free: bool,
    pub saito: Option<SaitoBasis>,
    pub linear: bool,
    pub weights: Option<WeightSystem>,
    pub koszul: Option<bool>,
    pub reductive: Option<bool>,
    pub trace: Option<TraceTest>,
    pub lie_algebra: Option<LieAlgebraMatrices>,
    pub structure: Option<StructureConstants>,
    pub connection_ok: Option<(bool, bool)>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub koszul: bool,
    /// Weights to use instead of detection.
    pub weights: Option<Vec<i64>>,
    /// Candidate Saito basis to verify instead of searching.
    pub saito: Option<Vec<VectorField>>,
}

/// Runs the divisor through `Der(-log D)`, the Saito basis search and the
/// classification predicates. `NotFree` and `NonReduced` are errors.
pub fn classify(f: &Polynomial, opts: &ClassifyOptions, budget: &Budget) -> Result<DivisorProfile> {
    let weights = match &opts.weights {
        Some(w) => Some(WeightSystem::for_polynomial(w.clone(), f)?),
        None => detect_weights(f),
    };
    let w = weights.as_ref().map(|w| w.weights().to_vec());
    let mut notes = Vec::new();
    let saito = match &opts.saito {
        Some(fields) => SaitoBasis::new(fields.clone(), f, budget)?,
        None => {
            let gens = compute_der_log(f, w.as_deref(), budget)?;
            find_saito_basis(&gens, f, w.as_deref(), budget)?
        }
    };
    if weights.is_none() {
        notes.push("polynomial model of the germ".to_string());
    }
    let linear = is_linear(&saito, budget)?;
    let (mut reductive, mut trace, mut algebra) = (None, None, None);
    if linear {
        let g = lie_algebra(&saito)?;
        reductive = Some(is_reductive(&g));
        let ann = annihilator_fields(f, Some(&vec![1; f.nvars()]), budget)?;
        trace = Some(trace_test(f, &ann)?);
        algebra = Some(g);
    }
    let koszul = if opts.koszul {
        Some(is_koszul(&saito, budget)?)
    } else {
        None
    };
    let (structure, connection_ok) = match structure_constants(&saito) {
        Ok(b) => {
            let c = connection_conditions(&saito, &b);
            (Some(b), Some(c))
        }
        Err(e) => {
            notes.push(format!("structure constants unavailable: {e}"));
            (None, None)
        }
    };
    Ok(DivisorProfile {
        f: f.clone(),
        free: true,
        saito: Some(saito),
        linear,
        weights,
        koszul,
        reductive,
        trace,
        lie_algebra: algebra,
        structure,
        connection_ok,
        notes,
    })
}
