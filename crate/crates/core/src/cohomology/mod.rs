//! First-order deformation spaces of free divisors: the weight-zero slice of
//! `Hom(⋀ᵖ Der(-log D), Der/Der(-log D))` for weighted homogeneous divisors and
//! the Chevalley–Eilenberg complex of `Der(-log D)₀` for linear ones.

mod ce;
mod deform;
mod slice;

pub use ce::LinearComplex;
pub use deform::{coboundary_lifts, deformation_equation, normalize_representatives, Deformation, TjurinaPiece};
pub use slice::{CohomologySlice, QuotientSlice, DEFAULT_MAX_WEIGHT};

use crate::classify::{detect_weights, is_linear, linear_part};
use crate::error::{Error, Result};
use crate::groebner::{graded_quotient_basis, Budget, ModuleElement, MonomialOrder};
use crate::logder::{
    as_matrices, compute_der_log, find_saito_basis, lie_bracket, structure_constants, SaitoBasis, StructureConstants,
    VectorField,
};
use crate::poly::{is_squarefree, weighted_degree, Polynomial, WeightSystem};

/// How a deformation space was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    GradedSlice,
    PlaneCurveShortcut,
    LieAlgebra,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::GradedSlice => "graded-slice",
            Method::PlaneCurveShortcut => "plane-curve-shortcut",
            Method::LieAlgebra => "lie-algebra",
        }
    }
}

/// Dimension and representatives of a deformation space.
#[derive(Clone, Debug)]
pub struct DeformationReport {
    pub method: Method,
    pub dimension: usize,
    pub weights: Vec<i64>,
    pub degree: i64,
    /// Cocycle lifts and deformed equations `f′`; for the plane-curve
    /// shortcut the lifts are empty.
    pub representatives: Vec<Deformation>,
    pub h0: Option<usize>,
    /// `dim Hᵖ` for every `p` (Lie algebra path only).
    pub betti: Option<Vec<usize>>,
    /// Dimensions of `C⁰, C¹, C²`.
    pub cochain_dims: [usize; 3],
}

impl DeformationReport {
    pub fn equations(&self) -> Vec<&Polynomial> {
        self.representatives.iter().map(|d| &d.equation).collect()
    }
}

/// Options for [`ft1_with`] and [`lft1_with`].
#[derive(Clone, Debug)]
pub struct DeformationOptions {
    pub weights: Option<Vec<i64>>,
    pub saito: Option<Vec<VectorField>>,
    pub max_weight: i64,
}

impl Default for DeformationOptions {
    fn default() -> Self {
        DeformationOptions {
            weights: None,
            saito: None,
            max_weight: DEFAULT_MAX_WEIGHT,
        }
    }
}

fn weight_system(f: &Polynomial, weights: Option<&[i64]>) -> Result<WeightSystem> {
    match weights {
        Some(w) => WeightSystem::for_polynomial(w.to_vec(), f),
        None => detect_weights(f).ok_or(Error::NotWeightedHomogeneous),
    }
}

fn saito_for(f: &Polynomial, w: &[i64], given: Option<&[VectorField]>, budget: &Budget) -> Result<SaitoBasis> {
    match given {
        Some(fields) => SaitoBasis::new(fields.to_vec(), f, budget),
        None => {
            let gens = compute_der_log(f, Some(w), budget)?;
            find_saito_basis(&gens, f, Some(w), budget)
        }
    }
}

/// `FT¹(D)` of a weighted homogeneous free divisor.
pub fn ft1(f: &Polynomial, budget: &Budget) -> Result<DeformationReport> {
    ft1_with(f, &DeformationOptions::default(), budget)
}

pub fn ft1_with(f: &Polynomial, opts: &DeformationOptions, budget: &Budget) -> Result<DeformationReport> {
    let ws = weight_system(f, opts.weights.as_deref())?;
    let saito = saito_for(f, ws.weights(), opts.saito.as_deref(), budget)?;
    ft1_for_basis(&saito, ws.weights(), opts.max_weight, budget)
}

/// `FT¹(D)` from a verified Saito basis of homogeneous fields.
pub fn ft1_for_basis(saito: &SaitoBasis, weights: &[i64], max_weight: i64, budget: &Budget) -> Result<DeformationReport> {
    let b = structure_constants(saito)?;
    let slice = build_slice(saito, &b, weights, max_weight, budget)?;
    let k = weighted_degree(saito.divisor(), weights)?;
    let reps: Vec<Vec<VectorField>> = slice.h1_basis().iter().map(|z| slice.lifts(z)).collect();
    let quotient_reduce = |v: &VectorField| slice.reduce(v);
    let representatives = normalize_representatives(&reps, saito, weights, k, &quotient_reduce)?;
    Ok(DeformationReport {
        method: Method::GradedSlice,
        dimension: representatives.len(),
        weights: weights.to_vec(),
        degree: k,
        representatives,
        h0: Some(slice.h0()),
        betti: None,
        cochain_dims: [slice.c0().dim(), slice.c1_dim(), slice.c2_dim()],
    })
}

/// The weight-zero slice with `d⁰` and `d¹`; `d¹d⁰ = 0` is checked.
pub fn build_slice(
    saito: &SaitoBasis,
    b: &StructureConstants,
    weights: &[i64],
    max_weight: i64,
    budget: &Budget,
) -> Result<CohomologySlice> {
    CohomologySlice::build(saito, b, weights, max_weight, budget)
}

/// `ℚ[x,y]_k / J ∩ ℚ[x,y]_k` for a reduced weighted homogeneous plane curve.
pub fn ft1_plane_curve(f: &Polynomial, budget: &Budget) -> Result<DeformationReport> {
    if f.nvars() != 2 {
        return Err(Error::Precondition(format!("{} variables, expected 2", f.nvars())));
    }
    let ws = detect_weights(f).ok_or(Error::NotWeightedHomogeneous)?;
    if !is_squarefree(f, budget)? {
        return Err(Error::NonReduced);
    }
    let k = weighted_degree(f, ws.weights())?;
    let basis = jacobian_quotient(f, ws.weights(), k, budget)?;
    let representatives: Vec<Deformation> = basis
        .into_iter()
        .map(|equation| Deformation {
            lifts: Vec::new(),
            equation,
        })
        .collect();
    Ok(DeformationReport {
        method: Method::PlaneCurveShortcut,
        dimension: representatives.len(),
        weights: ws.weights().to_vec(),
        degree: k,
        representatives,
        h0: None,
        betti: None,
        cochain_dims: [0; 3],
    })
}

/// Standard monomials of degree `k` modulo the Jacobian ideal.
fn jacobian_quotient(f: &Polynomial, weights: &[i64], k: i64, budget: &Budget) -> Result<Vec<Polynomial>> {
    let jac: Vec<ModuleElement> = f
        .gradient()
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(ModuleElement::from_poly)
        .collect();
    if jac.is_empty() {
        return Err(Error::ZeroOrConstantInput);
    }
    Ok(graded_quotient_basis(&jac, k, weights, &[0], budget)?
        .into_iter()
        .map(|e| e.component(0).clone())
        .collect())
}

/// `dim ℚ[x]_k / J ∩ ℚ[x]_k` for `f` weighted homogeneous of degree `k`.
pub fn jacobian_degree_bound(f: &Polynomial, weights: &[i64], budget: &Budget) -> Result<usize> {
    let k = weighted_degree(f, weights).map_err(|_| Error::NotWeightedHomogeneous)?;
    Ok(jacobian_quotient(f, weights, k, budget)?.len())
}

/// `LFT¹(D)` of a linear free divisor.
pub fn lft1(f: &Polynomial, budget: &Budget) -> Result<DeformationReport> {
    lft1_with(f, &DeformationOptions::default(), budget)
}

pub fn lft1_with(f: &Polynomial, opts: &DeformationOptions, budget: &Budget) -> Result<DeformationReport> {
    let n = f.nvars();
    let std = vec![1; n];
    let saito = saito_for(f, &std, opts.saito.as_deref(), budget)?;
    lft1_for_basis(&saito, budget)
}

/// `LFT¹(D)` from a Saito basis of a linear free divisor.
pub fn lft1_for_basis(saito: &SaitoBasis, budget: &Budget) -> Result<DeformationReport> {
    if !is_linear(saito, budget)? {
        return Err(Error::NotLinear);
    }
    let lin = linear_part(saito)?;
    let mats = as_matrices(&lin).ok_or(Error::NotLinear)?;
    // A basis of linear fields with the same determinant up to a constant.
    let linear_basis = SaitoBasis::new(lin, saito.divisor(), budget)?;
    let complex = LinearComplex::new(mats)?;
    let betti = complex.betti_numbers();
    let std = vec![1; saito.nvars()];
    let k = weighted_degree(saito.divisor(), &std)?;
    let reps: Vec<Vec<VectorField>> = complex.h1_basis().iter().map(|z| complex.lifts(z)).collect();
    let reduce = |v: &VectorField| complex.reduce(v);
    let representatives = normalize_representatives(&reps, &linear_basis, &std, k, &reduce)?;
    if representatives.len() != betti[1] {
        return Err(Error::InternalInconsistency("H¹ basis size differs from its dimension".into()));
    }
    Ok(DeformationReport {
        method: Method::LieAlgebra,
        dimension: betti[1],
        weights: std,
        degree: k,
        representatives,
        h0: Some(betti[0]),
        betti: Some(betti),
        cochain_dims: [
            complex.cochain_dim(0),
            complex.cochain_dim(1),
            complex.cochain_dim(2),
        ],
    })
}

/// `dim H⁰` of the weight-zero slice.
pub fn h0(f: &Polynomial, budget: &Budget) -> Result<usize> {
    let ws = detect_weights(f).ok_or(Error::NotWeightedHomogeneous)?;
    let saito = saito_for(f, ws.weights(), None, budget)?;
    let b = structure_constants(&saito)?;
    Ok(build_slice(&saito, &b, ws.weights(), DEFAULT_MAX_WEIGHT, budget)?.h0())
}

/// Whether lifts `ψ(δᵢ)` satisfy
/// `ψ([δᵢ,δⱼ]) − [δᵢ,ψ(δⱼ)] + [δⱼ,ψ(δᵢ)] ∈ Der(-log D)` for all `i < j`.
pub fn cocycle_check(lifts: &[VectorField], saito: &SaitoBasis, b: &StructureConstants, budget: &Budget) -> Result<bool> {
    let n = saito.len();
    if lifts.len() != n {
        return Err(Error::Shape(format!("{} lifts for a basis of size {n}", lifts.len())));
    }
    let gb = saito.module_basis(&MonomialOrder::degrevlex(), budget)?;
    for i in 0..n {
        for j in i + 1..n {
            let mut v = VectorField::zero(saito.nvars());
            for (k, l) in lifts.iter().enumerate() {
                v = v.add(&l.mul_poly(b.get(i, j, k)));
            }
            v = v.sub(&lie_bracket(saito.field(i), &lifts[j]));
            v = v.add(&lie_bracket(saito.field(j), &lifts[i]));
            if !gb.normal_form_budgeted(&v.to_element(), budget)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `σ` of weight zero with `ψ = d⁰σ` in the slice, if any.
pub fn is_coboundary(lifts: &[VectorField], slice: &CohomologySlice) -> Result<Option<VectorField>> {
    let coords = slice.cochain(lifts)?;
    Ok(slice.is_coboundary(&coords))
}

#[cfg(test)]
mod tests;
