use num_traits::Zero;

use super::field::VectorField;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, Budget, GroebnerBasis, ModuleElement, MonomialOrder};
use crate::poly::{is_squarefree, poly_det, PolyMatrix, Polynomial};

/// `n` logarithmic fields whose coefficient determinant is `u·f` with
/// `u(0) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaitoBasis {
    fields: Vec<VectorField>,
    divisor: Polynomial,
    unit: Polynomial,
}

impl SaitoBasis {
    /// Checks the basis with [`verify_saito`].
    pub fn new(fields: Vec<VectorField>, f: &Polynomial, budget: &Budget) -> Result<Self> {
        let check = verify_saito(&fields, f, budget)?;
        match check.unit {
            Some(u) if check.ok => Ok(SaitoBasis {
                fields,
                divisor: f.clone(),
                unit: u,
            }),
            _ => Err(Error::NotFree(check.reason.unwrap_or_default())),
        }
    }

    pub fn fields(&self) -> &[VectorField] {
        &self.fields
    }

    pub fn field(&self, i: usize) -> &VectorField {
        &self.fields[i]
    }

    pub fn divisor(&self) -> &Polynomial {
        &self.divisor
    }

    pub fn unit(&self) -> &Polynomial {
        &self.unit
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.divisor.nvars()
    }

    /// Saito matrix with the fields as columns.
    pub fn matrix(&self) -> PolyMatrix {
        saito_matrix(&self.fields)
    }

    /// `aᵢⱼ`: component `j` of `δᵢ`.
    pub fn a(&self, i: usize, j: usize) -> &Polynomial {
        self.fields[i].coefficient(j)
    }

    /// Gröbner basis of the module spanned by the fields.
    pub fn module_basis(&self, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
        let e: Vec<ModuleElement> = self.fields.iter().map(VectorField::to_element).collect();
        buchberger(&e, order, budget)
    }

    /// Weights of the fields, if all are homogeneous.
    pub fn weights(&self, w: &[i64]) -> Option<Vec<i64>> {
        self.fields
            .iter()
            .map(|d| d.weight(w).and_then(|x| x))
            .collect()
    }
}

pub fn saito_matrix(fields: &[VectorField]) -> PolyMatrix {
    let cols: Vec<Vec<Polynomial>> = fields.iter().map(|d| d.coefficients().to_vec()).collect();
    PolyMatrix::from_columns(&cols).expect("n fields on ℚⁿ")
}

/// Outcome of [`verify_saito`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaitoCheck {
    pub ok: bool,
    pub unit: Option<Polynomial>,
    pub reason: Option<String>,
}

impl SaitoCheck {
    fn fail(reason: impl Into<String>, unit: Option<Polynomial>) -> Self {
        SaitoCheck {
            ok: false,
            unit,
            reason: Some(reason.into()),
        }
    }
}

/// Saito's criterion: `n` logarithmic fields with `det = u·f`, `u(0) ≠ 0`,
/// and `f` reduced.
pub fn verify_saito(fields: &[VectorField], f: &Polynomial, budget: &Budget) -> Result<SaitoCheck> {
    let n = f.nvars();
    if fields.len() != n || fields.iter().any(|d| d.nvars() != n) {
        return Ok(SaitoCheck::fail(format!("{} fields for {n} variables", fields.len()), None));
    }
    if f.is_zero() || f.is_constant() {
        return Ok(SaitoCheck::fail("f is constant", None));
    }
    if !is_squarefree(f, budget)? {
        return Ok(SaitoCheck::fail("f is not reduced", None));
    }
    for (i, d) in fields.iter().enumerate() {
        if d.apply(f).div_exact(f).is_none() {
            return Ok(SaitoCheck::fail(format!("field {} is not logarithmic", i + 1), None));
        }
    }
    let det = poly_det(&saito_matrix(fields));
    let Some(u) = det.div_exact(f) else {
        return Ok(SaitoCheck::fail("determinant is not a multiple of f", None));
    };
    if u.constant_term().is_zero() {
        return Ok(SaitoCheck::fail("determinant is f times a non-unit", Some(u)));
    }
    Ok(SaitoCheck {
        ok: true,
        unit: Some(u),
        reason: None,
    })
}

/// Extracts a Saito basis from generators of `Der(-log D)`.
///
/// Graded case (`weights` given and `f` homogeneous): generators are split
/// into homogeneous parts, sorted by weight, and kept only when not in the
/// module spanned by those already kept. Otherwise a generator is dropped
/// when it lies in `m·M` plus the span of the remaining ones, which is
/// Nakayama's lemma at the origin; if that does not reach `n` elements an
/// `n`-subset search ordered by degree is tried.
pub fn find_saito_basis(
    gens: &[VectorField],
    f: &Polynomial,
    weights: Option<&[i64]>,
    budget: &Budget,
) -> Result<SaitoBasis> {
    let n = f.nvars();
    let graded = weights.filter(|w| f.weighted_degrees(w).len() == 1);
    let kept = match graded {
        Some(w) => graded_minimal(gens, w, budget)?,
        None => local_minimal(gens, budget)?,
    };
    if kept.len() == n {
        if let Ok(b) = SaitoBasis::new(kept.clone(), f, budget) {
            return Ok(b);
        }
    }
    if graded.is_some() {
        return Err(Error::NotFree(format!(
            "minimal generating set has {} elements, expected {n}",
            kept.len()
        )));
    }
    subset_search(&kept, f, budget)
}

fn graded_minimal(gens: &[VectorField], w: &[i64], budget: &Budget) -> Result<Vec<VectorField>> {
    let mut parts: Vec<(i64, usize, VectorField)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        for (wt, p) in g.homogeneous_parts(w) {
            parts.push((wt, k, p));
        }
    }
    parts.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| total_size(&a.2).cmp(&total_size(&b.2)))
            .then(a.1.cmp(&b.1))
    });
    let order = MonomialOrder::degrevlex();
    let mut kept: Vec<VectorField> = Vec::new();
    let mut gb: Option<GroebnerBasis> = None;
    for (_, _, p) in parts {
        let e = p.to_element();
        if let Some(g) = &gb {
            if g.normal_form_budgeted(&e, budget)?.is_zero() {
                continue;
            }
        }
        kept.push(p);
        let elems: Vec<ModuleElement> = kept.iter().map(VectorField::to_element).collect();
        gb = Some(buchberger(&elems, &order, budget)?);
    }
    Ok(kept)
}

fn total_size(v: &VectorField) -> usize {
    v.coefficients().iter().map(Polynomial::len).sum()
}

fn local_minimal(gens: &[VectorField], budget: &Budget) -> Result<Vec<VectorField>> {
    let n = gens.first().map_or(0, VectorField::nvars);
    let mut gens: Vec<VectorField> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    gens.sort_by_key(|g| {
        let deg = g
            .coefficients()
            .iter()
            .filter_map(Polynomial::total_degree)
            .min()
            .unwrap_or(0);
        (deg, total_size(g))
    });
    let mut maximal: Vec<ModuleElement> = Vec::new();
    for g in &gens {
        for j in 0..n {
            maximal.push(g.mul_poly(&Polynomial::var(n, j)).to_element());
        }
    }
    let mut alive = vec![true; gens.len()];
    let order = MonomialOrder::degrevlex();
    for k in (0..gens.len()).rev() {
        let mut span = maximal.clone();
        span.extend(
            (0..gens.len())
                .filter(|&i| i != k && alive[i])
                .map(|i| gens[i].to_element()),
        );
        let gb = buchberger(&span, &order, budget)?;
        if gb.normal_form_budgeted(&gens[k].to_element(), budget)?.is_zero() {
            alive[k] = false;
        }
    }
    Ok(gens
        .into_iter()
        .zip(alive)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect())
}

const SUBSET_LIMIT: usize = 5000;

fn subset_search(gens: &[VectorField], f: &Polynomial, budget: &Budget) -> Result<SaitoBasis> {
    let n = f.nvars();
    if gens.len() < n {
        return Err(Error::NotFree(format!("only {} generators at the origin", gens.len())));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut tried = 0;
    loop {
        budget.check()?;
        tried += 1;
        let pick: Vec<VectorField> = idx.iter().map(|&i| gens[i].clone()).collect();
        if let Ok(b) = SaitoBasis::new(pick, f, budget) {
            return Ok(b);
        }
        if tried >= SUBSET_LIMIT || !next_combination(&mut idx, gens.len()) {
            return Err(Error::NotFree(format!(
                "no {n}-subset of {} generators is a Saito basis",
                gens.len()
            )));
        }
    }
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
