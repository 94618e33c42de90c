use super::budget::Budget;
use super::element::ModuleElement;
use super::engine::{buchberger, GroebnerBasis};
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::{monomials_of_weight, Monomial, Polynomial, Rational};

/// Graded quotient `Oᵐ / N` for positive variable weights and component
/// shifts, with a Gröbner basis of `N` for normal forms.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    gb: GroebnerBasis,
    weights: Vec<i64>,
    shifts: Vec<i64>,
}

impl GradedQuotient {
    /// Fails with `NotHomogeneousInput` when a generator of `N` is not
    /// homogeneous for the grading.
    pub fn new(
        sub: &[ModuleElement],
        weights: &[i64],
        shifts: &[i64],
        order: Option<MonomialOrder>,
        budget: &Budget,
    ) -> Result<Self> {
        if weights.iter().any(|&a| a < 1) {
            return Err(Error::NonPositiveWeights);
        }
        let rank = shifts.len();
        for g in sub {
            if g.rank() != rank {
                return Err(Error::Shape(format!("element of rank {} in a rank {rank} module", g.rank())));
            }
            if g.weighted_degree(weights, shifts).is_none() {
                return Err(Error::NotHomogeneousInput);
            }
        }
        let order =
            order.unwrap_or_else(|| MonomialOrder::weighted(weights.to_vec()).top(shifts.to_vec()));
        let nvars = weights.len();
        let nonzero: Vec<ModuleElement> = sub.iter().filter(|g| !g.is_zero()).cloned().collect();
        let gens = if nonzero.is_empty() {
            vec![ModuleElement::zero(rank, nvars)]
        } else {
            nonzero
        };
        let gb = buchberger(&gens, &order, budget)?;
        Ok(GradedQuotient {
            gb,
            weights: weights.to_vec(),
            shifts: shifts.to_vec(),
        })
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// Standard monomial elements `x^α·eᵢ` of the given weight, ordered by
    /// component and then ascending degrevlex.
    pub fn basis(&self, weight: i64) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (i, &s) in self.shifts.iter().enumerate() {
            for m in monomials_of_weight(&self.weights, weight - s) {
                if self.gb.is_standard(i, &m) {
                    out.push((i, m));
                }
            }
        }
        out
    }

    /// Number of monomial elements of the weight in the free module.
    pub fn ambient_size(&self, weight: i64) -> usize {
        self.shifts
            .iter()
            .map(|&s| monomials_of_weight(&self.weights, weight - s).len())
            .sum()
    }

    pub fn normal_form(&self, v: &ModuleElement) -> ModuleElement {
        self.gb.normal_form(v)
    }

    /// Coordinates of the class of `v` in `basis`, which must list the
    /// standard monomials of `v`'s weight.
    pub fn coordinates(&self, v: &ModuleElement, basis: &[(usize, Monomial)]) -> Result<Vec<Rational>> {
        let nf = self.gb.normal_form(v);
        let mut out = vec![Rational::default(); basis.len()];
        for (i, p) in nf.components().iter().enumerate() {
            for (m, c) in p.terms() {
                let k = basis
                    .iter()
                    .position(|(j, b)| *j == i && b == m)
                    .ok_or_else(|| Error::InternalInconsistency("normal form leaves the graded piece".into()))?;
                out[k] = c.clone();
            }
        }
        Ok(out)
    }

    /// The element `Σ cₖ·bₖ`.
    pub fn element(&self, coords: &[Rational], basis: &[(usize, Monomial)]) -> ModuleElement {
        let n = self.weights.len();
        let mut comps = vec![Polynomial::zero(n); self.shifts.len()];
        for (c, (i, m)) in coords.iter().zip(basis) {
            comps[*i].add_term(m.clone(), c.clone());
        }
        ModuleElement::new(comps)
    }
}

/// A ℚ-basis of the `target_weight` piece of `Oᵐ/N` as monomial elements in
/// normal form.
pub fn graded_quotient_basis(
    sub: &[ModuleElement],
    target_weight: i64,
    weights: &[i64],
    component_weights: &[i64],
    budget: &Budget,
) -> Result<Vec<ModuleElement>> {
    let q = GradedQuotient::new(sub, weights, component_weights, None, budget)?;
    let n = weights.len();
    Ok(q
        .basis(target_weight)
        .into_iter()
        .map(|(i, m)| {
            let mut comps = vec![Polynomial::zero(n); component_weights.len()];
            comps[i] = Polynomial::monomial(m);
            ModuleElement::new(comps)
        })
        .collect())
}
