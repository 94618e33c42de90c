use num_rational::BigRational;

use super::derlog::monomial_fields;
use super::field::VectorField;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, RatMatrix};
use crate::poly::{monomials_of_weight, rat, weighted_degree, Polynomial, WeightSystem};

/// A ℚ-basis of the weight-zero piece of the module spanned by `gens`.
///
/// Generators are split into homogeneous parts; the piece is spanned by the
/// products `x^β·g` with `wt(β) + wt(g) = 0`.
pub fn weight_zero_part(gens: &[VectorField], weights: &[i64]) -> Result<Vec<VectorField>> {
    weight_piece(gens, weights, 0)
}

/// A ℚ-basis of the weight-`w` piece of the module spanned by `gens`.
pub fn weight_piece(gens: &[VectorField], weights: &[i64], w: i64) -> Result<Vec<VectorField>> {
    if weights.iter().any(|&a| a < 1) {
        return Err(Error::NonPositiveWeights);
    }
    let Some(n) = gens.first().map(VectorField::nvars) else {
        return Ok(Vec::new());
    };
    let fields = monomial_fields(weights, w);
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for g in gens {
        for (wt, part) in g.homogeneous_parts(weights) {
            for m in monomials_of_weight(weights, w - wt) {
                let v = part.mul_poly(&Polynomial::monomial(m));
                let c = v.coordinates(&fields).expect("homogeneous product");
                if ech.insert(&c) {
                    out.push(v);
                }
            }
        }
    }
    // Canonical representatives: the reduced echelon rows.
    let mut rows: Vec<Vec<BigRational>> = out.iter().map(|v| v.coordinates(&fields).unwrap()).collect();
    if !rows.is_empty() {
        let (r, piv) = RatMatrix::from_rows(std::mem::take(&mut rows)).rref();
        out = (0..piv.len())
            .map(|i| VectorField::from_coordinates(n, r.row(i), &fields))
            .collect();
    }
    Ok(out)
}

/// Matrix forms `M(δ)` of weight-zero fields for the standard grading.
pub fn as_matrices(fields: &[VectorField]) -> Option<Vec<RatMatrix>> {
    fields.iter().map(VectorField::linear_matrix).collect()
}

/// `χ = Σ (aᵢ/k) xᵢ∂ᵢ`, so that `χ(f) = f`.
pub fn euler_field(f: &Polynomial, w: &WeightSystem) -> Result<VectorField> {
    let k = weighted_degree(f, w.weights()).map_err(|_| Error::NotWeightedHomogeneous)?;
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let n = f.nvars();
    let mut chi = VectorField::zero(n);
    for (i, &a) in w.weights().iter().enumerate() {
        let c = rat(a) / rat(k);
        chi = chi.add(&VectorField::monomial(crate::poly::Monomial::var(n, i), i).scale(&c));
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn euler_fields() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = r.parse("x^5 + y^4").unwrap();
        let w = WeightSystem::for_polynomial(vec![4, 5], &f).unwrap();
        let chi = euler_field(&f, &w).unwrap();
        assert_eq!(chi.apply(&f), f);
        assert_eq!(chi.coefficient(0), &r.parse("1/5*x").unwrap());
        let g = r.parse("x^3*y - x*y^3").unwrap();
        let chi = euler_field(&g, &WeightSystem::standard(2, 4)).unwrap();
        assert_eq!(chi.coefficient(1), &r.parse("1/4*y").unwrap());
        let h = r.parse("x + y^2").unwrap();
        assert_eq!(
            euler_field(&h, &WeightSystem::standard(2, 1)).unwrap_err(),
            Error::NotWeightedHomogeneous
        );
    }

    #[test]
    fn weight_zero_of_plane_curve_basis() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let chi = VectorField::new(vec![r.parse("x").unwrap(), r.parse("y").unwrap()]);
        let d2 = VectorField::new(vec![Polynomial::zero(2), r.parse("x^2*y - y^3").unwrap()]);
        let z = weight_zero_part(&[chi.clone(), d2], &[1, 1]).unwrap();
        assert_eq!(z, vec![chi]);
    }

    #[test]
    fn weight_zero_of_normal_crossing() {
        let n = 3;
        let gens: Vec<VectorField> = (0..n)
            .map(|i| VectorField::monomial(crate::poly::Monomial::var(n, i), i))
            .collect();
        let z = weight_zero_part(&gens, &[1, 1, 1]).unwrap();
        let m = as_matrices(&z).unwrap();
        assert_eq!(m.len(), 3);
        for (i, a) in m.iter().enumerate() {
            let mut e = RatMatrix::zeros(3, 3);
            e.set(i, i, rat(1));
            assert_eq!(a, &e);
        }
    }
}
