use num_traits::Zero;

use super::field::VectorField;
use crate::error::{Error, Result};
use crate::groebner::{syzygies, Budget};
use crate::linalg::RatMatrix;
use crate::poly::{is_squarefree, monomials_of_weight, Monomial, Polynomial, Rational};

/// Generators of `Der(-log D)` for `D = V(f)`.
///
/// Every syzygy `(g₀, g₁, …, gₙ)` of `(f, ∂₁f, …, ∂ₙf)` gives the field
/// `Σ gᵢ∂ᵢ`. With `weights` the computation is graded and every generator is
/// homogeneous.
pub fn compute_der_log(f: &Polynomial, weights: Option<&[i64]>, budget: &Budget) -> Result<Vec<VectorField>> {
    if !is_squarefree(f, budget)? {
        return Err(Error::NonReduced);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::Precondition("f(0) must vanish".into()));
    }
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    let n = f.nvars();
    let syz = match weights {
        Some(w) => syzygies::of_polynomials_graded(&gens, w, budget)?,
        None => syzygies::of_polynomials(&gens, budget)?,
    };
    Ok(syz
        .into_relations()
        .into_iter()
        .map(|r| VectorField::new(r.into_components().split_off(1)))
        .filter(|v| !v.is_zero())
        .inspect(|v| debug_assert_eq!(v.nvars(), n))
        .collect())
}

/// Generators of `{δ : δ(f) = 0}`, the syzygies of the gradient.
pub fn annihilator_fields(f: &Polynomial, weights: Option<&[i64]>, budget: &Budget) -> Result<Vec<VectorField>> {
    let n = f.nvars();
    let grad = f.gradient();
    if grad.iter().all(Polynomial::is_zero) {
        return Ok((0..n).map(|i| VectorField::partial(n, i)).collect());
    }
    let syz = match weights {
        Some(w) => syzygies::of_polynomials_graded(&grad, w, budget)?,
        None => syzygies::of_polynomials(&grad, budget)?,
    };
    Ok(syz
        .into_relations()
        .into_iter()
        .map(|r| VectorField::new(r.into_components()))
        .filter(|v| !v.is_zero())
        .collect())
}

/// `δ(f) ∈ (f)`.
pub fn is_logarithmic(d: &VectorField, f: &Polynomial) -> bool {
    d.apply(f).div_exact(f).is_some()
}

/// Monomial fields `x^α∂ᵢ` of weight `w`, grouped by component.
pub fn monomial_fields(weights: &[i64], w: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (i, &a) in weights.iter().enumerate() {
        for m in monomials_of_weight(weights, w + a) {
            out.push((i, m));
        }
    }
    out
}

/// A ℚ-basis of `Der(-log D)_w` for weighted homogeneous `f` of degree `k`,
/// by solving `δ(f) = g·f` with `g` of weight `w` directly.
pub fn der_log_piece(f: &Polynomial, weights: &[i64], w: i64) -> Vec<VectorField> {
    let n = f.nvars();
    let fields = monomial_fields(weights, w);
    let mults = monomials_of_weight(weights, w);
    let k = f.weighted_degrees(weights).first().copied().unwrap_or(0);
    let targets = monomials_of_weight(weights, k + w);
    let index = |m: &Monomial| targets.binary_search(m).expect("homogeneous image");
    let cols = fields.len() + mults.len();
    let mut a = RatMatrix::zeros(targets.len(), cols);
    for (c, (i, m)) in fields.iter().enumerate() {
        let img = VectorField::monomial(m.clone(), *i).apply(f);
        for (t, v) in img.terms() {
            a.set(index(t), c, v.clone());
        }
    }
    for (c, m) in mults.iter().enumerate() {
        let img = f.mul_monomial(m, &Rational::from_integer((-1).into()));
        for (t, v) in img.terms() {
            a.set(index(t), fields.len() + c, v.clone());
        }
    }
    let mut basis = crate::linalg::Echelon::new();
    let mut out = Vec::new();
    for v in a.nullspace() {
        let part = &v[..fields.len()];
        if part.iter().all(Zero::is_zero) {
            continue;
        }
        if basis.insert(part) {
            out.push(VectorField::from_coordinates(n, part, &fields));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, MonomialOrder};
    use crate::poly::Ring;

    fn module_equal(a: &[VectorField], b: &[VectorField]) -> bool {
        let ea: Vec<_> = a.iter().map(VectorField::to_element).collect();
        let eb: Vec<_> = b.iter().map(VectorField::to_element).collect();
        let ga = buchberger(&ea, &MonomialOrder::degrevlex(), &Budget::unlimited()).unwrap();
        let gb = buchberger(&eb, &MonomialOrder::degrevlex(), &Budget::unlimited()).unwrap();
        eb.iter().all(|v| ga.contains(v)) && ea.iter().all(|v| gb.contains(v))
    }

    fn fields(r: &Ring, cols: &[&[&str]]) -> Vec<VectorField> {
        cols.iter()
            .map(|c| VectorField::new(c.iter().map(|s| r.parse(s).unwrap()).collect()))
            .collect()
    }

    #[test]
    fn normal_crossing() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let f = r.parse("x*y*z").unwrap();
        let g = compute_der_log(&f, Some(&[1, 1, 1]), &Budget::unlimited()).unwrap();
        assert!(g.iter().all(|d| is_logarithmic(d, &f)));
        let expect = fields(&r, &[&["x", "0", "0"], &["0", "y", "0"], &["0", "0", "z"]]);
        assert!(module_equal(&g, &expect));
    }

    #[test]
    fn four_lines() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = r.parse("x^3*y - x*y^3").unwrap();
        let g = compute_der_log(&f, None, &Budget::unlimited()).unwrap();
        let expect = fields(&r, &[&["x", "y"], &["0", "x^2*y - y^3"]]);
        assert!(module_equal(&g, &expect));
    }

    #[test]
    fn smooth_divisor() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = r.parse("x").unwrap();
        let g = compute_der_log(&f, Some(&[1, 1]), &Budget::unlimited()).unwrap();
        let expect = fields(&r, &[&["x", "0"], &["0", "1"]]);
        assert!(module_equal(&g, &expect));
    }

    #[test]
    fn rejects_non_reduced() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = r.parse("x^2*y").unwrap();
        assert_eq!(compute_der_log(&f, None, &Budget::unlimited()).unwrap_err(), Error::NonReduced);
    }

    #[test]
    fn annihilators() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let a = annihilator_fields(&r.parse("x*y").unwrap(), None, &Budget::unlimited()).unwrap();
        assert!(module_equal(&a, &fields(&r, &[&["x", "-y"]])));
        let r3 = Ring::new(&["x", "y", "z"]).unwrap();
        let f = r3.parse("(y^2 + x*z)*z").unwrap();
        let ann = annihilator_fields(&f, Some(&[1, 1, 1]), &Budget::unlimited()).unwrap();
        let sigma = fields(&r3, &[&["4*x", "y", "-2*z"]]);
        assert!(sigma[0].apply(&f).is_zero());
        let e: Vec<_> = ann.iter().map(VectorField::to_element).collect();
        let gb = buchberger(&e, &MonomialOrder::degrevlex(), &Budget::unlimited()).unwrap();
        assert!(gb.contains(&sigma[0].to_element()));
        let s = annihilator_fields(&r3.parse("x").unwrap(), None, &Budget::unlimited()).unwrap();
        assert!(module_equal(&s, &fields(&r3, &[&["0", "1", "0"], &["0", "0", "1"]])));
    }

    #[test]
    fn linear_algebra_piece_matches_plane_curve() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = r.parse("x^3*y - x*y^3").unwrap();
        // basis weights 0 and 2: dims of pieces are #O_w + #O_{w-2}
        assert_eq!(der_log_piece(&f, &[1, 1], 0).len(), 1);
        assert_eq!(der_log_piece(&f, &[1, 1], 1).len(), 2);
        assert_eq!(der_log_piece(&f, &[1, 1], 2).len(), 4);
    }
}
