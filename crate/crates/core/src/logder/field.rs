use num_traits::Zero;

use crate::groebner::ModuleElement;
use crate::linalg::RatMatrix;
use crate::poly::{Monomial, Polynomial, Rational};

/// Vector field `δ = Σ aᵢ ∂/∂xᵢ` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    coeffs: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        let n = coeffs.len();
        assert!(coeffs.iter().all(|c| c.nvars() == n), "a field on ℚⁿ has n coefficients in n variables");
        VectorField { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        VectorField {
            coeffs: vec![Polynomial::zero(n); n],
        }
    }

    /// `∂/∂xᵢ`.
    pub fn partial(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[i] = Polynomial::one(n);
        v
    }

    /// `x^α ∂/∂xᵢ`.
    pub fn monomial(m: Monomial, i: usize) -> Self {
        let n = m.nvars();
        let mut v = Self::zero(n);
        v.coeffs[i] = Polynomial::monomial(m);
        v
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> &Polynomial {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn from_element(v: &ModuleElement) -> Self {
        Self::new(v.components().to_vec())
    }

    pub fn to_element(&self) -> ModuleElement {
        ModuleElement::new(self.coeffs.clone())
    }

    /// `δ(p) = Σ aᵢ ∂p/∂xᵢ`.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars());
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let d = p.derivative(i);
                if !d.is_zero() {
                    acc = &acc + &(a * &d);
                }
            }
        }
        acc
    }

    /// `Σ ∂aᵢ/∂xᵢ`; for linear fields this is the trace of the matrix.
    pub fn divergence(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars());
        for (i, a) in self.coeffs.iter().enumerate() {
            acc = &acc + &a.derivative(i);
        }
        acc
    }

    pub fn add(&self, o: &VectorField) -> VectorField {
        VectorField {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &VectorField) -> VectorField {
        VectorField {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> VectorField {
        VectorField {
            coeffs: self.coeffs.iter().map(|a| a * p).collect(),
        }
    }

    /// Common weight `wt(α) − aᵢ` of the terms `x^α ∂ᵢ`; `Some(None)` for the
    /// zero field and `None` if the field is not homogeneous.
    pub fn weight(&self, weights: &[i64]) -> Option<Option<i64>> {
        let shifts: Vec<i64> = weights.iter().map(|a| -a).collect();
        self.to_element().weighted_degree(weights, &shifts)
    }

    /// Splits into homogeneous pieces, ascending by weight.
    pub fn homogeneous_parts(&self, weights: &[i64]) -> Vec<(i64, VectorField)> {
        let n = self.nvars();
        let mut parts: std::collections::BTreeMap<i64, VectorField> = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            for (m, c) in a.terms() {
                let w = m.weighted_degree(weights) - weights[i];
                let e = parts.entry(w).or_insert_with(|| VectorField::zero(n));
                e.coeffs[i].add_term(m.clone(), c.clone());
            }
        }
        parts.into_iter().collect()
    }

    /// `M` with `Mᵢⱼ` the coefficient of `xⱼ` in component `i`, if every
    /// coefficient is a linear form.
    pub fn linear_matrix(&self) -> Option<RatMatrix> {
        let n = self.nvars();
        let mut m = RatMatrix::zeros(n, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (mono, c) in a.terms() {
                if mono.degree() != 1 {
                    return None;
                }
                let j = mono.support().next().unwrap();
                m.set(i, j, c.clone());
            }
        }
        Some(m)
    }

    /// The linear field `Σᵢ (Σⱼ Mᵢⱼxⱼ) ∂ᵢ`.
    pub fn from_matrix(m: &RatMatrix) -> VectorField {
        let n = m.rows();
        let mut v = VectorField::zero(n);
        for i in 0..n {
            for j in 0..n {
                if !m.get(i, j).is_zero() {
                    v.coeffs[i].add_term(Monomial::var(n, j), m.get(i, j).clone());
                }
            }
        }
        v
    }

    /// Coefficient vector over a list of monomial fields `(i, x^α)`.
    pub fn coordinates(&self, basis: &[(usize, Monomial)]) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); basis.len()];
        let mut count = 0;
        for (i, a) in self.coeffs.iter().enumerate() {
            for (m, c) in a.terms() {
                let k = basis.iter().position(|(j, b)| *j == i && b == m)?;
                out[k] = c.clone();
                count += 1;
            }
        }
        debug_assert!(count <= basis.len());
        Some(out)
    }

    pub fn from_coordinates(n: usize, coords: &[Rational], basis: &[(usize, Monomial)]) -> VectorField {
        let mut v = VectorField::zero(n);
        for (c, (i, m)) in coords.iter().zip(basis) {
            v.coeffs[*i].add_term(m.clone(), c.clone());
        }
        v
    }

    pub fn format(&self, names: &[String]) -> String {
        let ring = crate::poly::Ring::new(names).expect("valid names");
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| format!("({})*d/d{}", ring.format(a), names[i]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl std::fmt::Debug for VectorField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// `[δ, ν]` with components `δ(νᵢ) − ν(δᵢ)`.
pub fn lie_bracket(d: &VectorField, v: &VectorField) -> VectorField {
    assert_eq!(d.nvars(), v.nvars(), "ring mismatch");
    VectorField {
        coeffs: (0..d.nvars())
            .map(|i| &d.apply(&v.coeffs[i]) - &v.apply(&d.coeffs[i]))
            .collect(),
    }
}
