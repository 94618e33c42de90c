use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::linalg::{Echelon, RatMatrix};
use crate::poly::{gcd, Monomial, Polynomial, Rational};

/// Finite-dimensional Lie algebra of `n×n` rational matrices under the
/// commutator, with its bracket table in the given basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraMatrices {
    basis: Vec<RatMatrix>,
    /// `c[a][b]` holds the coordinates of `[A_a, A_b]`.
    c: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebraMatrices {
    /// Fails with `InternalInconsistency` if the span is not closed under
    /// commutators or the matrices are dependent.
    pub fn new(basis: Vec<RatMatrix>) -> Result<Self> {
        let d = basis.len();
        let flat: Vec<Vec<Rational>> = basis.iter().map(RatMatrix::flatten).collect();
        let len = flat.first().map_or(0, Vec::len);
        let coords = RatMatrix::from_columns(len, &flat);
        if coords.rank() != d {
            return Err(Error::InternalInconsistency("dependent Lie algebra basis".into()));
        }
        let mut c = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in 0..d {
                let br = basis[a].commutator(&basis[b]);
                c[a][b] = coords
                    .solve(&br.flatten())
                    .ok_or_else(|| Error::InternalInconsistency("span not closed under brackets".into()))?;
            }
        }
        Ok(LieAlgebraMatrices { basis, c })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    pub fn bracket_coords(&self, a: usize, b: usize) -> &[Rational] {
        &self.c[a][b]
    }

    /// Matrix of `ad(A_a)` in the basis.
    pub fn ad(&self, a: usize) -> RatMatrix {
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for b in 0..d {
            for k in 0..d {
                m.set(k, b, self.c[a][b][k].clone());
            }
        }
        m
    }

    /// `K(a, b) = tr(ad a · ad b)`.
    pub fn killing_form(&self) -> RatMatrix {
        let d = self.dim();
        let ads: Vec<RatMatrix> = (0..d).map(|a| self.ad(a)).collect();
        let mut k = RatMatrix::zeros(d, d);
        for a in 0..d {
            for b in 0..d {
                k.set(a, b, ads[a].mul(&ads[b]).trace());
            }
        }
        k
    }

    /// Basis (in coordinates) of `[g, g]`.
    pub fn derived(&self) -> Vec<Vec<Rational>> {
        let mut e = Echelon::new();
        let mut out = Vec::new();
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                if e.insert(&self.c[a][b]) {
                    out.push(self.c[a][b].clone());
                }
            }
        }
        out
    }

    /// Basis (in coordinates) of the center.
    pub fn center(&self) -> Vec<Vec<Rational>> {
        let d = self.dim();
        // x is central iff Σ_a x_a c[a][b] = 0 for every b.
        let mut rows = Vec::new();
        for b in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|a| self.c[a][b][k].clone()).collect());
            }
        }
        if rows.is_empty() {
            return Vec::new();
        }
        RatMatrix::from_rows(rows).nullspace()
    }

    /// Solvable radical `[g, g]^⊥` for the Killing form.
    pub fn radical(&self) -> Vec<Vec<Rational>> {
        let k = self.killing_form();
        let derived = self.derived();
        let d = self.dim();
        if derived.is_empty() {
            return (0..d)
                .map(|i| (0..d).map(|j| Rational::from_integer((i == j).into())).collect())
                .collect();
        }
        let rows: Vec<Vec<Rational>> = derived.iter().map(|y| k.mul_vec(y)).collect();
        RatMatrix::from_rows(rows).nullspace()
    }

    pub fn element(&self, coords: &[Rational]) -> RatMatrix {
        let n = self.basis[0].rows();
        coords
            .iter()
            .zip(&self.basis)
            .fold(RatMatrix::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)))
    }
}

/// Reductive iff the solvable radical equals the center.
pub fn is_reductive(g: &LieAlgebraMatrices) -> bool {
    g.radical().len() == g.center().len()
}

/// Minimal polynomial of a square matrix as a univariate polynomial.
pub fn minimal_polynomial(a: &RatMatrix) -> Polynomial {
    let n = a.rows();
    let mut powers = vec![RatMatrix::identity(n)];
    loop {
        let d = powers.len();
        let cols: Vec<Vec<Rational>> = powers.iter().map(RatMatrix::flatten).collect();
        let m = RatMatrix::from_columns(n * n, &cols);
        let next = powers[d - 1].mul(a);
        if let Some(x) = m.solve(&next.flatten()) {
            let mut p = Polynomial::monomial(Monomial::from_exponents(&[d as u32]));
            for (e, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    p.add_term(Monomial::from_exponents(&[e as u32]), -c.clone());
                }
            }
            return p;
        }
        powers.push(next);
    }
}

/// Diagonalizable over ℚ̄ iff the minimal polynomial is squarefree.
pub fn is_diagonalizable(a: &RatMatrix) -> bool {
    let m = minimal_polynomial(a);
    if m.is_constant() || m.total_degree() == Some(1) {
        return true;
    }
    gcd(&m, &m.derivative(0), &Budget::unlimited())
        .map(|g| g.is_constant())
        .unwrap_or(false)
}
