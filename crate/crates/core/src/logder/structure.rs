use super::field::{lie_bracket, VectorField};
use super::saito::SaitoBasis;
use crate::error::{Error, Result};
use crate::poly::{poly_det, PolyMatrix, Polynomial};

/// `b[i][j][k]` with `[δᵢ, δⱼ] = Σₖ b^i_{jk} δₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    b: Vec<Vec<Vec<Polynomial>>>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.b[i][j][k]
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn all_constant(&self) -> bool {
        self.b.iter().flatten().flatten().all(Polynomial::is_constant)
    }

    pub fn all_zero(&self) -> bool {
        self.b.iter().flatten().flatten().all(Polynomial::is_zero)
    }

    /// `Σₖ b^i_{jk} δₖ`.
    pub fn expand(&self, basis: &SaitoBasis, i: usize, j: usize) -> VectorField {
        let n = basis.nvars();
        let mut acc = VectorField::zero(n);
        for k in 0..self.n() {
            let c = &self.b[i][j][k];
            if !c.is_zero() {
                acc = acc.add(&basis.field(k).mul_poly(c));
            }
        }
        acc
    }
}

/// Coefficients of the field `v` in the basis, by Cramer's rule.
///
/// Fails with `InternalInconsistency` when a coefficient is not a polynomial
/// or the reconstruction differs from `v`.
pub fn coordinates_in_basis(basis: &SaitoBasis, v: &VectorField) -> Result<Vec<Polynomial>> {
    let n = basis.len();
    let det = basis.divisor() * basis.unit();
    let cols: Vec<Vec<Polynomial>> = basis.fields().iter().map(|d| d.coefficients().to_vec()).collect();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if v.is_zero() {
            out.push(Polynomial::zero(basis.nvars()));
            continue;
        }
        let mut c = cols.clone();
        c[k] = v.coefficients().to_vec();
        let num = poly_det(&PolyMatrix::from_columns(&c)?);
        let q = num.div_exact(&det).ok_or_else(|| {
            Error::InternalInconsistency(format!("coefficient {} is not polynomial", k + 1))
        })?;
        out.push(q);
    }
    let mut back = VectorField::zero(basis.nvars());
    for (c, d) in out.iter().zip(basis.fields()) {
        back = back.add(&d.mul_poly(c));
    }
    if &back != v {
        return Err(Error::InternalInconsistency("basis expansion does not reproduce the field".into()));
    }
    Ok(out)
}

/// Structure constants of a verified Saito basis.
pub fn structure_constants(basis: &SaitoBasis) -> Result<StructureConstants> {
    let n = basis.len();
    let zero = vec![vec![Polynomial::zero(basis.nvars()); n]; n];
    let mut b = vec![zero; n];
    for i in 0..n {
        for j in i + 1..n {
            let br = lie_bracket(basis.field(i), basis.field(j));
            let c = coordinates_in_basis(basis, &br)?;
            for k in 0..n {
                b[j][i][k] = -&c[k];
                b[i][j][k] = c[k].clone();
            }
        }
    }
    Ok(StructureConstants { b })
}
