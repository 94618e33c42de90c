use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::lie::LieAlgebraMatrices;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, krull_dimension, Budget, ModuleElement, MonomialOrder};
use crate::linalg::RatMatrix;
use crate::logder::{as_matrices, weight_zero_part, SaitoBasis, StructureConstants, VectorField};
use crate::poly::{Polynomial, Rational};

/// Weight-zero part of the module for the standard grading.
pub fn linear_part(saito: &SaitoBasis) -> Result<Vec<VectorField>> {
    weight_zero_part(saito.fields(), &vec![1; saito.nvars()])
}

/// The weight-zero (linear) fields generate `Der(-log D)`.
pub fn is_linear(saito: &SaitoBasis, budget: &Budget) -> Result<bool> {
    let n = saito.nvars();
    let lin = linear_part(saito)?;
    if lin.len() < n {
        return Ok(false);
    }
    let e: Vec<ModuleElement> = lin.iter().map(VectorField::to_element).collect();
    let gb = buchberger(&e, &MonomialOrder::degrevlex(), budget)?;
    for d in saito.fields() {
        if !gb.normal_form_budgeted(&d.to_element(), budget)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Symbols `σ(δᵢ) = Σⱼ aᵢⱼ(x) ξⱼ` in `ℚ[x₁,…,xₙ,ξ₁,…,ξₙ]`.
pub fn symbols(saito: &SaitoBasis) -> Vec<Polynomial> {
    let n = saito.nvars();
    let embed: Vec<usize> = (0..n).collect();
    saito
        .fields()
        .iter()
        .map(|d| {
            let mut s = Polynomial::zero(2 * n);
            for (j, a) in d.coefficients().iter().enumerate() {
                let xi = Polynomial::var(2 * n, n + j);
                s = &s + &(&a.remap(&embed, 2 * n) * &xi);
            }
            s
        })
        .collect()
}

/// The symbols form a regular sequence, i.e. cut out a subvariety of
/// dimension `n` in the `2n`-dimensional cotangent space.
pub fn is_koszul(saito: &SaitoBasis, budget: &Budget) -> Result<bool> {
    let n = saito.nvars();
    Ok(krull_dimension(&symbols(saito), 2 * n, budget)? == n as i64)
}

/// Result of [`trace_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTest {
    pub passed: bool,
    pub witness: Option<(VectorField, Rational)>,
    /// Dimension of the weight-zero annihilator.
    pub dimension: usize,
}

/// Every linear field annihilating `f` is traceless; otherwise a witness
/// with its trace, preferring a diagonal field scaled to a primitive integral
/// one of positive trace.
pub fn trace_test(f: &Polynomial, ann: &[VectorField]) -> Result<TraceTest> {
    let n = f.nvars();
    let ann0 = weight_zero_part(ann, &vec![1; n])?;
    let mats = as_matrices(&ann0).ok_or(Error::InternalInconsistency("non-linear weight-zero field".into()))?;
    let d = mats.len();
    let trace_of = |c: &[Rational]| -> Rational {
        c.iter().zip(&mats).fold(Rational::zero(), |s, (x, m)| s + x * m.trace())
    };
    let combo = |c: &[Rational]| -> RatMatrix {
        c.iter()
            .zip(&mats)
            .fold(RatMatrix::zeros(n, n), |acc, (x, m)| acc.add(&m.scale(x)))
    };
    if d == 0 {
        return Ok(TraceTest {
            passed: true,
            witness: None,
            dimension: 0,
        });
    }
    // Diagonal subspace: off-diagonal entries vanish.
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                rows.push(mats.iter().map(|m| m.get(i, j).clone()).collect::<Vec<_>>());
            }
        }
    }
    let diag = if rows.iter().all(|r: &Vec<Rational>| r.iter().all(Zero::is_zero)) {
        (0..d)
            .map(|i| (0..d).map(|j| Rational::from_integer((i == j).into())).collect())
            .collect()
    } else {
        RatMatrix::from_rows(rows).nullspace()
    };
    let general: Vec<Vec<Rational>> = (0..d)
        .map(|i| (0..d).map(|j| Rational::from_integer((i == j).into())).collect())
        .collect();
    for candidates in [diag, general] {
        if let Some(c) = candidates.iter().find(|c| !trace_of(c).is_zero()) {
            let mut m = combo(c);
            let mut t = m.trace();
            let s = primitive_scale(&m);
            m = m.scale(&s);
            t *= &s;
            if t.is_negative() {
                m = m.scale(&Rational::from_integer((-1).into()));
                t = -t;
            }
            let field = VectorField::from_matrix(&m);
            debug_assert!(field.apply(f).is_zero());
            return Ok(TraceTest {
                passed: false,
                witness: Some((field, t)),
                dimension: d,
            });
        }
    }
    Ok(TraceTest {
        passed: true,
        witness: None,
        dimension: d,
    })
}

fn primitive_scale(m: &RatMatrix) -> Rational {
    let entries = m.flatten();
    let den = entries.iter().fold(BigInt::from(1), |l, c| l.lcm(c.denom()));
    let num = entries
        .iter()
        .fold(BigInt::zero(), |g, c| g.gcd(&(c.numer() * (&den / c.denom()))));
    if num.is_zero() {
        return Rational::from_integer(1.into());
    }
    Rational::new(den, num)
}

/// Matrix Lie algebra `𝔤_D` of the linear fields.
pub fn lie_algebra(saito: &SaitoBasis) -> Result<LieAlgebraMatrices> {
    let lin = linear_part(saito)?;
    let mats = as_matrices(&lin).ok_or(Error::NotLinear)?;
    LieAlgebraMatrices::new(mats)
}

/// The two connection conditions on the structure constants, with
/// `a_{kr}` component `r` of `δ_k`:
/// `Σₖ a_{kr} ∂_l b^i_{jk} = 0` and `δ_l(b^i_{jr}) = 0` for all indices.
pub fn connection_conditions(saito: &SaitoBasis, b: &StructureConstants) -> (bool, bool) {
    let n = saito.len();
    let mut first = true;
    let mut second = true;
    for i in 0..n {
        for j in 0..n {
            let bs: Vec<&Polynomial> = (0..n).map(|k| b.get(i, j, k)).collect();
            if bs.iter().all(|p| p.is_constant()) {
                continue;
            }
            for l in 0..n {
                let dl: Vec<Polynomial> = bs.iter().map(|p| p.derivative(l)).collect();
                for r in 0..n {
                    if first {
                        let mut s = Polynomial::zero(saito.nvars());
                        for (k, d) in dl.iter().enumerate() {
                            s = &s + &(saito.a(k, r) * d);
                        }
                        first = s.is_zero();
                    }
                    if second {
                        second = saito.field(l).apply(bs[r]).is_zero();
                    }
                }
            }
        }
    }
    (first, second)
}
