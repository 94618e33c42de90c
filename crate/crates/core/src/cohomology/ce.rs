use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, RatMatrix};
use crate::logder::VectorField;
use crate::poly::Rational;

/// Matrix of the field bracket `[δ_A, δ_B] = δ_{BA−AB}`.
fn field_bracket(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    b.mul(a).sub(&a.mul(b))
}

/// The Chevalley–Eilenberg complex of a Lie algebra `𝔤 ⊂ 𝔤𝔩ₙ` of linear
/// fields with coefficients in `V = 𝔤𝔩ₙ/𝔤`, acting by `σ ↦ [δ, σ]`.
#[derive(Clone, Debug)]
pub struct LinearComplex {
    n: usize,
    algebra: Vec<RatMatrix>,
    /// `[δₐ, δ_b] = Σₖ c[a][b][k] δₖ`.
    constants: Vec<Vec<Vec<Rational>>>,
    /// Matrix units `E_{ij}` spanning a complement of `𝔤`.
    complement: Vec<(usize, usize)>,
    /// Inverse of the matrix with columns `[𝔤 basis | complement units]`.
    inverse: RatMatrix,
    action: Vec<RatMatrix>,
}

impl LinearComplex {
    /// `algebra`: the matrices `M(δᵢ)` of a basis of `Der(-log D)₀`.
    pub fn new(algebra: Vec<RatMatrix>) -> Result<Self> {
        let dim = algebra.len();
        let Some(n) = algebra.first().map(RatMatrix::rows) else {
            return Err(Error::Precondition("empty Lie algebra".into()));
        };
        let mut ech = Echelon::new();
        for g in &algebra {
            if !ech.insert(&g.flatten()) {
                return Err(Error::Precondition("Lie algebra basis is dependent".into()));
            }
        }
        let mut complement = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if ech.insert(&unit(n, i, j).flatten()) {
                    complement.push((i, j));
                }
            }
        }
        let mut cols: Vec<Vec<Rational>> = algebra.iter().map(RatMatrix::flatten).collect();
        cols.extend(complement.iter().map(|&(i, j)| unit(n, i, j).flatten()));
        let square = RatMatrix::from_columns(n * n, &cols);
        let mut inv_cols = Vec::with_capacity(n * n);
        for e in 0..n * n {
            let mut v = vec![Rational::zero(); n * n];
            v[e] = Rational::from_integer(1.into());
            inv_cols.push(square.solve(&v).expect("invertible"));
        }
        let inverse = RatMatrix::from_columns(n * n, &inv_cols);
        let mut lc = LinearComplex {
            n,
            algebra,
            constants: Vec::new(),
            complement,
            inverse,
            action: Vec::new(),
        };
        let mut constants = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let (g, v) = lc.split(&field_bracket(&lc.algebra[a], &lc.algebra[b]));
                if v.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Precondition("not closed under brackets".into()));
                }
                constants[a][b] = g;
            }
        }
        lc.constants = constants;
        let action = (0..dim)
            .map(|a| {
                let cols: Vec<Vec<Rational>> = (0..lc.complement.len())
                    .map(|u| {
                        let (i, j) = lc.complement[u];
                        lc.split(&field_bracket(&lc.algebra[a], &unit(n, i, j))).1
                    })
                    .collect();
                RatMatrix::from_columns(lc.complement.len(), &cols)
            })
            .collect();
        lc.action = action;
        Ok(lc)
    }

    /// Coordinates of `X` in `𝔤` and in `V`.
    fn split(&self, x: &RatMatrix) -> (Vec<Rational>, Vec<Rational>) {
        let mut c = self.inverse.mul_vec(&x.flatten());
        let v = c.split_off(self.algebra.len());
        (c, v)
    }

    pub fn dim_algebra(&self) -> usize {
        self.algebra.len()
    }

    pub fn dim_module(&self) -> usize {
        self.complement.len()
    }

    /// `dim Cᵖ = C(dim 𝔤, p)·dim V`.
    pub fn cochain_dim(&self, p: usize) -> usize {
        subsets(self.dim_algebra(), p).len() * self.dim_module()
    }

    /// Matrix of `dᵖ: Cᵖ → Cᵖ⁺¹` with
    /// `dψ(x₀,…,x_p) = Σₛ (−1)ˢ xₛ·ψ(…x̂ₛ…) + Σ_{s<t} (−1)^{s+t} ψ([xₛ,x_t],…x̂ₛ…x̂_t…)`.
    pub fn differential(&self, p: usize) -> RatMatrix {
        let dim = self.dim_algebra();
        let m = self.dim_module();
        let src = subsets(dim, p);
        let dst = subsets(dim, p + 1);
        let mut d = RatMatrix::zeros(dst.len() * m, src.len() * m);
        let index = |s: &[usize], list: &[Vec<usize>]| list.binary_search_by(|x| x.as_slice().cmp(s)).ok();
        for (ti, t) in dst.iter().enumerate() {
            for s in 0..t.len() {
                let mut rest = t.clone();
                let x = rest.remove(s);
                let si = index(&rest, &src).expect("subset");
                let sign = if s % 2 == 0 { 1 } else { -1 };
                let rho = &self.action[x];
                for r in 0..m {
                    for c in 0..m {
                        let v = rho.get(r, c);
                        if !v.is_zero() {
                            add(&mut d, ti * m + r, si * m + c, &(v * Rational::from_integer(sign.into())));
                        }
                    }
                }
            }
            for s in 0..t.len() {
                for u in s + 1..t.len() {
                    let rest: Vec<usize> = t
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != s && i != u)
                        .map(|(_, &v)| v)
                        .collect();
                    let sign = if (s + u) % 2 == 0 { 1 } else { -1 };
                    for (k, c) in self.constants[t[s]][t[u]].iter().enumerate() {
                        if c.is_zero() || rest.contains(&k) {
                            continue;
                        }
                        let pos = rest.iter().filter(|&&r| r < k).count();
                        let mut full = rest.clone();
                        full.insert(pos, k);
                        let si = index(&full, &src).expect("subset");
                        let sg = if (pos % 2 == 0) == (sign == 1) { 1 } else { -1 };
                        let coef = c * Rational::from_integer(sg.into());
                        for r in 0..m {
                            add(&mut d, ti * m + r, si * m + r, &coef);
                        }
                    }
                }
            }
        }
        d
    }

    /// `dim Hᵖ` for `p = 0, …, dim 𝔤`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let dim = self.dim_algebra();
        let ranks: Vec<usize> = (0..dim).map(|p| self.differential(p).rank()).collect();
        (0..=dim)
            .map(|p| {
                let out = if p < dim { ranks[p] } else { 0 };
                let inc = if p > 0 { ranks[p - 1] } else { 0 };
                self.cochain_dim(p) - out - inc
            })
            .collect()
    }

    /// Cocycles in `C¹` completing `im d⁰` to a basis of `ker d¹`.
    pub fn h1_basis(&self) -> Vec<Vec<Rational>> {
        let d0 = self.differential(0);
        let d1 = self.differential(1);
        let mut ech = Echelon::new();
        for c in 0..d0.cols() {
            ech.insert(&d0.column(c));
        }
        d1.nullspace().into_iter().filter(|z| ech.insert(z)).collect()
    }

    /// Lifts `ψ(δᵢ)` of a 1-cochain as linear fields.
    pub fn lifts(&self, coords: &[Rational]) -> Vec<VectorField> {
        let m = self.dim_module();
        (0..self.dim_algebra())
            .map(|i| VectorField::from_matrix(&self.module_matrix(&coords[i * m..(i + 1) * m])))
            .collect()
    }

    fn module_matrix(&self, v: &[Rational]) -> RatMatrix {
        let mut x = RatMatrix::zeros(self.n, self.n);
        for (c, &(i, j)) in v.iter().zip(&self.complement) {
            x.set(i, j, c.clone());
        }
        x
    }

    /// Coordinates in `V` of a linear field.
    pub fn module_coordinates(&self, v: &VectorField) -> Result<Vec<Rational>> {
        let m = v.linear_matrix().ok_or(Error::NotLinear)?;
        Ok(self.split(&m).1)
    }

    /// The representative of the class of `v` supported on the complement.
    pub fn reduce(&self, v: &VectorField) -> Result<VectorField> {
        Ok(VectorField::from_matrix(&self.module_matrix(&self.module_coordinates(v)?)))
    }
}

fn unit(n: usize, i: usize, j: usize) -> RatMatrix {
    let mut e = RatMatrix::zeros(n, n);
    e.set(i, j, Rational::from_integer(1.into()));
    e
}

fn add(d: &mut RatMatrix, r: usize, c: usize, v: &Rational) {
    let s = d.get(r, c) + v;
    d.set(r, c, s);
}

/// Increasing `p`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    go(0, n, p, &mut cur, &mut out);
    out
}
