use std::collections::HashMap;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Square matrix of polynomials, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("empty matrix".into()));
        }
        let nvars = rows[0][0].nvars();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Shape(format!("row of length {} in {n}x{n} matrix", row.len())));
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(Error::RingMismatch {
                        left: nvars,
                        right: p.nvars(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { n, nvars, entries })
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<Polynomial>]) -> Result<Self> {
        let n = cols.len();
        let rows = (0..n)
            .map(|i| {
                cols.iter()
                    .map(|c| c.get(i).cloned().ok_or_else(|| Error::Shape("short column".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut entries = vec![Polynomial::zero(nvars); n * n];
        for i in 0..n {
            entries[i * n + i] = Polynomial::one(nvars);
        }
        PolyMatrix { n, nvars, entries }
    }

    pub fn diagonal(d: Vec<Polynomial>) -> Self {
        let n = d.len();
        let nvars = d[0].nvars();
        let mut entries = vec![Polynomial::zero(nvars); n * n];
        for (i, p) in d.into_iter().enumerate() {
            entries[i * n + i] = p;
        }
        PolyMatrix { n, nvars, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.n + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        PolyMatrix {
            n,
            nvars: self.nvars,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        PolyMatrix {
            n,
            nvars: self.nvars,
            entries,
        }
    }

    fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|p| !p.is_zero()).count()
    }

    fn constant_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|p| !p.is_zero() && p.is_constant())
            .count()
    }
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<&Polynomial>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Exact determinant.
///
/// Matrices with many constant entries go through fraction-free Bareiss
/// elimination; sparse symbolic ones through memoized cofactor expansion.
pub fn poly_det(m: &PolyMatrix) -> Polynomial {
    let n = m.size();
    let dense = m.nonzero_count() * 2 > n * n;
    if dense && m.constant_count() * 2 >= m.nonzero_count() {
        det_bareiss(m)
    } else {
        det_cofactor(m)
    }
}

/// Bareiss elimination with exact polynomial division.
pub fn det_bareiss(m: &PolyMatrix) -> Polynomial {
    let n = m.size();
    let nv = m.nvars();
    let mut a: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut prev = Polynomial::one(nv);
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            // Prefer a constant pivot, then the sparsest one.
            let pick = (k + 1..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| (!a[i][k].is_constant(), a[i][k].len()));
            match pick {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Polynomial::zero(nv),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero(nv);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Laplace expansion along rows, memoized on the set of remaining columns.
pub fn det_cofactor(m: &PolyMatrix) -> Polynomial {
    let n = m.size();
    assert!(n < 64);
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    minor(m, 0, (1u64 << n) - 1, &mut memo)
}

fn minor(m: &PolyMatrix, row: usize, cols: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    let n = m.size();
    if row == n {
        return Polynomial::one(m.nvars());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(m.nvars());
    let mut sign = false;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let e = m.get(row, j);
        if !e.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << j), memo);
            if !sub.is_zero() {
                let t = e * &sub;
                acc = if sign { &acc - &t } else { &acc + &t };
            }
        }
        sign = !sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn mat(r: &Ring, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|s| r.parse(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn diagonal_determinant() {
        let r = Ring::numbered(4);
        let d = PolyMatrix::diagonal((0..4).map(|i| Polynomial::var(4, i)).collect());
        assert_eq!(poly_det(&d), r.parse("x1*x2*x3*x4").unwrap());
    }

    #[test]
    fn plane_curve_saito_matrix() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let m = mat(&r, &[&["x", "0"], &["y", "x^2*y - y^3"]]);
        let f = r.parse("x^3*y - x*y^3").unwrap();
        assert_eq!(poly_det(&m), f);
        assert_eq!(det_bareiss(&m), f);
        assert_eq!(det_cofactor(&m), f);
    }

    #[test]
    fn identity_and_pivoting() {
        assert_eq!(poly_det(&PolyMatrix::identity(3, 2)), Polynomial::one(2));
        let r = Ring::new(&["x", "y"]).unwrap();
        let m = mat(&r, &[&["0", "1", "x"], &["1", "0", "y"], &["x", "y", "0"]]);
        let expect = r.parse("2*x*y").unwrap();
        assert_eq!(det_bareiss(&m), expect);
        assert_eq!(det_cofactor(&m), expect);
    }
}
