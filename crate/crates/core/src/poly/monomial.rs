use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector `x^α` of fixed length `n`.
///
/// The derived `Ord` is degrevlex with `x_1 > x_2 > ... > x_n`, which is the
/// storage order of [`Polynomial`](super::Polynomial).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// `Σ wᵢαᵢ`.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True iff `self | other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, provided `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Lowers exponent `i` by one; `None` if it is already zero.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    pub fn raise(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Reindexes into a ring of `nvars` variables; `map[i]` is the new index
    /// of the current variable `i`.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            m.exps[map[i]] += e;
        }
        m
    }
}

/// Degrevlex comparison, `x_1 > ... > x_n`.
pub fn cmp_degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_degrevlex(&self.exps, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.exps.as_slice())
    }
}

/// All monomials in `nvars` variables with `Σ wᵢαᵢ = target`, in ascending
/// degrevlex order. Requires positive weights.
pub fn monomials_of_weight(weights: &[i64], target: i64) -> Vec<Monomial> {
    let n = weights.len();
    let mut out = Vec::new();
    if target < 0 {
        return out;
    }
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: i64, w: &[i64], exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let mut e = 0;
        while e as i64 * w[i] <= left {
            exps[i] = e;
            rec(i + 1, left - e as i64 * w[i], w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
    if n == 0 {
        if target == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    debug_assert!(weights.iter().all(|&w| w > 0));
    rec(0, target, weights, &mut exps, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let x = Monomial::from_exponents(&[1, 0, 0]);
        let y = Monomial::from_exponents(&[0, 1, 0]);
        let z = Monomial::from_exponents(&[0, 0, 1]);
        assert!(x > y && y > z);
        // x*z < y^2 in degrevlex
        let xz = Monomial::from_exponents(&[1, 0, 1]);
        let yy = Monomial::from_exponents(&[0, 2, 0]);
        assert!(xz < yy);
        assert!(Monomial::from_exponents(&[0, 0, 2]) > x);
    }

    #[test]
    fn weight_enumeration_counts() {
        // weights (4,5), weight 20: x^5, y^4
        assert_eq!(monomials_of_weight(&[4, 5], 20).len(), 2);
        // standard grading degree 4 in two variables: 5 monomials
        assert_eq!(monomials_of_weight(&[1, 1], 4).len(), 5);
        assert!(monomials_of_weight(&[1, 1], -1).is_empty());
    }
}
