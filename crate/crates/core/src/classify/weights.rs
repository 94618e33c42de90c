use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg::RatMatrix;
use crate::poly::{rat, weighted_degree, Polynomial, Rational, WeightSystem};

const ENUMERATION_LIMIT: usize = 200_000;

/// Minimal positive integral weights making `f` weighted homogeneous.
///
/// Weights solve `(αⱼ − α₀)·a = 0` over the exponent vectors of `f`.
/// Variables absent from `f` get weight 1. A one-dimensional solution space
/// gives its primitive positive generator; otherwise positive vectors are
/// enumerated by increasing sum and the lexicographically first is taken.
pub fn detect_weights(f: &Polynomial) -> Option<WeightSystem> {
    if f.is_zero() {
        return None;
    }
    let n = f.nvars();
    let used = f.used_variables();
    let present: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
    let m = present.len();
    let exps: Vec<Vec<i64>> = f
        .terms()
        .map(|(mono, _)| present.iter().map(|&i| mono.exponent(i) as i64).collect())
        .collect();
    let diffs: Vec<Vec<Rational>> = exps[1..]
        .iter()
        .map(|e| e.iter().zip(&exps[0]).map(|(a, b)| rat(a - b)).collect())
        .collect();
    let null = if diffs.is_empty() || m == 0 {
        (0..m)
            .map(|i| (0..m).map(|j| rat((i == j) as i64)).collect())
            .collect()
    } else {
        RatMatrix::from_rows(diffs.clone()).nullspace()
    };
    let sub = match null.len() {
        0 => return None,
        1 => primitive_positive(&null[0])?,
        _ => smallest_positive(&diffs, m)?,
    };
    let mut weights = vec![1i64; n];
    for (k, &i) in present.iter().enumerate() {
        weights[i] = sub[k];
    }
    let k = weighted_degree(f, &weights).ok()?;
    WeightSystem::new(weights, k).ok()
}

fn primitive_positive(v: &[Rational]) -> Option<Vec<i64>> {
    let den = v.iter().fold(BigInt::from(1), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
    if ints.iter().all(|c| c.is_negative()) {
        ints = ints.into_iter().map(|c| -c).collect();
    }
    if !ints.iter().all(|c| c.is_positive()) {
        return None;
    }
    ints.iter().map(|c| i64::try_from(c).ok()).collect()
}

fn smallest_positive(diffs: &[Vec<Rational>], m: usize) -> Option<Vec<i64>> {
    let ok = |a: &[i64]| {
        diffs.iter().all(|d| {
            d.iter()
                .zip(a)
                .fold(Rational::zero(), |s, (x, &y)| s + x * rat(y))
                .is_zero()
        })
    };
    let cap = 12 * m as i64 + 12;
    let mut visited = 0usize;
    let mut a = vec![0i64; m];
    for s in m as i64..=cap {
        if let Some(v) = first_composition(&mut a, 0, s, &ok, &mut visited) {
            return Some(v);
        }
        if visited > ENUMERATION_LIMIT {
            return None;
        }
    }
    None
}

/// Lexicographically first composition of `left` into the remaining slots
/// accepted by `ok`.
fn first_composition(
    a: &mut Vec<i64>,
    i: usize,
    left: i64,
    ok: &dyn Fn(&[i64]) -> bool,
    visited: &mut usize,
) -> Option<Vec<i64>> {
    let m = a.len();
    if i == m - 1 {
        a[i] = left;
        *visited += 1;
        return ok(a).then(|| a.clone());
    }
    let slots = (m - i - 1) as i64;
    for v in 1..=left - slots {
        if *visited > ENUMERATION_LIMIT {
            return None;
        }
        a[i] = v;
        if let Some(r) = first_composition(a, i + 1, left - v, ok, visited) {
            return Some(r);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn detect(names: &[&str], f: &str) -> Option<(Vec<i64>, i64)> {
        let r = Ring::new(names).unwrap();
        detect_weights(&r.parse(f).unwrap()).map(|w| (w.weights().to_vec(), w.degree()))
    }

    #[test]
    fn examples() {
        assert_eq!(detect(&["x", "y"], "x^5 + y^4"), Some((vec![4, 5], 20)));
        assert_eq!(detect(&["x", "y"], "x^3*y - x*y^3"), Some((vec![1, 1], 4)));
        assert_eq!(detect(&["x", "y"], "x^3 + y^3 + x*y"), None);
        assert_eq!(detect(&["x", "y", "z"], "x*y*z"), Some((vec![1, 1, 1], 3)));
        assert_eq!(detect(&["x", "y", "z"], "x*y*(x+y)*(y+x*z)"), None);
        assert_eq!(detect(&["x", "y", "z"], "x^2 + y^3"), Some((vec![3, 2, 1], 6)));
        assert_eq!(
            detect(&["x", "y", "z"], "4*x^3*y^2 - 16*x^4*z + 27*y^4 - 144*x*y^2*z + 128*x^2*z^2 - 256*z^3"),
            Some((vec![2, 3, 4], 12))
        );
    }
}
