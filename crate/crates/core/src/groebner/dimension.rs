use super::budget::Budget;
use super::engine::ideal_basis;
use super::order::MonomialOrder;
use crate::error::Result;
use crate::poly::Polynomial;

/// Krull dimension of `ℚ[x]/I`, read off the initial ideal as the largest
/// set of variables containing the support of no leading monomial.
/// The unit ideal has dimension `-1`.
pub fn krull_dimension(gens: &[Polynomial], nvars: usize, budget: &Budget) -> Result<i64> {
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(nvars as i64);
    }
    let gb = ideal_basis(&nonzero, &MonomialOrder::degrevlex(), budget)?;
    let supports: Vec<u64> = gb
        .leading_terms()
        .into_iter()
        .map(|(_, m)| m.support().fold(0u64, |s, i| s | (1 << i)))
        .collect();
    if supports.contains(&0) {
        return Ok(-1);
    }
    assert!(nvars < 64);
    Ok(max_independent(&supports, nvars) as i64)
}

/// Largest `S ⊆ {0..n}` with no support contained in `S`.
fn max_independent(supports: &[u64], n: usize) -> u32 {
    let mut best = 0;
    fn rec(i: usize, n: usize, set: u64, supports: &[u64], best: &mut u32) {
        if (set.count_ones() + (n - i) as u32) <= *best {
            return;
        }
        if i == n {
            *best = set.count_ones();
            return;
        }
        let with = set | (1 << i);
        if supports.iter().all(|&s| s & !with != 0) {
            rec(i + 1, n, with, supports, best);
        }
        rec(i + 1, n, set, supports, best);
    }
    rec(0, n, 0, supports, &mut best);
    best
}
