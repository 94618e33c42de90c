use num_integer::Integer;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Positive integral weights `a₁,…,aₙ` together with the weighted degree `k`
/// of the attached polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<i64>,
    degree: i64,
}

impl WeightSystem {
    /// Weights are divided by their gcd with `degree`; if the reduced form
    /// has a larger content only the common factor of all entries is removed.
    pub fn new(weights: Vec<i64>, degree: i64) -> Result<Self> {
        if weights.iter().any(|&a| a < 1) {
            return Err(Error::NonPositiveWeights);
        }
        let g = weights.iter().fold(degree.abs(), |g, &a| g.gcd(&a));
        let g = g.max(1);
        Ok(WeightSystem {
            weights: weights.iter().map(|a| a / g).collect(),
            degree: degree / g,
        })
    }

    /// Standard grading, every variable of weight 1.
    pub fn standard(n: usize, degree: i64) -> Self {
        WeightSystem {
            weights: vec![1; n],
            degree,
        }
    }

    /// Weights for `f`, with the degree read off from `f`.
    pub fn for_polynomial(weights: Vec<i64>, f: &Polynomial) -> Result<Self> {
        if weights.iter().any(|&a| a < 1) {
            return Err(Error::NonPositiveWeights);
        }
        if weights.len() != f.nvars() {
            return Err(Error::Shape(format!(
                "{} weights for {} variables",
                weights.len(),
                f.nvars()
            )));
        }
        let k = weighted_degree(f, &weights)?;
        Self::new(weights, k)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&a| a == 1)
    }
}

/// The common weighted degree of all terms of `p`.
pub fn weighted_degree(p: &Polynomial, weights: &[i64]) -> Result<i64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degrees = p.weighted_degrees(weights);
    if degrees.len() == 1 {
        Ok(degrees[0])
    } else {
        Err(Error::NotHomogeneous { degrees })
    }
}

/// `true` if `p` is zero or weighted homogeneous.
pub fn is_weighted_homogeneous(p: &Polynomial, weights: &[i64]) -> bool {
    p.weighted_degrees(weights).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn degrees_of_examples() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = r.parse("x^5 + y^4").unwrap();
        assert_eq!(weighted_degree(&f, &[4, 5]), Ok(20));
        let g = r.parse("x^3*y - x*y^3").unwrap();
        assert_eq!(weighted_degree(&g, &[1, 1]), Ok(4));
        let h = r.parse("x^2 + y^3").unwrap();
        assert_eq!(
            weighted_degree(&h, &[1, 1]),
            Err(Error::NotHomogeneous { degrees: vec![2, 3] })
        );
        assert_eq!(
            weighted_degree(&Polynomial::zero(2), &[1, 1]),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn weight_system_is_reduced() {
        let w = WeightSystem::new(vec![2, 4], 8).unwrap();
        assert_eq!(w.weights(), &[1, 2]);
        assert_eq!(w.degree(), 4);
        assert!(WeightSystem::new(vec![0, 1], 1).is_err());
    }
}
