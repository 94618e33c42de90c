//! Exact sparse multivariate polynomials over ℚ.

mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod squarefree;
mod weights;

pub use matrix::{det_bareiss, det_cofactor, poly_det, PolyMatrix};
pub use monomial::{cmp_degrevlex, monomials_of_weight, Monomial};
pub use parse::{ParseError, Ring};
pub use polynomial::Polynomial;
pub use squarefree::{gcd, is_squarefree};
pub use weights::{is_weighted_homogeneous, weighted_degree, WeightSystem};

pub type Rational = num_rational::BigRational;

/// `n/1` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `p/q` as a rational.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
