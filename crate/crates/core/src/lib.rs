//! Logarithmic vector fields, classification and first-order deformation
//! spaces of free divisors, computed exactly over ℚ.

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod cohomology;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod logder;
pub mod poly;
pub mod reduce;

pub use error::{Error, Result};
pub use groebner::{Budget, GroebnerBasis, ModuleElement, MonomialOrder};
pub use linalg::RatMatrix;
pub use logder::{SaitoBasis, StructureConstants, VectorField};
pub use poly::{poly_det, Monomial, PolyMatrix, Polynomial, Rational, Ring, WeightSystem};
