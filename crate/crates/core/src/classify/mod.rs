//! Free, linear, weighted homogeneous, Koszul and reductive divisors.

mod lie;
mod predicates;
mod profile;
mod weights;

pub use lie::{is_diagonalizable, is_reductive, minimal_polynomial, LieAlgebraMatrices};
pub use predicates::{
    connection_conditions, is_koszul, is_linear, lie_algebra, linear_part, symbols, trace_test, TraceTest,
};
pub use profile::{classify, ClassifyOptions, DivisorProfile};
pub use weights::detect_weights;
