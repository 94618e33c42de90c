//! Logarithmic vector fields along a divisor `D = V(f)`.

mod derlog;
mod field;
mod saito;
mod structure;
mod weight;

pub use derlog::{annihilator_fields, compute_der_log, der_log_piece, is_logarithmic, monomial_fields};
pub use field::{lie_bracket, VectorField};
pub use saito::{find_saito_basis, saito_matrix, verify_saito, SaitoBasis, SaitoCheck};
pub use structure::{coordinates_in_basis, structure_constants, StructureConstants};
pub use weight::{as_matrices, euler_field, weight_piece, weight_zero_part};
