//! Buchberger engine for submodules of free modules over `ℚ[x₁,…,xₙ]`.

mod budget;
mod dimension;
mod element;
mod engine;
mod order;
mod quotient;
pub mod syzygies;

pub use budget::Budget;
pub use dimension::krull_dimension;
pub use element::ModuleElement;
pub use engine::{buchberger, ideal_basis, normal_form, GroebnerBasis};
pub use order::{ModuleConvention, MonomialOrder, TermOrder};
pub use quotient::{graded_quotient_basis, GradedQuotient};
pub use syzygies::{syzygies, SyzygyBasis};
