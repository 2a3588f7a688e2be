//! Noncommutative symmetric functions and the two-alphabet algebra MR in the
//! S basis, with the internal product, series calculus and the type A
//! idempotents.

mod elem;
mod factor;
mod idempotents;
mod pbasis;
mod ribbon;
mod series;
mod splitting;
mod word;
mod zeta;

pub use elem::{Elem, Tensor};
pub use factor::{evaluate, solve_factorization, DegreeFilter, Direction, Factor, Seq};
pub use idempotents::{
    check_system, gamma, idempotent_basis, type_a_closed_form, type_a_idempotents,
    type_a_recursion, System, SystemReport,
};
pub use pbasis::{left_apply, p_to_s, product_fast, s_to_p, PVec};
pub use ribbon::{complete_to_ribbon, ribbon_to_complete};
pub use series::{lambda_n, lambda_series, phi_n, Series};
pub use splitting::{internal_product, internal_product_basis};
pub use word::{Letter, Word};
pub use zeta::{zassenhaus, zeta_products};

use crate::exactmath::MathError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("series has the wrong constant term")]
    BadConstantTerm,
    #[error("element is not a member of {0}")]
    NotMember(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
}
