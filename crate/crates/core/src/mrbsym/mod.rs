//! The free product MR = Sym ⋆ Sym, superization, BSym embedded in MR, Chow's
//! map and the idempotents derived from log σ_1^♯.

mod ano;
mod bsym;
mod chow;
mod sharp;

pub use ano::{ano_e, ano_tilde, eta, phi_sharp, AnoNormalization};
pub use bsym::{
    bsym_basis, bsym_closed_form, bsym_e, bsym_idempotents, bsym_labels, bsym_recursion,
    bsym_zeta_product, bsym_zetas, BsymSpace, BsymZetas,
};
pub use chow::{chow_theta, mu_prime};
pub use sharp::{
    lambda_bar, lambda_bar_series, sharp_word, sigma_sharp, sigma_sharp_n, superize,
    superize_direct,
};
