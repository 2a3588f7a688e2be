//! Higher-order peak algebras: θ_q, the elements T_m, level-r Zassenhaus
//! elements, the algebras 𝒫^(r)_n and their idempotents, and the r = 2
//! bridge to BSym.

mod model;
mod theta;
mod zeta_r;

pub use theta::{t_element, t_product, t_sign, theta, theta_internal, theta_s};
pub use zeta_r::{
    peak_closed_form, peak_idempotents, peak_recursion, solve_y, solve_y_series, solve_zeta_r,
    zeta_r_product,
};
pub use model::{build_peak_algebra, peak_generators, zeta_r_basis, PeakAlgebraModel};
