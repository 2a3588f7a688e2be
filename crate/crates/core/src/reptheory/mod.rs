//! Radicals, Loewy filtrations, q-Cartan matrices and quivers of the
//! algebras built elsewhere in the crate.

mod cartan;
mod conjecture;
mod families;
mod loewy;
mod model;

pub use cartan::{
    corner_dims, parse_table, quiver, CartanMatrix, CornerDims, Orientation, Poly,
};
pub use conjecture::{conjecture_cartan, conjecture_matrix};
pub use loewy::{loewy, radical, LoewyFiltration};
pub use model::{apply, AlgebraModel, Vector};
pub use families::{
    bsym_cartan, bsym_model, cartan_data, check_system_in, peak_cartan, system_coordinates, type_a_cartan,
    type_a_model, CartanData, TABLE_ORIENTATION,
};
