//! The algebras whose Cartan data is computed: Sym_n, BSym_n and 𝒫^(r)_n.

use crate::combitypes::{b_compositions, compositions, HeadedPartition};
use crate::exactmath::Rational;
use crate::mrbsym::{bsym_basis, bsym_idempotents, bsym_zeta_product};
use crate::peakcore::{build_peak_algebra, peak_idempotents, PeakAlgebraModel};
use crate::symcore::{
    s_to_p, type_a_idempotents, zeta_products, AlgebraError, Elem, PVec, System, SystemReport, Word,
};

use super::cartan::{corner_dims, CartanMatrix, CornerDims, Orientation};
use super::loewy::{loewy, radical, LoewyFiltration};
use super::model::{apply, AlgebraModel, Vector};

/// Orientation of the published tables: row = left idempotent.
pub const TABLE_ORIENTATION: Orientation = Orientation::LeftRow;

/// Everything computed for one algebra.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub model: AlgebraModel,
    pub radical_dim: usize,
    pub filtration: LoewyFiltration,
    pub corners: CornerDims,
}

impl CartanData {
    pub fn matrix(&self) -> CartanMatrix {
        self.corners.matrix(TABLE_ORIENTATION)
    }
}

/// Coordinates of a system in `model`, failing if an element lies outside.
pub fn system_coordinates(
    model: &AlgebraModel,
    sys: &System<Rational>,
) -> Result<Vec<(HeadedPartition, Vector)>, AlgebraError> {
    sys.iter()
        .map(|(l, e)| Ok((l.clone(), model.coordinates(e)?)))
        .collect()
}

/// [`check_system`](crate::symcore::check_system) carried out on model
/// coordinates; fails if an element lies outside the model.
pub fn check_system_in(model: &AlgebraModel, sys: &System<Rational>) -> Result<SystemReport, AlgebraError> {
    let coords = system_coordinates(model, sys)?;
    let unit = model.coordinates(&Elem::s(model.n()))?;
    let mut rep = SystemReport {
        idempotent: true,
        orthogonal: true,
        complete: true,
    };
    let mut sum = vec![Rational::zero(); model.dim()];
    for (a, (_, x)) in coords.iter().enumerate() {
        for (s, v) in sum.iter_mut().zip(x) {
            *s += v;
        }
        let left = model.left_matrix(x);
        for (b, (_, y)) in coords.iter().enumerate() {
            let p = apply(&left, y);
            if a == b {
                rep.idempotent &= p == *x;
            } else {
                rep.orthogonal &= p.iter().all(Rational::is_zero);
            }
        }
    }
    rep.complete = sum == unit;
    Ok(rep)
}

/// Radical, Loewy filtration and corner dimensions for `sys` in `model`.
pub fn cartan_data(model: AlgebraModel, sys: &System<Rational>) -> Result<CartanData, AlgebraError> {
    let coords = system_coordinates(&model, sys)?;
    let rad = radical(&model);
    let filtration = loewy(&model, &rad);
    let corners = corner_dims(&model, &coords, &filtration);
    Ok(CartanData {
        radical_dim: rad.len(),
        model,
        filtration,
        corners,
    })
}

/// Sym_n with S^I on the left and ζ-products on the right.
pub fn type_a_model(n: usize) -> Result<AlgebraModel, AlgebraError> {
    let comps = compositions(n);
    let left: Vec<Elem<Rational>> = comps.iter().map(|c| Elem::s_word(c.parts())).collect();
    let right = comps
        .iter()
        .map(|c| {
            let w = Word::from(c);
            let mut p = PVec::new();
            p.insert(w.clone(), Rational::one());
            (zeta_products(&w), p)
        })
        .collect();
    AlgebraModel::new(n, &left, right)
}

pub fn type_a_cartan(n: usize) -> Result<CartanData, AlgebraError> {
    cartan_data(type_a_model(n)?, &type_a_idempotents(n)?)
}

/// BSym_n inside MR_n, with S̃^I on the left and ζ̃ζ-products on the right.
pub fn bsym_model(n: usize) -> Result<AlgebraModel, AlgebraError> {
    let comps = b_compositions(n);
    let left: Vec<Elem<Rational>> = comps.iter().map(bsym_basis).collect();
    let right = comps
        .iter()
        .map(|c| {
            let e = bsym_zeta_product(c);
            let p = s_to_p(&e);
            (e, p)
        })
        .collect();
    AlgebraModel::new(n, &left, right)
}

pub fn bsym_cartan(n: usize) -> Result<CartanData, AlgebraError> {
    cartan_data(bsym_model(n)?, &bsym_idempotents(n)?)
}

pub fn peak_cartan(n: usize, r: usize) -> Result<(PeakAlgebraModel, CartanData), AlgebraError> {
    let pm = build_peak_algebra(n, r)?;
    let data = cartan_data(pm.model.clone(), &peak_idempotents(n, r)?)?;
    Ok((pm, data))
}
