//! A finite-dimensional ∗-subalgebra of Sym_n or MR_n held through its
//! structure constants.
//!
//! Two bases of the same space are supplied: a "left" one that is sparse on
//! the S basis and a "right" one that is sparse on the P basis. Products
//! L_k ∗ Z_j are cheap through [`left_apply`]; everything is then expressed
//! on the right basis Z, which is the model's coordinate system.

use std::collections::HashMap;

use crate::combitypes::{compositions, signed_compositions};
use crate::exactmath::{Echelon, Rational};
use crate::symcore::{left_apply, s_to_p, AlgebraError, Elem, PVec, Word};

pub type Vector = Vec<Rational>;

#[derive(Clone, Debug)]
pub struct AlgebraModel {
    n: usize,
    /// Right basis on S.
    basis: Vec<Elem<Rational>>,
    p_index: HashMap<Word, usize>,
    p_ech: Echelon<Rational>,
    /// table[i][j] = coordinates of Z_i ∗ Z_j.
    table: Vec<Vec<Vector>>,
}

fn ambient_words(n: usize, signed: bool) -> Vec<Word> {
    if signed {
        signed_compositions(n).iter().map(Word::from).collect()
    } else {
        compositions(n).iter().map(Word::from).collect()
    }
}

fn dense_p(p: &PVec, index: &HashMap<Word, usize>) -> Vector {
    let mut v = vec![Rational::zero(); index.len()];
    for (w, c) in p {
        v[index[w]] = c.clone();
    }
    v
}

impl AlgebraModel {
    /// `left` on the S basis, `right` as (S form, P form) pairs. Both must be
    /// bases of the same subspace, closed under ∗.
    pub fn new(
        n: usize,
        left: &[Elem<Rational>],
        right: Vec<(Elem<Rational>, PVec)>,
    ) -> Result<Self, AlgebraError> {
        let d = right.len();
        if left.len() != d {
            return Err(AlgebraError::Consistency(format!(
                "bases of sizes {} and {d}",
                left.len()
            )));
        }
        let signed = right.iter().any(|(e, _)| e.has_bar()) || left.iter().any(|e| e.has_bar());
        let words = ambient_words(n, signed);
        let p_index: HashMap<Word, usize> =
            words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let s_index = &p_index;

        let mut p_ech = Echelon::tracking(words.len());
        let mut s_ech = Echelon::tracking(words.len());
        for (e, p) in &right {
            if !p_ech.insert(dense_p(p, &p_index)) {
                return Err(AlgebraError::Consistency("right basis dependent".into()));
            }
            if !s_ech.insert(e.to_dense(s_index, words.len())) {
                return Err(AlgebraError::Consistency("right basis dependent".into()));
            }
        }
        // m[k] = coordinates of L_k on Z.
        let mut m = Vec::with_capacity(d);
        for l in left {
            let c = s_ech
                .coordinates(&l.to_dense(s_index, words.len()))?
                .ok_or_else(|| AlgebraError::NotMember("left basis outside the span".into()))?;
            m.push(c);
        }
        // t1[k][j] = coordinates of L_k ∗ Z_j. The operator of L_k is built
        // once, column by column on the P words met in the right basis.
        let mut support: Vec<&Word> = right.iter().flat_map(|(_, p)| p.keys()).collect();
        support.sort();
        support.dedup();
        let mut t1: Vec<Vec<Vector>> = Vec::with_capacity(d);
        for l in left {
            let cols: HashMap<&Word, Vec<(usize, Rational)>> = support
                .iter()
                .map(|&w| {
                    let unit: PVec = [(w.clone(), Rational::one())].into_iter().collect();
                    let col = left_apply(l, &unit)
                        .into_iter()
                        .map(|(u, c)| (p_index[&u], c))
                        .collect();
                    (w, col)
                })
                .collect();
            let mut row = Vec::with_capacity(d);
            for (_, zp) in &right {
                let mut prod = vec![Rational::zero(); words.len()];
                for (w, y) in zp {
                    for (i, c) in &cols[w] {
                        prod[*i].add_mul(y, c);
                    }
                }
                let c = p_ech
                    .coordinates(&prod)?
                    .ok_or_else(|| AlgebraError::NotMember("not closed under ∗".into()))?;
                row.push(c);
            }
            t1.push(row);
        }
        // Z_i = Σ_k minv[i][k] L_k, from inverting m.
        let minv = invert(&m)?;
        let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
        for (i, row) in minv.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..d {
                    axpy(&mut table[i][j], c, &t1[k][j]);
                }
            }
        }
        Ok(AlgebraModel {
            n,
            basis: right.into_iter().map(|(e, _)| e).collect(),
            p_index,
            p_ech,
            table,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Elem<Rational>] {
        &self.basis
    }

    /// Coordinates of `f` (on S) in the model, or an error if outside.
    pub fn coordinates(&self, f: &Elem<Rational>) -> Result<Vector, AlgebraError> {
        let p = s_to_p(f);
        if p.keys().any(|w| !self.p_index.contains_key(w)) {
            return Err(AlgebraError::NotMember("model".into()));
        }
        self.p_ech
            .coordinates(&dense_p(&p, &self.p_index))?
            .ok_or_else(|| AlgebraError::NotMember("model".into()))
    }

    pub fn contains(&self, f: &Elem<Rational>) -> bool {
        self.coordinates(f).is_ok()
    }

    /// The element with coordinates `x`.
    pub fn element(&self, x: &[Rational]) -> Elem<Rational> {
        let mut e = Elem::zero(self.n);
        for (b, c) in self.basis.iter().zip(x) {
            if !c.is_zero() {
                e.add_scaled(b, c);
            }
        }
        e
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), &self.table[i][j]);
            }
        }
        out
    }

    /// Matrix (columns = images of basis vectors) of z ↦ x ∗ z.
    pub fn left_matrix(&self, x: &[Rational]) -> Vec<Vector> {
        let d = self.dim();
        (0..d)
            .map(|j| {
                let mut col = vec![Rational::zero(); d];
                for (i, a) in x.iter().enumerate() {
                    if !a.is_zero() {
                        axpy(&mut col, a, &self.table[i][j]);
                    }
                }
                col
            })
            .collect()
    }

    /// Matrix (columns = images of basis vectors) of z ↦ z ∗ y.
    pub fn right_matrix(&self, y: &[Rational]) -> Vec<Vector> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                let mut col = vec![Rational::zero(); d];
                for (j, b) in y.iter().enumerate() {
                    if !b.is_zero() {
                        axpy(&mut col, b, &self.table[i][j]);
                    }
                }
                col
            })
            .collect()
    }
}

/// Applies a matrix given by its columns.
pub fn apply(cols: &[Vector], x: &[Rational]) -> Vector {
    let mut out = vec![Rational::zero(); cols.first().map_or(0, Vec::len)];
    for (c, a) in cols.iter().zip(x) {
        if !a.is_zero() {
            axpy(&mut out, a, c);
        }
    }
    out
}

pub(crate) fn axpy(y: &mut [Rational], a: &Rational, x: &[Rational]) {
    for (u, v) in y.iter_mut().zip(x) {
        if !v.is_zero() {
            u.add_mul(a, v);
        }
    }
}

/// Inverse of a square matrix given by rows; rows of the result satisfy
/// Σ_k inv[i][k]·m[k] = e_i.
fn invert(m: &[Vector]) -> Result<Vec<Vector>, AlgebraError> {
    let d = m.len();
    let mut ech = Echelon::tracking(d);
    for row in m {
        if !ech.insert(row.clone()) {
            return Err(AlgebraError::Consistency("left basis dependent".into()));
        }
    }
    (0..d)
        .map(|i| {
            let mut e = vec![Rational::zero(); d];
            e[i] = Rational::one();
            Ok(ech.coordinates(&e)?.expect("full rank"))
        })
        .collect()
}
