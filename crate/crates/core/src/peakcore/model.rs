//! 𝒫^(r)_n as a concrete subspace of Sym_n.
//!
//! The defining span is taken over Q(q)/Φ_r; the rational bases used for
//! computation (T^I and ζ^(r)-products over r-peak compositions) are checked
//! against it before anything else is done.

use std::collections::HashMap;

use crate::combitypes::{compositions, rpeak_compositions, HeadedComposition};
use crate::exactmath::{Cyclo, Echelon, Rational};
use crate::reptheory::AlgebraModel;
use crate::symcore::{s_to_p, AlgebraError, Elem, PVec, Word};

use super::{solve_zeta_r, t_product, theta};

#[derive(Clone, Debug)]
pub struct PeakAlgebraModel {
    pub n: usize,
    pub r: usize,
    /// r-peak compositions, in bijection with `model` coordinates.
    pub labels: Vec<HeadedComposition>,
    /// Reduced echelon rows (on the S basis) of the span over Q(q).
    pub cyclo_basis: Vec<Vec<Cyclo>>,
    /// Structure constants on the ζ^(r)-product basis.
    pub model: AlgebraModel,
}

impl PeakAlgebraModel {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// S_{i_0}·θ_q(S^J) for all i_0 + |J| = n.
pub fn peak_generators(n: usize, r: usize) -> Vec<Elem<Cyclo>> {
    let mut out = Vec::new();
    for i0 in 0..=n {
        let head = Elem::<Cyclo>::s(i0);
        if i0 == n {
            out.push(head);
            continue;
        }
        for j in compositions(n - i0) {
            let t = theta(&Elem::<Rational>::s_word(j.parts()), r as u32).expect("Sym element");
            out.push(head.mul(&t));
        }
    }
    out
}

/// ζ^(r)_{i_0}ζ^(r)_{i_1}⋯ on the S and P bases.
pub fn zeta_r_basis(n: usize, r: usize) -> Vec<(HeadedComposition, Elem<Rational>, PVec)> {
    let z = solve_zeta_r(n, r);
    let zp: Vec<PVec> = z.iter().map(s_to_p).collect();
    rpeak_compositions(n, r)
        .into_iter()
        .map(|i| {
            let mut s = z[i.head].clone();
            let mut p = zp[i.head].clone();
            for &k in i.tail.parts() {
                s = s.mul(&z[k]);
                let mut next = PVec::new();
                for (a, x) in &p {
                    for (b, y) in &zp[k] {
                        *next.entry(a.concat(b)).or_default() += &(x * y);
                    }
                }
                next.retain(|_, v| !v.is_zero());
                p = next;
            }
            (i, s, p)
        })
        .collect()
}

/// Builds 𝒫^(r)_n and checks it against its definition: every q-component
/// of every generator lies in the rational span, the generators have full
/// rank over Q(q), S_n belongs, and the span is closed under ∗.
pub fn build_peak_algebra(n: usize, r: usize) -> Result<PeakAlgebraModel, AlgebraError> {
    if n == 0 || r < 2 {
        return Err(AlgebraError::Consistency(format!("need n ≥ 1, r ≥ 2 (got {n}, {r})")));
    }
    let zb = zeta_r_basis(n, r);
    let labels: Vec<HeadedComposition> = zb.iter().map(|(i, _, _)| i.clone()).collect();
    let left: Vec<Elem<Rational>> = labels
        .iter()
        .map(|i| t_product(std::iter::once(i.head).chain(i.tail.parts().iter().copied()), r))
        .collect();
    let model = AlgebraModel::new(n, &left, zb.into_iter().map(|(_, s, p)| (s, p)).collect())?;

    let words: Vec<Word> = compositions(n).iter().map(Word::from).collect();
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut cyc = Echelon::<Cyclo>::new(words.len());
    for g in peak_generators(n, r) {
        for part in g.components() {
            if !part.is_zero() && !model.contains(&part) {
                return Err(AlgebraError::NotMember(format!(
                    "a generator component lies outside the rational basis (n = {n}, r = {r})"
                )));
            }
        }
        if cyc.rank() < model.dim() {
            cyc.insert(g.to_dense(&index, words.len()));
        }
    }
    if cyc.rank() != model.dim() {
        return Err(AlgebraError::Consistency(format!(
            "span over Q(q) has dimension {} but there are {} r-peak compositions",
            cyc.rank(),
            model.dim()
        )));
    }
    if !model.contains(&Elem::s(n)) {
        return Err(AlgebraError::NotMember("S_n".into()));
    }
    Ok(PeakAlgebraModel {
        n,
        r,
        labels,
        cyclo_basis: cyc.reduced_rows(),
        model,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(build_peak_algebra(3, 2).unwrap().dim(), 3);
        assert_eq!(build_peak_algebra(4, 2).unwrap().dim(), 5);
        for r in 2..=4 {
            for n in 1..=5 {
                let m = build_peak_algebra(n, r).unwrap();
                assert_eq!(m.dim(), rpeak_compositions(n, r).len());
            }
        }
    }

    #[test]
    fn other_primitive_root() {
        // q ↦ q^2 is the other primitive cube root of unity.
        for n in 1..=4 {
            let gens = peak_generators(n, 3);
            let words: Vec<Word> = compositions(n).iter().map(Word::from).collect();
            let index: HashMap<Word, usize> =
                words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            let mut a = Echelon::<Cyclo>::new(words.len());
            let mut b = Echelon::<Cyclo>::new(words.len());
            for g in &gens {
                a.insert(g.to_dense(&index, words.len()));
                let h = g.map_coeffs(|c| c.galois(2));
                b.insert(h.to_dense(&index, words.len()));
            }
            assert_eq!(a.rank(), b.rank());
            assert_eq!(a.rank(), rpeak_compositions(n, 3).len());
        }
    }
}
