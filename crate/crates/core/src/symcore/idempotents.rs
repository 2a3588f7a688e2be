//! Type A idempotents e_λ, the idempotent basis e_I and the elements Γ_K.

use serde::Serialize;

use crate::combitypes::{compositions, m_factor, order_index, Composition, HeadedPartition, OrderKind};
use crate::exactmath::{Field, Rational};

use super::{internal_product, product_fast, zassenhaus, AlgebraError, Elem, Word};

/// A labelled family of idempotents, in the order `<` of its labels.
pub type System<F> = Vec<(HeadedPartition, Elem<F>)>;

/// e_λ = (1/m_λ) S^λ ∗ (S_n - Σ_{μ<λ} e_μ), by the splitting formula.
pub fn type_a_recursion(n: usize) -> System<Rational> {
    let mut out: System<Rational> = Vec::new();
    for lam in order_index(n, OrderKind::TypeA) {
        let mut rest = Elem::s(n);
        for (_, e) in &out {
            rest = &rest - e;
        }
        let s_lam = Elem::basis(Word::from_parts(lam.tail.parts()));
        let m = Rational::new(1, m_factor(lam.tail.parts()) as i64);
        let e = internal_product(&s_lam, &rest).expect("weights").scale_rat(&m);
        out.push((lam, e));
    }
    out
}

/// e_λ = ζ_{λ_1}⋯ζ_{λ_k}/m_λ.
pub fn type_a_closed_form(n: usize) -> System<Rational> {
    let z = zassenhaus(n);
    order_index(n, OrderKind::TypeA)
        .into_iter()
        .map(|lam| {
            let mut e = Elem::one();
            for &p in lam.tail.parts() {
                e = e.mul(&z[p]);
            }
            let m = Rational::new(1, m_factor(lam.tail.parts()) as i64);
            (lam, e.scale_rat(&m))
        })
        .collect()
}

/// Both routes, compared exactly.
pub fn type_a_idempotents(n: usize) -> Result<System<Rational>, AlgebraError> {
    let a = type_a_recursion(n);
    let b = type_a_closed_form(n);
    for ((l, x), (_, y)) in a.iter().zip(&b) {
        if x != y {
            return Err(AlgebraError::Consistency(format!(
                "recursion and closed form differ at {l}"
            )));
        }
    }
    Ok(b)
}

/// e_I = ζ^I/m_I for every composition I of n.
pub fn idempotent_basis(n: usize) -> Vec<(Composition, Elem<Rational>)> {
    let z = zassenhaus(n);
    compositions(n)
        .into_iter()
        .map(|i| {
            let mut e = Elem::one();
            for &p in i.parts() {
                e = e.mul(&z[p]);
            }
            let m = Rational::new(1, m_factor(i.parts()) as i64);
            (i, e.scale_rat(&m))
        })
        .collect()
}

/// Γ_K = ζ_k ∗ ζ^K with k = |K|.
pub fn gamma(k: &Composition) -> Elem<Rational> {
    let n = k.weight();
    let z = zassenhaus(n);
    let mut zk = Elem::one();
    for &p in k.parts() {
        zk = zk.mul(&z[p]);
    }
    product_fast(&z[n], &zk).expect("weights")
}

/// Outcome of checking a family against idempotency, orthogonality and
/// completeness.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SystemReport {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub complete: bool,
}

impl SystemReport {
    pub fn all(&self) -> bool {
        self.idempotent && self.orthogonal && self.complete
    }
}

/// Checks e_a ∗ e_b = δ_ab e_a and Σ e_a = `unit`, using `product`.
pub fn check_system<F: Field>(
    elems: &[Elem<F>],
    unit: &Elem<F>,
    product: impl Fn(&Elem<F>, &Elem<F>) -> Elem<F>,
) -> SystemReport {
    let mut rep = SystemReport {
        idempotent: true,
        orthogonal: true,
        complete: true,
    };
    let mut sum = Elem::zero(unit.weight());
    for (a, x) in elems.iter().enumerate() {
        sum = &sum + x;
        for (b, y) in elems.iter().enumerate() {
            let p = product(x, y);
            if a == b {
                rep.idempotent &= p == *x;
            } else {
                rep.orthogonal &= p.is_zero();
            }
        }
    }
    rep.complete = sum == *unit;
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ExactMatrix;

    fn fast(a: &Elem<Rational>, b: &Elem<Rational>) -> Elem<Rational> {
        product_fast(a, b).unwrap()
    }

    #[test]
    fn small_systems() {
        let sys = type_a_idempotents(2).unwrap();
        assert_eq!(sys[0].1, Elem::s_word(&[1, 1]).scale_rat(&Rational::new(1, 2)));
        assert_eq!(sys[1].1, zassenhaus(2)[2]);
        for n in 1..=5 {
            let sys = type_a_idempotents(n).unwrap();
            let elems: Vec<_> = sys.into_iter().map(|(_, e)| e).collect();
            assert!(check_system(&elems, &Elem::s(n), fast).all(), "n = {n}");
        }
    }

    #[test]
    fn basis_of_sym4() {
        let basis = idempotent_basis(4);
        assert_eq!(basis.len(), 8);
        let words: Vec<Word> = compositions(4).iter().map(Word::from).collect();
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let rows: Vec<Vec<Rational>> = basis.iter().map(|(_, e)| e.to_dense(&index, 8)).collect();
        assert_eq!(ExactMatrix::from_rows(rows, 8).unwrap().rank(), 8);
        for (_, e) in &basis {
            assert_eq!(&fast(e, e), e);
        }
        let b3 = idempotent_basis(3);
        let e = |p: &[usize]| b3.iter().find(|(c, _)| c.parts() == p).unwrap().1.clone();
        assert!(fast(&e(&[2, 1]), &e(&[3])).is_zero());
    }

    #[test]
    fn gamma_values() {
        let c = |v: &[usize]| Composition(v.to_vec());
        assert_eq!(gamma(&c(&[4])), zassenhaus(4)[4]);
        assert!(gamma(&c(&[1, 1])).is_zero());
        let g = gamma(&c(&[2, 1]));
        assert!(g.is_primitive());
    }
}
