//! BSym embedded in MR: the basis S̃^I, membership, the generating series of
//! ζ_n and ζ̃_n, and the idempotents e_λ.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combitypes::{b_compositions, order_index, HeadedComposition, HeadedPartition, OrderKind};
use crate::combitypes::signed_compositions;
use crate::exactmath::{Echelon, Field, Rational};
use crate::symcore::{
    product_fast, solve_factorization, AlgebraError, DegreeFilter, Direction, Elem, Factor, Seq,
    Series, System, Word,
};

use super::{sigma_sharp, superize_direct};

/// S̃^I = S_{i_0}(A)·(S^{i_1⋯i_p})^♯.
pub fn bsym_basis<F: Field>(i: &HeadedComposition) -> Elem<F> {
    let tail = Elem::<F>::s_word(i.tail.parts());
    let tail = if i.tail.is_empty() {
        Elem::one()
    } else {
        superize_direct(&tail)
    };
    Elem::s(i.head).mul(&tail)
}

/// BSym_n inside MR_n, with coordinates on the S̃ basis.
pub struct BsymSpace {
    n: usize,
    labels: Vec<HeadedComposition>,
    index: HashMap<Word, usize>,
    ech: Echelon<Rational>,
}

impl BsymSpace {
    pub fn new(n: usize) -> Self {
        let words: Vec<Word> = signed_compositions(n).iter().map(Word::from).collect();
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let labels = b_compositions(n);
        let mut ech = Echelon::tracking(words.len());
        for l in &labels {
            let v = bsym_basis::<Rational>(l).to_dense(&index, words.len());
            assert!(ech.insert(v), "S~ basis dependent at {l}");
        }
        BsymSpace { n, labels, index, ech }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[HeadedComposition] {
        &self.labels
    }

    pub fn ambient_dim(&self) -> usize {
        self.index.len()
    }

    pub fn dense(&self, f: &Elem<Rational>) -> Vec<Rational> {
        f.to_dense(&self.index, self.index.len())
    }

    /// Coordinates on S̃^I, or an error when `f` lies outside BSym_n.
    pub fn coordinates(&self, f: &Elem<Rational>) -> Result<Vec<Rational>, AlgebraError> {
        if !f.is_zero() && f.weight() != self.n {
            return Err(AlgebraError::WeightMismatch(self.n, f.weight()));
        }
        self.ech
            .coordinates(&self.dense(f))?
            .ok_or_else(|| AlgebraError::NotMember("BSym".into()))
    }

    pub fn contains(&self, f: &Elem<Rational>) -> bool {
        self.coordinates(f).is_ok()
    }
}

/// ζ_0..=ζ_N and ζ̃_0..=ζ̃_N of BSym (index 0: 0 and 1 respectively).
pub struct BsymZetas {
    pub zeta: Vec<Elem<Rational>>,
    pub tilde: Vec<Elem<Rational>>,
}

fn zeta_cache() -> &'static Mutex<Option<Arc<BsymZetas>>> {
    static C: OnceLock<Mutex<Option<Arc<BsymZetas>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(None))
}

/// Solves σ_1^♯ = ℰ↑(ζ)ℰ↓(ζ) and σ_1 = ζ̃·ℰ↓(ζ) to order `n`.
pub fn bsym_zetas(n: usize) -> Arc<BsymZetas> {
    if let Some(z) = zeta_cache().lock().unwrap().as_ref() {
        if z.zeta.len() > n {
            return z.clone();
        }
    }
    let zeta = solve_factorization(
        &sigma_sharp(n),
        &[
            Factor::Exp {
                seq: Seq::Unknown,
                dir: Direction::Ascending,
                filter: DegreeFilter::All,
            },
            Factor::Exp {
                seq: Seq::Unknown,
                dir: Direction::Descending,
                filter: DegreeFilter::All,
            },
        ],
    );
    let mut tilde = solve_factorization(
        &Series::sigma(n),
        &[
            Factor::Sum {
                seq: Seq::Unknown,
                filter: DegreeFilter::All,
            },
            Factor::Exp {
                seq: Seq::Known(zeta.clone()),
                dir: Direction::Descending,
                filter: DegreeFilter::All,
            },
        ],
    );
    tilde[0] = Elem::one();
    let z = Arc::new(BsymZetas { zeta, tilde });
    *zeta_cache().lock().unwrap() = Some(z.clone());
    z
}

/// ζ̃_{i_0}ζ_{i_1}⋯ζ_{i_p} for a B-composition.
pub fn bsym_zeta_product(i: &HeadedComposition) -> Elem<Rational> {
    let z = bsym_zetas(i.weight());
    let mut e = z.tilde[i.head].clone();
    for &p in i.tail.parts() {
        e = e.mul(&z.zeta[p]);
    }
    e
}

/// e_I = ζ̃_{i_0}ζ_{i_1}⋯/∏m_j! (multiplicities of the tail).
pub fn bsym_e(i: &HeadedComposition) -> Elem<Rational> {
    let m = crate::combitypes::m_factor(i.tail.parts());
    bsym_zeta_product(i).scale_rat(&Rational::new(1, m as i64))
}

/// e_λ = (1/(2^k ∏m_j!)) S̃^λ ∗ (S_n - Σ_{μ<λ} e_μ).
pub fn bsym_recursion(n: usize) -> System<Rational> {
    let mut out: System<Rational> = Vec::new();
    for lam in order_index(n, OrderKind::TypeB) {
        let mut rest = Elem::s(n);
        for (_, e) in &out {
            rest = &rest - e;
        }
        let k = lam.tail.len() as u32;
        let c = Rational::new(1, (2i64.pow(k)) * lam.m_tail() as i64);
        let s = bsym_basis::<Rational>(&lam.as_composition());
        let e = product_fast(&s, &rest).expect("weights").scale_rat(&c);
        out.push((lam, e));
    }
    out
}

/// e_λ by the closed form.
pub fn bsym_closed_form(n: usize) -> System<Rational> {
    order_index(n, OrderKind::TypeB)
        .into_iter()
        .map(|lam| {
            let e = bsym_e(&lam.as_composition());
            (lam, e)
        })
        .collect()
}

/// Both routes, compared exactly.
pub fn bsym_idempotents(n: usize) -> Result<System<Rational>, AlgebraError> {
    let a = bsym_recursion(n);
    let b = bsym_closed_form(n);
    for ((l, x), (_, y)) in a.iter().zip(&b) {
        if x != y {
            return Err(AlgebraError::Consistency(format!(
                "BSym recursion and closed form differ at {l}"
            )));
        }
    }
    Ok(b)
}

/// Labels of the type B simple modules, in the order `<`.
pub fn bsym_labels(n: usize) -> Vec<HeadedPartition> {
    order_index(n, OrderKind::TypeB)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mrbsym::sharp_word;

    type E = Elem<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn basis_examples() {
        let hc = |h: usize, t: &[usize]| HeadedComposition::new(h, t.to_vec());
        assert_eq!(bsym_basis::<Rational>(&hc(0, &[1])), &E::s(1) + &E::s_bar(1));
        assert_eq!(bsym_basis::<Rational>(&hc(2, &[])), E::s(2));
        assert_eq!(
            bsym_basis::<Rational>(&hc(1, &[1])),
            E::s(1).mul(&(&E::s(1) + &E::s_bar(1)))
        );
        for n in 1..=5 {
            assert_eq!(BsymSpace::new(n).dim(), 1 << n);
        }
    }

    #[test]
    fn zeta_expansions() {
        let z = bsym_zetas(3);
        assert_eq!(z.zeta[1], sharp_word(&[1]).scale_rat(&r(1, 2)));
        let z2 = &sharp_word(&[2]).scale_rat(&r(1, 2)) - &sharp_word(&[1, 1]).scale_rat(&r(1, 4));
        assert_eq!(z.zeta[2], z2);
        assert_eq!(z.tilde[1], &E::s(1) - &sharp_word(&[1]).scale_rat(&r(1, 2)));
        let space = BsymSpace::new(3);
        assert!(space.contains(&z.zeta[3]));
        assert!(space.contains(&z.tilde[3]));
        assert!(!space.contains(&E::basis("1.2'".parse().unwrap())));
    }

    #[test]
    fn idempotents_small() {
        for n in 1..=3 {
            let sys = bsym_idempotents(n).unwrap();
            assert_eq!(sys.len(), if n == 1 { 2 } else if n == 2 { 4 } else { 7 });
        }
    }
}
