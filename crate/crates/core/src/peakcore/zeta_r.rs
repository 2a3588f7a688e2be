//! Zassenhaus elements of level r, the idempotents e^(r)_λ and the
//! decomposition through the Y_p.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combitypes::{m_factor, order_index, partitions, HeadedComposition, OrderKind, Partition};
use crate::exactmath::Rational;
use crate::symcore::{
    product_fast, solve_factorization, AlgebraError, DegreeFilter, Direction, Elem, Factor, Seq,
    Series, System,
};

use super::{t_product, t_sign};

type ZetaCache = Mutex<HashMap<usize, Arc<Vec<Elem<Rational>>>>>;

fn zeta_cache() -> &'static ZetaCache {
    static C: OnceLock<ZetaCache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// ζ^(r)_0..=ζ^(r)_N (index 0 holds 1), solving
/// σ_1 = (Σ_p ζ^(r)_{pr})·∏←_{r∤i} e^{ζ^(r)_i}.
pub fn solve_zeta_r(n: usize, r: usize) -> Arc<Vec<Elem<Rational>>> {
    if let Some(z) = zeta_cache().lock().unwrap().get(&r) {
        if z.len() > n {
            return z.clone();
        }
    }
    let mut z = solve_factorization(
        &Series::sigma(n),
        &[
            Factor::Sum {
                seq: Seq::Unknown,
                filter: DegreeFilter::MultiplesOf(r),
            },
            Factor::Exp {
                seq: Seq::Unknown,
                dir: Direction::Descending,
                filter: DegreeFilter::NonMultiplesOf(r),
            },
        ],
    );
    z[0] = Elem::one();
    let z = Arc::new(z);
    zeta_cache().lock().unwrap().insert(r, z.clone());
    z
}

/// ζ^(r)_{i_0}ζ^(r)_{i_1}⋯ζ^(r)_{i_p}.
pub fn zeta_r_product(i: &HeadedComposition, r: usize) -> Elem<Rational> {
    let z = solve_zeta_r(i.weight(), r);
    i.tail
        .parts()
        .iter()
        .fold(z[i.head].clone(), |acc, &p| acc.mul(&z[p]))
}

/// e^(r)_λ = (±1/m_λ) T^λ ∗ (S_n - Σ_{μ<λ} e^(r)_μ), starting from S_1^n/n!.
/// The sign is that of S^λ in T^λ, which the bare 1/m_λ leaves out.
pub fn peak_recursion(n: usize, r: usize) -> System<Rational> {
    let mut out: System<Rational> = Vec::new();
    for lam in order_index(n, OrderKind::Peak(r)) {
        let mut rest = Elem::s(n);
        for (_, e) in &out {
            rest = &rest - e;
        }
        let parts = || std::iter::once(lam.head).chain(lam.tail.parts().iter().copied());
        let t = t_product(parts(), r);
        let m = Rational::new(t_sign(parts(), r), lam.m_tail() as i64);
        let e = product_fast(&t, &rest).expect("weights").scale_rat(&m);
        out.push((lam, e));
    }
    out
}

/// e^(r)_λ = ζ^(r)_{λ_0}ζ^(r)_{λ_1}⋯ζ^(r)_{λ_k}/m_λ.
pub fn peak_closed_form(n: usize, r: usize) -> System<Rational> {
    order_index(n, OrderKind::Peak(r))
        .into_iter()
        .map(|lam| {
            let m = Rational::new(1, lam.m_tail() as i64);
            let e = zeta_r_product(&lam.as_composition(), r).scale_rat(&m);
            (lam, e)
        })
        .collect()
}

/// Both routes, compared exactly.
pub fn peak_idempotents(n: usize, r: usize) -> Result<System<Rational>, AlgebraError> {
    let a = peak_recursion(n, r);
    let b = peak_closed_form(n, r);
    for ((l, x), (_, y)) in a.iter().zip(&b) {
        if x != y {
            return Err(AlgebraError::Consistency(format!(
                "peak recursion and closed form differ at {l} (r = {r})"
            )));
        }
    }
    Ok(b)
}

/// Y_0..=Y_N (index 0 holds 0), solving σ_1 = ∏→_p e^{Y_{rp}}·∏←_{r∤i} e^{Y_i}.
pub fn solve_y_series(n: usize, r: usize) -> Vec<Elem<Rational>> {
    solve_factorization(
        &Series::sigma(n),
        &[
            Factor::Exp {
                seq: Seq::Unknown,
                dir: Direction::Ascending,
                filter: DegreeFilter::MultiplesOf(r),
            },
            Factor::Exp {
                seq: Seq::Unknown,
                dir: Direction::Descending,
                filter: DegreeFilter::NonMultiplesOf(r),
            },
        ],
    )
}

/// Y_μ = Y^α Y^β/(m_α m_β), α the parts of μ divisible by r in increasing
/// order, β the others in decreasing order.
pub fn solve_y(n: usize, r: usize) -> Vec<(Partition, Elem<Rational>)> {
    let y = solve_y_series(n, r);
    partitions(n)
        .into_iter()
        .map(|mu| {
            let mut alpha: Vec<usize> = mu.parts().iter().copied().filter(|p| p % r == 0).collect();
            alpha.reverse();
            let beta: Vec<usize> = mu.parts().iter().copied().filter(|p| p % r != 0).collect();
            let mut e = Elem::one();
            for &p in alpha.iter().chain(&beta) {
                e = e.mul(&y[p]);
            }
            let m = m_factor(&alpha) * m_factor(&beta);
            (mu, e.scale_rat(&Rational::new(1, m as i64)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combitypes::{rpeak_compositions, HeadedPartition};
    use crate::symcore::{check_system, zassenhaus};

    type E = Elem<Rational>;

    fn sw(c: i64, d: i64, p: &[usize]) -> E {
        E::s_word(p).scale_rat(&Rational::new(c, d))
    }

    fn fast(a: &E, b: &E) -> E {
        product_fast(a, b).unwrap()
    }

    #[test]
    fn low_degrees_match_type_a() {
        let z = zassenhaus(7);
        for r in 2..=4 {
            let zr = solve_zeta_r(7, r);
            for n in 1..(2 * r).min(8) {
                assert_eq!(zr[n], z[n], "r = {r}, n = {n}");
            }
        }
    }

    #[test]
    fn zeta2_5() {
        let terms = [
            sw(1, 1, &[5]),
            sw(-1, 1, &[4, 1]),
            sw(1, 2, &[3, 1, 1]),
            sw(-1, 1, &[2, 3]),
            sw(1, 1, &[2, 2, 1]),
            sw(-1, 2, &[2, 1, 1, 1]),
            sw(1, 2, &[1, 1, 3]),
            sw(-1, 2, &[1, 1, 2, 1]),
            sw(1, 5, &[1, 1, 1, 1, 1]),
        ];
        let expected = terms.iter().fold(E::zero(5), |a, b| &a + b);
        assert_eq!(solve_zeta_r(5, 2)[5], expected);
    }

    #[test]
    fn coproduct_lemma() {
        for r in 2..=3 {
            let z = solve_zeta_r(6, r);
            for n in 1..=6 {
                if n % r != 0 {
                    assert!(z[n].is_primitive());
                } else {
                    let mut expected = crate::symcore::Tensor::<Rational>::new();
                    for i in 0..=n / r {
                        for (a, x) in z[i * r].terms() {
                            for (b, y) in z[n - i * r].terms() {
                                let e = expected.entry((a.clone(), b.clone())).or_default();
                                *e += &(x * y);
                            }
                        }
                    }
                    expected.retain(|_, v| !v.is_zero());
                    assert_eq!(z[n].coproduct(), expected, "r = {r}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn systems() {
        for r in 2..=4 {
            for n in 1..=5 {
                let sys = peak_idempotents(n, r).unwrap();
                let elems: Vec<_> = sys.iter().map(|(_, e)| e.clone()).collect();
                assert!(check_system(&elems, &E::s(n), fast).all(), "n = {n}, r = {r}");
            }
        }
        let sys = peak_idempotents(4, 2).unwrap();
        let e31 = &sys.iter().find(|(l, _)| *l == HeadedPartition::new(0, vec![3, 1])).unwrap().1;
        let z = solve_zeta_r(4, 2);
        assert_eq!(*e31, z[3].mul(&z[1]));
    }

    #[test]
    fn t_against_zeta_products() {
        for r in 2..=3 {
            for n in 1..=5 {
                let comps = rpeak_compositions(n, r);
                for i in &comps {
                    let parts = || std::iter::once(i.head).chain(i.tail.parts().iter().copied());
                    let t = t_product(parts(), r);
                    let sign = Rational::from_int(t_sign(parts(), r));
                    let idown = i.sorted();
                    for lam in order_index(n, OrderKind::Peak(r)) {
                        let zl = zeta_r_product(&lam.as_composition(), r);
                        let p = fast(&t, &zl);
                        let ord = crate::combitypes::cmp_labels(&idown, &lam);
                        if ord == std::cmp::Ordering::Less {
                            assert!(p.is_zero(), "{i:?} {lam}");
                        } else if ord == std::cmp::Ordering::Equal {
                            let m = &Rational::from_int(idown.m_tail() as i64) * &sign;
                            assert_eq!(p, zeta_r_product(i, r).scale_rat(&m));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn y_system() {
        for r in 2..=3 {
            let y = solve_y_series(6, r);
            let z = zassenhaus(6);
            for i in 1..(2 * r).min(7) {
                assert_eq!(y[i], z[i]);
                assert!(y[i].is_primitive());
            }
            for n in 1..=5 {
                let ys = solve_y(n, r);
                let elems: Vec<_> = ys.iter().map(|(_, e)| e.clone()).collect();
                assert!(check_system(&elems, &E::s(n), fast).all());
                for (lam, e) in peak_idempotents(n, r).unwrap() {
                    let mut fiber = E::zero(n);
                    for (mu, y) in &ys {
                        let head: usize = mu.parts().iter().filter(|p| *p % r == 0).sum();
                        let tail: Vec<usize> =
                            mu.parts().iter().copied().filter(|p| p % r != 0).collect();
                        if head == lam.head && tail == lam.tail.parts() {
                            fiber = &fiber + y;
                        }
                    }
                    assert_eq!(e, fiber, "{lam}");
                }
            }
        }
    }
}
