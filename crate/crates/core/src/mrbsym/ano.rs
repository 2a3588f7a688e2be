//! Idempotents built from φ^♯ = log σ_1^♯: the family E_λ of MR_n, the
//! series η = σ_1·(σ_1^♯)^{-1/2}, and their images Ẽ_λ in the peak algebra.

use crate::combitypes::{compositions, partitions, rpeak_partitions, HeadedPartition, Partition};
use crate::exactmath::{factorial, Rational};
use crate::symcore::{Elem, Series};

use super::sigma_sharp;

/// How E_λ is normalized: the printed weight 1/(2^ℓ i_1⋯i_ℓ), or with the
/// extra 1/ℓ! of the exponential expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnoNormalization {
    Printed,
    WithFactorial,
}

/// Φ_1^♯..=Φ_n^♯ (index 0 unused), from φ^♯(t) = log σ_t^♯ = Σ Φ_n^♯ t^n/n.
pub fn phi_sharp(n: usize) -> Vec<Elem<Rational>> {
    let l = sigma_sharp::<Rational>(n).log().expect("unit constant");
    (0..=n)
        .map(|k| l.get(k).scale_rat(&Rational::from_int(k.max(1) as i64)))
        .collect()
}

fn weight_of(i: &[usize], norm: AnoNormalization) -> Rational {
    let mut d = Rational::from_int(1 << i.len());
    for &p in i {
        d = &d * &Rational::from_int(p as i64);
    }
    if norm == AnoNormalization::WithFactorial {
        d = &d * &factorial(i.len());
    }
    d.inv().expect("nonzero")
}

fn phi_word(phi: &[Elem<Rational>], i: &[usize]) -> Elem<Rational> {
    i.iter().fold(Elem::one(), |acc, &p| acc.mul(&phi[p]))
}

/// E_λ = Σ_{I↓=λ} Φ^{I♯}/(2^ℓ i_1⋯i_ℓ) for λ ⊢ n.
pub fn ano_e(n: usize, norm: AnoNormalization) -> Vec<(Partition, Elem<Rational>)> {
    let phi = phi_sharp(n);
    partitions(n)
        .into_iter()
        .map(|lam| {
            let mut e = Elem::zero(n);
            for i in compositions(n) {
                if i.sorted() == lam {
                    e.add_scaled(&phi_word(&phi, i.parts()), &weight_of(i.parts(), norm));
                }
            }
            (lam, e)
        })
        .collect()
}

/// η(t) = σ_t·(σ_t^♯)^{-1/2}.
pub fn eta(n: usize) -> Series<Rational> {
    let h = sigma_sharp::<Rational>(n).inverse_sqrt().expect("unit constant");
    Series::sigma(n).mul(&h)
}

/// Ẽ_λ = η̃_{λ_0}·Σ_{J↓=λ̄} Φ̃^{J♯}/(2^ℓ j_1⋯j_ℓ) over 2-peak partitions λ.
pub fn ano_tilde(n: usize, norm: AnoNormalization) -> Vec<(HeadedPartition, Elem<Rational>)> {
    let phi: Vec<Elem<Rational>> = phi_sharp(n).iter().map(|e| e.project()).collect();
    let eta = eta(n);
    rpeak_partitions(n, 2)
        .into_iter()
        .map(|lam| {
            let m = lam.tail.weight();
            let mut tail = Elem::zero(m);
            for j in compositions(m) {
                if j.sorted() == lam.tail {
                    tail.add_scaled(&phi_word(&phi, j.parts()), &weight_of(j.parts(), norm));
                }
            }
            let e = eta.get(lam.head).project().mul(&tail);
            (lam, e)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mrbsym::sigma_sharp_n;

    #[test]
    fn phi_sharp_low() {
        let phi = phi_sharp(2);
        assert_eq!(phi[1], sigma_sharp_n::<Rational>(1));
        assert!(phi[2].is_primitive());
    }
}
