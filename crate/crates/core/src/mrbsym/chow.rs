//! Chow's map Θ as the left internal product by σ_1^♯, and the twisted
//! product μ'.

use crate::exactmath::Rational;
use crate::symcore::{product_fast, Elem};

use super::{lambda_bar, sigma_sharp_n};

/// Θ(F) = σ_1^♯ ∗ F.
pub fn chow_theta(f: &Elem<Rational>) -> Elem<Rational> {
    if f.weight() == 0 {
        return f.clone();
    }
    product_fast(&sigma_sharp_n(f.weight()), f).expect("weights")
}

/// μ'[Θ(F) ⊗ Δ(G)] with μ'(A⊗B⊗C) = (λ̄_1 ∗ B)AC.
pub fn mu_prime(theta_f: &Elem<Rational>, g: &Elem<Rational>) -> Elem<Rational> {
    let mut out = Elem::zero(theta_f.weight() + g.weight());
    for ((b, c), x) in g.coproduct() {
        let b = Elem::basis(b);
        let lb = if b.weight() == 0 {
            b
        } else {
            product_fast(&lambda_bar(b.weight()), &b).expect("weights")
        };
        let t = lb.mul(theta_f).mul(&Elem::basis(c));
        out.add_scaled(&t, &x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mrbsym::sigma_sharp_n;

    #[test]
    fn chow_conditions() {
        for n in 1..=4 {
            let s = sigma_sharp_n::<Rational>(n);
            assert_eq!(chow_theta(&Elem::s(n)), s);
            let mut sq = Elem::zero(n);
            for a in 0..=n {
                sq.add_scaled(
                    &sigma_sharp_n::<Rational>(a).mul(&sigma_sharp_n(n - a)),
                    &Rational::one(),
                );
            }
            assert_eq!(chow_theta(&s), sq);
        }
    }

    #[test]
    fn third_condition() {
        let f = Elem::<Rational>::basis("1'.1".parse().unwrap());
        let g = Elem::<Rational>::basis("2.1'".parse().unwrap());
        assert_eq!(chow_theta(&f.mul(&g)), mu_prime(&chow_theta(&f), &g));
    }
}
