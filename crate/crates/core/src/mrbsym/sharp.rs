//! Superization F ↦ F^♯ = F ∗ σ_1^♯ with σ_1^♯ = λ̄_1σ_1.

use crate::exactmath::{Field, Rational};
use crate::symcore::{lambda_n, product_fast, AlgebraError, Elem, Series};

/// Λ_n̄ = Σ_{I ⊨ n} (-1)^{n-ℓ(I)} S^Ī.
pub fn lambda_bar<F: Field>(n: usize) -> Elem<F> {
    lambda_n::<F>(n).bar()
}

/// λ̄_1 up to `order`.
pub fn lambda_bar_series<F: Field>(order: usize) -> Series<F> {
    Series::from_fn(order, lambda_bar)
}

/// S_n^♯ = Σ_{a+b=n} Λ_ā S_b.
pub fn sigma_sharp_n<F: Field>(n: usize) -> Elem<F> {
    let mut e = Elem::zero(n);
    for a in 0..=n {
        e.add_scaled(&lambda_bar::<F>(a).mul(&Elem::s(n - a)), &F::one());
    }
    if n == 0 {
        return Elem::one();
    }
    e
}

/// σ_1^♯ up to `order`.
pub fn sigma_sharp<F: Field>(order: usize) -> Series<F> {
    Series::from_fn(order, sigma_sharp_n)
}

/// F^♯ = F ∗ S_n^♯ (internal product).
pub fn superize<F: Field>(f: &Elem<F>) -> Result<Elem<F>, AlgebraError> {
    if f.has_bar() {
        return Err(AlgebraError::NotMember("Sym".into()));
    }
    product_fast(f, &sigma_sharp_n(f.weight()))
}

/// F^♯ on the S basis by S^{I♯} = S_{i_1}^♯⋯S_{i_k}^♯.
pub fn superize_direct<F: Field>(f: &Elem<F>) -> Elem<F> {
    let mut out = Elem::zero(f.weight());
    for (w, c) in f.terms() {
        let mut acc = Elem::one();
        for l in w.letters() {
            acc = acc.mul(&sigma_sharp_n(l.size()));
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Rational convenience wrapper.
pub fn sharp_word(parts: &[usize]) -> Elem<Rational> {
    superize_direct(&Elem::s_word(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::Word;

    type E = Elem<Rational>;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn low_degrees() {
        assert_eq!(sigma_sharp_n::<Rational>(1), &E::s(1) + &E::s_bar(1));
        let mut s2 = E::zero(2);
        s2.add_term(w("1'.1'"), Rational::one());
        s2.add_term(w("2'"), Rational::from_int(-1));
        s2.add_term(w("1'.1"), Rational::one());
        s2.add_term(w("2"), Rational::one());
        assert_eq!(sigma_sharp_n::<Rational>(2), s2);
    }

    #[test]
    fn two_routes_agree() {
        for n in 1..=4 {
            for c in crate::combitypes::compositions(n) {
                let f = E::basis(Word::from(&c));
                assert_eq!(superize(&f).unwrap(), superize_direct(&f));
            }
        }
    }

    #[test]
    fn projection_is_lambda_sigma() {
        for n in 1..=5 {
            let mut ls = E::zero(n);
            for a in 0..=n {
                ls.add_scaled(&lambda_n::<Rational>(a).mul(&E::s(n - a)), &Rational::one());
            }
            assert_eq!(sigma_sharp_n::<Rational>(n).project(), ls);
        }
    }
}
