//! θ_q(f) = f((1-q)A) at a primitive r-th root of unity, and the elements T_m.

use crate::combitypes::Composition;
use crate::exactmath::{Cyclo, Field, Rational};
use crate::symcore::{lambda_n, product_fast, ribbon_to_complete, AlgebraError, Elem};

/// θ(S_m) = Σ_{a+b=m} (-q)^a Λ_a S_b with q the canonical root of order r.
pub fn theta_s(m: usize, r: u32) -> Elem<Cyclo> {
    if m == 0 {
        return Elem::one();
    }
    let mq = Cyclo::generator(r).neg_ref();
    let mut pow = Cyclo::one();
    let mut e = Elem::zero(m);
    for a in 0..=m {
        let t = lambda_n::<Cyclo>(a).mul(&Elem::s(m - a));
        e.add_scaled(&t, &pow);
        pow = pow.mul_ref(&mq);
    }
    e
}

/// θ on a Sym element, using that θ is an algebra morphism.
pub fn theta<F: Field>(f: &Elem<F>, r: u32) -> Result<Elem<Cyclo>, AlgebraError> {
    if f.has_bar() {
        return Err(AlgebraError::NotMember("Sym".into()));
    }
    let mut out = Elem::zero(f.weight());
    for (w, c) in f.terms() {
        let mut acc = Elem::one();
        for l in w.letters() {
            acc = acc.mul(&theta_s(l.size(), r));
        }
        let c = Cyclo::from_components(c.order(), &c.components());
        out.add_scaled(&acc, &c);
    }
    Ok(out)
}

/// θ(f) = f ∗ σ_n((1-q)A), through the internal product.
pub fn theta_internal(f: &Elem<Rational>, r: u32) -> Elem<Cyclo> {
    let f = f.map_coeffs(|c| Cyclo::from_rational(c.clone()));
    product_fast(&f, &theta_s(f.weight(), r)).expect("weights")
}

/// T_m = R_m if r | m, else R_{(r^i, j)} with m = ir + j, 0 < j < r.
pub fn t_element(m: usize, r: usize) -> Elem<Rational> {
    if m == 0 {
        return Elem::one();
    }
    let comp = if m.is_multiple_of(r) {
        vec![m]
    } else {
        let mut v = vec![r; m / r];
        v.push(m % r);
        v
    };
    ribbon_to_complete(&Composition(comp))
}

/// T^I = T_{i_0}T_{i_1}⋯T_{i_p}.
pub fn t_product(parts: impl IntoIterator<Item = usize>, r: usize) -> Elem<Rational> {
    parts
        .into_iter()
        .fold(Elem::one(), |acc, p| acc.mul(&t_element(p, r)))
}

/// Coefficient of S_m in T_m, multiplied over the parts: T_m = R_{r^i j}
/// has S_m-coefficient (-1)^i.
pub fn t_sign(parts: impl IntoIterator<Item = usize>, r: usize) -> i64 {
    let odd = parts
        .into_iter()
        .filter(|&m| m % r != 0)
        .map(|m| m / r)
        .sum::<usize>()
        % 2;
    1 - 2 * odd as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Elem<Rational>;

    fn lift(e: &E) -> Elem<Cyclo> {
        e.map_coeffs(|c| Cyclo::from_rational(c.clone()))
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_s(1, 2), lift(&E::s(1).scale_rat(&Rational::from_int(2))));
        assert_eq!(theta_s(2, 2), lift(&E::s_word(&[1, 1]).scale_rat(&Rational::from_int(2))));
        let one_minus_q = Cyclo::one().sub_ref(&Cyclo::generator(3));
        assert_eq!(theta_s(1, 3), Elem::s(1).scale(&one_minus_q));
    }

    #[test]
    fn theta_routes_agree() {
        for r in [2u32, 3, 4] {
            for n in 1..=4 {
                for c in crate::combitypes::compositions(n) {
                    let f = E::s_word(c.parts());
                    assert_eq!(theta(&f, r).unwrap(), theta_internal(&f, r));
                }
            }
        }
    }

    #[test]
    fn t_examples() {
        let rib = |v: &[usize]| ribbon_to_complete::<Rational>(&Composition(v.to_vec()));
        assert_eq!(t_element(5, 2), rib(&[2, 2, 1]));
        assert_eq!(t_element(3, 3), E::s(3));
        assert_eq!(t_element(7, 3), rib(&[3, 3, 1]));
    }
}
