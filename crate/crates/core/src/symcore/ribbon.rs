//! Ribbon basis: S^I = Σ R_J over the coarsenings J of I.

use std::collections::BTreeMap;

use crate::combitypes::{coarsenings, Composition};
use crate::exactmath::Field;

use super::{AlgebraError, Elem, Word};

/// R_I = Σ_{J coarser than I} (-1)^{ℓ(I)-ℓ(J)} S^J.
pub fn ribbon_to_complete<F: Field>(i: &Composition) -> Elem<F> {
    let mut e = Elem::zero(i.weight());
    for j in coarsenings(i) {
        let sign = if (i.len() - j.len()).is_multiple_of(2) { 1 } else { -1 };
        e.add_term(Word::from(&j), F::from_int(sign));
    }
    e
}

/// Ribbon coordinates of an element of Sym.
pub fn complete_to_ribbon<F: Field>(f: &Elem<F>) -> Result<BTreeMap<Composition, F>, AlgebraError> {
    if f.has_bar() {
        return Err(AlgebraError::NotMember("Sym".into()));
    }
    let mut out: BTreeMap<Composition, F> = BTreeMap::new();
    for (w, c) in f.terms() {
        for j in coarsenings(&w.as_composition()) {
            out.entry(j).or_insert_with(F::zero).add_assign_ref(c);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rational;

    type E = Elem<Rational>;

    #[test]
    fn small_ribbons() {
        let c = |v: &[usize]| Composition(v.to_vec());
        assert_eq!(ribbon_to_complete::<Rational>(&c(&[3])), E::s(3));
        assert_eq!(ribbon_to_complete::<Rational>(&c(&[1, 1])), &E::s_word(&[1, 1]) - &E::s(2));
        assert_eq!(ribbon_to_complete::<Rational>(&c(&[2, 1])), &E::s_word(&[2, 1]) - &E::s(3));
    }

    #[test]
    fn round_trip() {
        for i in crate::combitypes::compositions(5) {
            let r = ribbon_to_complete::<Rational>(&i);
            let back = complete_to_ribbon(&r).unwrap();
            assert_eq!(back.len(), 1);
            assert_eq!(back[&i], Rational::one());
        }
    }
}
