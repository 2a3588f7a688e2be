//! Homogeneous elements of Sym and MR in the S basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactmath::{Field, Rational};

use super::{AlgebraError, Letter, Word};

/// A homogeneous element Σ c_I S^I of weight `weight`.
///
/// Labels may carry bars, in which case the element lives in MR; elements
/// without barred labels are elements of Sym. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Elem<F: Field> {
    weight: usize,
    terms: BTreeMap<Word, F>,
}

/// A tensor Σ c (S^I ⊗ S^J).
pub type Tensor<F> = BTreeMap<(Word, Word), F>;

impl<F: Field> Elem<F> {
    pub fn zero(weight: usize) -> Self {
        Elem {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// The unit, of weight 0.
    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn scalar(c: F) -> Self {
        let mut e = Self::zero(0);
        e.add_term(Word::empty(), c);
        e
    }

    /// S^w with coefficient 1.
    pub fn basis(word: Word) -> Self {
        let mut e = Self::zero(word.weight());
        e.add_term(word, F::one());
        e
    }

    pub fn s(n: usize) -> Self {
        if n == 0 {
            return Self::one();
        }
        Self::basis(Word::from_parts(&[n]))
    }

    pub fn s_bar(n: usize) -> Self {
        if n == 0 {
            return Self::one();
        }
        Self::basis(Word::from_signed(&[(n, true)]))
    }

    /// S^I for a plain composition given as parts.
    pub fn s_word(parts: &[usize]) -> Self {
        Self::basis(Word::from_parts(parts))
    }

    pub fn from_terms(
        weight: usize,
        terms: impl IntoIterator<Item = (Word, F)>,
    ) -> Result<Self, AlgebraError> {
        let mut e = Self::zero(weight);
        for (w, c) in terms {
            if w.weight() != weight {
                return Err(AlgebraError::WeightMismatch(weight, w.weight()));
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn terms(&self) -> &BTreeMap<Word, F> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, F> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficient of the empty word (the scalar part of a weight-0 element).
    pub fn constant(&self) -> F {
        self.coeff(&Word::empty())
    }

    pub fn has_bar(&self) -> bool {
        self.terms.keys().any(|w| w.has_bar())
    }

    /// Order of the cyclotomic field the coefficients live in (0 if all
    /// rational).
    pub fn field_order(&self) -> u32 {
        self.terms.values().map(|c| c.order()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(w.weight(), self.weight);
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Elem<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        if other.is_zero() {
            return;
        }
        assert_eq!(self.weight, other.weight, "weight mismatch in sum");
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x.mul_ref(c));
        }
    }

    pub fn checked_add(&self, other: &Elem<F>) -> Result<Elem<F>, AlgebraError> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.weight != other.weight {
            return Err(AlgebraError::WeightMismatch(self.weight, other.weight));
        }
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Elem::zero(self.weight);
        }
        Elem {
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul_ref(c)))
                .collect(),
        }
    }

    pub fn scale_rat(&self, q: &Rational) -> Self {
        self.scale(&F::from_rational(q.clone()))
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Elem<F>) -> Elem<F> {
        let mut out = Elem::zero(self.weight + other.weight);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x.mul_ref(y));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Elem<F> {
        let mut acc = Elem::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies `f` to every label (must preserve weight).
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Elem<F> {
        let mut out = Elem::zero(self.weight);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Elem<G> {
        let mut out = Elem::zero(self.weight);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Exchange of the alphabets A and Ā (an automorphism).
    pub fn swap_alphabets(&self) -> Elem<F> {
        self.map_words(|w| w.toggled())
    }

    /// The involutive antiautomorphism exchanging S_n and S_n̄.
    pub fn bar(&self) -> Elem<F> {
        self.map_words(|w| w.bar_reversed())
    }

    /// Projection MR → Sym setting Ā = A.
    pub fn project(&self) -> Elem<F> {
        self.map_words(|w| w.unbarred())
    }

    /// Commutative image: each label replaced by its sorted multiset of
    /// letters. For Sym this is the image in ordinary symmetric functions on
    /// the h basis.
    pub fn commutative_image(&self) -> BTreeMap<Word, F> {
        let mut out: BTreeMap<Word, F> = BTreeMap::new();
        for (w, c) in &self.terms {
            let k = w.sorted_desc();
            let v = out.entry(k).or_insert_with(F::zero);
            *v = v.add_ref(c);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Coproduct, with S_n and S_n̄ grouplike.
    pub fn coproduct(&self) -> Tensor<F> {
        let mut out: Tensor<F> = BTreeMap::new();
        for (w, c) in &self.terms {
            let mut acc: Vec<(Word, Word)> = vec![(Word::empty(), Word::empty())];
            for &l in w.letters() {
                let mut next = Vec::with_capacity(acc.len() * (l.size() + 1));
                for (a, b) in &acc {
                    for i in 0..=l.size() {
                        let mut a2 = a.clone();
                        let mut b2 = b.clone();
                        if i > 0 {
                            a2.0.push(Letter::new(i, l.bar()));
                        }
                        if i < l.size() {
                            b2.0.push(Letter::new(l.size() - i, l.bar()));
                        }
                        next.push((a2, b2));
                    }
                }
                acc = next;
            }
            for key in acc {
                let v = out.entry(key).or_insert_with(F::zero);
                *v = v.add_ref(c);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Δf = 1⊗f + f⊗1.
    pub fn is_primitive(&self) -> bool {
        let mut expect: Tensor<F> = BTreeMap::new();
        for (w, c) in &self.terms {
            if self.weight == 0 {
                // Only 0 is primitive in weight 0.
                return c.is_zero();
            }
            expect.insert((Word::empty(), w.clone()), c.clone());
            expect.insert((w.clone(), Word::empty()), c.clone());
        }
        self.coproduct() == expect
    }

    /// Dense coordinates on `index` (labels absent from the index must have
    /// zero coefficient).
    pub fn to_dense(&self, index: &std::collections::HashMap<Word, usize>, dim: usize) -> Vec<F> {
        let mut v = vec![F::zero(); dim];
        for (w, c) in &self.terms {
            let i = *index.get(w).unwrap_or_else(|| panic!("label {w} not indexed"));
            v[i] = c.clone();
        }
        v
    }

    pub fn from_dense(weight: usize, words: &[Word], v: &[F]) -> Elem<F> {
        let mut out = Elem::zero(weight);
        for (w, c) in words.iter().zip(v) {
            if !c.is_zero() {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }

    /// The coefficients as rationals, if they all are.
    pub fn to_rational(&self) -> Option<Elem<Rational>> {
        let mut out = Elem::zero(self.weight);
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c.as_rational()?);
        }
        Some(out)
    }

    pub fn from_rational(e: &Elem<Rational>) -> Elem<F> {
        e.map_coeffs(|c| F::from_rational(c.clone()))
    }

    /// Rational component elements: self = Σ_k q^k · parts[k].
    pub fn components(&self) -> Vec<Elem<Rational>> {
        let mut parts: Vec<Elem<Rational>> = Vec::new();
        for (w, c) in &self.terms {
            for (k, x) in c.components().into_iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                while parts.len() <= k {
                    parts.push(Elem::zero(self.weight));
                }
                parts[k].terms.insert(w.clone(), x);
            }
        }
        parts
    }

    /// Inverse of [`Elem::components`].
    pub fn from_components(weight: usize, order: u32, parts: &[Elem<Rational>]) -> Elem<F> {
        let mut coeffs: BTreeMap<Word, Vec<Rational>> = BTreeMap::new();
        for (k, p) in parts.iter().enumerate() {
            for (w, x) in &p.terms {
                let v = coeffs.entry(w.clone()).or_default();
                if v.len() <= k {
                    v.resize(k + 1, Rational::zero());
                }
                v[k] += x;
            }
        }
        let mut out = Elem::zero(weight);
        for (w, v) in coeffs {
            out.add_term(w, F::from_components(order, &v));
        }
        out
    }
}

impl<F: Field> Add for &Elem<F> {
    type Output = Elem<F>;
    fn add(self, rhs: &Elem<F>) -> Elem<F> {
        self.checked_add(rhs).expect("weight mismatch in sum")
    }
}

impl<F: Field> Sub for &Elem<F> {
    type Output = Elem<F>;
    fn sub(self, rhs: &Elem<F>) -> Elem<F> {
        self.checked_add(&-rhs).expect("weight mismatch in difference")
    }
}

impl<F: Field> Neg for &Elem<F> {
    type Output = Elem<F>;
    fn neg(self) -> Elem<F> {
        Elem {
            weight: self.weight,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg_ref())).collect(),
        }
    }
}

impl<F: Field> Mul for &Elem<F> {
    type Output = Elem<F>;
    fn mul(self, rhs: &Elem<F>) -> Elem<F> {
        Elem::mul(self, rhs)
    }
}

fn fmt_coeff<F: Field>(c: &F, first: bool) -> String {
    // Sign separator plus the coefficient, omitted when it is ±1.
    match c.as_rational() {
        Some(q) => {
            let sep = match (first, q.is_negative()) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            let a = q.abs();
            if a.is_one() {
                sep.to_string()
            } else {
                format!("{sep}{a} ")
            }
        }
        None => format!("{}({c}) ", if first { "" } else { " + " }),
    }
}

/// `S^{2.1} - 1/2 S^{1.1.1}`; zero renders as `0`.
impl<F: Field> fmt::Display for Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let txt = fmt_coeff(c, first);
            if w.is_empty() {
                match c.as_rational() {
                    Some(q) if first => write!(f, "{q}")?,
                    Some(q) => write!(f, "{}{}", if q.is_negative() { " - " } else { " + " }, q.abs())?,
                    None => write!(f, "{}", txt.trim_end())?,
                }
            } else {
                write!(f, "{txt}S^{{{w}}}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[w{}] {}", self.weight, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Elem<Rational>;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn concatenation() {
        let a = E::s(2);
        let b = E::s_word(&[1, 1]);
        assert_eq!(a.mul(&b), E::s_word(&[2, 1, 1]));
        assert_eq!(E::one().mul(&a), a);
        let z = &E::s(1) - &E::s(1);
        assert!(z.mul(&E::s(2)).is_zero());
    }

    #[test]
    fn coproduct_examples() {
        let d = E::s(2).coproduct();
        assert_eq!(d.len(), 3);
        assert_eq!(d[&(w("1"), w("1"))], Rational::one());
        let d = E::s_word(&[1, 1]).coproduct();
        assert_eq!(d[&(w("1"), w("1"))], Rational::from_int(2));
        let zeta2 = &E::s(2) - &E::s_word(&[1, 1]).scale_rat(&Rational::new(1, 2));
        assert!(zeta2.is_primitive());
        assert!(!E::s(2).is_primitive());
    }

    #[test]
    fn maps() {
        let x = E::basis(w("1.2'"));
        assert_eq!(x.swap_alphabets(), E::basis(w("1'.2")));
        assert_eq!(x.bar(), E::basis(w("2.1'")));
        assert_eq!(x.bar().bar(), x);
        assert_eq!(E::s(3).bar(), E::s_bar(3));
        assert_eq!(E::basis(w("1'.2")).project(), E::s_word(&[1, 2]));
        let c = (&E::s_word(&[2, 1]) - &E::s_word(&[1, 2])).commutative_image();
        assert!(c.is_empty());
    }

    #[test]
    fn rendering() {
        let x = &E::s(2) - &E::s_word(&[1, 1]).scale_rat(&Rational::new(1, 2));
        assert_eq!(x.to_string(), "S^{2} - 1/2 S^{1.1}");
        assert_eq!(E::zero(3).to_string(), "0");
    }
}
