//! Internal product through the basis of products of Zassenhaus elements.
//!
//! Write P^K = ζ_{k_1}⋯ζ_{k_m}, with a barred letter standing for ζ_k(Ā).
//! Every factor is primitive, so by the splitting formula
//! S^I ∗ P^K is the sum over the ways of distributing the factors of P^K,
//! order kept, into slots l = 1..ℓ(I) of weight |i_l|, concatenated slot by
//! slot, with the alphabets exchanged inside slots where i_l is barred.
//! The expansion of S_n = Σ_{λ⊢n} ζ^λ/m_λ (λ decreasing) read off from the
//! descending exponential factorization converts S labels to P labels.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::combitypes::{m_factor, partitions};
use crate::exactmath::{Field, Rational};

use super::{zeta_products, AlgebraError, Elem, Letter, Word};

/// Coordinates on the P basis.
pub type PVec = BTreeMap<Word, Rational>;

type Expansion = Arc<Vec<(Word, i64)>>;

thread_local! {
    // Per thread: lookups dominate large computations and must not contend.
    static UNSHUFFLE: RefCell<HashMap<(Word, Word), Expansion>> = RefCell::new(HashMap::new());
}

type LetterMemo = Mutex<HashMap<Letter, Arc<Vec<(Word, Rational)>>>>;

fn letter_memo() -> &'static LetterMemo {
    static M: OnceLock<LetterMemo> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

fn zeta_memo() -> &'static Mutex<HashMap<Word, Arc<Elem<Rational>>>> {
    static M: OnceLock<Mutex<HashMap<Word, Arc<Elem<Rational>>>>> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

fn subsets(
    k: &[Letter],
    pos: usize,
    left: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        out.push(chosen.clone());
        return;
    }
    if pos == k.len() {
        return;
    }
    let s = k[pos].size();
    if s <= left {
        chosen.push(pos);
        subsets(k, pos + 1, left - s, chosen, out);
        chosen.pop();
    }
    subsets(k, pos + 1, left, chosen, out);
}

/// S^I ∗ P^K on the P basis, as (label, multiplicity).
pub(crate) fn unshuffle(i: &Word, k: &Word) -> Expansion {
    let key = (i.clone(), k.clone());
    if let Some(e) = UNSHUFFLE.with(|m| m.borrow().get(&key).cloned()) {
        return e;
    }
    let mut acc: HashMap<Word, i64> = HashMap::new();
    match i.letters().split_first() {
        None => {
            if k.is_empty() {
                acc.insert(Word::empty(), 1);
            }
        }
        Some((&head, tail)) => {
            let tail = Word(tail.iter().copied().collect());
            let mut sets = Vec::new();
            subsets(k.letters(), 0, head.size(), &mut Vec::new(), &mut sets);
            for set in sets {
                let mut prefix = Word::empty();
                let mut rest = Word::empty();
                let mut it = set.iter().peekable();
                for (p, &l) in k.letters().iter().enumerate() {
                    if it.peek() == Some(&&p) {
                        it.next();
                        prefix.0.push(if head.bar() { l.toggled() } else { l });
                    } else {
                        rest.0.push(l);
                    }
                }
                for (w, m) in unshuffle(&tail, &rest).iter() {
                    *acc.entry(prefix.concat(w)).or_insert(0) += m;
                }
            }
        }
    }
    let mut v: Vec<(Word, i64)> = acc.into_iter().filter(|(_, m)| *m != 0).collect();
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let e = Arc::new(v);
    UNSHUFFLE.with(|m| m.borrow_mut().insert(key, e.clone()));
    e
}

fn letter_to_p(l: Letter) -> Arc<Vec<(Word, Rational)>> {
    if let Some(e) = letter_memo().lock().unwrap().get(&l) {
        return e.clone();
    }
    let v: Vec<(Word, Rational)> = partitions(l.size())
        .into_iter()
        .map(|lam| {
            let w = Word(lam.parts().iter().map(|&p| Letter::new(p, l.bar())).collect());
            (w, Rational::new(1, m_factor(lam.parts()) as i64))
        })
        .collect();
    let e = Arc::new(v);
    letter_memo().lock().unwrap().insert(l, e.clone());
    e
}

/// S-basis element to P coordinates.
pub fn s_to_p(f: &Elem<Rational>) -> PVec {
    let mut out = PVec::new();
    for (w, c) in f.terms() {
        let mut acc: Vec<(Word, Rational)> = vec![(Word::empty(), c.clone())];
        for &l in w.letters() {
            let e = letter_to_p(l);
            let mut next = Vec::with_capacity(acc.len() * e.len());
            for (a, x) in &acc {
                for (b, y) in e.iter() {
                    next.push((a.concat(b), x * y));
                }
            }
            acc = next;
        }
        for (k, x) in acc {
            out.entry(k).or_insert_with(Rational::zero).add_assign_ref(&x);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn zeta_s(k: &Word) -> Arc<Elem<Rational>> {
    if let Some(e) = zeta_memo().lock().unwrap().get(k) {
        return e.clone();
    }
    let e = Arc::new(zeta_products(k));
    zeta_memo().lock().unwrap().insert(k.clone(), e.clone());
    e
}

/// P coordinates back to the S basis.
pub fn p_to_s(p: &PVec, weight: usize) -> Elem<Rational> {
    let mut acc: HashMap<Word, Rational> = HashMap::new();
    for (k, c) in p {
        for (w, x) in zeta_s(k).terms() {
            acc.entry(w.clone()).or_insert_with(Rational::zero).add_mul(c, x);
        }
    }
    Elem::from_terms(weight, acc).expect("weights")
}

/// f ∗ g with f on the S basis and g on the P basis; result on the P basis.
pub fn left_apply(f: &Elem<Rational>, g: &PVec) -> PVec {
    let mut acc: HashMap<Word, Rational> = HashMap::new();
    for (i, x) in f.terms() {
        for (k, y) in g {
            let xy = x * y;
            for (w, m) in unshuffle(i, k).iter() {
                acc.entry(w.clone())
                    .or_insert_with(Rational::zero)
                    .add_mul(&xy, &Rational::from_int(*m));
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// f ∗ g through the P basis.
pub fn product_fast<F: Field>(f: &Elem<F>, g: &Elem<F>) -> Result<Elem<F>, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Ok(Elem::zero(f.weight()));
    }
    if f.weight() != g.weight() {
        return Err(AlgebraError::WeightMismatch(f.weight(), g.weight()));
    }
    let (fo, go) = (f.field_order(), g.field_order());
    if fo != 0 && go != 0 && fo != go {
        return Err(crate::exactmath::MathError::FieldMismatch(fo, go).into());
    }
    let n = f.weight();
    let fc = f.components();
    let gp: Vec<PVec> = g.components().iter().map(s_to_p).collect();
    let mut parts: Vec<PVec> = Vec::new();
    for (a, x) in fc.iter().enumerate() {
        for (b, y) in gp.iter().enumerate() {
            if x.is_zero() || y.is_empty() {
                continue;
            }
            while parts.len() <= a + b {
                parts.push(PVec::new());
            }
            for (w, c) in left_apply(x, y) {
                parts[a + b].entry(w).or_insert_with(Rational::zero).add_assign_ref(&c);
            }
        }
    }
    let parts: Vec<Elem<Rational>> = parts.iter().map(|p| p_to_s(p, n)).collect();
    Ok(Elem::from_components(n, fo.max(go), &parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::internal_product;

    #[test]
    fn round_trip() {
        let f = Elem::<Rational>::s_word(&[2, 1, 3]);
        assert_eq!(p_to_s(&s_to_p(&f), 6), f);
        let g = Elem::<Rational>::basis("1'.2.1'".parse().unwrap());
        assert_eq!(p_to_s(&s_to_p(&g), 4), g);
    }

    #[test]
    fn agrees_with_splitting_on_all_pairs() {
        for n in 1..=4 {
            let words: Vec<Word> = crate::combitypes::signed_compositions(n)
                .iter()
                .map(Word::from)
                .collect();
            for a in &words {
                for b in &words {
                    let x = Elem::<Rational>::basis(a.clone());
                    let y = Elem::<Rational>::basis(b.clone());
                    assert_eq!(
                        product_fast(&x, &y).unwrap(),
                        internal_product(&x, &y).unwrap(),
                        "{a} * {b}"
                    );
                }
            }
        }
    }
}
