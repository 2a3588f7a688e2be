//! Internal product by the splitting formula.
//!
//! (f_1⋯f_r) ∗ g = μ_r[(f_1⊗⋯⊗f_r) ∗_r Δ^r g], with S_n neutral and
//! S_n̄ ∗ g = swap(g). On basis elements this amounts to summing over the
//! nonnegative integer matrices M with row sums I and column sums J: row l
//! contributes the letters M[l][k] (in column order), barred when exactly one
//! of i_l, j_k is barred.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exactmath::{Field, Rational};

use super::{AlgebraError, Elem, Letter, Word};

type Expansion = Arc<Vec<(Word, i64)>>;

fn memo() -> &'static Mutex<HashMap<(Word, Word), Expansion>> {
    static MEMO: OnceLock<Mutex<HashMap<(Word, Word), Expansion>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn fill_rows(
    rows: &[Letter],
    cols: &[Letter],
    remaining: &mut [usize],
    cur: &mut Word,
    out: &mut HashMap<Word, i64>,
) {
    let Some((&row, rest)) = rows.split_first() else {
        if remaining.iter().all(|&c| c == 0) {
            *out.entry(cur.clone()).or_insert(0) += 1;
        }
        return;
    };
    fill_row(row, row.size(), 0, rows.len(), rest, cols, remaining, cur, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    row: Letter,
    left: usize,
    k: usize,
    nrows: usize,
    rest: &[Letter],
    cols: &[Letter],
    remaining: &mut [usize],
    cur: &mut Word,
    out: &mut HashMap<Word, i64>,
) {
    if k == cols.len() {
        if left == 0 {
            fill_rows(rest, cols, remaining, cur, out);
        }
        return;
    }
    // The last row must exhaust every column.
    let lo = if nrows == 1 { remaining[k] } else { 0 };
    let hi = remaining[k].min(left);
    for a in lo..=hi {
        let pushed = a > 0;
        if pushed {
            cur.0.push(Letter::new(a, row.bar() ^ cols[k].bar()));
        }
        remaining[k] -= a;
        fill_row(row, left - a, k + 1, nrows, rest, cols, remaining, cur, out);
        remaining[k] += a;
        if pushed {
            cur.0.pop();
        }
    }
}

/// S^I ∗ S^J as a list of (label, multiplicity).
pub fn internal_product_basis(i: &Word, j: &Word) -> Expansion {
    assert_eq!(i.weight(), j.weight(), "internal product needs equal weights");
    let key = (i.clone(), j.clone());
    if let Some(e) = memo().lock().unwrap().get(&key) {
        return e.clone();
    }
    let mut out = HashMap::new();
    if i.is_empty() {
        out.insert(Word::empty(), 1);
    } else {
        let mut remaining: Vec<usize> = j.letters().iter().map(|l| l.size()).collect();
        fill_rows(i.letters(), j.letters(), &mut remaining, &mut Word::empty(), &mut out);
    }
    let mut v: Vec<(Word, i64)> = out.into_iter().collect();
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let e = Arc::new(v);
    memo().lock().unwrap().insert(key, e.clone());
    e
}

fn product_rational(f: &Elem<Rational>, g: &Elem<Rational>) -> Elem<Rational> {
    let mut acc: HashMap<Word, Rational> = HashMap::new();
    for (a, x) in f.terms() {
        for (b, y) in g.terms() {
            let xy = x * y;
            for (w, m) in internal_product_basis(a, b).iter() {
                acc.entry(w.clone())
                    .or_insert_with(Rational::zero)
                    .add_mul(&xy, &Rational::from_int(*m));
            }
        }
    }
    Elem::from_terms(f.weight(), acc).expect("weights")
}

/// f ∗ g by the splitting formula (the reference route).
pub fn internal_product<F: Field>(f: &Elem<F>, g: &Elem<F>) -> Result<Elem<F>, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Ok(Elem::zero(f.weight()));
    }
    if f.weight() != g.weight() {
        return Err(AlgebraError::WeightMismatch(f.weight(), g.weight()));
    }
    let order = f.field_order().max(g.field_order());
    let (fo, go) = (f.field_order(), g.field_order());
    if fo != 0 && go != 0 && fo != go {
        return Err(crate::exactmath::MathError::FieldMismatch(fo, go).into());
    }
    let fc = f.components();
    let gc = g.components();
    let mut parts: Vec<Elem<Rational>> = Vec::new();
    for (a, x) in fc.iter().enumerate() {
        for (b, y) in gc.iter().enumerate() {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let p = product_rational(x, y);
            while parts.len() <= a + b {
                parts.push(Elem::zero(f.weight()));
            }
            parts[a + b].add_scaled(&p, &Rational::one());
        }
    }
    Ok(Elem::from_components(f.weight(), order, &parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Elem<Rational>;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ip(a: &E, b: &E) -> E {
        internal_product(a, b).unwrap()
    }

    #[test]
    fn neutral_and_small_products() {
        assert_eq!(ip(&E::s_word(&[2, 1]), &E::s(3)), E::s_word(&[2, 1]));
        assert_eq!(ip(&E::s(3), &E::s_word(&[2, 1])), E::s_word(&[2, 1]));
        let s11 = E::s_word(&[1, 1]);
        assert_eq!(ip(&s11, &s11), s11.scale_rat(&Rational::from_int(2)));
        assert_eq!(ip(&E::s(2), &s11), s11);
    }

    #[test]
    fn mr_base_cases() {
        let b1 = E::s_bar(1);
        assert_eq!(ip(&b1, &b1), E::s(1));
        let bb = E::basis(w("1'.1'"));
        assert_eq!(ip(&E::s(2), &bb), bb);
        assert_eq!(ip(&E::s_word(&[1, 1]), &E::s_bar(2)), bb);
        let x = E::basis(w("1.2'"));
        assert_eq!(ip(&E::s_bar(3), &x), x.swap_alphabets());
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(internal_product(&E::s(2), &E::s(3)).is_err());
    }
}
