//! 𝒫^(r)_n: Zassenhaus elements of level r, their coproduct, the product
//! formula for T^I, the idempotents e^(r)_λ and the radical.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::combitypes::{
    cmp_labels, compositions, order_index, rpeak_compositions, rpeak_partitions, HeadedComposition,
    OrderKind,
};
use crate::exactmath::{Cyclo, Echelon, Rational};
use crate::peakcli::expr::parse_expansion;
use crate::peakcli::report::{Check, Section};
use crate::peakcore::{
    peak_generators, peak_idempotents, solve_y, solve_y_series, solve_zeta_r, t_product, t_sign,
    theta, zeta_r_product,
};
use crate::reptheory::radical;
use crate::symcore::{
    check_system, internal_product, product_fast, zassenhaus, Elem, Tensor, Word,
};

use super::typea::s_factor;
use super::{check, ensure, err, peak_data, Scope, Task};

const S: Section = Section::Peak;

const ZETA2: [&str; 5] = [
    "S1",
    "S2 - 1/2 S11",
    "S3 - S21 + 1/3 S111",
    "S4 - S31 + 1/2 S211 - 1/8 S1111",
    "S5 - S41 + 1/2 S311 - S23 + S221 - 1/2 S2111 + 1/2 S113 - 1/2 S1121 + 1/5 S11111",
];

const ZETA3: [&str; 6] = [
    "S1",
    "S2 - 1/2 S11",
    "S3 - S21 + 1/3 S111",
    "S4 - S31 - 1/2 S22 + 3/4 S211 + 1/4 S112 - 1/4 S1111",
    "S5 - S41 - S32 + S311 + S212 - 2/3 S2111 - 1/3 S1112 + 1/5 S11111",
    "S6 - S51 - S42 + S411 + S312 - 2/3 S3111 + 1/3 S222 - 1/6 S2211 \
     - 2/3 S2112 + 3/8 S21111 - 1/6 S1122 + 1/12 S11211 + 5/24 S11112 - 1/9 S111111",
];

fn parts(i: &HeadedComposition) -> impl Iterator<Item = usize> + '_ {
    std::iter::once(i.head).chain(i.tail.parts().iter().copied())
}

fn tensor(a: &Elem<Rational>, b: &Elem<Rational>) -> Tensor<Rational> {
    let mut t = Tensor::new();
    for (u, x) in a.terms() {
        for (v, y) in b.terms() {
            let e = t.entry((u.clone(), v.clone())).or_insert_with(Rational::zero);
            *e += &(x * y);
        }
    }
    t.retain(|_, v| !v.is_zero());
    t
}

fn add_tensor(acc: &mut Tensor<Rational>, t: Tensor<Rational>) {
    for (k, v) in t {
        *acc.entry(k).or_insert_with(Rational::zero) += &v;
    }
    acc.retain(|_, v| !v.is_zero());
}

fn word_index(n: usize) -> (usize, HashMap<Word, usize>) {
    let words: Vec<Word> = compositions(n).iter().map(Word::from).collect();
    (words.len(), words.into_iter().enumerate().map(|(i, w)| (w, i)).collect())
}

pub(crate) fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    let max = scope.max_n;
    out.push(Box::new(move || expansions(max)));
    for r in 2..=4 {
        for n in scope.upto(7) {
            out.push(Box::new(move || vec![system(n, r)]));
        }
    }
    for r in 2..=3 {
        for n in scope.upto(6) {
            out.push(Box::new(move || vec![coproduct(n, r), t_lemma(n, r)]));
        }
    }
    for r in 2..=3 {
        for n in scope.upto(6) {
            out.push(Box::new(move || vec![radical_span(n, r)]));
        }
    }
    for n in scope.upto(7) {
        for r in 2..=n.min(8) {
            out.push(Box::new(move || vec![semisimple_quotient(n, r)]));
        }
    }
    for r in 2..=3 {
        for n in scope.upto(4) {
            out.push(Box::new(move || vec![left_ideal(n, r)]));
        }
    }
    for r in 2..=3 {
        let w = 5.min(max);
        out.push(Box::new(move || vec![y_system(w, r)]));
    }
    for r in 3..=5 {
        for n in scope.upto(5) {
            out.push(Box::new(move || vec![other_root(n, r)]));
        }
    }
    out
}

fn expansions(max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for (r, table) in [(2usize, &ZETA2[..]), (3, &ZETA3[..])] {
        let top = table.len().min(max);
        let z = solve_zeta_r(top.max(1), r);
        for k in 1..=top {
            out.push(check(S, format!("zeta-expansion/r{r}/{k}"), Some(2), || {
                let want = parse_expansion(table[k - 1], k, s_factor)?;
                ensure(z[k] == want, || format!("computed {}", z[k]))
            }));
        }
        out.push(check(S, format!("agrees-with-zassenhaus/r{r}"), None, || {
            let n = (2 * r - 1).min(max);
            let za = zassenhaus(n);
            for k in 1..=n {
                ensure(za[k] == solve_zeta_r(n, r)[k], || format!("differs at {k}"))?;
            }
            Ok(())
        }));
    }
    out
}

fn system(n: usize, r: usize) -> Check {
    check(S, format!("idempotents/r{r}/{n}"), Some(3), || {
        let sys = peak_idempotents(n, r).map_err(err)?;
        ensure(sys.len() == rpeak_partitions(n, r).len(), || "wrong count".into())?;
        let data = peak_data(n, r)?;
        let pm = &data.0;
        let (dim, index) = word_index(n);
        let mut span = Echelon::<Cyclo>::new(dim);
        for row in &pm.cyclo_basis {
            span.insert(row.clone());
        }
        for (l, e) in &sys {
            ensure(pm.model.contains(e), || format!("e_{l} is outside the model"))?;
            let c = e.map_coeffs(|x| Cyclo::from_rational(x.clone()));
            ensure(span.contains(&c.to_dense(&index, dim)), || format!("e_{l} is outside the span over Q(q)"))?;
        }
        let elems: Vec<_> = sys.into_iter().map(|(_, e)| e).collect();
        let rep = check_system(&elems, &Elem::s(n), |a, b| product_fast(a, b).expect("weights"));
        ensure(rep.all(), || format!("{rep:?}"))
    })
}

/// ζ^(r)_n is primitive when r ∤ n; otherwise Δζ^(r)_n = Σ_i ζ^(r)_{ir} ⊗ ζ^(r)_{n-ir}.
fn coproduct(n: usize, r: usize) -> Check {
    check(S, format!("coproduct/r{r}/{n}"), Some(6), || {
        let z = solve_zeta_r(n, r);
        let mut want = Tensor::new();
        if !n.is_multiple_of(r) {
            add_tensor(&mut want, tensor(&Elem::one(), &z[n]));
            add_tensor(&mut want, tensor(&z[n], &Elem::one()));
        } else {
            for i in 0..=n / r {
                add_tensor(&mut want, tensor(&z[i * r], &z[n - i * r]));
            }
        }
        ensure(z[n].coproduct() == want, || "coproduct differs".into())
    })
}

/// T^I ∗ ζ^(r)λ = 0 for I↓ < λ and sign(I)·m_I·ζ^(r)I for I↓ = λ.
fn t_lemma(n: usize, r: usize) -> Check {
    check(S, format!("T-product/r{r}/{n}"), Some(6), || {
        let labels = order_index(n, OrderKind::Peak(r));
        let prods: Vec<Elem<Rational>> = labels.iter().map(|l| zeta_r_product(&l.as_composition(), r)).collect();
        for i in rpeak_compositions(n, r) {
            let t = t_product(parts(&i), r);
            let down = i.sorted();
            for (lam, z) in labels.iter().zip(&prods) {
                let what = || format!("T^{{{i}}} * zeta^{{{lam}}}");
                match cmp_labels(&down, lam) {
                    Ordering::Less => ensure(internal_product(&t, z).map_err(err)?.is_zero(), what)?,
                    Ordering::Equal => {
                        let c = t_sign(parts(&i), r) * down.m_tail() as i64;
                        let want = zeta_r_product(&i, r).scale_rat(&Rational::from_int(c));
                        ensure(internal_product(&t, z).map_err(err)? == want, what)?;
                    }
                    Ordering::Greater => {}
                }
            }
        }
        Ok(())
    })
}

/// The radical is spanned by the S_{i_0}·θ_q(S^I - S^{I'}), I' a
/// rearrangement of I.
fn radical_span(n: usize, r: usize) -> Check {
    check(S, format!("radical/r{r}/{n}"), None, || {
        let data = peak_data(n, r)?;
        let model = &data.0.model;
        let rad = radical(model);
        ensure(rad.len() == data.1.radical_dim, || "radical dimension".into())?;
        let mut rad_span = Echelon::new(model.dim());
        for v in &rad {
            rad_span.insert(v.clone());
        }
        let mut gen = Echelon::new(model.dim());
        for i0 in 0..n {
            let head = Elem::<Cyclo>::s(i0);
            for j in compositions(n - i0) {
                let base = theta(&Elem::<Rational>::s_word(j.parts()), r as u32).map_err(err)?;
                for k in crate::combitypes::rearrangements(j.parts()) {
                    if k == j {
                        continue;
                    }
                    let other = theta(&Elem::<Rational>::s_word(k.parts()), r as u32).map_err(err)?;
                    let g = head.mul(&(&base - &other));
                    for part in g.components() {
                        let x = model.coordinates(&part).map_err(err)?;
                        ensure(rad_span.contains(&x), || format!("S_{i0} theta(S^{{{j}}} - S^{{{k}}}) is not radical"))?;
                        gen.insert(x);
                    }
                }
            }
        }
        ensure(gen.rank() == rad.len(), || format!("generators span {} of {}", gen.rank(), rad.len()))
    })
}

fn semisimple_quotient(n: usize, r: usize) -> Check {
    check(S, format!("semisimple-quotient/r{r}/{n}"), None, || {
        let data = peak_data(n, r)?;
        let q = data.0.dim() - data.1.radical_dim;
        let k = rpeak_partitions(n, r).len();
        ensure(q == k, || format!("quotient has dimension {q}, expected {k}"))?;
        let m = data.1.matrix();
        ensure(m.size() == k, || "label count".into())
    })
}

/// Sym_n ∗ θ_q(Sym_n) ⊆ θ_q(Sym_n).
fn left_ideal(n: usize, r: usize) -> Check {
    check(S, format!("left-ideal/r{r}/{n}"), None, || {
        let (dim, index) = word_index(n);
        let thetas: Vec<Elem<Cyclo>> = compositions(n)
            .iter()
            .map(|j| theta(&Elem::<Rational>::s_word(j.parts()), r as u32).map_err(err))
            .collect::<Result<_, _>>()?;
        let mut span = Echelon::<Cyclo>::new(dim);
        for t in &thetas {
            span.insert(t.to_dense(&index, dim));
        }
        for i in compositions(n) {
            let s = Elem::<Cyclo>::s_word(i.parts());
            for t in &thetas {
                let p = product_fast(&s, t).map_err(err)?;
                ensure(span.contains(&p.to_dense(&index, dim)), || format!("S^{{{i}}} * theta(..) escapes"))?;
            }
        }
        Ok(())
    })
}

/// The Y_μ are a complete orthogonal system of Sym_n, the Y_i are
/// primitive, and e^(r)_λ is the sum of the Y_μ over its fiber.
fn y_system(w: usize, r: usize) -> Check {
    check(S, format!("Y-idempotents/r{r}/{w}"), None, || {
        let y = solve_y_series(w, r);
        for (i, yi) in y.iter().enumerate().skip(1) {
            ensure(yi.is_primitive(), || format!("Y_{i} is not primitive"))?;
        }
        for n in 1..=w {
            let ys = solve_y(n, r);
            let elems: Vec<_> = ys.iter().map(|(_, e)| e.clone()).collect();
            let rep = check_system(&elems, &Elem::s(n), |a, b| product_fast(a, b).expect("weights"));
            ensure(rep.all(), || format!("n = {n}: {rep:?}"))?;
            for (lam, e) in peak_idempotents(n, r).map_err(err)? {
                let mut fiber = Elem::zero(n);
                for (mu, y) in &ys {
                    let head: usize = mu.parts().iter().filter(|p| *p % r == 0).sum();
                    let tail: Vec<usize> = mu.parts().iter().copied().filter(|p| p % r != 0).collect();
                    if head == lam.head && tail == lam.tail.parts() {
                        fiber = &fiber + y;
                    }
                }
                ensure(e == fiber, || format!("e_{lam} is not the sum of its Y_mu"))?;
            }
        }
        Ok(())
    })
}

/// q ↦ q^k for k prime to r maps the generators into the same span.
fn other_root(n: usize, r: usize) -> Check {
    check(S, format!("other-root/r{r}/{n}"), None, || {
        let (dim, index) = word_index(n);
        let gens = peak_generators(n, r);
        let mut span = Echelon::<Cyclo>::new(dim);
        for g in &gens {
            span.insert(g.to_dense(&index, dim));
        }
        ensure(span.rank() == rpeak_compositions(n, r).len(), || format!("rank {}", span.rank()))?;
        for k in 2..r as i64 {
            if crate::exactmath::gcd(k, r as i64) != 1 {
                continue;
            }
            for g in &gens {
                let h = g.map_coeffs(|c| c.galois(k));
                ensure(span.contains(&h.to_dense(&index, dim)), || format!("q -> q^{k} leaves the span"))?;
            }
        }
        Ok(())
    })
}
