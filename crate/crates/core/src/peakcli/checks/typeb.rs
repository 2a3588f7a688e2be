//! BSym_n inside MR_n: the ζ_n, ζ̃_n, Chow's conditions, the exchange lemma,
//! the product formula for S̃^I and the idempotents e_λ.

use crate::combitypes::{
    b_compositions, b_partitions, refines, signed_compositions, HeadedPartition,
    Partition,
};
use crate::exactmath::Rational;
use crate::mrbsym::{
    bsym_basis, bsym_idempotents, bsym_zeta_product, bsym_zetas, chow_theta, lambda_bar, mu_prime,
    sharp_word, sigma_sharp_n, BsymSpace,
};
use crate::peakcli::expr::{indexed, parse_expansion, s_token};
use crate::peakcli::report::{Check, Section};
use crate::reptheory::{bsym_cartan, bsym_model, check_system_in};
use crate::symcore::{check_system, internal_product, product_fast, Elem, Series, Word};

use super::{check, ensure, err, Scope, Task};

const S: Section = Section::TypeB;

const ZETA: [&str; 3] = [
    "1/2 S1#",
    "1/2 S2# - 1/4 S11#",
    "1/2 S3# - 1/4 S21# - 1/4 S12# + 1/6 S111#",
];

const TILDE: [&str; 3] = [
    "S1 - 1/2 S1#",
    "S2 - 1/2 S2# - 1/2 S1 S1# + 3/8 S11#",
    "S3 - 1/2 S2 S1# - 1/2 S1 S2# + 3/8 S1 S11# - 1/2 S3# + 1/4 S21# + 1/2 S12# - 5/16 S111#",
];

const SHARP_IN_ZETA: [&str; 3] = ["2 z1", "2 z2 + 2 z1^2", "2 z3 + 2 z2 z1 + 2 z1 z2 + 4/3 z1^3"];

const S_IN_ZETA: [&str; 3] = [
    "z1 + t1",
    "z2 + 1/2 z1^2 + t1 z1 + t2",
    "1/6 z1^3 + z2 z1 + z3 + t1 z2 + 1/2 t1 z1^2 + t2 z1 + t3",
];

/// `S21` is S^{21}, `S21#` is (S^{21})^♯.
fn factor(tok: &str) -> Option<Elem<Rational>> {
    match tok.strip_suffix('#') {
        Some(t) => s_token(t).map(|p| sharp_word(&p)),
        None => s_token(tok).map(|p| Elem::s_word(&p)),
    }
}

/// λ ⪯ I: some sub-multiset T of the tail of λ has λ_0 + ΣT = i_0 and the
/// remaining tail refines the tail of I.
pub(crate) fn b_refines(lam: &HeadedPartition, i: &HeadedPartition) -> bool {
    if lam.weight() != i.weight() || lam.head > i.head {
        return false;
    }
    let parts = lam.tail.parts();
    let need = i.head - lam.head;
    (0u32..1 << parts.len()).any(|mask| {
        let (mut t, mut rest) = (0, Vec::new());
        for (k, &p) in parts.iter().enumerate() {
            if mask & (1 << k) != 0 {
                t += p;
            } else {
                rest.push(p);
            }
        }
        t == need && refines(&Partition::from_parts(rest), &i.tail).unwrap_or(false)
    })
}

pub(crate) fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    let top = 3.min(scope.max_n);
    out.push(Box::new(move || expansions(top)));
    for n in scope.upto(6) {
        out.push(Box::new(move || vec![system(n)]));
    }
    let w = 5.min(scope.max_n);
    out.push(Box::new(move || vec![exchange(w), sharp_products(w)]));
    for n in scope.upto(5) {
        out.push(Box::new(move || vec![prop_sz(n)]));
    }
    let w4 = 4.min(scope.max_n);
    out.push(Box::new(move || vec![chow(w4), antiautomorphism(w4)]));
    for n in scope.upto(8) {
        out.push(Box::new(move || vec![dimension(n)]));
    }
    for n in scope.upto(5) {
        out.push(Box::new(move || vec![radical_dim(n)]));
    }
    out
}

fn expansions(top: usize) -> Vec<Check> {
    let z = bsym_zetas(top.max(1));
    let zf = |t: &str| {
        indexed(t, "z")
            .map(|i| z.zeta[i].clone())
            .or_else(|| indexed(t, "t").map(|i| z.tilde[i].clone()))
    };
    let mut out = Vec::new();
    for k in 1..=top {
        out.push(check(S, format!("zeta-expansion/{k}"), Some(2), || {
            let want = parse_expansion(ZETA[k - 1], k, factor)?;
            ensure(z.zeta[k] == want, || format!("computed {}", z.zeta[k]))
        }));
        out.push(check(S, format!("zeta-tilde-expansion/{k}"), Some(2), || {
            let want = parse_expansion(TILDE[k - 1], k, factor)?;
            ensure(z.tilde[k] == want, || format!("computed {}", z.tilde[k]))
        }));
        out.push(check(S, format!("sharp-in-zetas/{k}"), Some(2), || {
            let got = parse_expansion(SHARP_IN_ZETA[k - 1], k, zf)?;
            ensure(got == sharp_word(&[k]), || format!("sum is {got}"))
        }));
        out.push(check(S, format!("s-in-zetas/{k}"), Some(2), || {
            let got = parse_expansion(S_IN_ZETA[k - 1], k, zf)?;
            ensure(got == Elem::s(k), || format!("sum is {got}"))
        }));
    }
    out
}

fn system(n: usize) -> Check {
    check(S, format!("idempotents/{n}"), Some(3), || {
        let sys = bsym_idempotents(n).map_err(err)?;
        ensure(sys.len() == b_partitions(n).len(), || "wrong count".into())?;
        let space = BsymSpace::new(n);
        for (l, e) in &sys {
            ensure(space.contains(e), || format!("e_{l} is not in BSym"))?;
        }
        // Products in MR_n are slow from n = 6 on; the structure constants
        // of BSym_n are much cheaper there.
        let rep = if n <= 5 {
            let elems: Vec<_> = sys.into_iter().map(|(_, e)| e).collect();
            check_system(&elems, &Elem::s(n), |a, b| product_fast(a, b).expect("weights"))
        } else {
            check_system_in(&bsym_model(n).map_err(err)?, &sys).map_err(err)?
        };
        ensure(rep.all(), || format!("{rep:?}"))
    })
}

fn ordered_exp(z: &[Elem<Rational>], w: usize, ascending: bool) -> Result<Series<Rational>, String> {
    let mut acc = Series::one(w);
    let mut ks: Vec<usize> = (1..=w).collect();
    if !ascending {
        ks.reverse();
    }
    for k in ks {
        let mut s = Series::zero(w);
        s.set(k, z[k].clone());
        acc = acc.mul(&s.exp().map_err(err)?);
    }
    Ok(acc)
}

/// λ̄_1 ∗ ℰ↓(ζ) = ℰ↑(ζ) and λ̄_1 ∗ ζ_i = ζ_i.
fn exchange(w: usize) -> Check {
    check(S, format!("exchange/{w}"), Some(6), || {
        let z = bsym_zetas(w);
        let down = ordered_exp(&z.zeta, w, false)?;
        let up = ordered_exp(&z.zeta, w, true)?;
        for n in 1..=w {
            let lb = lambda_bar::<Rational>(n);
            let got = internal_product(&lb, down.get(n)).map_err(err)?;
            ensure(got == *up.get(n), || format!("weight {n}"))?;
            ensure(internal_product(&lb, &z.zeta[n]).map_err(err)? == z.zeta[n], || {
                format!("lambda-bar * zeta_{n}")
            })?;
        }
        Ok(())
    })
}

/// σ_1^♯ ∗ ζ̃_n = 0 and σ_1^♯ ∗ ζ_n = 2ζ_n.
fn sharp_products(w: usize) -> Check {
    check(S, format!("sharp-products/{w}"), Some(6), || {
        let z = bsym_zetas(w);
        for n in 1..=w {
            let s = sigma_sharp_n::<Rational>(n);
            let t = internal_product(&s, &z.tilde[n]).map_err(err)?;
            ensure(t.is_zero(), || format!("sigma-sharp * zeta-tilde_{n} = {t}"))?;
            let p = internal_product(&s, &z.zeta[n]).map_err(err)?;
            ensure(p == z.zeta[n].scale_rat(&Rational::from_int(2)), || {
                format!("sigma-sharp * zeta_{n} = {p}")
            })?;
        }
        Ok(())
    })
}

fn prop_sz(n: usize) -> Check {
    check(S, format!("product-S-zeta/{n}"), Some(6), || {
        let lams = b_partitions(n);
        let prods: Vec<Elem<Rational>> = lams.iter().map(|l| bsym_zeta_product(&l.as_composition())).collect();
        for i in b_compositions(n) {
            let si = bsym_basis::<Rational>(&i);
            let down = i.sorted();
            for (lam, z) in lams.iter().zip(&prods) {
                let got = internal_product(&si, z).map_err(err)?;
                let what = || format!("S~^{{{i}}} * zeta^{{{lam}}}");
                if *lam == down {
                    let c = (1u64 << i.tail.len()) * down.m_tail();
                    let want = bsym_zeta_product(&i).scale_rat(&Rational::from_int(c as i64));
                    ensure(got == want, what)?;
                } else if !b_refines(lam, &down) {
                    ensure(got.is_zero(), what)?;
                }
            }
        }
        Ok(())
    })
}

fn mr_words(max: usize) -> Vec<Word> {
    (1..=max).flat_map(|k| signed_compositions(k).iter().map(Word::from).collect::<Vec<_>>()).collect()
}

/// σ_1^♯ ∗ σ_1 = σ_1^♯, σ_1^♯ ∗ σ_1^♯ = (σ_1^♯)^2 and
/// σ_1^♯ ∗ (FG) = μ'[(σ_1^♯ ∗ F) ⊗ Δ(G)].
fn chow(w: usize) -> Check {
    check(S, format!("chow/{w}"), Some(6), || {
        for n in 1..=w {
            let s = sigma_sharp_n::<Rational>(n);
            ensure(internal_product(&s, &Elem::s(n)).map_err(err)? == s, || format!("first condition, weight {n}"))?;
            let mut sq = Elem::zero(n);
            for a in 0..=n {
                sq = &sq + &sigma_sharp_n::<Rational>(a).mul(&sigma_sharp_n(n - a));
            }
            ensure(internal_product(&s, &s).map_err(err)? == sq, || format!("second condition, weight {n}"))?;
        }
        let words = mr_words(w);
        for f in &words {
            for g in &words {
                if f.weight() + g.weight() > w {
                    continue;
                }
                let fe = Elem::basis(f.clone());
                let ge = Elem::basis(g.clone());
                let fg = fe.mul(&ge);
                let lhs = internal_product(&sigma_sharp_n(fg.weight()), &fg).map_err(err)?;
                let rhs = mu_prime(&chow_theta(&fe), &ge);
                ensure(lhs == rhs, || format!("F = S^{{{f}}}, G = S^{{{g}}}"))?;
            }
        }
        Ok(())
    })
}

/// λ̄_n ∗ (FG) = (λ̄ ∗ G)(λ̄ ∗ F).
fn antiautomorphism(w: usize) -> Check {
    check(S, format!("lambda-bar-antiautomorphism/{w}"), None, || {
        let words = mr_words(w);
        let act = |e: &Elem<Rational>| internal_product(&lambda_bar(e.weight()), e).map_err(err);
        for f in &words {
            for g in &words {
                if f.weight() + g.weight() > w {
                    continue;
                }
                let fe = Elem::basis(f.clone());
                let ge = Elem::basis(g.clone());
                let lhs = act(&fe.mul(&ge))?;
                let rhs = act(&ge)?.mul(&act(&fe)?);
                ensure(lhs == rhs, || format!("F = S^{{{f}}}, G = S^{{{g}}}"))?;
            }
        }
        Ok(())
    })
}

fn dimension(n: usize) -> Check {
    check(S, format!("dimension/{n}"), None, || {
        let d = BsymSpace::new(n).dim();
        ensure(d == 1 << n, || format!("dim BSym_{n} = {d}"))?;
        ensure(b_compositions(n).len() == d, || "B-compositions".into())
    })
}

fn radical_dim(n: usize) -> Check {
    check(S, format!("radical-dimension/{n}"), None, || {
        let data = bsym_cartan(n).map_err(err)?;
        let want = (1 << n) - b_partitions(n).len();
        ensure(data.radical_dim == want, || format!("{} != {want}", data.radical_dim))?;
        let total: i64 = data.matrix().at_one().iter().flatten().sum();
        ensure(total == 1 << n, || format!("Cartan entries sum to {total}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refinement_order() {
        let h = |a: usize, t: &[usize]| HeadedPartition::new(a, t.to_vec());
        assert!(b_refines(&h(0, &[1, 1]), &h(1, &[1])));
        assert!(b_refines(&h(1, &[1]), &h(2, &[])));
        assert!(!b_refines(&h(2, &[]), &h(1, &[1])));
        assert!(!b_refines(&h(0, &[2]), &h(1, &[1])));
        assert!(b_refines(&h(1, &[2, 1]), &h(2, &[2])));
    }
}
