//! Idempotents built from φ^♯: E_λ in MR_n, η = σ_1·(σ_1^♯)^{-1/2} and the
//! images Ẽ_λ in 𝒫_n.

use crate::exactmath::Rational;
use crate::mrbsym::{ano_e, ano_tilde, eta, sharp_word, sigma_sharp, AnoNormalization};
use crate::peakcli::report::{Check, Section};
use crate::peakcore::peak_idempotents;
use crate::symcore::{check_system, product_fast, Elem};

use super::{check, ensure, err, peak_data, Scope, Task};

const S: Section = Section::Ano;

fn fast(a: &Elem<Rational>, b: &Elem<Rational>) -> Elem<Rational> {
    product_fast(a, b).expect("weights")
}

pub(crate) fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    for n in scope.upto(5) {
        out.push(Box::new(move || e_family(n)));
    }
    let w = 5.min(scope.max_n);
    out.push(Box::new(move || vec![eta_idempotent(w)]));
    for n in scope.upto(5) {
        out.push(Box::new(move || vec![tilde_system(n)]));
    }
    if scope.max_n >= 4 {
        out.push(Box::new(|| vec![tilde_differs(4)]));
    }
    out
}

fn e_family(n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for (norm, tag) in [(AnoNormalization::Printed, "printed"), (AnoNormalization::WithFactorial, "factorial")] {
        out.push(check(S, format!("E-orthogonal/{tag}/{n}"), Some(9), || {
            let es = ano_e(n, norm);
            for (a, (la, x)) in es.iter().enumerate() {
                for (b, (lb, y)) in es.iter().enumerate() {
                    if a != b {
                        ensure(fast(x, y).is_zero(), || format!("E_{la} * E_{lb} is nonzero"))?;
                    }
                }
            }
            Ok(())
        }));
    }
    let es = ano_e(n, AnoNormalization::WithFactorial);
    let sum = es.iter().fold(Elem::zero(n), |acc, (_, e)| &acc + e);
    let target = sharp_word(&[n]);
    out.push(check(S, format!("E-sum-is-S-sharp/{n}"), Some(9), || {
        ensure(sum == target, || {
            "the E_lambda sum to the weight-n part of (sigma-sharp)^(1/2), not S_n-sharp \
             (S_1-sharp * S_1-sharp = 2 S_1-sharp, so no sum of orthogonal idempotents equals it)"
                .into()
        })
    }));
    out.push(check(S, format!("E-idempotent/{n}"), None, || {
        for (l, e) in &es {
            ensure(fast(e, e) == *e, || format!("E_{l} is not idempotent"))?;
        }
        Ok(())
    }));
    out.push(check(S, format!("E-sum-is-root/{n}"), None, || {
        let root = sigma_sharp::<Rational>(n).inverse_sqrt().map_err(err)?.inverse().map_err(err)?;
        ensure(sum == *root.get(n), || "sum differs from the square root".into())
    }));
    out
}

fn eta_idempotent(w: usize) -> Check {
    check(S, format!("eta-idempotent/{w}"), Some(9), || {
        let e = eta(w);
        for n in 1..=w {
            let x = e.get(n);
            ensure(fast(x, x) == *x, || format!("eta_{n} * eta_{n} differs from eta_{n}"))?;
        }
        Ok(())
    })
}

fn tilde_system(n: usize) -> Check {
    check(S, format!("E-tilde-system/{n}"), Some(9), || {
        let sys = ano_tilde(n, AnoNormalization::WithFactorial);
        let data = peak_data(n, 2)?;
        for (l, e) in &sys {
            ensure(data.0.model.contains(e), || format!("E~_{l} is outside the peak algebra"))?;
        }
        let elems: Vec<_> = sys.into_iter().map(|(_, e)| e).collect();
        let rep = check_system(&elems, &Elem::s(n), fast);
        ensure(rep.all(), || format!("{rep:?}"))
    })
}

fn tilde_differs(n: usize) -> Check {
    check(S, format!("E-tilde-differs/{n}"), Some(9), || {
        let ours = peak_idempotents(n, 2).map_err(err)?;
        let theirs = ano_tilde(n, AnoNormalization::WithFactorial);
        ensure(ours.len() == theirs.len(), || "label sets differ".into())?;
        let mut differ = false;
        for (l, x) in &ours {
            let y = theirs
                .iter()
                .find(|(m, _)| m == l)
                .map(|(_, y)| y)
                .ok_or_else(|| format!("no E~ for {l}"))?;
            differ |= x != y;
        }
        ensure(differ, || "the two systems coincide".into())
    })
}
