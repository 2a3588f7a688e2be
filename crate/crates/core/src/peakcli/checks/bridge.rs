//! r = 2: the projection A-bar = A from BSym onto Sym, the corner
//! ε_n ∗ BSym_n ∗ ε_n, and the Cartan data and quiver of 𝒫_n.

use std::collections::BTreeMap;

use crate::combitypes::{b_compositions, b_partitions, HeadedComposition, HeadedPartition, Partition};
use crate::exactmath::{Echelon, Rational};
use crate::mrbsym::{bsym_basis, bsym_e, bsym_idempotents, bsym_zetas};
use crate::peakcli::report::{Check, Section};
use crate::peakcore::{solve_zeta_r, zeta_r_product};
use crate::reptheory::{apply, bsym_cartan, bsym_model, quiver};
use crate::symcore::Elem;

use super::{check, ensure, err, peak_data, Scope, Task};

const S: Section = Section::Bridge;

fn is_two_peak(i: &HeadedComposition) -> bool {
    i.head.is_multiple_of(2) && i.tail.parts().iter().all(|p| p % 2 == 1)
}

fn is_two_peak_label(l: &HeadedPartition) -> bool {
    l.head.is_multiple_of(2) && l.tail.parts().iter().all(|p| p % 2 == 1)
}

pub(crate) fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    let w = 6.min(scope.max_n);
    out.push(Box::new(move || vec![zeta_projections(w)]));
    for n in scope.upto(6) {
        out.push(Box::new(move || vec![e_projections(n), projection_image(n)]));
    }
    for n in scope.upto(6) {
        out.push(Box::new(move || vec![corner(n)]));
    }
    for n in scope.upto(5) {
        out.push(Box::new(move || vec![cartan_restriction(n)]));
    }
    for n in scope.upto(8) {
        out.push(Box::new(move || vec![quiver_corollary(n)]));
    }
    out
}

fn zeta_projections(w: usize) -> Check {
    check(S, format!("zeta-projections/{w}"), Some(6), || {
        let z = bsym_zetas(w);
        let z2 = solve_zeta_r(w, 2);
        for n in 1..=w {
            let (odd, even) = if n % 2 == 1 { (z2[n].clone(), Elem::zero(n)) } else { (Elem::zero(n), z2[n].clone()) };
            ensure(z.zeta[n].project() == odd, || format!("projection of zeta_{n}"))?;
            ensure(z.tilde[n].project() == even, || format!("projection of zeta~_{n}"))?;
        }
        Ok(())
    })
}

fn e_projections(n: usize) -> Check {
    check(S, format!("e-projections/{n}"), Some(6), || {
        for i in b_compositions(n) {
            let p = bsym_e(&i).project();
            let want = if is_two_peak(&i) {
                let m = i.sorted().m_tail();
                zeta_r_product(&i, 2).scale_rat(&Rational::new(1, m as i64))
            } else {
                Elem::zero(n)
            };
            ensure(p == want, || format!("projection of e_{i}"))?;
        }
        Ok(())
    })
}

/// The projection of BSym_n is 𝒫_n.
fn projection_image(n: usize) -> Check {
    check(S, format!("projection-image/{n}"), Some(7), || {
        let data = peak_data(n, 2)?;
        let model = &data.0.model;
        let mut span = Echelon::new(model.dim());
        for i in b_compositions(n) {
            let p = bsym_basis::<Rational>(&i).project();
            let x = model.coordinates(&p).map_err(|e| format!("projection of S~^{{{i}}}: {e}"))?;
            span.insert(x);
        }
        ensure(span.rank() == model.dim(), || format!("rank {} of {}", span.rank(), model.dim()))
    })
}

/// ε_n = Σ_{λ 2-peak} e_λ is idempotent, dim ε∗BSym∗ε = dim 𝒫_n, and the
/// corner projects onto 𝒫_n.
fn corner(n: usize) -> Check {
    check(S, format!("corner/{n}"), Some(7), || {
        let model = bsym_model(n).map_err(err)?;
        let mut eps = Elem::zero(n);
        for (l, e) in bsym_idempotents(n).map_err(err)? {
            if is_two_peak_label(&l) {
                eps = &eps + &e;
            }
        }
        let x = model.coordinates(&eps).map_err(err)?;
        ensure(model.product(&x, &x) == x, || "epsilon is not idempotent".into())?;
        let (left, right) = (model.left_matrix(&x), model.right_matrix(&x));
        let mut span = Echelon::new(model.dim());
        for k in 0..model.dim() {
            let mut b = vec![Rational::zero(); model.dim()];
            b[k] = Rational::one();
            span.insert(apply(&left, &apply(&right, &b)));
        }
        let peak = peak_data(n, 2)?;
        let pm = &peak.0.model;
        ensure(span.rank() == pm.dim(), || format!("corner has dimension {}, the peak algebra {}", span.rank(), pm.dim()))?;
        let mut image = Echelon::new(pm.dim());
        for v in span.reduced_rows() {
            let p = model.element(&v).project();
            image.insert(pm.coordinates(&p).map_err(err)?);
        }
        ensure(image.rank() == pm.dim(), || format!("corner projects onto dimension {}", image.rank()))?;
        // ε projects to the unit.
        ensure(eps.project() == Elem::s(n), || "epsilon does not project to S_n".into())
    })
}

fn cartan_restriction(n: usize) -> Check {
    check(S, format!("cartan-restriction/{n}"), Some(7), || {
        let b = bsym_cartan(n).map_err(err)?.matrix().restrict(is_two_peak_label);
        let p = peak_data(n, 2)?.1.matrix();
        let mut bl = b.labels.clone();
        let mut pl = p.labels.clone();
        bl.sort();
        pl.sort();
        ensure(bl == pl, || "label sets differ".into())?;
        for row in &p.labels {
            for col in &p.labels {
                let (x, y) = (b.entry(row, col), p.entry(row, col));
                ensure(x == y, || format!("entry ({row}, {col}): BSym {x:?}, peak {y:?}"))?;
            }
        }
        Ok(())
    })
}

/// Expected arrows between odd partitions: delete two unequal parts (1),
/// merge three parts with at most two equal (2 if distinct, 1 otherwise).
pub(crate) fn expected_arrows(n: usize) -> BTreeMap<(HeadedPartition, HeadedPartition), i64> {
    let label = |p: &[usize]| HeadedPartition::new(n - p.iter().sum::<usize>(), p.to_vec());
    let mut out = BTreeMap::new();
    for l in b_partitions(n).into_iter().filter(is_two_peak_label) {
        let mu = l.tail.parts().to_vec();
        let mut done = std::collections::BTreeSet::new();
        for a in 0..mu.len() {
            for b in a + 1..mu.len() {
                if mu[a] != mu[b] && done.insert((mu[a], mu[b], 0)) {
                    let mut rest = mu.clone();
                    rest.remove(b);
                    rest.remove(a);
                    *out.entry((l.clone(), label(Partition::from_parts(rest).parts()))).or_insert(0) += 1;
                }
                for c in b + 1..mu.len() {
                    let t = (mu[a], mu[b], mu[c]);
                    if t.0 == t.1 && t.1 == t.2 || !done.insert(t) {
                        continue;
                    }
                    let m = if t.0 != t.1 && t.1 != t.2 && t.0 != t.2 { 2 } else { 1 };
                    let mut rest = mu.clone();
                    rest.remove(c);
                    rest.remove(b);
                    rest.remove(a);
                    rest.push(t.0 + t.1 + t.2);
                    *out.entry((l.clone(), label(Partition::from_parts(rest).parts()))).or_insert(0) += m;
                }
            }
        }
    }
    out
}

fn quiver_corollary(n: usize) -> Check {
    check(S, format!("quiver/{n}"), None, || {
        let m = peak_data(n, 2)?.1.matrix();
        let got: BTreeMap<(HeadedPartition, HeadedPartition), i64> =
            quiver(&m).into_iter().map(|(s, t, k)| ((s, t), k)).collect();
        let want = expected_arrows(n);
        for (k, v) in &want {
            let g = got.get(k).copied().unwrap_or(0);
            ensure(g == *v, || format!("{} -> {}: {g} arrows, expected {v}", k.0, k.1))?;
        }
        for (k, v) in &got {
            ensure(want.contains_key(k), || format!("unexpected {v} arrows {} -> {}", k.0, k.1))?;
        }
        Ok(())
    })
}
