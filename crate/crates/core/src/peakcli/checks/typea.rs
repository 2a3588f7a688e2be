//! Sym_n: Zassenhaus expansions, the e_λ, lem-SetZ, the ζ^I ∗ ζ^J lemma and
//! the type A Cartan data.

use std::collections::{BTreeMap, HashMap};

use crate::combitypes::{
    compositions, m_factor, partitions, rearrangements, refines, Composition, HeadedPartition,
};
use crate::exactmath::{Echelon, Rational};
use crate::peakcli::expr::{indexed, parse_expansion, s_token};
use crate::peakcli::report::{Check, Section};
use crate::reptheory::{loewy, quiver, radical, type_a_cartan, type_a_model, Poly};
use crate::symcore::{
    check_system, gamma, idempotent_basis, internal_product, product_fast, type_a_idempotents,
    zassenhaus, zeta_products, Elem, Word,
};

use super::{check, ensure, err, Scope, Task};

const S: Section = Section::TypeA;

/// ζ_1..ζ_6 as displayed.
pub(crate) const ZETA: [&str; 6] = [
    "S1",
    "S2 - 1/2 S11",
    "S3 - S21 + 1/3 S111",
    "S4 - S31 - 1/2 S22 + 3/4 S211 + 1/4 S112 - 1/4 S1111",
    "S5 - S41 - S32 + S311 + S212 - 2/3 S2111 - 1/3 S1112 + 1/5 S11111",
    "S6 - S51 - S42 + S411 - 1/2 S33 + 1/2 S321 + S312 - 5/6 S3111 + 1/3 S222 \
     - 1/6 S2211 + 1/2 S213 - 1/2 S2121 - 2/3 S2112 + 13/24 S21111 - 1/6 S1122 \
     + 1/12 S11211 - 1/6 S1113 + 1/6 S11121 + 5/24 S11112 - 1/6 S111111",
];

/// S_1..S_6 in terms of the ζ_k, as displayed.
const S_IN_ZETA: [&str; 6] = [
    "z1",
    "z2 + 1/2 z1^2",
    "z3 + z2 z1 + 1/6 z1^3",
    "z4 + z3 z1 + 1/2 z2^2 + 1/2 z2 z1^2 + 1/24 z1^4",
    "z5 + z4 z1 + z3 z2 + 1/2 z3 z1^2 + 1/2 z2^2 z1 + 1/6 z2 z1^3 + 1/120 z1^5",
    "z6 + z5 z1 + z4 z2 + 1/2 z4 z1^2 + 1/2 z3^2 + z3 z2 z1 + 1/6 z3 z1^3 + 1/6 z2^3 \
     + 1/4 z2^2 z1^2 + 1/24 z2 z1^4 + 1/720 z1^6",
];

pub(crate) fn s_factor(tok: &str) -> Option<Elem<Rational>> {
    s_token(tok).map(|p| Elem::s_word(&p))
}

fn zeta_word(parts: &[usize]) -> Elem<Rational> {
    zeta_products(&Word::from_parts(parts))
}

/// Every way of distributing the letters of `j` (order kept) into
/// ℓ(i) subwords with sums i_1, i_2, ...; one entry per assignment.
pub(crate) fn unshufflings(i: &[usize], j: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(
        i: &[usize],
        j: &[usize],
        pos: usize,
        sums: &mut Vec<usize>,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pos == j.len() {
            if sums.iter().zip(i).all(|(a, b)| a == b) {
                out.push(cur.clone());
            }
            return;
        }
        for slot in 0..i.len() {
            if sums[slot] + j[pos] <= i[slot] {
                sums[slot] += j[pos];
                cur[slot].push(j[pos]);
                go(i, j, pos + 1, sums, cur, out);
                cur[slot].pop();
                sums[slot] -= j[pos];
            }
        }
    }
    let mut out = Vec::new();
    go(i, j, 0, &mut vec![0; i.len()], &mut vec![Vec::new(); i.len()], &mut out);
    out
}

pub(crate) fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    let top = 6.min(scope.max_n);
    out.push(Box::new(move || expansions(top)));
    for n in scope.upto(7) {
        out.push(Box::new(move || vec![system(n)]));
    }
    for n in scope.upto(5) {
        out.push(Box::new(move || vec![basis(n)]));
    }
    for n in scope.upto(6) {
        out.push(Box::new(move || vec![lem_setz(n), zeta_lemma(n)]));
    }
    out.push(Box::new(radical_examples));
    for n in scope.upto(6) {
        out.push(Box::new(move || vec![cartan_formula(n)]));
    }
    for n in scope.upto(7) {
        out.push(Box::new(move || cartan_properties(n)));
    }
    out
}

fn expansions(top: usize) -> Vec<Check> {
    let z = zassenhaus(top.max(1));
    let mut out = Vec::new();
    for k in 1..=top {
        out.push(check(S, format!("zeta-expansion/{k}"), Some(2), || {
            let want = parse_expansion(ZETA[k - 1], k, s_factor)?;
            ensure(z[k] == want, || format!("computed {}", z[k]))
        }));
    }
    for k in 1..=top {
        out.push(check(S, format!("s-in-zetas/{k}"), Some(2), || {
            let got = parse_expansion(S_IN_ZETA[k - 1], k, |t| indexed(t, "z").map(|i| z[i].clone()))?;
            ensure(got == Elem::s(k), || format!("sum is {got}"))
        }));
    }
    out
}

fn system(n: usize) -> Check {
    check(S, format!("idempotents/{n}"), Some(3), || {
        let sys = type_a_idempotents(n).map_err(err)?;
        ensure(sys.len() == partitions(n).len(), || "wrong count".into())?;
        let elems: Vec<_> = sys.into_iter().map(|(_, e)| e).collect();
        let rep = check_system(&elems, &Elem::s(n), |a, b| product_fast(a, b).expect("weights"));
        ensure(rep.all(), || format!("{rep:?}"))
    })
}

fn basis(n: usize) -> Check {
    check(S, format!("idempotent-basis/{n}"), None, || {
        let b = idempotent_basis(n);
        let words: Vec<Word> = compositions(n).iter().map(Word::from).collect();
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut ech = Echelon::<Rational>::new(words.len());
        for (i, e) in &b {
            ensure(product_fast(e, e).map_err(err)? == *e, || format!("e_{i} is not idempotent"))?;
            ech.insert(e.to_dense(&index, words.len()));
        }
        ensure(ech.rank() == words.len(), || format!("rank {}", ech.rank()))
    })
}

fn lem_setz(n: usize) -> Check {
    check(S, format!("lem-SetZ/{n}"), Some(6), || {
        let comps = compositions(n);
        for i in &comps {
            let s_i = Elem::s_word(i.parts());
            for j in &comps {
                let got = internal_product(&s_i, &zeta_word(j.parts())).map_err(err)?;
                let (id, jd) = (i.sorted(), j.sorted());
                let finer = refines(&jd, &id).map_err(|e| e.to_string())?;
                let expect = if !finer {
                    Elem::zero(n)
                } else if jd == id {
                    zeta_word(i.parts()).scale_rat(&Rational::from_int(m_factor(id.parts()) as i64))
                } else {
                    let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                    for u in unshufflings(i.parts(), j.parts()) {
                        *counts.entry(u.concat()).or_default() += 1;
                    }
                    let mut e = Elem::zero(n);
                    for (k, c) in counts {
                        e.add_scaled(&zeta_word(&k), &Rational::from_int(c));
                    }
                    e
                };
                ensure(got == expect, || format!("S^{{{i}}} * zeta^{{{j}}}"))?;
            }
        }
        Ok(())
    })
}

fn zeta_lemma(n: usize) -> Check {
    check(S, format!("zeta-product-lemma/{n}"), Some(6), || {
        let comps = compositions(n);
        let mut gammas: HashMap<Vec<usize>, Elem<Rational>> = HashMap::new();
        for k in 1..=n {
            for c in compositions(k) {
                let g = gamma(&c);
                ensure(g.is_primitive(), || format!("Gamma_{c} is not primitive"))?;
                gammas.insert(c.0.clone(), g);
            }
        }
        for i in &comps {
            let zi = zeta_word(i.parts());
            for j in &comps {
                let p = product_fast(&zi, &zeta_word(j.parts())).map_err(err)?;
                let what = || format!("zeta^{{{i}}} * zeta^{{{j}}}");
                if j.len() < i.len() {
                    ensure(p.is_zero(), what)?;
                } else if j.len() == i.len() {
                    let expect = if rearrangements(i.parts()).contains(j) {
                        zi.scale_rat(&Rational::from_int(m_factor(i.parts()) as i64))
                    } else {
                        Elem::zero(n)
                    };
                    ensure(p == expect, what)?;
                } else {
                    let mut expect = Elem::zero(n);
                    for u in unshufflings(i.parts(), j.parts()) {
                        let t = u.iter().fold(Elem::one(), |acc, part| acc.mul(&gammas[part]));
                        expect = &expect + &t;
                    }
                    ensure(p == expect, what)?;
                    ensure(p.commutative_image().is_empty(), || format!("{} not radical", what()))?;
                }
            }
        }
        Ok(())
    })
}

fn radical_examples() -> Vec<Check> {
    vec![
        check(S, "radical/2", None, || {
            let m = type_a_model(2).map_err(err)?;
            ensure(radical(&m).is_empty(), || "nonzero".into())
        }),
        check(S, "radical/3", None, || {
            let m = type_a_model(3).map_err(err)?;
            let rad = radical(&m);
            ensure(rad.len() == 1, || format!("dimension {}", rad.len()))?;
            let x = m.element(&rad[0]);
            let d = &Elem::s_word(&[2, 1]) - &Elem::s_word(&[1, 2]);
            let c = m.coordinates(&d).map_err(err)?;
            let mut ech = Echelon::new(m.dim());
            ech.insert(rad[0].clone());
            ensure(ech.contains(&c), || format!("radical spanned by {x}"))?;
            let f = loewy(&m, &rad);
            ensure(f.dims() == vec![4, 1, 0], || format!("Loewy dims {:?}", f.dims()))
        }),
    ]
}

fn hp(p: &crate::combitypes::Partition) -> HeadedPartition {
    HeadedPartition::plain(p.clone())
}

/// Entry (row μ, column λ) = t^{ℓ(λ)-ℓ(μ)} when λ refines μ, else 0.
fn cartan_formula(n: usize) -> Check {
    check(S, format!("cartan-formula/{n}"), Some(4), || {
        let m = type_a_cartan(n).map_err(err)?.matrix();
        for (i, mu) in m.labels.iter().enumerate() {
            for (j, lam) in m.labels.iter().enumerate() {
                let expect = if refines(&lam.tail, &mu.tail).map_err(|e| e.to_string())? {
                    Poly::monomial(1, lam.len() - mu.len())
                } else {
                    Poly::zero()
                };
                ensure(m.entries[i][j] == expect, || {
                    format!("entry ({mu}, {lam}) is {} but the formula gives {}", m.entries[i][j], expect)
                })?;
            }
        }
        Ok(())
    })
}

fn cartan_properties(n: usize) -> Vec<Check> {
    let data = match type_a_cartan(n) {
        Ok(d) => d,
        Err(e) => return vec![check(S, format!("cartan/{n}"), None, || Err(e.to_string()))],
    };
    let m = data.matrix();
    let mut out = Vec::new();
    out.push(check(S, format!("cartan-support/{n}"), None, || {
        for (i, mu) in m.labels.iter().enumerate() {
            for (j, lam) in m.labels.iter().enumerate() {
                let p = &m.entries[i][j];
                if p.is_zero() {
                    continue;
                }
                let finer = refines(&lam.tail, &mu.tail).map_err(|e| e.to_string())?;
                let d = lam.len().checked_sub(mu.len());
                let monomial = p.0.iter().filter(|c| **c != 0).count() == 1;
                ensure(finer && monomial && p.degree() == d, || {
                    format!("entry ({mu}, {lam}) = {p}")
                })?;
            }
        }
        Ok(())
    }));
    out.push(check(S, format!("cartan-dimensions/{n}"), None, || {
        let one = m.at_one();
        let total: i64 = one.iter().flatten().sum();
        ensure(total == 1 << (n - 1), || format!("entries sum to {total}"))?;
        for (j, lam) in m.labels.iter().enumerate() {
            let col: i64 = one.iter().map(|r| r[j]).sum();
            let want = rearrangements(lam.tail.parts()).len() as i64;
            ensure(col == want, || format!("column {lam} sums to {col}, expected {want}"))?;
        }
        ensure(data.filtration.length() == m.max_degree() + 1, || "Loewy length".into())
    }));
    if n <= 6 {
        out.push(check(S, format!("quiver/{n}"), None, || {
            let arrows = quiver(&m);
            for lam in partitions(n) {
                for mu in partitions(n) {
                    let mut expect = 0;
                    let p = lam.parts();
                    'pairs: for a in 0..p.len() {
                        for b in a + 1..p.len() {
                            if p[a] == p[b] {
                                continue;
                            }
                            let mut q: Vec<usize> = p.to_vec();
                            let s = q[a] + q[b];
                            q.remove(b);
                            q.remove(a);
                            q.push(s);
                            if crate::combitypes::Partition::from_parts(q) == mu {
                                expect = 1;
                                break 'pairs;
                            }
                        }
                    }
                    let got = arrows
                        .iter()
                        .find(|(s, t, _)| *s == hp(&lam) && *t == hp(&mu))
                        .map_or(0, |a| a.2);
                    ensure(got == expect, || format!("{got} arrows {lam} -> {mu}, expected {expect}"))?;
                }
            }
            Ok(())
        }));
    }
    if n <= 6 {
        out.push(check(S, format!("radical-powers/{n}"), None, || {
            let model = &data.model;
            let basis: BTreeMap<Composition, Elem<Rational>> = idempotent_basis(n).into_iter().collect();
            let layers: Vec<Echelon<Rational>> = data
                .filtration
                .layers
                .iter()
                .map(|l| {
                    let mut e = Echelon::new(model.dim());
                    for v in l {
                        e.insert(v.clone());
                    }
                    e
                })
                .collect();
            for mu in partitions(n) {
                let e_mu = &basis[&mu.as_composition()];
                for (i, e_i) in &basis {
                    let id = i.sorted();
                    if !refines(&id, &mu).map_err(|e| e.to_string())? {
                        continue;
                    }
                    let k = id.len() - mu.len();
                    let x = model.coordinates(&product_fast(e_mu, e_i).map_err(err)?).map_err(err)?;
                    ensure(k >= layers.len() || layers[k].contains(&x), || {
                        format!("e_{mu} * e_{i} not in J^{k}")
                    })?;
                }
            }
            Ok(())
        }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unshuffling_counts() {
        // (1,1) into slots of sizes (1,1): two assignments, both giving 1.1.
        assert_eq!(unshufflings(&[1, 1], &[1, 1]).len(), 2);
        assert_eq!(unshufflings(&[3], &[2, 1]), vec![vec![vec![2, 1]]]);
        assert!(unshufflings(&[2, 2], &[3, 1]).is_empty());
    }
}
