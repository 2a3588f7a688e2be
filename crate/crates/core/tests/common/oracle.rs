//! Brute-force model of Sym_n inside the group algebra Q[S_n].
//!
//! S^I goes to the sum of permutations whose descent set is contained in
//! Des(I). Products are taken in the group algebra and read back through
//! the ribbon basis (R_K is the descent class of K).

use std::collections::HashMap;

use peakalg::combitypes::{compositions, Composition};
use peakalg::exactmath::Rational;
use peakalg::symcore::{ribbon_to_complete, Elem, Word};

pub type Perm = Vec<u8>;

/// Which side of the group-algebra product S^I lands on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// S^I ∗ S^J ↦ B_I · B_J with (στ)(i) = σ(τ(i)).
    Direct,
    /// S^I ∗ S^J ↦ B_J · B_I.
    Anti,
}

/// The orientation under which S^{11} ∗ S^{11} = 2 S^{11} and every pair
/// agrees with the splitting formula.
pub const FROZEN: Orientation = Orientation::Anti;

pub fn permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

/// Positions i (1-based) with σ(i) > σ(i+1).
pub fn descents(p: &[u8]) -> Vec<usize> {
    (1..p.len()).filter(|&i| p[i - 1] > p[i]).collect()
}

fn compose(s: &[u8], t: &[u8]) -> Perm {
    t.iter().map(|&i| s[i as usize]).collect()
}

pub struct GroupAlgebra {
    n: usize,
    perms: Vec<Perm>,
    des: Vec<Vec<usize>>,
}

impl GroupAlgebra {
    pub fn new(n: usize) -> Self {
        let perms = permutations(n);
        let des = perms.iter().map(|p| descents(p)).collect();
        GroupAlgebra { n, perms, des }
    }

    /// B_I = Σ_{Des(σ) ⊆ Des(I)} σ.
    pub fn descent_sum(&self, i: &Composition) -> HashMap<Perm, i64> {
        let d = i.descent_set();
        self.perms
            .iter()
            .zip(&self.des)
            .filter(|(_, ds)| ds.iter().all(|x| d.contains(x)))
            .map(|(p, _)| (p.clone(), 1))
            .collect()
    }

    pub fn mul(&self, a: &HashMap<Perm, i64>, b: &HashMap<Perm, i64>) -> HashMap<Perm, i64> {
        let mut out: HashMap<Perm, i64> = HashMap::new();
        for (s, x) in a {
            for (t, y) in b {
                *out.entry(compose(s, t)).or_default() += x * y;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Reads an element of the descent algebra back into Sym_n. Panics if
    /// the coefficient is not constant on descent classes.
    pub fn to_sym(&self, x: &HashMap<Perm, i64>) -> Elem<Rational> {
        let mut class: HashMap<Vec<usize>, i64> = HashMap::new();
        for (p, ds) in self.perms.iter().zip(&self.des) {
            let c = x.get(p).copied().unwrap_or(0);
            let prev = *class.entry(ds.clone()).or_insert(c);
            assert_eq!(prev, c, "not in the descent algebra");
        }
        let mut e = Elem::zero(self.n);
        for k in compositions(self.n) {
            let c = class[&k.descent_set()];
            if c != 0 {
                e.add_scaled(&ribbon_to_complete(&k), &Rational::from_int(c));
            }
        }
        e
    }

    pub fn internal_product(&self, i: &Composition, j: &Composition, o: Orientation) -> Elem<Rational> {
        let (bi, bj) = (self.descent_sum(i), self.descent_sum(j));
        let prod = match o {
            Orientation::Direct => self.mul(&bi, &bj),
            Orientation::Anti => self.mul(&bj, &bi),
        };
        self.to_sym(&prod)
    }
}

pub fn s_word(i: &Composition) -> Elem<Rational> {
    Elem::basis(Word::from(i))
}
