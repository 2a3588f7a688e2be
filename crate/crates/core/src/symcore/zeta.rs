//! Zassenhaus elements σ_1 = ⋯e^{ζ_3}e^{ζ_2}e^{ζ_1}, cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exactmath::Rational;

use super::{solve_factorization, DegreeFilter, Direction, Elem, Factor, Seq, Series, Word};

type Cache = Mutex<HashMap<usize, Arc<Vec<Elem<Rational>>>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// ζ_0..=ζ_n (ζ_0 = 0 is a placeholder).
pub fn zassenhaus(n: usize) -> Arc<Vec<Elem<Rational>>> {
    if let Some(v) = cache().lock().unwrap().get(&0) {
        if v.len() > n {
            return v.clone();
        }
    }
    let z = solve_factorization(
        &Series::sigma(n),
        &[Factor::Exp {
            seq: Seq::Unknown,
            dir: Direction::Descending,
            filter: DegreeFilter::All,
        }],
    );
    let z = Arc::new(z);
    cache().lock().unwrap().insert(0, z.clone());
    z
}

/// ζ^K = ζ_{k_1}⋯ζ_{k_m}; a barred letter stands for ζ_k(Ā).
pub fn zeta_products(k: &Word) -> Elem<Rational> {
    let z = zassenhaus(k.weight());
    let mut acc = Elem::one();
    for l in k.letters() {
        let f = &z[l.size()];
        acc = if l.bar() {
            acc.mul(&f.swap_alphabets())
        } else {
            acc.mul(f)
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Elem<Rational> {
        let mut e = Elem::zero(0);
        let mut first = true;
        for tok in s.split_whitespace().collect::<Vec<_>>().chunks(2) {
            let (c, w): (Rational, Word) = (tok[0].parse().unwrap(), tok[1].parse().unwrap());
            if first {
                e = Elem::zero(w.weight());
                first = false;
            }
            e.add_term(w, c);
        }
        e
    }

    #[test]
    fn low_degree_expansions() {
        let z = zassenhaus(4);
        assert_eq!(z[2], parse("1 2 -1/2 1.1"));
        assert_eq!(z[3], parse("1 3 -1 2.1 1/3 1.1.1"));
        assert!(z[4].is_primitive());
        assert_eq!(z[4].len(), 6);
        assert_eq!(z[4].coeff(&"1.1.1.1".parse().unwrap()), Rational::new(-1, 4));
    }
}
