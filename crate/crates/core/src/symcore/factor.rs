//! Degree-by-degree solver for factorizations of a grouplike series into
//! ordered products of exponentials and grouplike sums.
//!
//! Every pattern used here has a single unknown homogeneous sequence u_1,
//! u_2, ... At degree n, the top-degree component of the right-hand side is
//! c·u_n plus terms involving only u_1..u_{n-1}, where c is the number of
//! factors in which u_n occurs. Setting u_n = 0, evaluating, and dividing the
//! defect by c gives the unique solution.

use crate::exactmath::{Field, Rational};

use super::{Elem, Series};

/// Which indices a factor ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeFilter {
    All,
    MultiplesOf(usize),
    NonMultiplesOf(usize),
}

impl DegreeFilter {
    pub fn admits(self, k: usize) -> bool {
        match self {
            DegreeFilter::All => true,
            DegreeFilter::MultiplesOf(r) => k.is_multiple_of(r),
            DegreeFilter::NonMultiplesOf(r) => !k.is_multiple_of(r),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// e^{u_1} e^{u_2} ...
    Ascending,
    /// ... e^{u_2} e^{u_1}
    Descending,
}

/// Source of the homogeneous elements a factor is built from.
#[derive(Clone, Debug)]
pub enum Seq<F: Field> {
    /// The sequence being solved for.
    Unknown,
    /// A known sequence, index k holding the weight-k element (index 0 unused).
    Known(Vec<Elem<F>>),
}

#[derive(Clone, Debug)]
pub enum Factor<F: Field> {
    /// Ordered product of e^{u_k} over admitted k.
    Exp {
        seq: Seq<F>,
        dir: Direction,
        filter: DegreeFilter,
    },
    /// 1 + Σ u_k over admitted k.
    Sum { seq: Seq<F>, filter: DegreeFilter },
}

impl<F: Field> Factor<F> {
    fn seq(&self) -> &Seq<F> {
        match self {
            Factor::Exp { seq, .. } | Factor::Sum { seq, .. } => seq,
        }
    }

    fn filter(&self) -> DegreeFilter {
        match self {
            Factor::Exp { filter, .. } | Factor::Sum { filter, .. } => *filter,
        }
    }
}

fn elem_of<'a, F: Field>(seq: &'a Seq<F>, unknown: &'a [Elem<F>], k: usize) -> &'a Elem<F> {
    match seq {
        Seq::Unknown => &unknown[k],
        Seq::Known(v) => &v[k],
    }
}

/// e^{u t^k} truncated at `order`, as a series.
fn exp_single<F: Field>(u: &Elem<F>, order: usize) -> Series<F> {
    let k = u.weight();
    let mut s = Series::one(order);
    if u.is_zero() || k == 0 {
        return s;
    }
    let mut pow = Elem::one();
    let mut fact = Rational::one();
    let mut j = 1;
    while j * k <= order {
        pow = pow.mul(u);
        fact = &fact * &Rational::from_int(j as i64);
        s.set(j * k, pow.scale_rat(&fact.inv().expect("nonzero")));
        j += 1;
    }
    s
}

fn eval_factor<F: Field>(f: &Factor<F>, unknown: &[Elem<F>], order: usize) -> Series<F> {
    match f {
        Factor::Sum { seq, filter } => {
            let mut s = Series::one(order);
            for k in 1..=order {
                if filter.admits(k) {
                    s.set(k, elem_of(seq, unknown, k).clone());
                }
            }
            s
        }
        Factor::Exp { seq, dir, filter } => {
            let ks: Vec<usize> = (1..=order).filter(|&k| filter.admits(k)).collect();
            let mut acc = Series::one(order);
            let iter: Box<dyn Iterator<Item = &usize>> = match dir {
                Direction::Ascending => Box::new(ks.iter()),
                Direction::Descending => Box::new(ks.iter().rev()),
            };
            for &k in iter {
                let u = elem_of(seq, unknown, k);
                if !u.is_zero() {
                    acc = acc.mul(&exp_single(u, order));
                }
            }
            acc
        }
    }
}

/// Evaluates the product of `factors` with the given unknown sequence.
pub fn evaluate<F: Field>(factors: &[Factor<F>], unknown: &[Elem<F>], order: usize) -> Series<F> {
    let mut acc = Series::one(order);
    for f in factors {
        acc = acc.mul(&eval_factor(f, unknown, order));
    }
    acc
}

/// Solves `target = Π factors` for the unknown sequence up to `target`'s
/// order. Returns u_0..=u_N with u_0 = 0 unused.
pub fn solve_factorization<F: Field>(target: &Series<F>, factors: &[Factor<F>]) -> Vec<Elem<F>> {
    let order = target.order();
    let mut unknown: Vec<Elem<F>> = (0..=order).map(Elem::zero).collect();
    for n in 1..=order {
        let c = factors
            .iter()
            .filter(|f| matches!(f.seq(), Seq::Unknown) && f.filter().admits(n))
            .count();
        if c == 0 {
            continue;
        }
        let rhs = evaluate(factors, &unknown, n);
        let defect = target.get(n) - rhs.get(n);
        let inv = F::from_rational(Rational::new(1, c as i64));
        unknown[n] = defect.scale(&inv);
    }
    unknown
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zassenhaus_low_degrees() {
        let sigma = Series::<Rational>::sigma(3);
        let z = solve_factorization(
            &sigma,
            &[Factor::Exp {
                seq: Seq::Unknown,
                dir: Direction::Descending,
                filter: DegreeFilter::All,
            }],
        );
        assert_eq!(z[1], Elem::s(1));
        let z2 = &Elem::s(2) - &Elem::s_word(&[1, 1]).scale_rat(&Rational::new(1, 2));
        assert_eq!(z[2], z2);
    }
}
