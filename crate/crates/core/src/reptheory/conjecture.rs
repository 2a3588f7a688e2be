//! The combinatorial Cartan matrix built from standardizations and cycles.

use crate::combitypes::{cycle_transform, order_index, rearrangements, HeadedPartition, OrderKind};

use super::cartan::{CartanMatrix, Poly};

/// For each rearrangement Ī of μ̄, the label ν = (n - |ν̄|; ν̄) it produces
/// and the number of tail parts lost.
fn images(mu: &HeadedPartition, n: usize, r: usize) -> Vec<(HeadedPartition, usize)> {
    rearrangements(mu.tail.parts())
        .into_iter()
        .map(|i| {
            let nu_bar = cycle_transform(i.parts(), r);
            let lost = mu.tail.len() - nu_bar.len();
            (
                HeadedPartition {
                    head: n - nu_bar.weight(),
                    tail: nu_bar,
                },
                lost,
            )
        })
        .collect()
}

/// Entry (ν, μ) = number of rearrangements Ī of μ̄ whose cycle transform is
/// ν̄; when `graded`, each contributes t^{(ℓ(μ̄)-ℓ(ν̄))/2} instead of 1.
/// Labels in the reverse of `<`.
pub fn conjecture_matrix(n: usize, r: usize, graded: bool) -> CartanMatrix {
    let mut labels = order_index(n, OrderKind::Peak(r));
    labels.reverse();
    let k = labels.len();
    let mut entries = vec![vec![Poly::zero(); k]; k];
    for (j, mu) in labels.iter().enumerate() {
        for (nu, lost) in images(mu, n, r) {
            let i = labels
                .iter()
                .position(|l| *l == nu)
                .expect("cycle transform yields an r-peak partition");
            let deg = if graded { lost / 2 } else { 0 };
            entries[i][j] = entries[i][j].add(&Poly::monomial(1, deg));
        }
    }
    CartanMatrix { labels, entries }
}

/// Integer matrix of the conjecture.
pub fn conjecture_cartan(n: usize, r: usize) -> CartanMatrix {
    conjecture_matrix(n, r, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c = conjecture_cartan(4, 2);
        let l = |h: usize, t: &[usize]| HeadedPartition::new(h, t.to_vec());
        assert_eq!(c.entry(&l(4, &[]), &l(0, &[3, 1])).unwrap().at_one(), 1);
        for (i, lab) in c.labels.iter().enumerate() {
            let distinct = lab.tail.parts().windows(2).all(|w| w[0] != w[1]);
            if distinct {
                assert_eq!(c.entries[i][i].at_one(), 1);
            }
        }
        let ones = c.at_one();
        for (j, mu) in c.labels.iter().enumerate() {
            let col: i64 = ones.iter().map(|r| r[j]).sum();
            assert_eq!(col as usize, rearrangements(mu.tail.parts()).len());
        }
    }
}
