use std::fmt;
use std::str::FromStr;

use super::{CombError, Composition};

/// A partition, parts stored in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Multiplicity of `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_composition(), f)
    }
}

impl FromStr for Partition {
    type Err = CombError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: Composition = s.parse()?;
        let p = Partition::from_parts(c.0.clone());
        if p.0 != c.0 {
            return Err(CombError::InvalidLabel(s.to_string()));
        }
        Ok(p)
    }
}

/// Partitions of `n`, in reverse lexicographic order of parts (largest first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// m_λ = ∏ m_i(λ)!
pub fn m_factor(parts: &[usize]) -> u64 {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut acc: u64 = 1;
    let mut run = 0u64;
    for i in 0..sorted.len() {
        if i > 0 && sorted[i] == sorted[i - 1] {
            run += 1;
        } else {
            run = 1;
        }
        acc *= run;
    }
    acc
}

/// λ ≺_p μ (or equal): every part of μ is the sum of a block of parts of λ.
pub fn refines(lambda: &Partition, mu: &Partition) -> Result<bool, CombError> {
    if lambda.weight() != mu.weight() {
        return Err(CombError::WeightMismatch(lambda.weight(), mu.weight()));
    }
    // Assign λ's parts (largest first) to μ's bins, pruning symmetric bins.
    fn place(parts: &[usize], idx: usize, room: &mut Vec<usize>) -> bool {
        if idx == parts.len() {
            return room.iter().all(|&r| r == 0);
        }
        let p = parts[idx];
        for b in 0..room.len() {
            if room[b] < p || room[..b].contains(&room[b]) {
                continue;
            }
            room[b] -= p;
            if place(parts, idx + 1, room) {
                room[b] += p;
                return true;
            }
            room[b] += p;
        }
        false
    }
    if lambda.len() < mu.len() {
        return Ok(false);
    }
    let mut room = mu.0.clone();
    Ok(place(&lambda.0, 0, &mut room))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v.to_vec())
    }

    #[test]
    fn m_factor_examples() {
        assert_eq!(m_factor(&[2, 2, 1]), 2);
        assert_eq!(m_factor(&[1, 1, 1, 1]), 24);
        assert_eq!(m_factor(&[3, 1]), 1);
        assert_eq!(m_factor(&[]), 1);
    }

    #[test]
    fn refines_examples() {
        assert!(refines(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap());
        assert!(!refines(&p(&[3]), &p(&[2, 1])).unwrap());
        let all = partitions(4);
        let ones = p(&[1, 1, 1, 1]);
        assert_eq!(all.iter().filter(|mu| refines(&ones, mu).unwrap()).count(), 5);
        assert!(!refines(&p(&[3, 3]), &p(&[4, 2])).unwrap());
        assert!(refines(&p(&[2, 2, 1, 1]), &p(&[3, 3])).unwrap());
        assert!(refines(&p(&[3]), &p(&[2])).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=9).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }
}
