use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{compositions, compositions_with_parts, partitions, CombError, Composition, Partition};

/// A composition with a distinguished head part `i0` that may be zero:
/// type-B compositions and r-peak compositions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeadedComposition {
    pub head: usize,
    pub tail: Composition,
}

/// A partition with a distinguished head part that may be zero. Type-A
/// partitions use head 0; r-peak partitions put the unique part divisible by
/// r (if any) in the head.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeadedPartition {
    pub head: usize,
    pub tail: Partition,
}

impl HeadedComposition {
    pub fn new(head: usize, tail: Vec<usize>) -> Self {
        HeadedComposition {
            head,
            tail: Composition(tail),
        }
    }

    pub fn weight(&self) -> usize {
        self.head + self.tail.weight()
    }

    /// (head; tail sorted decreasingly).
    pub fn sorted(&self) -> HeadedPartition {
        HeadedPartition {
            head: self.head,
            tail: self.tail.sorted(),
        }
    }

    /// Parts with the head first, zero head dropped.
    pub fn printed(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.tail.len() + 1);
        if self.head > 0 {
            v.push(self.head);
        }
        v.extend_from_slice(self.tail.parts());
        v
    }
}

impl HeadedPartition {
    pub fn new(head: usize, tail: Vec<usize>) -> Self {
        HeadedPartition {
            head,
            tail: Partition::from_parts(tail),
        }
    }

    /// Type-A partition viewed with an empty head.
    pub fn plain(p: Partition) -> Self {
        HeadedPartition { head: 0, tail: p }
    }

    /// Splits a partition into head (its unique part divisible by r, or 0)
    /// and tail. Returns `None` when two parts are divisible by r.
    pub fn from_rpeak(p: &Partition, r: usize) -> Option<Self> {
        let div: Vec<usize> = p.parts().iter().copied().filter(|x| x % r == 0).collect();
        match div.len() {
            0 => Some(HeadedPartition {
                head: 0,
                tail: p.clone(),
            }),
            1 => Some(HeadedPartition {
                head: div[0],
                tail: Partition::from_parts(p.parts().iter().copied().filter(|x| x % r != 0).collect()),
            }),
            _ => None,
        }
    }

    pub fn weight(&self) -> usize {
        self.head + self.tail.weight()
    }

    /// Number of printed parts (the head only when nonzero).
    pub fn len(&self) -> usize {
        self.tail.len() + usize::from(self.head > 0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn printed(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.tail.len() + 1);
        if self.head > 0 {
            v.push(self.head);
        }
        v.extend_from_slice(self.tail.parts());
        v
    }

    /// All parts, head included, as an ordinary partition.
    pub fn flatten(&self) -> Partition {
        Partition::from_parts(self.printed())
    }

    pub fn as_composition(&self) -> HeadedComposition {
        HeadedComposition {
            head: self.head,
            tail: self.tail.as_composition(),
        }
    }

    /// ∏ m_j! over the tail only.
    pub fn m_tail(&self) -> u64 {
        super::m_factor(self.tail.parts())
    }
}

/// Renders as `2;3,1,1`; an empty tail gives `4;`.
impl fmt::Display for HeadedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.tail.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "{};{}", self.head, t.join(","))
    }
}

impl fmt::Display for HeadedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_composition(), f)
    }
}

impl FromStr for HeadedComposition {
    type Err = CombError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CombError::InvalidLabel(s.to_string());
        let (h, t) = s.split_once(';').ok_or_else(bad)?;
        let head: usize = h.trim().parse().map_err(|_| bad())?;
        let tail: Vec<usize> = if t.trim().is_empty() {
            Vec::new()
        } else {
            t.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        if tail.contains(&0) {
            return Err(bad());
        }
        Ok(HeadedComposition::new(head, tail))
    }
}

impl FromStr for HeadedPartition {
    type Err = CombError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: HeadedComposition = s.parse()?;
        let p = c.sorted();
        if p.tail.parts() != c.tail.parts() {
            return Err(CombError::InvalidLabel(s.to_string()));
        }
        Ok(p)
    }
}

/// Which family of labels an order refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    TypeA,
    TypeB,
    Peak(usize),
}

/// The total order `<` on labels: decreasing length, then reverse
/// lexicographic order of the underlying partitions (head included). Labels
/// with the same underlying partition (only possible for type B, e.g. `0;2,1`
/// and `2;1`) put the zero head first.
pub fn cmp_labels(a: &HeadedPartition, b: &HeadedPartition) -> Ordering {
    let (fa, fb) = (a.flatten(), b.flatten());
    a.len()
        .cmp(&b.len())
        .reverse()
        .then_with(|| fb.parts().cmp(fa.parts()))
        .then_with(|| a.head.cmp(&b.head))
}

/// Labels of the simple modules for `kind` at weight `n`, sorted by `<`.
pub fn order_index(n: usize, kind: OrderKind) -> Vec<HeadedPartition> {
    let mut labels = match kind {
        OrderKind::TypeA => partitions(n).into_iter().map(HeadedPartition::plain).collect(),
        OrderKind::TypeB => b_partitions(n),
        OrderKind::Peak(r) => rpeak_partitions(n, r),
    };
    labels.sort_by(cmp_labels);
    labels
}

/// B-partitions (head ≥ 0, arbitrary tail partition) of `n`.
pub fn b_partitions(n: usize) -> Vec<HeadedPartition> {
    let mut out = Vec::new();
    for head in 0..=n {
        for t in partitions(n - head) {
            out.push(HeadedPartition { head, tail: t });
        }
    }
    out
}

/// r-peak partitions of `n`: at most one part divisible by r, placed in the
/// head.
pub fn rpeak_partitions(n: usize, r: usize) -> Vec<HeadedPartition> {
    assert!(r >= 1);
    partitions(n)
        .iter()
        .filter_map(|p| HeadedPartition::from_rpeak(p, r))
        .collect()
}

/// B-compositions of `n` (2^n of them for n ≥ 1), head ascending then tail
/// in the composition order.
pub fn b_compositions(n: usize) -> Vec<HeadedComposition> {
    let mut out = Vec::new();
    for head in 0..=n {
        for t in compositions(n - head) {
            out.push(HeadedComposition { head, tail: t });
        }
    }
    out
}

/// r-peak compositions of `n`: head a multiple of r (possibly 0), tail parts
/// not divisible by r.
pub fn rpeak_compositions(n: usize, r: usize) -> Vec<HeadedComposition> {
    let mut out = Vec::new();
    for head in (0..=n).step_by(r) {
        for t in compositions_with_parts(n - head, |p| p % r != 0) {
            out.push(HeadedComposition { head, tail: t });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn printed(v: &[HeadedPartition]) -> Vec<String> {
        v.iter()
            .map(|p| p.printed().iter().map(|x| x.to_string()).collect::<String>())
            .collect()
    }

    #[test]
    fn printed_orders() {
        assert_eq!(
            printed(&order_index(5, OrderKind::TypeA)),
            ["11111", "2111", "311", "221", "41", "32", "5"]
        );
        assert_eq!(
            printed(&order_index(5, OrderKind::Peak(2))),
            ["11111", "2111", "311", "41", "23", "5"]
        );
        assert_eq!(
            printed(&order_index(7, OrderKind::Peak(2))),
            ["1111111", "211111", "31111", "4111", "2311", "511", "331", "61", "25", "43", "7"]
        );
    }

    #[test]
    fn large_r_matches_type_a() {
        for n in 1..=7 {
            let a: Vec<Partition> = order_index(n, OrderKind::TypeA)
                .into_iter()
                .map(|p| p.flatten())
                .collect();
            let p: Vec<Partition> = order_index(n, OrderKind::Peak(n + 1))
                .into_iter()
                .map(|p| p.flatten())
                .collect();
            assert_eq!(a, p);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(b_partitions(6).len(), 30);
        for n in 1..=8 {
            assert_eq!(b_compositions(n).len(), 1 << n);
        }
        assert_eq!(rpeak_compositions(3, 2).len(), 3);
        assert_eq!(rpeak_compositions(4, 2).len(), 5);
        assert_eq!(rpeak_compositions(8, 8).len(), 128);
        for p in rpeak_partitions(9, 3) {
            assert!(p.head % 3 == 0);
            assert!(p.tail.parts().iter().all(|x| x % 3 != 0));
        }
    }

    #[test]
    fn labels_round_trip() {
        let p: HeadedPartition = "2;3,1,1".parse().unwrap();
        assert_eq!(p, HeadedPartition::new(2, vec![3, 1, 1]));
        assert_eq!(p.to_string(), "2;3,1,1");
        assert_eq!(HeadedPartition::new(4, vec![]).to_string(), "4;");
        assert!("0;1,3".parse::<HeadedPartition>().is_err());
        assert!("0;1,3".parse::<HeadedComposition>().is_ok());
    }

    #[test]
    fn b_order_tie_breaks_on_head() {
        let labels = order_index(3, OrderKind::TypeB);
        let a = labels.iter().position(|p| *p == HeadedPartition::new(0, vec![2, 1])).unwrap();
        let b = labels.iter().position(|p| *p == HeadedPartition::new(2, vec![1])).unwrap();
        assert!(a < b);
    }
}
