use std::fmt;
use std::str::FromStr;

use super::CombError;

/// A composition: a finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombError> {
        if parts.contains(&0) {
            return Err(CombError::InvalidLabel(format!("{parts:?}")));
        }
        Ok(Composition(parts))
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

    /// Nonincreasing rearrangement.
    pub fn sorted(&self) -> super::Partition {
        super::Partition::from_parts(self.0.clone())
    }

    /// Partial sums i_1, i_1 + i_2, ... excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`].
    pub fn from_descent_set(n: usize, des: &[usize]) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in des.iter().chain(std::iter::once(&n)) {
            parts.push(d - prev);
            prev = d;
        }
        if n == 0 {
            parts.clear();
        }
        Composition(parts)
    }
}

/// Renders as `3.1.1`; the empty composition is `()`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("."))
    }
}

impl FromStr for Composition {
    type Err = CombError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "()" {
            return Ok(Composition(Vec::new()));
        }
        let parts: Result<Vec<usize>, _> = s.split('.').map(|p| p.trim().parse()).collect();
        Composition::new(parts.map_err(|_| CombError::InvalidLabel(s.to_string()))?)
    }
}

/// A composition whose parts carry a bar flag (labels of the free product of
/// two copies of Sym).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedComposition(pub Vec<(usize, bool)>);

impl SignedComposition {
    pub fn weight(&self) -> usize {
        self.0.iter().map(|p| p.0).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn unbarred(c: &Composition) -> Self {
        SignedComposition(c.0.iter().map(|&p| (p, false)).collect())
    }
}

/// Renders as `1.2'` with a prime marking barred parts.
impl fmt::Display for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self
            .0
            .iter()
            .map(|&(p, b)| if b { format!("{p}'") } else { p.to_string() })
            .collect();
        write!(f, "{}", s.join("."))
    }
}

impl FromStr for SignedComposition {
    type Err = CombError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "()" {
            return Ok(SignedComposition(Vec::new()));
        }
        let bad = || CombError::InvalidLabel(s.to_string());
        let mut parts = Vec::new();
        for p in s.split('.') {
            let p = p.trim();
            let (num, bar) = match p.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (p, false),
            };
            let v: usize = num.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            parts.push((v, bar));
        }
        Ok(SignedComposition(parts))
    }
}

/// All compositions of `n`, ordered by length and then lexicographically.
pub fn compositions(n: usize) -> Vec<Composition> {
    compositions_with_parts(n, |_| true)
}

/// Compositions of `n` whose parts all satisfy `allowed`, ordered by length
/// then lexicographically.
pub fn compositions_with_parts(n: usize, allowed: impl Fn(usize) -> bool) -> Vec<Composition> {
    fn rec(
        rest: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Composition>,
        allowed: &dyn Fn(usize) -> bool,
    ) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            if allowed(p) {
                cur.push(p);
                rec(rest - p, cur, out, allowed);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out, &allowed);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// All signed compositions of `n` (2·3^(n-1) of them for n ≥ 1), ordered by
/// length and then lexicographically with unbarred before barred.
pub fn signed_compositions(n: usize) -> Vec<SignedComposition> {
    let mut out = Vec::new();
    for c in compositions(n) {
        let k = c.len();
        for mask in 0..(1u32 << k) {
            out.push(SignedComposition(
                c.0.iter()
                    .enumerate()
                    .map(|(i, &p)| (p, mask >> (k - 1 - i) & 1 == 1))
                    .collect(),
            ));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Distinct rearrangements of the parts, in lexicographic order.
pub fn rearrangements(parts: &[usize]) -> Vec<Composition> {
    let mut v = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![Composition(v.clone())];
    // Standard next-permutation walk over a multiset.
    while let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(Composition(v.clone()));
    }
    out
}

/// Compositions J obtained from `c` by summing blocks of consecutive parts
/// (including `c` itself).
pub fn coarsenings(c: &Composition) -> Vec<Composition> {
    let k = c.len();
    if k == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out = Vec::new();
    for mask in 0..(1u32 << (k - 1)) {
        // bit i set: merge part i with part i+1
        let mut parts = vec![c.0[0]];
        for i in 1..k {
            if mask >> (i - 1) & 1 == 1 {
                *parts.last_mut().unwrap() += c.0[i];
            } else {
                parts.push(c.0[i]);
            }
        }
        out.push(Composition(parts));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rearrangement_examples() {
        assert_eq!(rearrangements(&[2, 1]).len(), 2);
        assert_eq!(rearrangements(&[1, 1, 1]), vec![Composition(vec![1, 1, 1])]);
        assert_eq!(rearrangements(&[2, 1, 1]).len(), 3);
        assert_eq!(rearrangements(&[]).len(), 1);
    }

    #[test]
    fn counts() {
        assert_eq!(compositions(5).len(), 16);
        assert_eq!(compositions(0), vec![Composition(vec![])]);
        assert_eq!(signed_compositions(4).len(), 2 * 27);
        assert_eq!(coarsenings(&Composition(vec![1, 2, 1])).len(), 4);
    }

    #[test]
    fn labels_round_trip() {
        let c: Composition = "3.1.1".parse().unwrap();
        assert_eq!(c.0, vec![3, 1, 1]);
        assert_eq!(c.to_string(), "3.1.1");
        let s: SignedComposition = "1.2'".parse().unwrap();
        assert_eq!(s.0, vec![(1, false), (2, true)]);
        assert_eq!(s.to_string(), "1.2'");
        assert!("1.0".parse::<Composition>().is_err());
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::default());
    }

    #[test]
    fn descent_sets() {
        let c = Composition(vec![2, 1, 3]);
        assert_eq!(c.descent_set(), vec![2, 3]);
        assert_eq!(Composition::from_descent_set(6, &[2, 3]), c);
    }
}
