//! Basis labels of Sym and of the two-alphabet algebra MR.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::combitypes::{CombError, Composition, SignedComposition};

/// A part of a (signed) composition: size in the high bits, bar flag in the
/// lowest bit, so the derived order is by size and then unbarred first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub const MAX_SIZE: usize = 127;

    pub fn new(size: usize, bar: bool) -> Self {
        assert!((1..=Self::MAX_SIZE).contains(&size), "letter size {size}");
        Letter(((size as u8) << 1) | u8::from(bar))
    }

    pub fn plain(size: usize) -> Self {
        Letter::new(size, false)
    }

    pub fn size(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn bar(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn toggled(self) -> Self {
        Letter(self.0 ^ 1)
    }

    pub fn with_bar(self, bar: bool) -> Self {
        Letter((self.0 & !1) | u8::from(bar))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar() {
            write!(f, "{}'", self.size())
        } else {
            write!(f, "{}", self.size())
        }
    }
}

/// A word in letters: the label of S^I (or of a product of primitives).
///
/// Ordered by length first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Letter; 12]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_parts(parts: &[usize]) -> Self {
        Word(parts.iter().map(|&p| Letter::plain(p)).collect())
    }

    pub fn from_signed(parts: &[(usize, bool)]) -> Self {
        Word(parts.iter().map(|&(p, b)| Letter::new(p, b)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|l| l.size()).sum()
    }

    pub fn has_bar(&self) -> bool {
        self.0.iter().any(|l| l.bar())
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.size()).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Every bar flag toggled, order kept.
    pub fn toggled(&self) -> Word {
        Word(self.0.iter().map(|l| l.toggled()).collect())
    }

    /// Reversed and toggled (the bar antimorphism on S-labels).
    pub fn bar_reversed(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.toggled()).collect())
    }

    /// Bars erased.
    pub fn unbarred(&self) -> Word {
        Word(self.0.iter().map(|l| l.with_bar(false)).collect())
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.sizes())
    }

    pub fn as_signed(&self) -> SignedComposition {
        SignedComposition(self.0.iter().map(|l| (l.size(), l.bar())).collect())
    }

    /// Multiset key: letters sorted decreasingly (the commutative image).
    pub fn sorted_desc(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Same text as the composition labels: `3.1.1`, `1.2'`, `()` when empty.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_signed(), f)
    }
}

impl FromStr for Word {
    type Err = CombError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sc: SignedComposition = s.parse()?;
        if sc.0.iter().any(|&(p, _)| p > Letter::MAX_SIZE) {
            return Err(CombError::InvalidLabel(s.to_string()));
        }
        Ok(Word::from_signed(&sc.0))
    }
}

impl From<&Composition> for Word {
    fn from(c: &Composition) -> Self {
        Word::from_parts(c.parts())
    }
}

impl From<&SignedComposition> for Word {
    fn from(c: &SignedComposition) -> Self {
        Word::from_signed(&c.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_packing() {
        let l = Letter::new(5, true);
        assert_eq!(l.size(), 5);
        assert!(l.bar());
        assert!(!l.toggled().bar());
        assert!(Letter::new(2, false) < Letter::new(2, true));
        assert!(Letter::new(2, true) < Letter::new(3, false));
    }

    #[test]
    fn word_order_and_text() {
        let a: Word = "3".parse().unwrap();
        let b: Word = "1.1".parse().unwrap();
        assert!(a < b);
        let w: Word = "1.2'".parse().unwrap();
        assert_eq!(w.to_string(), "1.2'");
        assert_eq!(w.bar_reversed().to_string(), "2.1'");
        assert_eq!(w.toggled().to_string(), "1'.2");
        assert_eq!(Word::empty().to_string(), "()");
    }
}
