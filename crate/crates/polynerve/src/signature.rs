//! Signatures `n1^m1 . n2^m2 ...` describing the branch heights of starlike trees.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite multiset of positive branch heights, kept as `(height, multiplicity)`
/// pairs with strictly decreasing heights. The empty signature is written `e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    entries: Vec<(usize, usize)>,
}

impl Signature {
    pub fn epsilon() -> Self {
        Signature { entries: Vec::new() }
    }

    /// Builds a signature from `(height, multiplicity)` pairs in any order,
    /// merging repeated heights and dropping zero multiplicities.
    pub fn new(entries: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut merged: Vec<(usize, usize)> = Vec::new();
        for (h, m) in entries {
            if h == 0 {
                return Err(Error::BadSignature("branch height 0".into()));
            }
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(g, _)| *g == h) {
                Some(e) => e.1 += m,
                None => merged.push((h, m)),
            }
        }
        merged.sort_by_key(|e| std::cmp::Reverse(e.0));
        Ok(Signature { entries: merged })
    }

    pub fn from_heights(heights: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(heights.into_iter().map(|h| (h, 1)))
    }

    /// The one-branch signature `k`, whose starlike tree is a chain on `k + 1` elements.
    pub fn chain(k: usize) -> Self {
        assert!(k >= 1, "chain signatures have positive height");
        Signature { entries: vec![(k, 1)] }
    }

    /// `1^k`; `ones(0)` is the empty signature.
    pub fn ones(k: usize) -> Self {
        if k == 0 {
            Self::epsilon()
        } else {
            Signature { entries: vec![(1, k)] }
        }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Number of branches.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn is_epsilon(&self) -> bool {
        self.entries.is_empty()
    }

    /// The `j`-th largest branch height, counting from 1.
    pub fn at(&self, j: usize) -> Option<usize> {
        if j == 0 {
            return None;
        }
        let mut seen = 0;
        for &(h, m) in &self.entries {
            seen += m;
            if j <= seen {
                return Some(h);
            }
        }
        None
    }

    /// All branch heights in decreasing order.
    pub fn heights(&self) -> Vec<usize> {
        self.entries
            .iter()
            .flat_map(|&(h, m)| std::iter::repeat_n(h, m))
            .collect()
    }

    pub fn leq(&self, other: &Signature) -> bool {
        if self.len() > other.len() {
            return false;
        }
        self.heights()
            .iter()
            .zip(other.heights())
            .all(|(a, b)| *a <= b)
    }

    /// `Some(k)` when the signature is the single branch `k`.
    pub fn chain_height(&self) -> Option<usize> {
        match self.entries.as_slice() {
            [(h, 1)] => Some(*h),
            _ => None,
        }
    }

    /// `Some(k)` when the signature is `1^k` with `k >= 1`.
    pub fn ones_count(&self) -> Option<usize> {
        match self.entries.as_slice() {
            [(1, m)] => Some(*m),
            _ => None,
        }
    }

    /// `1^2` is excluded from the admissible signatures of starlike logics.
    pub fn is_forbidden(&self) -> bool {
        self.entries == [(1, 2)]
    }

    /// Membership in the admissible signatures with `1^k` removed for all `k < n`.
    pub fn is_admissible_above(&self, n: usize) -> bool {
        if self.is_forbidden() {
            return false;
        }
        if self.is_epsilon() {
            return n == 0;
        }
        match self.ones_count() {
            Some(k) => k >= n,
            None => true,
        }
    }

    pub fn scott() -> Self {
        Signature { entries: vec![(2, 1), (1, 1)] }
    }

    /// Parses a comma-separated list such as `2.1,1^3`.
    pub fn parse_list(text: &str) -> Result<Vec<Signature>> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        text.split(',').map(|s| s.trim().parse()).collect()
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.leq(other), other.leq(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("e");
        }
        for (i, (h, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            if *m == 1 {
                write!(f, "{h}")?;
            } else {
                write!(f, "{h}^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSignature(s.to_string());
        let s = s.trim();
        if s == "e" {
            return Ok(Self::epsilon());
        }
        if s.is_empty() {
            return Err(bad());
        }
        let mut entries = Vec::new();
        for part in s.split('.') {
            let (h, m) = match part.split_once('^') {
                Some((h, m)) => (h, m),
                None => (part, "1"),
            };
            let h: usize = h.parse().map_err(|_| bad())?;
            let m: usize = m.parse().map_err(|_| bad())?;
            if h == 0 || m == 0 {
                return Err(bad());
            }
            entries.push((h, m));
        }
        Self::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["e", "1", "2.1", "3^2.2.1", "1^3", "3.1^2", "2^2"] {
            assert_eq!(sig(text).to_string(), text);
        }
        assert_eq!(sig("1.2").to_string(), "2.1");
        assert_eq!(sig("2.2").to_string(), "2^2");
        assert!("0".parse::<Signature>().is_err());
        assert!("2.".parse::<Signature>().is_err());
        assert!("".parse::<Signature>().is_err());
    }

    #[test]
    fn indexing_counts_from_the_tallest_branch() {
        let a = sig("3^2.2.1");
        assert_eq!(a.len(), 4);
        assert_eq!(a.at(1), Some(3));
        assert_eq!(a.at(2), Some(3));
        assert_eq!(a.at(3), Some(2));
        assert_eq!(a.at(4), Some(1));
        assert_eq!(a.at(5), None);
        assert_eq!(Signature::epsilon().len(), 0);
    }

    #[test]
    fn order_examples() {
        assert!(sig("1^3") < sig("3.1^2"));
        assert!(sig("3.1^2") < sig("3^2.2.1"));
        assert!(sig("2") < sig("3.1^2"));
        assert!(!sig("3.1^2").leq(&sig("2^2")));
        assert_eq!(sig("2^2").partial_cmp(&sig("3")), None);
        assert!(Signature::epsilon() <= sig("1"));
    }

    #[test]
    fn admissibility() {
        assert!(sig("1^2").is_forbidden());
        assert!(!sig("1^2").is_admissible_above(0));
        assert!(sig("1^3").is_admissible_above(3));
        assert!(!sig("1^3").is_admissible_above(4));
        assert!(sig("2.1").is_admissible_above(9));
        assert_eq!(sig("4").chain_height(), Some(4));
        assert_eq!(sig("1").ones_count(), Some(1));
        assert_eq!(sig("2^2").chain_height(), None);
    }
}
