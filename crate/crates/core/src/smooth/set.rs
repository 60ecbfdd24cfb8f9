use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite set of non-negative integers stored as a strictly increasing vector.
///
/// Serializes as a JSON array in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SortedIntSet(Vec<u64>);

impl SortedIntSet {
    pub fn new() -> Self {
        SortedIntSet(Vec::new())
    }

    /// Wraps a vector that must already be strictly increasing.
    pub fn from_sorted(elements: Vec<u64>) -> Result<Self> {
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::argument(format!(
                "set elements must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(SortedIntSet(elements))
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        SortedIntSet(elements)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, u64>> {
        self.0.iter().copied()
    }

    pub fn smallest(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Counting function `A(X) = |{a in A : a <= X}|`.
    pub fn count_le(&self, x: u64) -> u64 {
        self.0.partition_point(|&a| a <= x) as u64
    }

    /// Elements in `[lo, hi]` as a new set.
    pub fn restrict(&self, lo: u64, hi: u64) -> SortedIntSet {
        if lo > hi {
            return SortedIntSet::new();
        }
        let start = self.0.partition_point(|&a| a < lo);
        let end = self.0.partition_point(|&a| a <= hi);
        SortedIntSet(self.0[start..end].to_vec())
    }

    /// Newline-delimited decimal text, one element per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::with_capacity(self.0.len() * 8);
        for x in &self.0 {
            writeln!(out, "{x}").unwrap();
        }
        out
    }

    /// Parses newline- or whitespace-delimited decimal text; order and
    /// duplicates in the input do not matter.
    pub fn parse_lines(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|tok| tok.parse::<u64>().map_err(|_| Error::argument(format!("not a non-negative integer: {tok:?}"))))
            .collect()
    }
}

/// Shorthand for [`SortedIntSet::count_le`].
pub fn counting(set: &SortedIntSet, x: u64) -> u64 {
    set.count_le(x)
}

impl TryFrom<Vec<u64>> for SortedIntSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        SortedIntSet::from_sorted(v)
    }
}

impl From<SortedIntSet> for Vec<u64> {
    fn from(s: SortedIntSet) -> Self {
        s.0
    }
}

impl FromIterator<u64> for SortedIntSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut v: Vec<u64> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SortedIntSet(v)
    }
}

impl<'a> IntoIterator for &'a SortedIntSet {
    type Item = u64;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, u64>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> SortedIntSet {
        v.iter().copied().collect()
    }

    #[test]
    fn counting_examples() {
        assert_eq!(counting(&set(&[1, 2, 4, 8]), 5), 3);
        assert_eq!(counting(&SortedIntSet::new(), 100), 0);
        assert_eq!(counting(&set(&[1, 2, 4, 8]), 0), 0);
        assert_eq!(counting(&set(&[1, 2, 4, 8]), 8), 4);
    }

    #[test]
    fn rejects_unsorted() {
        assert!(SortedIntSet::from_sorted(vec![1, 1]).is_err());
        assert!(SortedIntSet::from_sorted(vec![3, 2]).is_err());
        assert!(serde_json::from_str::<SortedIntSet>("[2,1]").is_err());
    }

    #[test]
    fn json_and_lines() {
        let s = set(&[9, 1, 4, 4]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4,9]");
        assert_eq!(s.to_lines(), "1\n4\n9\n");
        assert_eq!(SortedIntSet::parse_lines("9\n1\n4\n").unwrap(), s);
        assert!(SortedIntSet::parse_lines("1\n-2\n").is_err());
    }

    #[test]
    fn restrict_window() {
        let s = set(&[1, 3, 5, 7]);
        assert_eq!(s.restrict(2, 6).as_slice(), &[3, 5]);
        assert!(s.restrict(6, 2).is_empty());
    }
}
