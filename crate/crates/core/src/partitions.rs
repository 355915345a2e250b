//! Integer partitions, hooks, 2-cores and the `≼` relation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored without zero parts.
///
/// The derived ordering compares part lists left to right, which for
/// canonical partitions is the same as comparing zero-padded lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition, dropping zeros.
    pub fn from_parts_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based) of the zero-padded view.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.first() as usize;
        let mut t = vec![0u32; cols];
        for &p in &self.0 {
            for c in t.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(t)
    }

    /// Hook lengths of all cells, row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let t = self.transpose();
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row + t.0[j] - i as u32 - j as u32 - 1);
            }
        }
        out
    }

    /// κ(λ) = Σ (i−1)λ_i.
    pub fn kappa(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// The 2-core, read off from the odd and even entries of a β-set.
    pub fn two_core(&self) -> TwoCore {
        let m = self.0.len() as u32;
        let odd = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, &p)| (p + m - 1 - i as u32) % 2 == 1)
            .count() as u32;
        let even = m - odd;
        let d = if odd >= even { odd - even } else { even - odd - 1 };
        TwoCore { d }
    }

    /// `self ≼ other`: on the zero-padded views, other_i − 1 ≤ self_i ≤ other_i.
    pub fn precedes(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        (0..len).all(|i| {
            let (a, b) = (self.part(i), other.part(i));
            a <= b && b <= a + 1
        })
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts_unsorted(parts)
    }

    /// Adds a single part (ignored when zero).
    pub fn with_part(&self, part: u32) -> Partition {
        let mut parts = self.0.clone();
        parts.push(part);
        Partition::from_parts_unsorted(parts)
    }

    /// Drops the first part.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Lexicographic comparison of zero-padded part lists.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        self.cmp(other)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.0)
    }
}

pub(crate) fn write_row(f: &mut fmt::Formatter<'_>, row: &[u32]) -> fmt::Result {
    if row.is_empty() {
        return f.write_str("-");
    }
    for (i, x) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses "6,2", "-" or "" (empty), tolerating spaces and square brackets.
pub(crate) fn parse_row(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad integer {:?} in {:?}", t.trim(), s)))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_row(s)?)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// Staircase partition [d, d−1, …, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoCore {
    pub d: u32,
}

impl TwoCore {
    pub fn core(&self) -> Partition {
        Partition((1..=self.d).rev().collect())
    }

    pub fn weight(&self) -> u32 {
        self.d * (self.d + 1) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub top: Partition,
    pub bottom: Partition,
}

impl Bipartition {
    pub fn new(top: Partition, bottom: Partition) -> Self {
        Bipartition { top, bottom }
    }

    pub fn weight(&self) -> u32 {
        self.top.weight() + self.bottom.weight()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} ; {}]", self.top, self.bottom)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Parses "3 ; 1" or "[1,1 ; 3]".
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let (a, b) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("bipartition {s:?} needs a ';'")))?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// Partitions of `n` in descending lexicographic order.
pub struct Partitions {
    next: Option<Vec<u32>>,
}

pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // Successor: find the last part > 1, lower it by one and refill the
        // remainder greedily with parts no larger than the lowered value.
        let mut succ = cur.clone();
        let mut rest: u32 = 0;
        while let Some(&1) = succ.last() {
            succ.pop();
            rest += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let cap = *last;
            rest += 1;
            while rest > 0 {
                let p = rest.min(cap);
                succ.push(p);
                rest -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition(cur))
    }
}

/// Bipartitions of `n`, ordered by the weight of the top row (ascending),
/// then top descending-lex, then bottom descending-lex.
pub fn enumerate_bipartitions(n: u32) -> impl Iterator<Item = Bipartition> {
    (0..=n).flat_map(move |k| {
        enumerate_partitions(k).flat_map(move |top| {
            enumerate_partitions(n - k).map(move |bottom| Bipartition::new(top.clone(), bottom))
        })
    })
}

/// p(n) by the standard dynamic programme over part sizes.
pub fn partition_count(n: u32) -> u128 {
    let n = n as usize;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Number of bipartitions of `n`.
pub fn bipartition_count(n: u32) -> u128 {
    (0..=n).map(|k| partition_count(k) * partition_count(n - k)).sum()
}
