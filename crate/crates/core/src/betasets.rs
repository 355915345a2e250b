//! β-sets: rank, shift equivalence, parity splits and the degree functional.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{parse_row, Partition};

/// Strictly decreasing list of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BetaSet(Vec<u32>);

impl BetaSet {
    /// Accepts entries in any order; repeated entries are rejected.
    pub fn new(mut entries: Vec<u32>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBetaSet(format!("{entries:?} has a repeated entry")));
        }
        Ok(BetaSet(entries))
    }

    /// Caller guarantees strictly decreasing entries.
    pub(crate) fn from_sorted(entries: Vec<u32>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] > w[1]));
        BetaSet(entries)
    }

    pub fn empty() -> Self {
        BetaSet(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.contains(&x)
    }

    /// Σ x − C(m, 2).
    pub fn rank(&self) -> i64 {
        let m = self.0.len() as i64;
        self.0.iter().map(|&x| x as i64).sum::<i64>() - m * (m - 1) / 2
    }

    /// {x+1 : x ∈ X} ∪ {0}.
    pub fn shift_up(&self) -> BetaSet {
        let mut v: Vec<u32> = self.0.iter().map(|x| x + 1).collect();
        v.push(0);
        BetaSet(v)
    }

    /// Undoes `shift_up` as long as 0 is an entry.
    pub fn reduce(&self) -> BetaSet {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
            for x in v.iter_mut() {
                *x -= 1;
            }
        }
        BetaSet(v)
    }

    /// [x₁−(m−1), x₂−(m−2), …, x_m] with zeros dropped.
    pub fn upsilon(&self) -> Partition {
        let m = self.0.len();
        let parts = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (m - 1 - i) as u32)
            .collect();
        Partition::from_parts_unsorted(parts)
    }

    /// Inverse of `upsilon` on sets of a prescribed size `m ≥ ℓ(λ)`.
    pub fn from_partition_with_len(lam: &Partition, m: usize) -> BetaSet {
        debug_assert!(m >= lam.len());
        BetaSet((0..m).map(|i| lam.part(i) + (m - 1 - i) as u32).collect())
    }

    /// The representative X_λ: length ℓ(λ), shifted once more when
    /// ℓ(λ) + ℓ(λ∞) is odd.
    pub fn from_partition(lam: &Partition) -> BetaSet {
        let x = BetaSet::from_partition_with_len(lam, lam.len());
        let d = lam.two_core().d as usize;
        if (lam.len() + d) % 2 == 1 {
            x.shift_up()
        } else {
            x
        }
    }

    pub fn odd_part(&self) -> BetaSet {
        BetaSet(self.0.iter().copied().filter(|x| x % 2 == 1).collect())
    }

    pub fn even_part(&self) -> BetaSet {
        BetaSet(self.0.iter().copied().filter(|x| x % 2 == 0).collect())
    }

    pub fn split(&self) -> ParitySplit {
        let odd = self.odd_part();
        let even = self.even_part();
        ParitySplit {
            odd_halved: BetaSet(odd.0.iter().map(|x| (x - 1) / 2).collect()),
            even_halved: BetaSet(even.0.iter().map(|x| x / 2).collect()),
            odd,
            even,
        }
    }

    /// Entrywise x ↦ ⌊x/2⌋; on a parity-homogeneous row this is the halving map.
    pub fn halved(&self) -> BetaSet {
        BetaSet(self.0.iter().map(|x| x / 2).collect())
    }

    /// Union of two disjoint sets.
    pub fn merge(&self, other: &BetaSet) -> Result<BetaSet> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BetaSet::new(v)
    }

    /// q-degree of dim(ρ_λ) for λ = Υ(X):
    /// Σ (m−i)x_i − Σ x_i(x_i+1)/2 + n(n+1)/2 − m(m−1)(m−2)/6 with n = rank(X).
    pub fn ord(&self) -> i64 {
        let m = self.0.len() as i64;
        let n = self.rank();
        let weighted: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &x)| (m - 1 - i as i64) * x as i64)
            .sum();
        let tri: i64 = self.0.iter().map(|&x| x as i64 * (x as i64 + 1) / 2).sum();
        weighted - tri + n * (n + 1) / 2 - m * (m - 1) * (m - 2) / 6
    }
}

/// X¹, X⁰ and their halvings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySplit {
    pub odd: BetaSet,
    pub even: BetaSet,
    pub odd_halved: BetaSet,
    pub even_halved: BetaSet,
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for BetaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        BetaSet::new(parse_row(inner)?)
    }
}
