//! Symbols of unipotent characters, sectors S_{n,δ} and the linear order
//! used by the greedy correspondence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::betasets::BetaSet;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_bipartitions, enumerate_partitions, parse_row, write_row, Bipartition, Partition};

/// Two-row symbol (Λ^* over Λ_*) in the canonical representative Λ_λ.
///
/// Equality of symbols is equality of the underlying partitions: every
/// constructor normalizes to the representative built from X_λ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[String; 2]", into = "[String; 2]")]
pub struct Symbol {
    top: BetaSet,
    bottom: BetaSet,
}

fn tri(d: u32) -> u32 {
    d * (d + 1) / 2
}

fn is_unitary_defect(delta: i64) -> bool {
    if delta >= 0 {
        delta % 2 == 0
    } else {
        delta % 2 != 0
    }
}

impl Symbol {
    pub fn from_partition(lam: &Partition) -> Symbol {
        let x = BetaSet::from_partition(lam);
        let (odd, even) = (x.odd_part(), x.even_part());
        if lam.two_core().d % 2 == 0 {
            Symbol { top: odd, bottom: even }
        } else {
            Symbol { top: even, bottom: odd }
        }
    }

    /// Validates two rows and returns the canonical symbol with the same
    /// underlying partition. Rows may be any representative of the class.
    pub fn from_rows(top: BetaSet, bottom: BetaSet) -> Result<Symbol> {
        let delta = top.len() as i64 - bottom.len() as i64;
        let bad = |why: &str| Error::MalformedSymbol(format!("({} | {}): {why}", RowFmt(&top), RowFmt(&bottom)));
        if top.entries().iter().any(|x| bottom.contains(*x)) {
            return Err(bad("rows overlap"));
        }
        let homogeneous = |r: &BetaSet, parity: u32| r.entries().iter().all(|x| x % 2 == parity);
        if !is_unitary_defect(delta) {
            return Err(bad("defect must be non-negative even or negative odd"));
        }
        let (top_parity, bottom_parity) = if delta >= 0 { (1, 0) } else { (0, 1) };
        if !homogeneous(&top, top_parity) || !homogeneous(&bottom, bottom_parity) {
            return Err(bad("row parities do not match the defect"));
        }
        let lam = top.merge(&bottom)?.upsilon();
        let canonical = Symbol::from_partition(&lam);
        if canonical.defect() != delta {
            return Err(bad("defect does not match the 2-core of the underlying partition"));
        }
        Ok(canonical)
    }

    /// The unique symbol of defect `delta` whose bipartition is `bp`.
    pub fn from_bipartition(bp: &Bipartition, delta: i64) -> Result<Symbol> {
        let d = delta.unsigned_abs() as u32;
        if !is_unitary_defect(delta) {
            return Err(Error::InvalidDefect { n: tri(d) + 2 * bp.weight(), defect: delta });
        }
        let (odd_p, even_p) = if delta >= 0 { (&bp.top, &bp.bottom) } else { (&bp.bottom, &bp.top) };
        let m = even_p.len().max(odd_p.len().saturating_sub(d as usize));
        let odd_row = BetaSet::from_partition_with_len(odd_p, m + d as usize);
        let even_row = BetaSet::from_partition_with_len(even_p, m);
        let odd_row = BetaSet::from_sorted(odd_row.entries().iter().map(|x| 2 * x + 1).collect());
        let even_row = BetaSet::from_sorted(even_row.entries().iter().map(|x| 2 * x).collect());
        Ok(if delta >= 0 {
            Symbol { top: odd_row, bottom: even_row }
        } else {
            Symbol { top: even_row, bottom: odd_row }
        })
    }

    pub fn top(&self) -> &BetaSet {
        &self.top
    }

    pub fn bottom(&self) -> &BetaSet {
        &self.bottom
    }

    pub fn merged(&self) -> BetaSet {
        self.top.merge(&self.bottom).expect("symbol rows are disjoint")
    }

    pub fn partition(&self) -> Partition {
        self.merged().upsilon()
    }

    pub fn rank(&self) -> u32 {
        self.merged().rank() as u32
    }

    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    pub fn sector(&self) -> Sector {
        Sector { n: self.rank(), defect: self.defect() }
    }

    /// Υ(Λ) = [Υ(halved top) ; Υ(halved bottom)].
    pub fn bipartition(&self) -> Bipartition {
        Bipartition::new(self.top.halved().upsilon(), self.bottom.halved().upsilon())
    }

    pub fn ord(&self) -> i64 {
        self.merged().ord()
    }

    /// Total order used to process a sector: for an even total rank compare
    /// |Υ^*|, then Υ^*, then Υ_*; for an odd total rank the rows swap roles.
    pub fn lt_cmp(&self, other: &Symbol, even_total: bool) -> Ordering {
        lt_key(&self.bipartition(), even_total).cmp(&lt_key(&other.bipartition(), even_total))
    }
}

pub(crate) fn lt_key(bp: &Bipartition, even_total: bool) -> (u32, Partition, Partition) {
    if even_total {
        (bp.top.weight(), bp.top.clone(), bp.bottom.clone())
    } else {
        (bp.bottom.weight(), bp.bottom.clone(), bp.top.clone())
    }
}

/// Strict comparison `a < b` in the linear order on one sector.
pub fn lt_order(a: &Symbol, b: &Symbol, even_total: bool) -> Result<bool> {
    if a.sector() != b.sector() {
        return Err(Error::DifferentSectors(a.to_string(), b.to_string()));
    }
    Ok(a.lt_cmp(b, even_total) == Ordering::Less)
}

struct RowFmt<'a>(&'a BetaSet);

impl fmt::Display for RowFmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, self.0.entries())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", RowFmt(&self.top), RowFmt(&self.bottom))
    }
}

impl Symbol {
    /// The two rows as strings, e.g. `["7", "2"]` or `["-", "7"]`.
    pub fn row_strings(&self) -> [String; 2] {
        [RowFmt(&self.top).to_string(), RowFmt(&self.bottom).to_string()]
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Parses "(7 | 2)", "(-|7)" or "7 | 2".
    fn from_str(s: &str) -> Result<Symbol> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("symbol {s:?} needs a '|'")))?;
        Symbol::from_rows(BetaSet::new(parse_row(a)?)?, BetaSet::new(parse_row(b)?)?)
    }
}

impl TryFrom<[String; 2]> for Symbol {
    type Error = Error;

    fn try_from(rows: [String; 2]) -> Result<Symbol> {
        Symbol::from_rows(BetaSet::new(parse_row(&rows[0])?)?, BetaSet::new(parse_row(&rows[1])?)?)
    }
}

impl From<Symbol> for [String; 2] {
    fn from(s: Symbol) -> [String; 2] {
        s.row_strings()
    }
}

/// S_{n,δ}: symbols of rank n and defect δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sector {
    pub n: u32,
    pub defect: i64,
}

impl Sector {
    pub fn new(n: u32, defect: i64) -> Result<Sector> {
        let d = defect.unsigned_abs();
        let core = d * (d + 1) / 2;
        if !is_unitary_defect(defect) || core > n as u64 || (n as u64 - core) % 2 != 0 {
            return Err(Error::InvalidDefect { n, defect });
        }
        Ok(Sector { n, defect })
    }

    pub fn d(&self) -> u32 {
        self.defect.unsigned_abs() as u32
    }

    /// Weight of the bipartitions parametrizing the sector.
    pub fn quotient_weight(&self) -> u32 {
        (self.n - tri(self.d())) / 2
    }

    /// Symbols of the sector in ascending linear order.
    pub fn symbols(&self, even_total: bool) -> Vec<Symbol> {
        let mut keyed: Vec<_> = enumerate_bipartitions(self.quotient_weight())
            .map(|bp| {
                let key = lt_key(&bp, even_total);
                (key, Symbol::from_bipartition(&bp, self.defect).expect("sector defect is unitary"))
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|(_, s)| s).collect()
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.n, self.defect)
    }
}

/// Sectors of U_n, by increasing |δ|.
pub fn sectors_of(n: u32) -> Vec<Sector> {
    (0..)
        .take_while(|&d| tri(d) <= n)
        .filter(|&d| (n - tri(d)) % 2 == 0)
        .map(|d| Sector { n, defect: if d % 2 == 0 { d as i64 } else { -(d as i64) } })
        .collect()
}

/// Symbols of a sector in the order used for even total rank.
pub fn enumerate_sector(s: Sector) -> Vec<Symbol> {
    s.symbols(true)
}

/// All symbols of U_n, one per partition of n.
pub fn all_symbols(n: u32) -> Vec<Symbol> {
    enumerate_partitions(n).map(|l| Symbol::from_partition(&l)).collect()
}
