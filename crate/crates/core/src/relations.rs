//! Sub-relations of the correspondence over finite windows of dual pairs:
//! the axioms (symmetric, semi-persistent, one-to-one), the formal
//! extension to Lusztig series, and the maximality obstruction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::correspondence::{
    in_howe_relation, in_relation, overline_theta, overline_theta_sector, underline_theta, underline_theta_sector,
};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symbols::{all_symbols, sectors_of, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Underline,
    Overline,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Underline => "underline",
            Variant::Overline => "overline",
        })
    }
}

/// The image of one symbol under θ̲ or θ̄.
pub fn apply_variant(variant: Variant, source: &Symbol, n2: u32) -> Result<Option<Symbol>> {
    match variant {
        Variant::Underline => underline_theta(source, n2),
        Variant::Overline => overline_theta(source, n2),
    }
}

/// All pairs of θ̲ or θ̄ for (U_n, U_n′), sector by sector.
pub fn variant_pairs(variant: Variant, n: u32, n2: u32) -> Result<Vec<(Symbol, Symbol)>> {
    let mut out = Vec::new();
    for sector in sectors_of(n) {
        let map = match variant {
            Variant::Underline => underline_theta_sector(n, sector.defect, n2)?,
            Variant::Overline => overline_theta_sector(n, sector.defect, n2)?,
        };
        out.extend(map);
    }
    Ok(out)
}

/// A unipotent-by-label character: ρ ↔ ρ^(1) ⊗ ρ^(2) with ρ^(1) opaque and
/// ρ^(2) unipotent of U_{n−m}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesCharacter {
    pub label: String,
    pub m: u32,
    pub second: Symbol,
    pub n: u32,
}

impl SeriesCharacter {
    pub fn new(label: impl Into<String>, m: u32, second: Symbol, n: u32) -> Result<Self> {
        if m > n || second.rank() != n - m {
            return Err(Error::MalformedSymbol(format!(
                "{second} has rank {} but the second factor lives in U_{}",
                second.rank(),
                n as i64 - m as i64
            )));
        }
        Ok(SeriesCharacter { label: label.into(), m, second, n })
    }
}

/// Extends θ̲ or θ̄ to a Lusztig series by acting on the unipotent factor
/// with the pair (U_{n−m}, U_{n′−m}). `None` when undefined.
pub fn extend_to_series(chi: &SeriesCharacter, n2: u32, variant: Variant) -> Result<Option<SeriesCharacter>> {
    if chi.m > n2 {
        return Ok(None);
    }
    Ok(apply_variant(variant, &chi.second, n2 - chi.m)?.map(|second| SeriesCharacter {
        label: chi.label.clone(),
        m: chi.m,
        second,
        n: n2,
    }))
}

/// For each dual pair in a finite set, a set of related partition pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationWindow {
    families: BTreeMap<(u32, u32), BTreeSet<(Partition, Partition)>>,
}

/// Every (a, b) with a ≤ n_max, b ≤ n2_max, together with the reversed pairs.
pub fn closed_rectangle(n_max: u32, n2_max: u32) -> Vec<(u32, u32)> {
    let mut set = BTreeSet::new();
    for a in 0..=n_max {
        for b in 0..=n2_max {
            set.insert((a, b));
            set.insert((b, a));
        }
    }
    set.into_iter().collect()
}

impl RelationWindow {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a pair with no related characters yet.
    pub fn add_family(&mut self, n: u32, n2: u32) {
        self.families.entry((n, n2)).or_default();
    }

    /// Adds a pair; it must lie in the correspondence.
    pub fn insert(&mut self, lam: Partition, lam2: Partition) -> Result<()> {
        if !in_howe_relation(&lam, &lam2) {
            return Err(Error::CandidateNotInTheta(
                Symbol::from_partition(&lam).to_string(),
                Symbol::from_partition(&lam2).to_string(),
            ));
        }
        self.families.entry((lam.weight(), lam2.weight())).or_default().insert((lam, lam2));
        Ok(())
    }

    pub fn remove(&mut self, lam: &Partition, lam2: &Partition) -> bool {
        self.families
            .get_mut(&(lam.weight(), lam2.weight()))
            .map(|f| f.remove(&(lam.clone(), lam2.clone())))
            .unwrap_or(false)
    }

    pub fn remove_family(&mut self, n: u32, n2: u32) {
        self.families.remove(&(n, n2));
    }

    pub fn family(&self, n: u32, n2: u32) -> Option<&BTreeSet<(Partition, Partition)>> {
        self.families.get(&(n, n2))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.families.keys().copied()
    }

    pub fn contains(&self, lam: &Partition, lam2: &Partition) -> bool {
        self.family(lam.weight(), lam2.weight())
            .is_some_and(|f| f.contains(&(lam.clone(), lam2.clone())))
    }

    /// Images of λ in the family (|λ|, n′).
    pub fn images(&self, lam: &Partition, n2: u32) -> Vec<Partition> {
        self.family(lam.weight(), n2)
            .map(|f| f.iter().filter(|(a, _)| a == lam).map(|(_, b)| b.clone()).collect())
            .unwrap_or_default()
    }

    /// Preimages of λ′ in the family (n, |λ′|).
    pub fn preimages(&self, n: u32, lam2: &Partition) -> Vec<Partition> {
        self.family(n, lam2.weight())
            .map(|f| f.iter().filter(|(_, b)| b == lam2).map(|(a, _)| a.clone()).collect())
            .unwrap_or_default()
    }

    /// θ̲ or θ̄ on the given pairs.
    pub fn build(variant: Variant, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut w = RelationWindow::new();
        for &(n, n2) in pairs {
            w.add_family(n, n2);
            for (a, b) in variant_pairs(variant, n, n2)? {
                w.insert(a.partition(), b.partition())?;
            }
        }
        Ok(w)
    }

    /// The whole correspondence Θ on the given pairs.
    pub fn full_theta(pairs: &[(u32, u32)]) -> Self {
        let mut w = RelationWindow::new();
        for &(n, n2) in pairs {
            w.add_family(n, n2);
            let even_total = (n + n2) % 2 == 0;
            let targets = all_symbols(n2);
            for a in all_symbols(n) {
                for b in &targets {
                    if in_relation(&a, b, even_total) {
                        w.families.get_mut(&(n, n2)).unwrap().insert((a.partition(), b.partition()));
                    }
                }
            }
        }
        w
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub pair: (u32, u32),
    pub symbols: Vec<String>,
}

fn sym(l: &Partition) -> String {
    Symbol::from_partition(l).to_string()
}

fn violation(kind: &str, pair: (u32, u32), parts: &[&Partition]) -> Violation {
    Violation { kind: kind.into(), pair, symbols: parts.iter().map(|p| sym(p)).collect() }
}

/// (λ, λ′) in the family (n, n′) iff (λ′, λ) in the family (n′, n).
pub fn check_symmetric(w: &RelationWindow) -> Vec<Violation> {
    let mut out = Vec::new();
    for ((n, n2), fam) in &w.families {
        let Some(back) = w.family(*n2, *n) else {
            out.push(Violation { kind: "missing-orientation".into(), pair: (*n, *n2), symbols: vec![] });
            continue;
        };
        for (a, b) in fam {
            if !back.contains(&(b.clone(), a.clone())) {
                out.push(violation("asymmetric", (*n, *n2), &[a, b]));
            }
        }
    }
    out
}

/// Whether ρ_λ with 2-core length d must occur for (U_n, U_n′).
pub fn semi_persistent_bound(n: u32, n2: u32, d: u32) -> bool {
    if (n + n2 + d) % 2 == 0 {
        n2 + d >= n
    } else {
        n2 > n + d
    }
}

pub fn check_semi_persistent(w: &RelationWindow) -> Vec<Violation> {
    let mut out = Vec::new();
    for ((n, n2), fam) in &w.families {
        let domain: BTreeSet<&Partition> = fam.iter().map(|(a, _)| a).collect();
        for lam in enumerate_partitions(*n) {
            if semi_persistent_bound(*n, *n2, lam.two_core().d) && !domain.contains(&lam) {
                out.push(violation("does-not-occur", (*n, *n2), &[&lam]));
            }
        }
    }
    out
}

pub fn check_one_to_one(w: &RelationWindow) -> Vec<Violation> {
    let mut out = Vec::new();
    for ((n, n2), fam) in &w.families {
        let mut by_source: BTreeMap<&Partition, Vec<&Partition>> = BTreeMap::new();
        let mut by_target: BTreeMap<&Partition, Vec<&Partition>> = BTreeMap::new();
        for (a, b) in fam {
            by_source.entry(a).or_default().push(b);
            by_target.entry(b).or_default().push(a);
        }
        for (a, bs) in by_source.iter().filter(|(_, v)| v.len() > 1) {
            let mut parts = vec![*a];
            parts.extend(bs.iter().copied());
            out.push(violation("several-images", (*n, *n2), &parts));
        }
        for (b, as_) in by_target.iter().filter(|(_, v)| v.len() > 1) {
            let mut parts = vec![*b];
            parts.extend(as_.iter().copied());
            out.push(violation("several-preimages", (*n, *n2), &parts));
        }
    }
    out
}

/// Every stored pair lies in the correspondence.
pub fn check_sub_relation(w: &RelationWindow) -> Vec<Violation> {
    let mut out = Vec::new();
    for ((n, n2), fam) in &w.families {
        for (a, b) in fam {
            if !in_howe_relation(a, b) {
                out.push(violation("not-in-theta", (*n, *n2), &[a, b]));
            }
        }
    }
    out
}

/// Why a related pair cannot be added to a one-to-one relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// λ already has the image `image`.
    ExistingImage { source: Symbol, image: Symbol },
    /// λ′ already has the preimage `preimage` ≠ λ.
    ExistingPreimage { target: Symbol, preimage: Symbol },
}

/// Obstruction to adding (λ, λ′) ∈ Θ ∖ w to the one-to-one relation w.
pub fn maximality_witness(w: &RelationWindow, lam: &Partition, lam2: &Partition) -> Result<Witness> {
    let (n, n2) = (lam.weight(), lam2.weight());
    let (s, s2) = (Symbol::from_partition(lam), Symbol::from_partition(lam2));
    if !in_howe_relation(lam, lam2) {
        return Err(Error::CandidateNotInTheta(s.to_string(), s2.to_string()));
    }
    if w.family(n, n2).is_none() {
        return Err(Error::PairNotInWindow(n, n2));
    }
    if w.contains(lam, lam2) {
        return Err(Error::Invariant(format!("{s} -> {s2} is already related")));
    }
    if let Some(image) = w.images(lam, n2).into_iter().next() {
        return Ok(Witness::ExistingImage { source: s, image: Symbol::from_partition(&image) });
    }
    // λ has no image, so λ′ must be taken: look it up backwards first, the
    // way semi-persistence on (U_n′, U_n) provides it, then forwards.
    let backward = w
        .images(lam2, n)
        .into_iter()
        .chain(w.preimages(n, lam2))
        .find(|other| other != lam);
    match backward {
        Some(other) => Ok(Witness::ExistingPreimage { target: s2, preimage: Symbol::from_partition(&other) }),
        None => Err(Error::NoObstruction(s.to_string(), s2.to_string())),
    }
}

/// Runs `maximality_witness` on every Θ-pair of each family outside w.
pub fn check_maximality(w: &RelationWindow, pairs: &[(u32, u32)]) -> Vec<Violation> {
    let mut out = Vec::new();
    let theta = RelationWindow::full_theta(pairs);
    for ((n, n2), fam) in &theta.families {
        for (a, b) in fam {
            if w.contains(a, b) {
                continue;
            }
            if let Err(e) = maximality_witness(w, a, b) {
                out.push(Violation { kind: format!("no-witness: {e}"), pair: (*n, *n2), symbols: vec![sym(a), sym(b)] });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Symbol {
        x.parse().unwrap()
    }

    fn l(x: &str) -> Partition {
        s(x).partition()
    }

    #[test]
    fn series_extension() {
        let chi = SeriesCharacter::new("t", 1, s("(-|7)"), 8).unwrap();
        let out = extend_to_series(&chi, 11, Variant::Overline).unwrap().unwrap();
        assert_eq!(out, SeriesCharacter::new("t", 1, s("(5|6)"), 11).unwrap());
        let under = extend_to_series(&chi, 11, Variant::Underline).unwrap().unwrap();
        assert_eq!(under.second, s("(7|4)"));
        let plain = SeriesCharacter::new("1", 0, s("(-|7)"), 7).unwrap();
        assert_eq!(
            extend_to_series(&plain, 10, Variant::Underline).unwrap().unwrap().second,
            underline_theta(&s("(-|7)"), 10).unwrap().unwrap()
        );
        assert!(SeriesCharacter::new("t", 2, s("(-|7)"), 8).is_err());
    }

    #[test]
    fn symmetric_and_one_to_one_small() {
        let pairs = closed_rectangle(4, 6);
        for v in [Variant::Underline, Variant::Overline] {
            let w = RelationWindow::build(v, &pairs).unwrap();
            assert!(check_symmetric(&w).is_empty(), "{v}");
            assert!(check_semi_persistent(&w).is_empty(), "{v}");
            assert!(check_one_to_one(&w).is_empty(), "{v}");
            assert!(check_sub_relation(&w).is_empty(), "{v}");
        }
    }

    #[test]
    fn constructed_violations_are_reported() {
        let pairs = closed_rectangle(2, 3);
        let mut w = RelationWindow::build(Variant::Underline, &pairs).unwrap();
        let (a, b) = w.family(2, 3).unwrap().iter().next().cloned().unwrap();
        w.remove(&a, &b);
        let v = check_symmetric(&w);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].pair, (3, 2));

        let mut empty = RelationWindow::new();
        empty.add_family(3, 5);
        assert_eq!(check_semi_persistent(&empty).len(), 3);

        let full = RelationWindow::full_theta(&[(7, 10)]);
        let v = check_one_to_one(&full);
        assert!(v.iter().any(|x| x.kind == "several-preimages" && x.symbols[0] == "(5,3,1 | 10,4,2)"));
    }

    #[test]
    fn witness_examples() {
        let under = RelationWindow::build(Variant::Underline, &closed_rectangle(7, 10)).unwrap();
        let over = RelationWindow::build(Variant::Overline, &closed_rectangle(7, 10)).unwrap();
        assert_eq!(
            maximality_witness(&under, &l("(-|7)"), &l("(5|6)")).unwrap(),
            Witness::ExistingImage { source: s("(-|7)"), image: s("(7|4)") }
        );
        assert_eq!(
            maximality_witness(&over, &l("(-|7)"), &l("(7|4)")).unwrap(),
            Witness::ExistingImage { source: s("(-|7)"), image: s("(5|6)") }
        );
        // (−|7,3,1) has no correspondent in U_10 at all, so that candidate is rejected.
        let w810 = RelationWindow::build(Variant::Underline, &closed_rectangle(8, 10)).unwrap();
        assert!(matches!(
            maximality_witness(&w810, &l("(-|7,3,1)"), &l("(7,5,3,1|-)")),
            Err(Error::CandidateNotInTheta(_, _))
        ));
    }

    #[test]
    fn witness_through_the_target() {
        // S(10,0) -> S(8,0) has τ = −1, so θ̲ is partial there and some
        // Θ-pairs can only be blocked at the target.
        let w = RelationWindow::build(Variant::Underline, &closed_rectangle(8, 10)).unwrap();
        let mut saw_preimage_case = false;
        let theta = RelationWindow::full_theta(&[(10, 8)]);
        for (a, b) in theta.family(10, 8).unwrap() {
            if w.contains(a, b) {
                continue;
            }
            match maximality_witness(&w, a, b).unwrap() {
                Witness::ExistingPreimage { .. } => saw_preimage_case = true,
                Witness::ExistingImage { .. } => {}
            }
        }
        assert!(saw_preimage_case);
    }
}
