//! The correspondence on unipotent characters of (U_n, U_n′): membership in
//! B^±, the sets Θ(Λ) and their strata, the maps θ_k, and the two one-to-one
//! choices θ̲ (minimal) and θ̄ (greedy by degree).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};
use crate::symbols::{all_symbols, sectors_of, Sector, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualPair {
    pub n: u32,
    pub n2: u32,
}

impl DualPair {
    pub fn new(n: u32, n2: u32) -> Self {
        DualPair { n, n2 }
    }

    pub fn even_total(&self) -> bool {
        (self.n + self.n2) % 2 == 0
    }

    pub fn reversed(&self) -> DualPair {
        DualPair { n: self.n2, n2: self.n }
    }
}

/// |δ′| as a function of |δ|.
pub fn target_d(d: u32, even_total: bool) -> u32 {
    match (even_total, d % 2 == 0) {
        (true, true) if d == 0 => 0,
        (true, true) => d - 1,
        (true, false) => d + 1,
        (false, true) => d + 1,
        (false, false) => d - 1,
    }
}

/// Defect of the correspondents of a symbol of defect `delta`.
pub fn target_defect(delta: i64, even_total: bool) -> i64 {
    if even_total {
        if delta == 0 {
            0
        } else {
            -delta + 1
        }
    } else {
        -delta - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorMap {
    pub source: Sector,
    pub target: Sector,
    pub d: u32,
    pub d2: u32,
    pub tau: i64,
}

impl SectorMap {
    pub fn even_total(&self) -> bool {
        (self.source.n + self.target.n) % 2 == 0
    }
}

pub fn sector_map(n: u32, delta: i64, n2: u32) -> Result<SectorMap> {
    let source = Sector::new(n, delta)?;
    let even_total = (n + n2) % 2 == 0;
    let d = source.d();
    let d2 = target_d(d, even_total);
    let delta2 = target_defect(delta, even_total);
    let target = Sector::new(n2, delta2).map_err(|_| Error::NoTargetSector { n, defect: delta, n2 })?;
    let lhs = n2 as i64 - (d2 * (d2 + 1) / 2) as i64;
    let rhs = n as i64 - (d * (d + 1) / 2) as i64;
    Ok(SectorMap { source, target, d, d2, tau: (lhs - rhs) / 2 })
}

/// Membership of (Λ, Λ′) in B⁺ (even total rank) or B⁻ (odd), read on the
/// rows of the bipartitions U = Υ(Λ), V = Υ(Λ′).
pub fn in_relation(a: &Symbol, b: &Symbol, even_total: bool) -> bool {
    let (u, v) = (a.bipartition(), b.bipartition());
    let t = |p: &Partition| p.transpose();
    if even_total {
        t(&u.bottom).precedes(&t(&v.top))
            && t(&v.bottom).precedes(&t(&u.top))
            && b.defect() == target_defect(a.defect(), true)
    } else {
        t(&u.top).precedes(&t(&v.bottom))
            && t(&v.top).precedes(&t(&u.bottom))
            && b.defect() == target_defect(a.defect(), false)
    }
}

/// (Λ_λ, Λ_λ′) ∈ B_{U_n, U_n′} with n = |λ|, n′ = |λ′|.
pub fn in_howe_relation(lam: &Partition, lam2: &Partition) -> bool {
    let even_total = (lam.weight() + lam2.weight()) % 2 == 0;
    in_relation(&Symbol::from_partition(lam), &Symbol::from_partition(lam2), even_total)
}

/// Stratum index k of a related pair.
pub fn stratum_of(a: &Symbol, b: &Symbol, even_total: bool) -> i64 {
    let (u, v) = (a.bipartition(), b.bipartition());
    if even_total {
        u.top.weight() as i64 - v.bottom.weight() as i64
    } else {
        u.bottom.weight() as i64 - v.top.weight() as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaEntry {
    pub symbol: Symbol,
    pub ord: i64,
    /// Maximal ord over all of Θ(Λ).
    pub natural: bool,
    /// The θ̄-image of the row's source.
    pub overline: bool,
    /// Already taken by an earlier source, i.e. outside Θ^♭(Λ).
    pub cancel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaRow {
    pub source: Symbol,
    pub strata: BTreeMap<u32, Vec<ThetaEntry>>,
}

impl ThetaRow {
    pub fn entries(&self) -> impl Iterator<Item = &ThetaEntry> {
        self.strata.values().flatten()
    }

    pub fn targets(&self) -> impl Iterator<Item = &Symbol> {
        self.entries().map(|e| &e.symbol)
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.targets().any(|t| t == s)
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries().count()
    }

    pub fn stratum(&self, k: u32) -> &[ThetaEntry] {
        self.strata.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_ord(&self) -> Option<i64> {
        self.entries().map(|e| e.ord).max()
    }
}

/// Θ(Λ) at U_n′ by filtering every symbol of U_n′ through `in_relation`.
///
/// Within a stratum θ_k(Λ) is listed first when τ ≥ 0, then the remaining
/// targets ascend in the linear order. Only the `natural` marker is set.
pub fn theta_set(source: &Symbol, n2: u32) -> Result<ThetaRow> {
    let even_total = (source.rank() + n2) % 2 == 0;
    let mut strata: BTreeMap<u32, Vec<Symbol>> = BTreeMap::new();
    for t in all_symbols(n2) {
        if in_relation(source, &t, even_total) {
            let k = stratum_of(source, &t, even_total);
            let k = u32::try_from(k).map_err(|_| {
                Error::Invariant(format!("negative stratum {k} for {source} -> {t}"))
            })?;
            strata.entry(k).or_default().push(t);
        }
    }
    let forward = match sector_map(source.rank(), source.defect(), n2) {
        Ok(m) if m.tau >= 0 => Some(m),
        _ => None,
    };
    let max_ord = strata.values().flatten().map(Symbol::ord).max();
    let mut out = BTreeMap::new();
    for (k, mut syms) in strata {
        syms.sort_by(|a, b| a.lt_cmp(b, even_total));
        if let Some(map) = forward.as_ref().filter(|_| k <= theta_k_range(source, even_total)) {
            let lead = theta_k_unchecked(source, map, k);
            let pos = syms.iter().position(|s| *s == lead).ok_or_else(|| {
                Error::Invariant(format!("theta_{k}({source}) = {lead} missing from its stratum"))
            })?;
            let lead = syms.remove(pos);
            syms.insert(0, lead);
        }
        let entries = syms
            .into_iter()
            .map(|symbol| {
                let ord = symbol.ord();
                ThetaEntry { natural: Some(ord) == max_ord, overline: false, cancel: false, ord, symbol }
            })
            .collect();
        out.insert(k, entries);
    }
    Ok(ThetaRow { source: source.clone(), strata: out })
}

/// Largest k for which θ_k is defined: μ₁ for even total rank, ν₁ for odd,
/// where Υ(Λ) = [μ ; ν].
pub fn theta_k_range(source: &Symbol, even_total: bool) -> u32 {
    let bp = source.bipartition();
    if even_total {
        bp.top.first()
    } else {
        bp.bottom.first()
    }
}

/// θ_k on bipartitions: [ν ; μ₂…] ∪ [τ+k ; μ₁−k] (even) or
/// [ν₂… ; μ] ∪ [ν₁−k ; τ+k] (odd).
pub fn theta_k_bipartition(bp: &Bipartition, tau: u32, k: u32, even_total: bool) -> Bipartition {
    let (mu, nu) = (&bp.top, &bp.bottom);
    if even_total {
        Bipartition::new(nu.with_part(tau + k), mu.tail().with_part(mu.first() - k))
    } else {
        Bipartition::new(nu.tail().with_part(nu.first() - k), mu.with_part(tau + k))
    }
}

fn theta_k_unchecked(source: &Symbol, map: &SectorMap, k: u32) -> Symbol {
    let even_total = map.even_total();
    let bp = theta_k_bipartition(&source.bipartition(), map.tau as u32, k, even_total);
    Symbol::from_bipartition(&bp, map.target.defect).expect("target sector defect is unitary")
}

pub fn theta_k_map(source: &Symbol, n2: u32, k: u32) -> Result<Symbol> {
    let map = sector_map(source.rank(), source.defect(), n2)?;
    if map.tau < 0 {
        return Err(Error::TauNegative(map.tau));
    }
    let max = theta_k_range(source, map.even_total());
    if k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    Ok(theta_k_unchecked(source, &map, k))
}

/// All θ_k(Λ), k = 0..=K.
pub fn theta_k_all(source: &Symbol, n2: u32) -> Result<Vec<Symbol>> {
    let map = sector_map(source.rank(), source.defect(), n2)?;
    if map.tau < 0 {
        return Err(Error::TauNegative(map.tau));
    }
    let max = theta_k_range(source, map.even_total());
    Ok((0..=max).map(|k| theta_k_unchecked(source, &map, k)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K0Report {
    /// argmax of ord(θ_k(Λ)).
    pub k0: u32,
    pub ords: Vec<i64>,
    /// ord(θ_k) strictly increases up to k₀ and strictly decreases after.
    pub unimodal: bool,
    /// Moving entries of the first and second rows, on a common representative.
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    /// k₀ from the α/β case analysis, when the sequences have the expected shape.
    pub closed_form: Option<u32>,
}

pub fn k0_index(source: &Symbol, n2: u32) -> Result<K0Report> {
    let thetas = theta_k_all(source, n2)?;
    let even_total = (source.rank() + n2) % 2 == 0;
    let ords: Vec<i64> = thetas.iter().map(Symbol::ord).collect();
    let k0 = (0..ords.len()).max_by(|&a, &b| ords[a].cmp(&ords[b]).then(b.cmp(&a))).unwrap_or(0);
    let unimodal = ords[..=k0].windows(2).all(|w| w[0] < w[1]) && ords[k0..].windows(2).all(|w| w[0] > w[1]);
    let (alpha, beta) = moving_entries(&thetas, even_total).unwrap_or_default();
    let closed_form = if thetas.len() == 1 {
        Some(0)
    } else if alpha.len() == thetas.len() {
        closed_form_k0(&alpha, &beta, even_total)
    } else {
        None
    };
    Ok(K0Report { k0: k0 as u32, ords, unimodal, alpha, beta, closed_form })
}

/// Applies `s` double shifts to a row of parity `parity`.
fn pad_row(row: &[u32], s: usize, parity: u32) -> Vec<u32> {
    let mut v = row.to_vec();
    for _ in 0..s {
        v = v.iter().map(|x| x + 2).collect();
        v.push(parity);
    }
    v
}

/// α_k, β_k: the entries of θ_k (first and second row) that move between
/// θ_k and θ_{k+1}; the last terms continue the arithmetic progression.
fn moving_entries(thetas: &[Symbol], even_total: bool) -> Option<(Vec<u32>, Vec<u32>)> {
    if thetas.len() < 2 {
        return None;
    }
    let top_parity = if thetas[0].defect() >= 0 { 1 } else { 0 };
    let width = thetas.iter().map(|t| t.bottom().len()).max()?;
    let rows: Vec<(Vec<u32>, Vec<u32>)> = thetas
        .iter()
        .map(|t| {
            let s = width - t.bottom().len();
            (pad_row(t.top().entries(), s, top_parity), pad_row(t.bottom().entries(), s, 1 - top_parity))
        })
        .collect();
    let step: i64 = if even_total { 2 } else { -2 };
    let single_move = |a: &[u32], b: &[u32], dir: i64| -> Option<u32> {
        let gone: Vec<u32> = a.iter().copied().filter(|x| !b.contains(x)).collect();
        let came: Vec<u32> = b.iter().copied().filter(|x| !a.contains(x)).collect();
        (gone.len() == 1 && came.len() == 1 && came[0] as i64 - gone[0] as i64 == dir).then_some(gone[0])
    };
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for w in rows.windows(2) {
        alpha.push(single_move(&w[0].0, &w[1].0, step)?);
        beta.push(single_move(&w[0].1, &w[1].1, -step)?);
    }
    alpha.push((*alpha.last()? as i64 + step) as u32);
    beta.push((*beta.last()? as i64 - step) as u32);
    Some((alpha, beta))
}

/// The α/β case analysis. In the odd case the roles of α and β swap.
fn closed_form_k0(alpha: &[u32], beta: &[u32], even_total: bool) -> Option<u32> {
    let (up, down) = if even_total { (alpha, beta) } else { (beta, alpha) };
    let last = up.len() - 1;
    if up[0] > down[0] {
        return Some(0);
    }
    if up[last] < down[last] {
        return Some(last as u32);
    }
    let crossings: Vec<usize> = (1..=last).filter(|&k| up[k - 1] < down[k - 1] && up[k] > down[k]).collect();
    if crossings.len() != 1 {
        return None;
    }
    let k1 = crossings[0];
    Some(if up[k1 - 1] + 2 < down[k1 - 1] { k1 as u32 } else { k1 as u32 - 1 })
}

/// θ̲(Λ): θ₀(Λ) when τ ≥ 0; otherwise the preimage of Λ under θ₀ of the
/// reversed pair, if any.
pub fn underline_theta(source: &Symbol, n2: u32) -> Result<Option<Symbol>> {
    let map = match sector_map(source.rank(), source.defect(), n2) {
        Ok(m) => m,
        Err(Error::NoTargetSector { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    if map.tau >= 0 {
        return Ok(Some(theta_k_unchecked(source, &map, 0)));
    }
    let back = reverse_map(&map)?;
    for cand in map.target.symbols(true) {
        if theta_k_unchecked(&cand, &back, 0) == *source {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

fn reverse_map(map: &SectorMap) -> Result<SectorMap> {
    let back = sector_map(map.target.n, map.target.defect, map.source.n)?;
    if back.target != map.source || back.tau != -map.tau {
        return Err(Error::Invariant(format!(
            "reversing {} -> {} gives {} -> {}",
            map.source, map.target, back.source, back.target
        )));
    }
    Ok(back)
}

/// θ̲ on a whole sector, as an association from the sector of U_n.
pub fn underline_theta_sector(n: u32, delta: i64, n2: u32) -> Result<BTreeMap<Symbol, Symbol>> {
    let map = match sector_map(n, delta, n2) {
        Ok(m) => m,
        Err(Error::NoTargetSector { .. }) => return Ok(BTreeMap::new()),
        Err(e) => return Err(e),
    };
    if map.tau >= 0 {
        return Ok(map
            .source
            .symbols(true)
            .into_iter()
            .map(|s| {
                let t = theta_k_unchecked(&s, &map, 0);
                (s, t)
            })
            .collect());
    }
    let back = reverse_map(&map)?;
    Ok(map
        .target
        .symbols(true)
        .into_iter()
        .map(|t| (theta_k_unchecked(&t, &back, 0), t))
        .collect())
}

/// Greedy construction of θ̄ on one sector, with the fully marked rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorCorrespondence {
    /// The map as requested, from the sector of U_n.
    pub map: SectorMap,
    /// True when τ < 0 and the rows were computed on the reversed pair.
    pub reversed: bool,
    /// Rows of the direction actually computed, sources in ascending order.
    pub rows: Vec<ThetaRow>,
    /// θ̄ from the sector of U_n into the sector of U_n′ (partial when reversed).
    pub overline: BTreeMap<Symbol, Symbol>,
}

/// Runs the greedy selection for a sector with τ ≥ 0.
fn greedy_rows(map: &SectorMap) -> Result<(Vec<ThetaRow>, BTreeMap<Symbol, Symbol>)> {
    let even_total = map.even_total();
    let mut used: BTreeSet<Symbol> = BTreeSet::new();
    let mut rows = Vec::new();
    let mut chosen = BTreeMap::new();
    for src in map.source.symbols(even_total) {
        let mut row = theta_set(&src, map.target.n)?;
        let flat: Vec<&ThetaEntry> = row.entries().filter(|e| !used.contains(&e.symbol)).collect();
        let best = flat.iter().map(|e| e.ord).max().ok_or_else(|| Error::EmptyFlatSet(src.to_string()))?;
        let pick = flat
            .iter()
            .filter(|e| e.ord == best)
            .map(|e| &e.symbol)
            .min_by(|a, b| a.lt_cmp(b, even_total))
            .cloned()
            .expect("non-empty");
        for e in row.strata.values_mut().flatten() {
            e.cancel = used.contains(&e.symbol);
            e.overline = e.symbol == pick;
        }
        used.insert(pick.clone());
        chosen.insert(src, pick);
        rows.push(row);
    }
    Ok((rows, chosen))
}

pub fn overline_sector(n: u32, delta: i64, n2: u32) -> Result<SectorCorrespondence> {
    let map = sector_map(n, delta, n2)?;
    if map.tau >= 0 {
        let (rows, overline) = greedy_rows(&map)?;
        return Ok(SectorCorrespondence { map, reversed: false, rows, overline });
    }
    let back = reverse_map(&map)?;
    let (rows, chosen) = greedy_rows(&back)?;
    let overline = chosen.into_iter().map(|(a, b)| (b, a)).collect();
    Ok(SectorCorrespondence { map, reversed: true, rows, overline })
}

/// θ̄ on the sector S_{n,δ}; sectors without a target give an empty map.
pub fn overline_theta_sector(n: u32, delta: i64, n2: u32) -> Result<BTreeMap<Symbol, Symbol>> {
    match overline_sector(n, delta, n2) {
        Ok(c) => Ok(c.overline),
        Err(Error::NoTargetSector { .. }) => Ok(BTreeMap::new()),
        Err(e) => Err(e),
    }
}

pub fn overline_theta(source: &Symbol, n2: u32) -> Result<Option<Symbol>> {
    Ok(overline_theta_sector(source.rank(), source.defect(), n2)?.remove(source))
}

/// Θ^♭(Λ): Θ(Λ) minus the θ̄-images of the symbols before Λ. Requires τ ≥ 0.
pub fn theta_flat(source: &Symbol, n2: u32) -> Result<Vec<Symbol>> {
    let map = sector_map(source.rank(), source.defect(), n2)?;
    if map.tau < 0 {
        return Err(Error::TauNegative(map.tau));
    }
    let (rows, _) = greedy_rows(&map)?;
    let row = rows
        .into_iter()
        .find(|r| r.source == *source)
        .ok_or_else(|| Error::Invariant(format!("{source} missing from its sector")))?;
    Ok(row.entries().filter(|e| !e.cancel).map(|e| e.symbol.clone()).collect())
}

pub fn is_stable_range(n: u32, n2: u32) -> bool {
    n <= n2 / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tower {
    Even,
    Odd,
}

impl Tower {
    /// Rank of the group of split rank `r` in the tower.
    pub fn group_rank(&self, r: u32) -> u32 {
        match self {
            Tower::Even => 2 * r,
            Tower::Odd => 2 * r + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OccurrenceVariant {
    Theta,
    Underline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub split_rank: u32,
    pub group_rank: u32,
}

/// First group U_{n′} in the tower where ρ_λ has a correspondent.
pub fn first_occurrence(lam: &Partition, tower: Tower, variant: OccurrenceVariant) -> Result<Occurrence> {
    let src = Symbol::from_partition(lam);
    let n = lam.weight();
    let d = lam.two_core().d;
    // Beyond n + d + 1 every bound for θ̲ holds, so the scan terminates there.
    let limit = (n + d + 3) / 2 + 1;
    for r in 0..=limit {
        let n2 = tower.group_rank(r);
        let found = match variant {
            OccurrenceVariant::Theta => !theta_set(&src, n2)?.is_empty(),
            OccurrenceVariant::Underline => underline_theta(&src, n2)?.is_some(),
        };
        if found {
            return Ok(Occurrence { split_rank: r, group_rank: n2 });
        }
    }
    Err(Error::Invariant(format!("{lam} does not occur below split rank {limit}")))
}

/// Symbols of U_n that have no correspondent in U_n′.
pub fn absent_from_theta(n: u32, n2: u32) -> Result<Vec<Symbol>> {
    let mut out = Vec::new();
    for s in all_symbols(n) {
        if theta_set(&s, n2)?.is_empty() {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.sector().cmp(&b.sector()).then(a.lt_cmp(b, (n + n2) % 2 == 0)));
    Ok(out)
}

/// Sectors of U_n, each with its map to U_n′ or the reason it has none.
pub fn sector_maps(n: u32, n2: u32) -> Vec<(Sector, Result<SectorMap>)> {
    sectors_of(n).into_iter().map(|s| (s, sector_map(n, s.defect, n2))).collect()
}
