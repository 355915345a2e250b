//! Verification suites behind `unitheta verify`. Each check compares two
//! independent computations over a finite range and records pass or fail.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::betasets::BetaSet;
use crate::correspondence::{
    absent_from_theta, first_occurrence, in_relation, is_stable_range, k0_index, overline_sector, sector_map,
    stratum_of, target_d, theta_k_all, theta_set, underline_theta, OccurrenceVariant, Tower,
};
use crate::error::{Error, Result};
use crate::partitions::{bipartition_count, enumerate_partitions, partition_count};
use crate::qseries::{dim_via_betaset, dim_via_hooks, FactoredQPoly};
use crate::relations::{
    check_maximality, check_one_to_one, check_semi_persistent, check_sub_relation, check_symmetric, closed_rectangle,
    RelationWindow, Variant,
};
use crate::symbols::{all_symbols, sectors_of, Symbol};
use crate::table::{build_table, TableDocument};

pub const GOLDEN_7_10: &str = include_str!("../golden/theta_table_7_10.txt");
pub const GOLDEN_8_10: &str = include_str!("../golden/theta_table_8_10.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Dims,
    Lemmas,
    Tables,
    Relations,
    Occurrence,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "counts" => Suite::Counts,
            "dims" => Suite::Dims,
            "lemmas" => Suite::Lemmas,
            "tables" => Suite::Tables,
            "relations" => Suite::Relations,
            "occurrence" => Suite::Occurrence,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, suite: &'static str, name: impl Into<String>, failures: Vec<String>, cases: usize) {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{cases} cases")
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!("{} of {cases} failed: {}", failures.len(), shown.join("; "))
        };
        self.checks.push(Check { suite, name: name.into(), passed, detail });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} [{}] {}: {}", c.suite, c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Runs a suite. `max_n` overrides the suite's default size bound.
pub fn run(suite: Suite, max_n: Option<u32>) -> Result<Report> {
    let mut r = Report::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Counts {
        counts(&mut r, max_n.unwrap_or(30));
    }
    if all || suite == Suite::Dims {
        dims(&mut r, max_n.unwrap_or(20));
    }
    if all || suite == Suite::Lemmas {
        lemmas(&mut r, max_n.unwrap_or(12))?;
    }
    if all || suite == Suite::Tables {
        tables(&mut r)?;
    }
    if all || suite == Suite::Relations {
        relations(&mut r, max_n.unwrap_or(10).min(12))?;
    }
    if all || suite == Suite::Occurrence {
        occurrence(&mut r, max_n.unwrap_or(8).min(12))?;
    }
    Ok(r)
}

fn counts(r: &mut Report, max_n: u32) {
    let mut fails = Vec::new();
    let mut size_fails = Vec::new();
    for n in 0..=max_n {
        let mut total = 0u128;
        for s in sectors_of(n) {
            let size = s.symbols(true).len() as u128;
            total += size;
            if size != bipartition_count(s.quotient_weight()) {
                size_fails.push(format!("{s}: {size}"));
            }
        }
        if total != partition_count(n) {
            fails.push(format!("n={n}: {total} != {}", partition_count(n)));
        }
    }
    r.record("counts", format!("sum of sector sizes = p(n), n <= {max_n}"), fails, max_n as usize + 1);
    r.record("counts", format!("|S(n,delta)| = p2(quotient weight), n <= {max_n}"), size_fails, max_n as usize + 1);

    let bound = max_n.min(20);
    let (mut trip, mut weight, mut defect, mut cases) = (Vec::new(), Vec::new(), Vec::new(), 0);
    for n in 0..=bound {
        for lam in enumerate_partitions(n) {
            cases += 1;
            let s = Symbol::from_partition(&lam);
            let bp = s.bipartition();
            if s.partition() != lam || Symbol::from_bipartition(&bp, s.defect()).ok().as_ref() != Some(&s) {
                trip.push(lam.to_string());
            }
            let d = lam.two_core().d;
            if n != d * (d + 1) / 2 + 2 * bp.weight() {
                weight.push(lam.to_string());
            }
            let expect = if d % 2 == 0 { d as i64 } else { -(d as i64) };
            if s.defect() != expect {
                defect.push(lam.to_string());
            }
        }
    }
    r.record("counts", format!("symbol round trips, n <= {bound}"), trip, cases);
    r.record("counts", format!("|lambda| = |core| + 2|bipartition|, n <= {bound}"), weight, cases);
    r.record("counts", format!("defect = +-(2-core length), n <= {bound}"), defect, cases);

    let bound = max_n.min(12);
    let mut order = Vec::new();
    let mut cases = 0;
    for n in 0..=bound {
        for s in sectors_of(n) {
            for even in [true, false] {
                cases += 1;
                let syms = s.symbols(even);
                let strict = syms.windows(2).all(|w| w[0].lt_cmp(&w[1], even).is_lt());
                let distinct = syms.iter().collect::<BTreeSet<_>>().len() == syms.len();
                if !strict || !distinct {
                    order.push(format!("{s} even={even}"));
                }
            }
        }
    }
    r.record("counts", format!("linear order is strict and total on sectors, n <= {bound}"), order, cases);
}

fn dims(r: &mut Report, max_n: u32) {
    let (mut eq, mut deg, mut val, mut cases) = (Vec::new(), Vec::new(), Vec::new(), 0);
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    for n in 0..=max_n {
        for lam in enumerate_partitions(n) {
            cases += 1;
            let h = dim_via_hooks(&lam);
            if h != dim_via_betaset(&lam) {
                eq.push(lam.to_string());
            }
            if h.degree() != BetaSet::from_partition(&lam).ord() {
                deg.push(lam.to_string());
            }
            for q in [&two, &three] {
                let v = h.evaluate_at(q).expect("q >= 2");
                if !h.is_polynomial() || !v.denom().is_one() || !v.numer().is_positive() {
                    val.push(format!("{lam} at q={q}"));
                }
            }
        }
    }
    r.record("dims", format!("hook formula = beta-set formula, n <= {max_n}"), eq, cases);
    r.record("dims", format!("degree of dim = ord(X_lambda), n <= {max_n}"), deg, cases);
    r.record("dims", format!("dim is a polynomial with positive integer values at q=2,3, n <= {max_n}"), val, cases);

    let bound = max_n.min(16);
    let (mut conj, mut cases) = (Vec::new(), 0);
    for n in 0..=bound {
        for lam in enumerate_partitions(n) {
            cases += 1;
            let t = lam.transpose();
            let g = dim_via_hooks(&lam).div(&FactoredQPoly::q_pow(lam.kappa() as i64)).unwrap();
            let gt = dim_via_hooks(&t).div(&FactoredQPoly::q_pow(t.kappa() as i64)).unwrap();
            if g != gt {
                conj.push(lam.to_string());
            }
        }
    }
    r.record("dims", format!("g_lambda = g_(lambda^T), n <= {bound}"), conj, cases);

    let (mut shift, mut cases) = (Vec::new(), 0);
    for n in 0..=max_n.min(14) {
        for lam in enumerate_partitions(n) {
            let x = BetaSet::from_partition(&lam);
            let f = crate::qseries::f_of_betaset(&x);
            let mut y = x.clone();
            for _ in 0..3 {
                y = y.shift_up();
                cases += 1;
                if y.ord() != x.ord() || y.rank() != x.rank() || crate::qseries::f_of_betaset(&y) != f {
                    shift.push(format!("{x} -> {y}"));
                }
            }
        }
    }
    r.record("dims", "ord, rank and f_X are shift invariant", shift, cases);

    let (mut transfer, cases) = bead_transfer(6, 14);
    transfer.truncate(20);
    r.record("dims", "moving beads apart lowers ord (m <= 6, entries <= 14)", transfer, cases);
}

/// For every β-set with at most `m_max` entries below `top` and every pair
/// x_k > x_l, moving to x_k+1, x_l−1 must lower ord.
fn bead_transfer(m_max: usize, top: u32) -> (Vec<String>, usize) {
    let mut fails = Vec::new();
    let mut cases = 0;
    let universe: Vec<u32> = (0..=top).collect();
    let mut stack: Vec<(Vec<u32>, usize)> = vec![(Vec::new(), 0)];
    while let Some((set, next)) = stack.pop() {
        if !set.is_empty() {
            let x = BetaSet::new(set.clone()).unwrap();
            let e = x.entries();
            let base = x.ord();
            for k in 0..e.len() {
                for l in k + 1..e.len() {
                    let (hi, lo) = (e[k] + 1, e[l]);
                    if lo == 0 || x.contains(hi) || x.contains(lo - 1) {
                        continue;
                    }
                    let mut moved = e.to_vec();
                    moved[k] = hi;
                    moved[l] = lo - 1;
                    let y = BetaSet::new(moved).unwrap();
                    cases += 1;
                    if y.ord() >= base {
                        fails.push(format!("{x} -> {y}"));
                    }
                }
            }
        }
        if set.len() < m_max {
            for i in next..universe.len() {
                let mut s = set.clone();
                s.push(universe[i]);
                stack.push((s, i + 1));
            }
        }
    }
    (fails, cases)
}

fn lemmas(r: &mut Report, max_n: u32) -> Result<()> {
    let max_n2 = max_n + 2;
    let (mut member, mut argmax, mut beyond, mut unimodal, mut closed) = (vec![], vec![], vec![], vec![], vec![]);
    let (mut p0302, mut stable, mut under_in, mut parity) = (vec![], vec![], vec![], vec![]);
    let (mut cases, mut sectors_tau0, mut stable_cases) = (0usize, 0usize, 0usize);
    for n in 0..=max_n {
        for n2 in 0..=max_n2 {
            for s in all_symbols(n) {
                let row = theta_set(&s, n2)?;
                if let Some(u) = underline_theta(&s, n2)? {
                    if !row.contains(&u) {
                        under_in.push(format!("{s} -> {u} at ({n},{n2})"));
                    }
                }
                let d = s.sector().d() as i64;
                for t in row.targets() {
                    let d2 = t.sector().d() as i64;
                    if !((d == 0 && d2 == 0) || (d - d2).abs() == 1) {
                        parity.push(format!("{s} -> {t}"));
                    }
                }
            }
            for sec in sectors_of(n) {
                let Ok(map) = sector_map(n, sec.defect, n2) else { continue };
                if map.tau < 0 {
                    continue;
                }
                let corr = overline_sector(n, sec.defect, n2)?;
                if map.tau == 0 {
                    sectors_tau0 += 1;
                }
                let in_stable = is_stable_range(n, n2);
                for row in &corr.rows {
                    cases += 1;
                    let src = &row.source;
                    let thetas = theta_k_all(src, n2)?;
                    let kmax = thetas.len() as u32 - 1;
                    for (k, th) in thetas.iter().enumerate() {
                        let stratum = row.stratum(k as u32);
                        if !stratum.iter().any(|e| &e.symbol == th) {
                            member.push(format!("theta_{k}({src}) at ({n},{n2})"));
                            continue;
                        }
                        if stratum.iter().any(|e| &e.symbol != th && e.ord >= th.ord()) {
                            argmax.push(format!("theta_{k}({src}) at ({n},{n2})"));
                        }
                    }
                    if row.strata.keys().any(|&k| k > kmax) {
                        beyond.push(format!("{src} at ({n},{n2})"));
                    }
                    let k0 = k0_index(src, n2)?;
                    if !k0.unimodal {
                        unimodal.push(format!("{src} at ({n},{n2}): {:?}", k0.ords));
                    }
                    if k0.closed_form != Some(k0.k0) {
                        closed.push(format!("{src} at ({n},{n2}): {:?} vs {}", k0.closed_form, k0.k0));
                    }
                    let chosen = &corr.overline[src];
                    if map.tau == 0 {
                        let flat: Vec<&Symbol> = row.entries().filter(|e| !e.cancel).map(|e| &e.symbol).collect();
                        if flat != vec![&thetas[0]] || *chosen != thetas[0] {
                            p0302.push(format!("{src} at ({n},{n2})"));
                        }
                    }
                    if in_stable {
                        stable_cases += 1;
                        let top = thetas[0].ord();
                        let strict = row.entries().all(|e| e.symbol == thetas[0] || e.ord < top);
                        if !strict || *chosen != thetas[0] {
                            stable.push(format!("{src} at ({n},{n2})"));
                        }
                    }
                }
            }
        }
    }
    let w = format!("n <= {max_n}, n' <= {max_n2}");
    r.record("lemmas", format!("theta_k lies in stratum k ({w})"), member, cases);
    r.record("lemmas", format!("theta_k is the strict ord-argmax of its stratum ({w})"), argmax, cases);
    r.record("lemmas", format!("no strata beyond the range of k ({w})"), beyond, cases);
    r.record("lemmas", format!("ord(theta_k) is strictly unimodal ({w})"), unimodal, cases);
    r.record("lemmas", format!("alpha/beta case analysis gives the same k0 ({w})"), closed, cases);
    r.record("lemmas", format!("tau = 0: theta-bar = theta_0 and Theta-flat = {{theta_0}} ({w})"), p0302, sectors_tau0);
    r.record("lemmas", format!("stable range: theta_0 is the strict global argmax and theta-bar = theta_0 ({w})"), stable, stable_cases);
    r.record("lemmas", format!("theta-underline lies in Theta ({w})"), under_in, cases);
    r.record("lemmas", format!("2-core lengths of related symbols are 0,0 or differ by 1 ({w})"), parity, cases);

    let mut d_rule = Vec::new();
    for n in 0..=max_n {
        for n2 in 0..=max_n2 {
            let even_total = (n + n2) % 2 == 0;
            for s in all_symbols(n) {
                for t in theta_set(&s, n2)?.targets() {
                    if t.sector().d() != target_d(s.sector().d(), even_total)
                        || !in_relation(&s, t, even_total)
                        || stratum_of(&s, t, even_total) < 0
                    {
                        d_rule.push(format!("{s} -> {t}"));
                    }
                }
            }
        }
    }
    r.record("lemmas", format!("targets lie in the predicted sector ({w})"), d_rule, cases);
    Ok(())
}

fn tables(r: &mut Report) -> Result<()> {
    for (n, n2, golden) in [(7, 10, GOLDEN_7_10), (8, 10, GOLDEN_8_10)] {
        let text = build_table(n, n2, None)?.to_text();
        let fails = if text == golden { vec![] } else { vec![first_difference(&text, golden)] };
        r.record("tables", format!("theta-table {n} {n2} matches the golden file"), fails, 1);
    }
    let mut fails = Vec::new();
    for (n, n2) in [(7, 10), (8, 10), (0, 0)] {
        let doc = build_table(n, n2, None)?;
        let back: TableDocument =
            serde_json::from_str(&doc.to_json()).map_err(|e| Error::Parse(e.to_string()))?;
        if back != doc || build_table(n, n2, None)?.to_text() != doc.to_text() {
            fails.push(format!("({n},{n2})"));
        }
    }
    r.record("tables", "JSON round trip and repeatable output", fails, 3);

    let s = |x: &str| x.parse::<Symbol>().expect("literal symbol");
    let mut fails = Vec::new();
    let k0 = k0_index(&s("(7|2)"), 10)?;
    if k0.k0 != 1 || k0.alpha != [5, 7, 9, 11] || k0.beta != [8, 6, 4, 2] {
        fails.push(format!("k0 report {k0:?}"));
    }
    if absent_from_theta(8, 10)? != vec![s("(-|7,3,1)")] {
        fails.push("absent symbols at (8,10)".into());
    }
    if underline_theta(&s("(-|7)"), 10)? != Some(s("(7|4)")) {
        fails.push("underline (-|7)".into());
    }
    if crate::correspondence::overline_theta(&s("(-|7)"), 10)? != Some(s("(5|6)")) {
        fails.push("overline (-|7)".into());
    }
    r.record("tables", "worked values at (7,10) and (8,10)", fails, 4);
    Ok(())
}

fn first_difference(a: &str, b: &str) -> String {
    for (i, (x, y)) in a.lines().zip(b.lines()).enumerate() {
        if x != y {
            return format!("line {}: got {x:?}, expected {y:?}", i + 1);
        }
    }
    format!("lengths differ: {} vs {} lines", a.lines().count(), b.lines().count())
}

fn relations(r: &mut Report, max_n: u32) -> Result<()> {
    let pairs = closed_rectangle(max_n, max_n + 2);
    let w = format!("n <= {max_n}, n' <= {}", max_n + 2);
    for v in [Variant::Underline, Variant::Overline] {
        let win = RelationWindow::build(v, &pairs)?;
        let show = |xs: Vec<crate::relations::Violation>| xs.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>();
        r.record("relations", format!("{v}: sub-relation of Theta ({w})"), show(check_sub_relation(&win)), pairs.len());
        r.record("relations", format!("{v}: symmetric ({w})"), show(check_symmetric(&win)), pairs.len());
        r.record("relations", format!("{v}: semi-persistent ({w})"), show(check_semi_persistent(&win)), pairs.len());
        r.record("relations", format!("{v}: one-to-one ({w})"), show(check_one_to_one(&win)), pairs.len());
        r.record("relations", format!("{v}: maximality witnesses ({w})"), show(check_maximality(&win, &pairs)), pairs.len());
    }
    Ok(())
}

fn occurrence(r: &mut Report, max_n: u32) -> Result<()> {
    let mut fails = Vec::new();
    let mut cases = 0;
    for n in 0..=max_n {
        for lam in enumerate_partitions(n) {
            for tower in [Tower::Even, Tower::Odd] {
                cases += 1;
                let a = first_occurrence(&lam, tower, OccurrenceVariant::Theta)?;
                let b = first_occurrence(&lam, tower, OccurrenceVariant::Underline)?;
                if a != b {
                    fails.push(format!("{lam} {tower:?}: {a:?} vs {b:?}"));
                }
            }
        }
    }
    r.record("occurrence", format!("first occurrence agrees for Theta and theta-underline, n <= {max_n}"), fails, cases);
    Ok(())
}
