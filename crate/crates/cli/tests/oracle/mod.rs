//! Second implementations of the combinatorics, written directly from the
//! definitions on plain vectors. The acceptance run compares the library
//! against these.

use std::collections::BTreeMap;

/// Partitions of n as weakly decreasing vectors, generated recursively.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// p(0..=n) by Euler's pentagonal number recurrence.
pub fn pentagonal_counts(n: usize) -> Vec<i128> {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p
}

/// Number of bipartitions of w, as a convolution of p with itself.
pub fn bipartition_count(p: &[i128], w: usize) -> i128 {
    (0..=w).map(|i| p[i] * p[w - i]).sum()
}

pub fn transpose(p: &[u32]) -> Vec<u32> {
    let first = p.first().copied().unwrap_or(0);
    (1..=first).map(|j| p.iter().filter(|&&x| x >= j).count() as u32).collect()
}

/// Hook lengths read off the diagram.
pub fn hooks(p: &[u32]) -> Vec<u32> {
    let t = transpose(p);
    let mut out = Vec::new();
    for (i, &row) in p.iter().enumerate() {
        for j in 0..row as usize {
            out.push(row - j as u32 + t[j] - i as u32 - 1);
        }
    }
    out
}

/// Degree of the unipotent degree polynomial read off the hook formula:
/// each factor q^h − (−1)^h contributes h.
pub fn degree(p: &[u32]) -> i64 {
    let n: i64 = p.iter().map(|&x| x as i64).sum();
    let kappa: i64 = p.iter().enumerate().map(|(i, &x)| i as i64 * x as i64).sum();
    let hooks: i64 = hooks(p).iter().map(|&h| h as i64).sum();
    kappa + n * (n + 1) / 2 - hooks
}

/// Length d of the 2-core staircase, by stripping dominoes from the rim.
pub fn two_core_d(p: &[u32]) -> u32 {
    let mut p = p.to_vec();
    'strip: loop {
        let part = |p: &Vec<u32>, i: usize| p.get(i).copied().unwrap_or(0);
        for i in 0..p.len() {
            // horizontal domino at the end of row i
            if p[i] >= part(&p, i + 1) + 2 {
                p[i] -= 2;
                p.retain(|&x| x > 0);
                continue 'strip;
            }
            // vertical domino at the ends of rows i and i+1
            if i + 1 < p.len() && p[i] == p[i + 1] && p[i + 1] > part(&p, i + 2) {
                p[i] -= 1;
                p[i + 1] -= 1;
                p.retain(|&x| x > 0);
                continue 'strip;
            }
        }
        break;
    }
    p.len() as u32
}

/// Symbol data of a partition: rows as strictly decreasing entries,
/// defect and the bipartition of the halved rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sym {
    pub parts: Vec<u32>,
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
    pub defect: i64,
    pub bp_top: Vec<u32>,
    pub bp_bottom: Vec<u32>,
    pub degree: i64,
}

fn weakly_to_partition(entries: &[u32]) -> Vec<u32> {
    let m = entries.len();
    let mut v: Vec<u32> = entries.iter().enumerate().map(|(i, &x)| x - (m - 1 - i) as u32).collect();
    v.retain(|&x| x > 0);
    v
}

pub fn symbol_of(parts: &[u32]) -> Sym {
    let d = two_core_d(parts);
    let l = parts.len();
    let mut m = l;
    if (l + d as usize) % 2 == 1 {
        m += 1;
    }
    let x: Vec<u32> = (0..m).map(|i| parts.get(i).copied().unwrap_or(0) + (m - 1 - i) as u32).collect();
    let odd: Vec<u32> = x.iter().copied().filter(|v| v % 2 == 1).collect();
    let even: Vec<u32> = x.iter().copied().filter(|v| v % 2 == 0).collect();
    let (top, bottom) = if d % 2 == 0 { (odd, even) } else { (even, odd) };
    let half = |v: &[u32]| -> Vec<u32> { v.iter().map(|x| x / 2).collect() };
    Sym {
        parts: parts.to_vec(),
        defect: top.len() as i64 - bottom.len() as i64,
        bp_top: weakly_to_partition(&half(&top)),
        bp_bottom: weakly_to_partition(&half(&bottom)),
        top,
        bottom,
        degree: degree(parts),
    }
}

/// a ≼ b on zero-padded parts: b_i − 1 ≤ a_i ≤ b_i.
pub fn precedes(a: &[u32], b: &[u32]) -> bool {
    let len = a.len().max(b.len());
    (0..len).all(|i| {
        let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        x <= y && y <= x + 1
    })
}

pub fn target_defect(delta: i64, even_total: bool) -> i64 {
    match (even_total, delta) {
        (true, 0) => 0,
        (true, _) => 1 - delta,
        (false, _) => -delta - 1,
    }
}

pub fn related(a: &Sym, b: &Sym, even_total: bool) -> bool {
    if b.defect != target_defect(a.defect, even_total) {
        return false;
    }
    let t = transpose;
    if even_total {
        precedes(&t(&a.bp_bottom), &t(&b.bp_top)) && precedes(&t(&b.bp_bottom), &t(&a.bp_top))
    } else {
        precedes(&t(&a.bp_top), &t(&b.bp_bottom)) && precedes(&t(&b.bp_top), &t(&a.bp_bottom))
    }
}

fn weight(p: &[u32]) -> i64 {
    p.iter().map(|&x| x as i64).sum()
}

pub fn stratum(a: &Sym, b: &Sym, even_total: bool) -> i64 {
    if even_total {
        weight(&a.bp_top) - weight(&b.bp_bottom)
    } else {
        weight(&a.bp_bottom) - weight(&b.bp_top)
    }
}

/// Sort key of sources within a sector.
pub fn lt_key(s: &Sym, even_total: bool) -> (i64, Vec<u32>, Vec<u32>) {
    if even_total {
        (weight(&s.bp_top), s.bp_top.clone(), s.bp_bottom.clone())
    } else {
        (weight(&s.bp_bottom), s.bp_bottom.clone(), s.bp_top.clone())
    }
}

/// All symbols of U_n, cached per rank.
#[derive(Default)]
pub struct Cache {
    by_rank: BTreeMap<u32, Vec<Sym>>,
}

impl Cache {
    pub fn symbols(&mut self, n: u32) -> &[Sym] {
        self.by_rank.entry(n).or_insert_with(|| partitions(n).iter().map(|p| symbol_of(p)).collect())
    }

    /// Θ(Λ) as (stratum, target) pairs.
    pub fn theta(&mut self, a: &Sym, n2: u32) -> Vec<(i64, Sym)> {
        let even = (weight(&a.parts) as u32 + n2) % 2 == 0;
        self.symbols(n2)
            .iter()
            .filter(|b| related(a, b, even))
            .map(|b| (stratum(a, b, even), b.clone()))
            .collect()
    }

    /// The greedy θ̄ on the sector of defect `delta`: sources in ascending
    /// order each take the highest-degree target not yet taken, ties to the
    /// smaller target.
    pub fn greedy(&mut self, n: u32, delta: i64, n2: u32) -> Vec<GreedyRow> {
        let even = (n + n2) % 2 == 0;
        let mut sources: Vec<Sym> = self.symbols(n).iter().filter(|s| s.defect == delta).cloned().collect();
        sources.sort_by_key(|s| lt_key(s, even));
        let mut taken = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for s in sources {
            let flat: Vec<Sym> =
                self.theta(&s, n2).into_iter().map(|(_, b)| b).filter(|b| !taken.contains(&b.parts)).collect();
            let chosen = flat
                .iter()
                .max_by(|x, y| x.degree.cmp(&y.degree).then(lt_key(y, even).cmp(&lt_key(x, even))))
                .cloned();
            if let Some(b) = &chosen {
                taken.insert(b.parts.clone());
            }
            out.push(GreedyRow { source: s, flat, chosen });
        }
        out
    }

    pub fn greedy_overline(&mut self, n: u32, delta: i64, n2: u32) -> BTreeMap<Vec<u32>, Vec<u32>> {
        self.greedy(n, delta, n2)
            .into_iter()
            .filter_map(|r| r.chosen.map(|c| (r.source.parts, c.parts)))
            .collect()
    }
}

pub struct GreedyRow {
    pub source: Sym,
    /// Θ(Λ) minus the targets chosen by earlier sources.
    pub flat: Vec<Sym>,
    pub chosen: Option<Sym>,
}
