//! The library against independent computations.

use unitheta::partitions::{enumerate_bipartitions, enumerate_partitions, partition_count};
use unitheta::qseries::dim_via_hooks;
use unitheta::symbols::{lt_order, sectors_of, Sector};
use unitheta::{Partition, Symbol};

fn pentagonal(n: usize) -> Vec<i128> {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        for k in 1i64.. {
            let g = (k * (3 * k - 1) / 2) as usize;
            if g > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g];
            let g2 = g + k as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
        }
    }
    p
}

#[test]
fn partition_counts_follow_the_pentagonal_recurrence() {
    let p = pentagonal(40);
    for n in 0..=40u32 {
        assert_eq!(partition_count(n) as i128, p[n as usize], "p({n})");
    }
    for n in 0..=18u32 {
        assert_eq!(enumerate_partitions(n).count() as i128, p[n as usize], "enumerated p({n})");
    }
}

#[test]
fn bipartition_enumeration_counts() {
    let p = pentagonal(12);
    for n in 0..=12usize {
        let expected: i128 = (0..=n).map(|i| p[i] * p[n - i]).sum();
        assert_eq!(enumerate_bipartitions(n as u32).count() as i128, expected);
    }
}

/// Staircase length left after stripping dominoes off the rim of the diagram.
fn strip_dominoes(p: &[u32]) -> usize {
    let mut p = p.to_vec();
    loop {
        let at = |p: &[u32], i: usize| p.get(i).copied().unwrap_or(0);
        let step = (0..p.len()).find_map(|i| {
            if p[i] >= at(&p, i + 1) + 2 {
                Some((i, false))
            } else if i + 1 < p.len() && p[i] == p[i + 1] && p[i + 1] > at(&p, i + 2) {
                Some((i, true))
            } else {
                None
            }
        });
        match step {
            Some((i, false)) => p[i] -= 2,
            Some((i, true)) => {
                p[i] -= 1;
                p[i + 1] -= 1;
            }
            None => return p.len(),
        }
        p.retain(|&x| x > 0);
    }
}

#[test]
fn two_core_matches_domino_stripping() {
    for n in 0..=16 {
        for lam in enumerate_partitions(n) {
            let d = lam.two_core().d as usize;
            assert_eq!(d, strip_dominoes(lam.parts()), "{lam}");
            let staircase: Vec<u32> = (1..=d as u32).rev().collect();
            assert_eq!(lam.two_core().core(), Partition::new(staircase).unwrap());
        }
    }
}

#[test]
fn hooks_match_the_diagram() {
    for n in 0..=12 {
        for lam in enumerate_partitions(n) {
            let t = lam.transpose();
            let mut by_cell = Vec::new();
            for (i, &row) in lam.parts().iter().enumerate() {
                for j in 0..row as usize {
                    // arm + leg + 1
                    by_cell.push(row - j as u32 + t.part(j) - i as u32 - 1);
                }
            }
            let mut mine = lam.hooks();
            mine.sort_unstable();
            by_cell.sort_unstable();
            assert_eq!(mine, by_cell, "{lam}");
            assert_eq!(lam.kappa(), lam.parts().iter().enumerate().map(|(i, &x)| i as u64 * x as u64).sum::<u64>());
        }
    }
}

fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn div_exact(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0; rem.len() - db];
    for i in (0..q.len()).rev() {
        q[i] = rem[i + db];
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= q[i] * y;
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "inexact division");
    q
}

/// q^h − (−1)^h.
fn factor(h: usize) -> Vec<i128> {
    let mut v = vec![0; h + 1];
    v[0] = if h % 2 == 0 { -1 } else { 1 };
    v[h] = 1;
    v
}

/// Hook formula in dense integer arithmetic, sign fixed by the leading coefficient.
fn dense_dim(lam: &Partition) -> Vec<i128> {
    let n = lam.weight() as usize;
    let mut num = vec![0; lam.kappa() as usize + 1];
    num[lam.kappa() as usize] = 1;
    for i in 1..=n {
        num = mul(&num, &factor(i));
    }
    for h in lam.hooks() {
        num = div_exact(&num, &factor(h as usize));
    }
    while num.len() > 1 && *num.last().unwrap() == 0 {
        num.pop();
    }
    num
}

#[test]
fn degrees_match_dense_polynomial_arithmetic() {
    for n in 0..=12 {
        for lam in enumerate_partitions(n) {
            let dense: Vec<String> = dense_dim(&lam).iter().map(|c| c.to_string()).collect();
            let factored: Vec<String> =
                dim_via_hooks(&lam).expand().unwrap().iter().map(|c| c.to_string()).collect();
            assert_eq!(factored, dense, "{lam}");
        }
    }
}

fn syms(list: &[&str]) -> Vec<Symbol> {
    list.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn linear_order_matches_the_table_rows() {
    let odd = syms(&[
        "(6,4,2|7,5,3,1)", "(6,2|5,3,1)", "(6|3,1)", "(4,2|7,3,1)", "(4|5,1)",
        "(2|5,3)", "(2|7,1)", "(2,0|7,5,3)", "(0|7,3)", "(-|7)",
    ]);
    let even = syms(&[
        "(7,5,3,1|8,6,4,2)", "(5,3,1|8,4,2)", "(3,1|6,4)", "(3,1|8,2)", "(1|8)",
        "(7,3,1|6,4,2)", "(5,1|6,2)", "(3|6)", "(5,3|4,2)", "(5,3|6,0)",
        "(7,1|4,2)", "(5|4)", "(7,5,3|6,2,0)", "(7,3|4,0)", "(7|2)",
        "(9,7,5,3|6,4,2,0)", "(9,5,3|4,2,0)", "(7,5|2,0)", "(9,3|2,0)", "(9|0)",
    ]);
    for (rows, sector, even_total) in [(odd, Sector::new(7, -1).unwrap(), false), (even, Sector::new(8, 0).unwrap(), true)] {
        for w in rows.windows(2) {
            assert!(lt_order(&w[0], &w[1], even_total).unwrap(), "{} before {}", w[0], w[1]);
            assert!(!lt_order(&w[1], &w[0], even_total).unwrap());
        }
        assert_eq!(sector.symbols(even_total), rows);
    }
}

#[test]
fn sectors_partition_the_symbols() {
    for n in 0..=14 {
        let mut seen = 0;
        for s in sectors_of(n) {
            for sym in s.symbols(true) {
                assert_eq!(sym.sector(), s);
                seen += 1;
            }
        }
        assert_eq!(seen as u128, partition_count(n));
    }
}
