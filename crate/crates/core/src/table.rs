//! Correspondence tables for one dual pair, rendered as text, CSV, JSON or
//! LaTeX. Output is a pure function of (n, n′, sector filter, format).

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::correspondence::{overline_sector, sector_map, ThetaEntry, ThetaRow};
use crate::error::{Error, Result};
use crate::symbols::{sectors_of, Sector, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorTable {
    /// The sector of U_n this block answers for.
    pub sector: Sector,
    /// Displayed source and target; swapped relative to (n, n′) when `reversed`.
    pub source: Sector,
    pub target: Option<Sector>,
    /// τ of the displayed direction.
    pub tau: Option<i64>,
    pub reversed: bool,
    pub rows: Vec<ThetaRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub n: u32,
    pub n2: u32,
    pub even_total: bool,
    pub sectors: Vec<SectorTable>,
}

pub fn build_table(n: u32, n2: u32, sector: Option<i64>) -> Result<TableDocument> {
    let sectors = match sector {
        Some(delta) => vec![Sector::new(n, delta)?],
        None => sectors_of(n),
    };
    let mut out = Vec::new();
    for s in sectors {
        match sector_map(n, s.defect, n2) {
            Err(Error::NoTargetSector { .. }) => out.push(SectorTable {
                sector: s,
                source: s,
                target: None,
                tau: None,
                reversed: false,
                rows: Vec::new(),
            }),
            Err(e) => return Err(e),
            Ok(map) => {
                let c = overline_sector(n, s.defect, n2)?;
                let (source, target, tau) =
                    if c.reversed { (map.target, map.source, -map.tau) } else { (map.source, map.target, map.tau) };
                out.push(SectorTable { sector: s, source, target: Some(target), tau: Some(tau), reversed: c.reversed, rows: c.rows });
            }
        }
    }
    Ok(TableDocument { n, n2, even_total: (n + n2) % 2 == 0, sectors: out })
}

impl TableDocument {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
            Format::Latex => self.to_latex(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let parity = if self.even_total { "even" } else { "odd" };
        writeln!(o, "theta-table U({}) x U({}), n+n' {parity}", self.n, self.n2).unwrap();
        writeln!(o, "marks: [X] theta-bar image, X* maximal ord in Theta, ~X~ taken by an earlier row").unwrap();
        for t in &self.sectors {
            writeln!(o).unwrap();
            let Some(target) = t.target else {
                writeln!(o, "{}: no target sector in U({})", t.sector, self.n2).unwrap();
                continue;
            };
            if t.reversed {
                // The requested target is the displayed source.
                writeln!(o, "{} -> {}: tau = {}, listed on the reversed pair", t.sector, t.source, -t.tau.unwrap()).unwrap();
            }
            let rows = if t.rows.len() == 1 { "row" } else { "rows" };
            writeln!(o, "{} -> {}  tau={}  {} {rows}", t.source, target, t.tau.unwrap(), t.rows.len()).unwrap();
            let even = (t.source.n + target.n) % 2 == 0;
            let mut last_group = None;
            for row in &t.rows {
                let bp = row.source.bipartition();
                let group = if even { bp.top.weight() } else { bp.bottom.weight() };
                if last_group.is_some_and(|g| g != group) {
                    writeln!(o, "  --").unwrap();
                }
                last_group = Some(group);
                writeln!(o, "  {}", row.source).unwrap();
                for (k, entries) in &row.strata {
                    let cells: Vec<String> = entries.iter().map(text_cell).collect();
                    writeln!(o, "      k={k}: {}", cells.join(", ")).unwrap();
                }
            }
        }
        o
    }

    pub fn to_csv(&self) -> String {
        let mut o = String::from("source_sector,target_sector,reversed,source,k,position,target,ord,natural,overline,cancel\n");
        for t in &self.sectors {
            let Some(target) = t.target else { continue };
            for row in &t.rows {
                for (k, entries) in &row.strata {
                    for (i, e) in entries.iter().enumerate() {
                        writeln!(
                            o,
                            "{},{},{},\"{}\",{k},{i},\"{}\",{},{},{},{}",
                            t.source, target, t.reversed, row.source, e.symbol, e.ord, e.natural, e.overline, e.cancel
                        )
                        .unwrap();
                    }
                }
            }
        }
        o
    }

    pub fn to_latex(&self) -> String {
        let mut o = String::new();
        writeln!(o, "% requires amsmath and cancel").unwrap();
        for t in &self.sectors {
            let Some(target) = t.target else {
                writeln!(o, "% {}: no target sector in U({})", t.sector, self.n2).unwrap();
                continue;
            };
            let kmax = t.rows.iter().filter_map(|r| r.strata.keys().max().copied()).max().unwrap_or(0);
            let cols = kmax as usize + 1;
            writeln!(o, "% {} -> {}, tau = {}", t.source, target, t.tau.unwrap()).unwrap();
            writeln!(o, "\\begin{{tabular}}{{c|{}}}", "l".repeat(cols)).unwrap();
            writeln!(o, "\\hline").unwrap();
            let heads: Vec<String> = (0..cols).map(|k| format!("$\\Theta(\\Lambda)_{k}$")).collect();
            writeln!(o, "$\\Lambda$ & {} \\\\", heads.join(" & ")).unwrap();
            writeln!(o, "\\hline").unwrap();
            for row in &t.rows {
                let mut cells = vec![format!("${}$", latex_symbol(&row.source))];
                for k in 0..cols as u32 {
                    let entries = row.stratum(k);
                    let inner: Vec<String> = entries.iter().map(latex_cell).collect();
                    cells.push(if inner.is_empty() { String::new() } else { format!("${}$", inner.join(",\\ ")) });
                }
                writeln!(o, "{} \\\\", cells.join(" & ")).unwrap();
            }
            writeln!(o, "\\hline").unwrap();
            writeln!(o, "\\end{{tabular}}").unwrap();
            writeln!(o).unwrap();
        }
        o
    }
}

fn text_cell(e: &ThetaEntry) -> String {
    let mut s = e.symbol.to_string();
    if e.overline {
        s = format!("[{s}]");
    }
    if e.natural {
        s.push('*');
    }
    if e.cancel {
        s = format!("~{s}~");
    }
    s
}

fn latex_symbol(s: &Symbol) -> String {
    let [a, b] = s.row_strings();
    format!("\\binom{{{a}}}{{{b}}}")
}

fn latex_cell(e: &ThetaEntry) -> String {
    let mut s = latex_symbol(&e.symbol);
    if e.overline {
        s = format!("\\overline{{{s}}}");
    }
    if e.natural {
        s = format!("{s}^\\natural");
    }
    if e.cancel {
        s = format!("\\bcancel{{{s}}}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_pair() {
        let doc = build_table(0, 0, None).unwrap();
        assert_eq!(doc.sectors.len(), 1);
        assert_eq!(doc.sectors[0].rows.len(), 1);
        let row = &doc.sectors[0].rows[0];
        assert_eq!(row.source.to_string(), "(- | -)");
        assert_eq!(row.len(), 1);
    }

    #[test]
    fn row_counts() {
        let doc = build_table(7, 10, None).unwrap();
        let counts: Vec<usize> = doc.sectors.iter().map(|s| s.rows.len()).collect();
        assert_eq!(counts, vec![10, 5]);
        let doc = build_table(8, 10, None).unwrap();
        let counts: Vec<usize> = doc.sectors.iter().map(|s| s.rows.len()).collect();
        assert_eq!(counts, vec![20, 1]);
        assert!(doc.sectors[1].reversed);
        assert_eq!(doc.sectors[1].source, Sector::new(10, 4).unwrap());
    }

    #[test]
    fn sector_filter() {
        let doc = build_table(7, 10, Some(2)).unwrap();
        assert_eq!(doc.sectors.len(), 1);
        assert_eq!(doc.sectors[0].rows.len(), 5);
        assert!(matches!(build_table(7, 10, Some(0)), Err(Error::InvalidDefect { .. })));
    }

    #[test]
    fn json_round_trip() {
        let doc = build_table(8, 10, None).unwrap();
        let back: TableDocument = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn csv_has_one_line_per_entry() {
        let doc = build_table(7, 10, Some(2)).unwrap();
        let entries: usize = doc.sectors[0].rows.iter().map(ThetaRow::len).sum();
        assert_eq!(doc.to_csv().lines().count(), entries + 1);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("latex".parse::<Format>().unwrap(), Format::Latex);
        assert!("yaml".parse::<Format>().is_err());
    }
}
