use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use unitheta::correspondence::{first_occurrence, sector_map, OccurrenceVariant, Tower};
use unitheta::qseries::{dim_via_hooks, format_expanded};
use unitheta::relations::Variant;
use unitheta::symbols::sectors_of;
use unitheta::table::{build_table, Format};
use unitheta::verify::{self, Suite};
use unitheta::{BetaSet, Error, Partition, Symbol};

#[derive(Parser)]
#[command(name = "unitheta", version, about = "Theta correspondence on unipotent characters of (U_n, U_n')")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Csv,
    Json,
    Latex,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
            OutFormat::Latex => Format::Latex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Underline,
    Overline,
}

#[derive(Clone, Copy, ValueEnum)]
enum TowerArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Counts,
    Dims,
    Lemmas,
    Tables,
    Relations,
    Occurrence,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Degree of the unipotent character of a partition.
    Dim {
        partition: String,
        /// Evaluate at this integer q.
        #[arg(long)]
        eval: Option<i64>,
    },
    /// β-set, symbol, defect and bipartition of a partition or symbol.
    Symbol { input: String },
    /// Sectors S(n,δ) of U_n with their sizes.
    Sectors { n: u32 },
    /// Correspondence table with θ̄, maximal-degree and cancellation marks.
    ThetaTable {
        n: u32,
        n2: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        /// Restrict to the sector of U_n with this defect.
        #[arg(long, allow_negative_numbers = true)]
        sector: Option<i64>,
    },
    /// The one-to-one maps θ̲ or θ̄ from U_n to U_n'.
    ThetaMap {
        kind: MapKind,
        n: u32,
        n2: u32,
        #[arg(long, allow_negative_numbers = true)]
        sector: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// First group of a Witt tower where the character has a correspondent.
    FirstOccurrence {
        partition: String,
        #[arg(long, value_enum)]
        tower: TowerArg,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

enum Failure {
    Usage(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Dim { partition, eval } => cmd_dim(&partition, eval),
        Command::Symbol { input } => cmd_symbol(&input),
        Command::Sectors { n } => Ok(cmd_sectors(n)),
        Command::ThetaTable { n, n2, format, sector } => Ok(build_table(n, n2, sector)?.render(format.into())),
        Command::ThetaMap { kind, n, n2, sector, format } => cmd_theta_map(kind, n, n2, sector, format),
        Command::FirstOccurrence { partition, tower } => cmd_first_occurrence(&partition, tower),
        Command::Verify { suite, max_n, format } => cmd_verify(suite, max_n, format),
    }
}

fn cmd_dim(partition: &str, eval: Option<i64>) -> Result<String, Failure> {
    let lam: Partition = partition.parse()?;
    let d = dim_via_hooks(&lam);
    let coeffs = d.expand().expect("unipotent degrees are polynomials");
    let list: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    let mut o = String::new();
    writeln!(o, "partition  {lam}").unwrap();
    writeln!(o, "factored   {d}").unwrap();
    writeln!(o, "expanded   {}", format_expanded(&coeffs)).unwrap();
    writeln!(o, "coeffs     [{}]", list.join(", ")).unwrap();
    writeln!(o, "degree     {}", d.degree()).unwrap();
    if let Some(q) = eval {
        let v = d.evaluate_at(&q.into())?;
        writeln!(o, "value      {v} (q={q})").unwrap();
    }
    Ok(o)
}

fn cmd_symbol(input: &str) -> Result<String, Failure> {
    let s: Symbol = if input.contains('|') {
        input.parse()?
    } else {
        Symbol::from_partition(&input.parse()?)
    };
    let lam = s.partition();
    let mut o = String::new();
    writeln!(o, "partition    {lam}").unwrap();
    writeln!(o, "beta-set     {}", BetaSet::from_partition(&lam)).unwrap();
    writeln!(o, "symbol       {s}").unwrap();
    writeln!(o, "defect       {}", s.defect()).unwrap();
    let core = lam.two_core();
    writeln!(o, "2-core       {} (d={})", core.core(), core.d).unwrap();
    writeln!(o, "bipartition  {}", s.bipartition()).unwrap();
    writeln!(o, "sector       {}", s.sector()).unwrap();
    writeln!(o, "ord          {}", s.ord()).unwrap();
    Ok(o)
}

fn cmd_sectors(n: u32) -> String {
    let mut o = String::new();
    for s in sectors_of(n) {
        let size = s.symbols(true).len();
        writeln!(o, "{s}  quotient weight {}  {size} symbols", s.quotient_weight()).unwrap();
    }
    o
}

fn cmd_theta_map(kind: MapKind, n: u32, n2: u32, sector: Option<i64>, format: OutFormat) -> Result<String, Failure> {
    let variant = match kind {
        MapKind::Underline => Variant::Underline,
        MapKind::Overline => Variant::Overline,
    };
    let sectors = match sector {
        Some(delta) => vec![unitheta::Sector::new(n, delta)?],
        None => sectors_of(n),
    };
    let mut o = String::new();
    let mut records = Vec::new();
    if matches!(format, OutFormat::Text) {
        writeln!(o, "theta-{variant} U({n}) -> U({n2})").unwrap();
    }
    if matches!(format, OutFormat::Csv) {
        o.push_str("source_sector,source,image\n");
    }
    let even_total = (n + n2) % 2 == 0;
    for s in sectors {
        let map = match variant {
            Variant::Underline => unitheta::correspondence::underline_theta_sector(n, s.defect, n2)?,
            Variant::Overline => unitheta::correspondence::overline_theta_sector(n, s.defect, n2)?,
        };
        if matches!(format, OutFormat::Text) {
            match sector_map(n, s.defect, n2) {
                Ok(m) => writeln!(o, "{} -> {}  tau={}", m.source, m.target, m.tau).unwrap(),
                Err(_) => writeln!(o, "{s}: no target sector").unwrap(),
            }
        }
        for src in s.symbols(even_total) {
            let image = map.get(&src);
            match format {
                OutFormat::Text => {
                    let shown = image.map_or("undefined".to_string(), |t| t.to_string());
                    writeln!(o, "  {src} -> {shown}").unwrap();
                }
                OutFormat::Csv => {
                    let shown = image.map_or(String::new(), |t| t.to_string());
                    writeln!(o, "{s},\"{src}\",\"{shown}\"").unwrap();
                }
                _ => records.push(json_record(&s, &src, image)),
            }
        }
    }
    if matches!(format, OutFormat::Json | OutFormat::Latex) {
        o = serde_json::to_string_pretty(&records).expect("records serialize");
        o.push('\n');
    }
    Ok(o)
}

fn json_record(s: &unitheta::Sector, src: &Symbol, image: Option<&Symbol>) -> serde_json::Value {
    serde_json::json!({ "sector": s, "source": src, "image": image })
}

fn cmd_first_occurrence(partition: &str, tower: TowerArg) -> Result<String, Failure> {
    let lam: Partition = partition.parse()?;
    let tower = match tower {
        TowerArg::Even => Tower::Even,
        TowerArg::Odd => Tower::Odd,
    };
    let mut o = String::new();
    for (name, v) in [("theta", OccurrenceVariant::Theta), ("underline", OccurrenceVariant::Underline)] {
        let occ = first_occurrence(&lam, tower, v)?;
        writeln!(o, "{name:<10} U({})  split rank {}", occ.group_rank, occ.split_rank).unwrap();
    }
    Ok(o)
}

fn cmd_verify(suite: SuiteArg, max_n: Option<u32>, format: OutFormat) -> Result<String, Failure> {
    let suite = match suite {
        SuiteArg::Counts => Suite::Counts,
        SuiteArg::Dims => Suite::Dims,
        SuiteArg::Lemmas => Suite::Lemmas,
        SuiteArg::Tables => Suite::Tables,
        SuiteArg::Relations => Suite::Relations,
        SuiteArg::Occurrence => Suite::Occurrence,
        SuiteArg::All => Suite::All,
    };
    let report = verify::run(suite, max_n).map_err(|e| Failure::Verification(format!("error: {e}\n")))?;
    let text = match format {
        OutFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        _ => report.to_string(),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}
