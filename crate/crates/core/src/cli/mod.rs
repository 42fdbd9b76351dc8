//! Command-line front end: transforms on grid and chain files, censuses and
//! verification suites.

pub mod verify;

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fillings::{for_each_filling, ChainKind, CountQuery, Filling};
use crate::growth::{rsk_correspond, RskVariant};
use crate::polyomino::MoonPolyomino;
use crate::tableaux::{chain_to_tableau, evacuation, jdt_chain, promotion, promotion_inverse, ChainMode, PartitionChain};
use crate::transform::{
    e_transform, ev_t, jbar_inverse_oriented, jbar_oriented, moon_move, moon_move_inverse,
    stack_growth_labels, stack_growth_reconstruct, to_ferrers, Orientation, StackGrowthLabels,
};
pub use verify::{run_verify, VerificationReport, VerifyConfig, SUITES};

#[derive(Parser, Debug)]
#[command(name = "moongrowth", version, about = "Growth diagrams and promotion on fillings of moon polyominoes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Rsk,
    DualRskPrime,
    DualRsk,
    RskPrime,
}

impl From<VariantArg> for RskVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Rsk => RskVariant::Rsk,
            VariantArg::DualRskPrime => RskVariant::DualRskPrime,
            VariantArg::DualRsk => RskVariant::DualRsk,
            VariantArg::RskPrime => RskVariant::RskPrime,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Cell,
    Hstrip,
    Vstrip,
}

impl From<ModeArg> for ChainMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Cell => ChainMode::Cell,
            ModeArg::Hstrip => ChainMode::HStrip,
            ModeArg::Vstrip => ChainMode::VStrip,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    Top,
    Right,
}

#[derive(Args, Debug)]
pub struct GridInput {
    /// Grid file, top row first, or a one-line permutation; `-` reads standard input.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "rsk")]
    pub variant: VariantArg,
}

#[derive(Args, Debug)]
pub struct ChainInput {
    /// Chain file, partitions separated by whitespace; `-` reads standard input.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "cell")]
    pub mode: ModeArg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Border chains and tableaux of a rectangular filling.
    Rsk(GridInput),
    /// Jeu de taquin on a chain.
    Jdt(ChainInput),
    /// Promotion (or its inverse) on a chain.
    Promote {
        #[command(flatten)]
        chain: ChainInput,
        /// Apply the inverse map.
        #[arg(long)]
        inverse: bool,
    },
    /// Promotion on a rectangular filling.
    Jbar {
        #[command(flatten)]
        grid: GridInput,
        /// Apply the inverse map.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value = "top")]
        orientation: OrientationArg,
    },
    /// Moves a column to the end of its maximal rectangle (or back with --inverse).
    MoveColumn {
        #[command(flatten)]
        grid: GridInput,
        /// Column index, 0 for the leftmost column.
        #[arg(long)]
        column: i32,
        /// Apply the inverse map.
        #[arg(long)]
        inverse: bool,
    },
    /// Maps a filling of a moon polyomino to the Ferrers shape of its content.
    ToFerrers {
        /// Grid file; `-` reads standard input.
        input: PathBuf,
        /// Chain kind: ne, se, NE, SE, nE, Ne, sE or Se.
        #[arg(long, default_value = "ne")]
        kind: String,
    },
    /// Evacuation of a chain, or the evacuation-type transform of a Ferrers filling with --filling.
    Evacuate {
        /// Chain file (or grid file with --filling); `-` reads standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "cell")]
        mode: ModeArg,
        #[arg(long)]
        filling: bool,
        #[arg(long, value_enum, default_value = "rsk")]
        variant: VariantArg,
    },
    /// Transposes all border labels of a Ferrers filling and rebuilds it.
    ETransform(GridInput),
    /// Border labels of a stack polyomino filling, or the filling from labels with --heights.
    StackLabels {
        #[command(flatten)]
        grid: GridInput,
        /// Column heights of the stack; the input is then a label file.
        #[arg(long, value_delimiter = ',')]
        heights: Option<Vec<u32>>,
    },
    /// Counts fillings of a polyomino by longest chain length.
    Census {
        /// Grid file whose non-`.` characters are the cells; `-` reads standard input.
        input: PathBuf,
        /// Chain kind: ne, se, NE, SE, nE, Ne, sE or Se.
        #[arg(long, default_value = "ne")]
        kind: String,
        /// Count arbitrary fillings up to this total instead of 0-1 fillings.
        #[arg(long)]
        max_mass: Option<u32>,
        /// Required total of the entries.
        #[arg(long)]
        total: Option<u32>,
        /// Required row sums, bottom to top.
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<u32>>,
        /// Required column sums, left to right.
        #[arg(long, value_delimiter = ',')]
        cols: Option<Vec<u32>>,
        /// Bucket by row sums as well as chain length.
        #[arg(long)]
        by_rows: bool,
    },
    /// Runs a property suite, or `all`.
    Verify {
        /// Suite name.
        suite: String,
        /// Largest shape the exhaustive enumeration visits.
        #[arg(long)]
        max_cells: Option<usize>,
        /// Largest filling total the exhaustive enumeration visits.
        #[arg(long)]
        max_mass: Option<u32>,
        /// Seed for the sampled instances.
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        /// Number of random instances, where a suite samples.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
}

fn read_input(p: &PathBuf) -> Result<String> {
    let mut s = String::new();
    if p.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
    }
    Ok(s)
}

/// A grid, or a permutation written in one line as `3,1,2`.
fn read_filling(p: &PathBuf) -> Result<Filling> {
    let s = read_input(p)?;
    let t = s.trim();
    if t.contains(',') && !t.contains('\n') {
        let w = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("permutation entry {x:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        return Filling::from_permutation(&w);
    }
    Filling::parse(&s)
}

fn chain_lines(c: &PartitionChain) -> String {
    c.seq().iter().map(|p| p.to_string() + "\n").collect()
}

fn filling_pair(before: &Filling, after: &Filling, format: Format) -> String {
    match format {
        Format::Json => json!({ "before": before.to_grid(), "after": after.to_grid() }).to_string() + "\n",
        _ => after.to_grid(),
    }
}

fn chain_out(c: &PartitionChain, format: Format) -> String {
    match format {
        Format::Json => json!(c.seq().iter().map(|p| p.to_string()).collect::<Vec<_>>()).to_string() + "\n",
        _ => chain_lines(c),
    }
}

/// Output of a transform subcommand. Errors are input or precondition
/// problems.
pub fn run_transform(cmd: &Command, format: Format) -> Result<String> {
    match cmd {
        Command::Rsk(g) => {
            let f = read_filling(&g.input)?;
            let (p, q) = rsk_correspond(&f, g.variant.into())?;
            let (tp, tq) = (chain_to_tableau(&p), chain_to_tableau(&q));
            Ok(match format {
                Format::Json => json!({
                    "p": p.seq().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "q": q.seq().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "p_tableau": tp.rows(),
                    "q_tableau": tq.rows(),
                })
                .to_string()
                    + "\n",
                _ => format!("P {p}\nQ {q}\nP tableau\n{}Q tableau\n{}", tp.to_lines(), tq.to_lines()),
            })
        }
        Command::Jdt(c) => {
            let chain = PartitionChain::parse(&read_input(&c.input)?, c.mode.into())?;
            Ok(chain_out(&jdt_chain(&chain)?, format))
        }
        Command::Promote { chain, inverse } => {
            let c = PartitionChain::parse(&read_input(&chain.input)?, chain.mode.into())?;
            let out = if *inverse { promotion_inverse(&c)? } else { promotion(&c)? };
            Ok(chain_out(&out, format))
        }
        Command::Jbar { grid, inverse, orientation } => {
            let f = read_filling(&grid.input)?;
            let o = match orientation {
                OrientationArg::Top => Orientation::Top,
                OrientationArg::Right => Orientation::Right,
            };
            let g = if *inverse {
                jbar_inverse_oriented(&f, grid.variant.into(), o)?
            } else {
                jbar_oriented(&f, grid.variant.into(), o)?
            };
            Ok(filling_pair(&f, &g, format))
        }
        Command::MoveColumn { grid, column, inverse } => {
            let f = read_filling(&grid.input)?;
            let g = if *inverse {
                moon_move_inverse(&f, *column, grid.variant.into())?
            } else {
                moon_move(&f, *column, grid.variant.into())?
            };
            Ok(filling_pair(&f, &g, format))
        }
        Command::ToFerrers { input, kind } => {
            let f = read_filling(input)?;
            Ok(filling_pair(&f, &to_ferrers(&f, kind.parse()?)?, format))
        }
        Command::Evacuate { input, mode, filling, variant } => {
            let s = read_input(input)?;
            if *filling {
                let f = Filling::parse(&s)?;
                Ok(filling_pair(&f, &ev_t(&f, (*variant).into())?, format))
            } else {
                let c = PartitionChain::parse(&s, (*mode).into())?;
                Ok(chain_out(&evacuation(&c)?, format))
            }
        }
        Command::ETransform(g) => {
            let f = read_filling(&g.input)?;
            Ok(filling_pair(&f, &e_transform(&f, g.variant.into())?, format))
        }
        Command::StackLabels { grid, heights } => {
            let s = read_input(&grid.input)?;
            match heights {
                Some(h) => {
                    let labels = StackGrowthLabels::parse(&s)?;
                    let f = stack_growth_reconstruct(&labels, &MoonPolyomino::stack(h)?, grid.variant.into())?;
                    Ok(match format {
                        Format::Json => json!({ "filling": f.to_grid() }).to_string() + "\n",
                        _ => f.to_grid(),
                    })
                }
                None => {
                    let labels = stack_growth_labels(&Filling::parse(&s)?, grid.variant.into())?;
                    Ok(match format {
                        Format::Json => serde_json::to_string(&labels).expect("labels serialise") + "\n",
                        _ => labels.to_lines(),
                    })
                }
            }
        }
        Command::Census { .. } => run_census(cmd, format),
        Command::Verify { .. } => Err(Error::Precondition("verify is not a transform".into())),
    }
}

/// Counts by longest chain length, optionally also by row sums.
pub fn census(m: &MoonPolyomino, q: &CountQuery, kind: ChainKind, by_rows: bool) -> Result<BTreeMap<(u32, Vec<u32>), u64>> {
    let mut out = BTreeMap::new();
    let mut err = None;
    for_each_filling(m, q, &mut |f| match f.longest_chain(kind) {
        Ok(l) => {
            let rows = if by_rows { f.sums().0 } else { Vec::new() };
            *out.entry((l, rows)).or_insert(0) += 1;
        }
        Err(e) => err = Some(e),
    })?;
    err.map_or(Ok(out), Err)
}

fn run_census(cmd: &Command, format: Format) -> Result<String> {
    let Command::Census { input, kind, max_mass, total, rows, cols, by_rows } = cmd else {
        unreachable!("called with a census command")
    };
    let m = MoonPolyomino::parse(&read_input(input)?)?;
    let kind: ChainKind = kind.parse()?;
    let mut q = match max_mass {
        Some(n) => CountQuery::arbitrary(*n),
        None => CountQuery::zero_one(),
    };
    q.total = *total;
    q.row_sums = rows.clone();
    q.col_sums = cols.clone();
    let table = census(&m, &q, kind, *by_rows)?;
    let rows_str = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    Ok(match format {
        Format::Json => {
            let v: Vec<_> = table
                .iter()
                .map(|((l, r), n)| if *by_rows { json!({"l": l, "rows": r, "count": n}) } else { json!({"l": l, "count": n}) })
                .collect();
            serde_json::to_string(&v).expect("census serialises") + "\n"
        }
        Format::Csv => {
            let mut s = if *by_rows { "l,rows,count\n".to_string() } else { "l,count\n".to_string() };
            for ((l, r), n) in &table {
                if *by_rows {
                    s += &format!("{l},{},{n}\n", rows_str(r));
                } else {
                    s += &format!("{l},{n}\n");
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for ((l, r), n) in &table {
                if *by_rows {
                    s += &format!("l={l} rows=[{}]: {n}\n", rows_str(r));
                } else {
                    s += &format!("l={l}: {n}\n");
                }
            }
            s
        }
    })
}

fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            if let [r] = reports {
                r.to_json() + "\n"
            } else {
                serde_json::to_string_pretty(reports).expect("reports serialise") + "\n"
            }
        }
        Format::Csv => {
            let mut s = VerificationReport::csv_header().to_string() + "\n";
            for r in reports {
                s += &(r.to_csv_row() + "\n");
            }
            s
        }
        Format::Text => reports.iter().map(|r| r.to_string()).collect(),
    }
}

/// Parses arguments, runs the command and returns the process exit code:
/// 0 on success, 1 when a property fails, 2 on usage or input errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match &cli.command {
        Command::Verify { suite, max_cells, max_mass, seed, samples, timing } => {
            let config = VerifyConfig { max_cells: *max_cells, max_mass: *max_mass, seed: *seed, samples: *samples };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                match run_verify(name, &config) {
                    Ok(mut r) => {
                        if !timing {
                            r.wall_ms = None;
                        }
                        reports.push(r);
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 2;
                    }
                }
            }
            emit(&render_reports(&reports, cli.format));
            if reports.iter().all(VerificationReport::passed) {
                0
            } else {
                1
            }
        }
        cmd => match run_transform(cmd, cli.format) {
            Ok(s) => {
                emit(&s);
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|()| out.flush());
}
