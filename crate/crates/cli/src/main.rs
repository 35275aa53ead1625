use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use toromaps::assembly::{census_table, edges_for, row_vertices, CensusRow, CensusTable};
use toromaps::oracle::torus::census;
use toromaps::precursors::{
    brute_force_precursors, derive_recurrence_precursors, export_precursors, load_precursors, PrecursorSet,
};
use toromaps::reference::reference_unsensed;
use toromaps::Error;

const DEFAULT_BUDGET: u64 = 50_000_000;

/// Largest size at which brute force validates derived precursors.
const VALIDATION_N: usize = 8;

#[derive(Parser)]
#[command(name = "toromaps", version, about = "Count r-regular maps on the torus up to all homeomorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Census table of sensed, reflexible and unsensed counts.
    Table(TableArgs),
    /// Compare computed unsensed counts with the reference values.
    Verify(VerifyArgs),
    /// Exhaustive enumeration of one census entry.
    Oracle(OracleArgs),
    /// Generate, check or normalize precursor files.
    #[command(subcommand)]
    Precursors(PrecursorCommand),
}

#[derive(Args)]
struct TableArgs {
    /// Vertex degree.
    #[arg(long)]
    r: usize,
    /// Last row. For odd r, row v has 2v vertices.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_v: u64,
    /// Precursor file; derived tables are used when absent.
    #[arg(long)]
    precursors: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Count every row by exhaustive enumeration instead (any r in 3..=6).
    #[arg(long)]
    oracle: bool,
    /// Node limit of each exhaustive search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Degrees to check; repeatable.
    #[arg(long = "r", default_values_t = [3, 4])]
    r: Vec<usize>,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=10))]
    max_v: u64,
    #[arg(long)]
    precursors: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    r: usize,
    /// Vertices; for odd r the map has 2v vertices.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    v: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum PrecursorCommand {
    /// Compute precursor tables and write them in the canonical format.
    Generate {
        #[arg(long)]
        r: usize,
        /// Largest dart count (closed surfaces) and edge count (torus).
        #[arg(long, alias = "max-darts")]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Source::Derived)]
        backend: Source,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check a precursor file and summarize its tables.
    Import { path: PathBuf },
    /// Rewrite a precursor file in canonical form.
    Export {
        path: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Brute,
    Derived,
}

enum Failure {
    Mismatch(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => table(args),
        Command::Verify(args) => verify(args),
        Command::Oracle(args) => oracle(args),
        Command::Precursors(cmd) => precursors(cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn recurrence_r(r: usize) -> std::result::Result<(), Failure> {
    if r == 3 || r == 4 {
        Ok(())
    } else {
        Err(Failure::Usage(format!("recurrences cover r = 3 and 4 only; use --oracle for r = {r}")))
    }
}

fn needed_edges(r: usize, max_v: usize) -> usize {
    r * row_vertices(r, max_v) / 2
}

/// Precursors from the given file, or derived and checked against brute force.
fn precursor_set(r: usize, max_v: usize, path: Option<&Path>, budget: u64) -> std::result::Result<PrecursorSet, Failure> {
    if let Some(path) = path {
        return Ok(load_precursors(path)?);
    }
    let n = needed_edges(r, max_v);
    let brute = brute_force_precursors(r, VALIDATION_N.min(n.max(4)), budget)?;
    Ok(derive_recurrence_precursors(r, n, &brute)?)
}

fn table(args: TableArgs) -> Outcome {
    let max_v = args.max_v as usize;
    let table = if args.oracle {
        if !(3..=6).contains(&args.r) {
            return Err(Failure::Usage(format!("the oracle covers r = 3..6, not r = {}", args.r)));
        }
        oracle_table(args.r, max_v, args.budget)?
    } else {
        recurrence_r(args.r)?;
        let pre = precursor_set(args.r, max_v, args.precursors.as_deref(), args.budget)?;
        census_table(args.r, max_v, &pre)?
    };
    print!("{}", render(&table.rows, args.format));
    if let Some((v, e)) = &table.uncovered {
        return Err(Failure::Mismatch(format!("uncovered from row v={v}: {e}")));
    }
    Ok(())
}

fn oracle_table(r: usize, max_v: usize, budget: u64) -> std::result::Result<CensusTable, Failure> {
    let mut table = CensusTable { r, rows: Vec::new(), uncovered: None };
    for v in 1..=max_v {
        let vertices = row_vertices(r, v);
        match census(r, vertices, 1, budget) {
            Ok(c) => table.rows.push(CensusRow {
                r,
                vertices,
                edges: edges_for(r, vertices)?,
                sensed: c.sensed.into(),
                reflexible: c.reflexible.into(),
                unsensed: c.unsensed.into(),
            }),
            Err(e) => {
                table.uncovered = Some((v, e));
                break;
            }
        }
    }
    Ok(table)
}

fn table_v(row: &CensusRow) -> usize {
    if row.r % 2 == 1 {
        row.vertices / 2
    } else {
        row.vertices
    }
}

fn render(rows: &[CensusRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("v,edges,sensed,reflexible,unsensed\n");
            for row in rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    table_v(row),
                    row.edges,
                    row.sensed,
                    row.reflexible,
                    row.unsensed
                ));
            }
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|row| {
                    json!({
                        "v": table_v(row),
                        "vertices": row.vertices,
                        "edges": row.edges,
                        "sensed": row.sensed.to_string(),
                        "reflexible": row.reflexible.to_string(),
                        "unsensed": row.unsensed.to_string(),
                    })
                })
                .collect();
            out.push_str(&serde_json::to_string_pretty(&items).expect("json"));
            out.push('\n');
        }
        Format::Text => {
            let cells: Vec<[String; 5]> = rows
                .iter()
                .map(|row| {
                    [
                        table_v(row).to_string(),
                        row.edges.to_string(),
                        row.sensed.to_string(),
                        row.reflexible.to_string(),
                        row.unsensed.to_string(),
                    ]
                })
                .collect();
            let header = ["v", "edges", "sensed", "reflexible", "unsensed"].map(String::from);
            let mut widths = header.clone().map(|h| h.len());
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            for row in std::iter::once(&header).chain(&cells) {
                let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
        }
    }
    out
}

fn verify(args: VerifyArgs) -> Outcome {
    let max_v = args.max_v as usize;
    let mut first_problem = None;
    for &r in &args.r {
        recurrence_r(r)?;
        let pre = precursor_set(r, max_v, args.precursors.as_deref(), args.budget)?;
        let table = census_table(r, max_v, &pre)?;
        for row in &table.rows {
            let v = table_v(row);
            let want = reference_unsensed(r, v).expect("reference covers v <= 10");
            let ok = row.unsensed == want;
            println!("r={r} v={v} unsensed={} expected={want} {}", row.unsensed, if ok { "ok" } else { "MISMATCH" });
            if !ok && first_problem.is_none() {
                first_problem = Some(format!("first mismatch at r={r} v={v}"));
            }
        }
        if let Some((v, e)) = &table.uncovered {
            for v in *v..=max_v {
                println!("r={r} v={v} uncovered");
            }
            if first_problem.is_none() {
                first_problem = Some(format!("r={r} uncovered from v={v}: {e}"));
            }
        }
    }
    match first_problem {
        Some(msg) => Err(Failure::Mismatch(msg)),
        None => Ok(()),
    }
}

fn oracle(args: OracleArgs) -> Outcome {
    if !(3..=6).contains(&args.r) {
        return Err(Failure::Usage(format!("the oracle covers r = 3..6, not r = {}", args.r)));
    }
    let vertices = row_vertices(args.r, args.v as usize);
    let c = census(args.r, vertices, 1, args.budget)?;
    println!("sensed={} reflexible={} unsensed={}", c.sensed, c.reflexible, c.unsensed);
    Ok(())
}

fn write_out(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn precursors(cmd: PrecursorCommand) -> Outcome {
    match cmd {
        PrecursorCommand::Generate { r, max_n, backend, output, budget } => {
            let set = match backend {
                Source::Brute => brute_force_precursors(r, max_n, budget)?,
                Source::Derived => {
                    let brute = brute_force_precursors(r, VALIDATION_N.min(max_n), budget)?;
                    derive_recurrence_precursors(r, max_n, &brute)?
                }
            };
            write_out(&export_precursors(&set), output.as_deref())
        }
        PrecursorCommand::Import { path } => {
            let set = load_precursors(&path)?;
            for (seq, t) in set.tables() {
                let range = t.frontier().map_or("none".to_string(), |f| f.to_string());
                println!("{} r={} entries={} range={range}", seq.name(), t.id.r, t.len());
            }
            Ok(())
        }
        PrecursorCommand::Export { path, output } => {
            let set = load_precursors(&path)?;
            write_out(&export_precursors(&set), output.as_deref())
        }
    }
}
