use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use estrada_core::enumerate::Guards;

use estrada_cli::commands;
use estrada_cli::parse::{to_edge_list, GraphDto};
use estrada_cli::report::{analyze_to_csv, cycle_table_to_csv, to_json, verification_to_csv};
use estrada_cli::verify::{self, VerifyCtx};
use estrada_cli::{exit_code_for, CliError};

#[derive(Parser)]
#[command(
    name = "estrada",
    version,
    about = "Estrada index analysis and extremal verification for signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format; analyze, cycle-table and verify default to json,
    /// family defaults to the edge-list text format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Eigensolver tolerance (off-diagonal Frobenius norm target).
    #[arg(long, global = true, default_value_t = estrada_core::DEFAULT_TOL)]
    tol: f64,

    /// Difference under which two index values count as tied.
    #[arg(long, global = true, default_value_t = estrada_core::DEFAULT_TIE_TOL)]
    tie_tol: f64,

    /// Seed for the randomized verification pipelines.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,

    /// Raise an enumeration guard, e.g. max-n=9 or max-bipartite-product=25.
    /// Repeatable.
    #[arg(long, global = true, value_name = "KEY=VALUE")]
    guard_override: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Report structure, spectrum, characteristic polynomial, moments and
    /// the Estrada index of one signed graph file.
    Analyze {
        /// Edge-list file, or a JSON graph object produced by this tool.
        file: PathBuf,
        /// Highest spectral moment order to include.
        #[arg(long, default_value_t = 8)]
        moments: usize,
    },
    /// Tabulate the balanced and unbalanced n-cycle index against the
    /// n * J0 approximation.
    CycleTable {
        /// Last cycle length; rows run from 3 to this value.
        #[arg(long, default_value_t = 15)]
        nmax: usize,
    },
    /// Run one named verification pipeline; see the README for the id list.
    Verify {
        id: String,
        /// Smallest order to check (pipeline-specific default).
        #[arg(long)]
        n_min: Option<usize>,
        /// Largest order to check (pipeline-specific default).
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Emit a named family graph, e.g. kind=pendant-cycle n=7 l=4 sign=-1.
    Family {
        /// key=value arguments; keys: kind, n, l, m, sign, neg.
        #[arg(required = true)]
        args: Vec<String>,
    },
}

fn parse_guards(overrides: &[String]) -> Result<Guards, CliError> {
    let mut guards = Guards::default();
    for item in overrides {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected KEY=VALUE, got \"{item}\"")))?;
        let parsed: usize = value
            .parse()
            .map_err(|_| CliError::Usage(format!("guard value \"{value}\" is not an integer")))?;
        match key {
            "max-n" => guards.max_n = parsed,
            "max-bipartite-product" => guards.max_bipartite_product = parsed,
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown guard \"{key}\"; known guards: max-n, max-bipartite-product"
                )))
            }
        }
    }
    Ok(guards)
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    if cli.tol <= 0.0 || cli.tie_tol <= 0.0 {
        return Err(CliError::Usage("tolerances must be positive".into()));
    }
    let guards = parse_guards(&cli.guard_override)?;
    match &cli.command {
        Command::Analyze { file, moments } => {
            let graph = commands::read_graph_file(file)?;
            let report = commands::analyze(&graph, *moments, cli.tol)?;
            let text = match cli.format {
                Some(Format::Csv) => analyze_to_csv(&report),
                _ => to_json(&report)?,
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::CycleTable { nmax } => {
            let report = commands::cycle_table(*nmax, cli.tol)?;
            let text = match cli.format {
                Some(Format::Csv) => cycle_table_to_csv(&report),
                _ => to_json(&report)?,
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Verify { id, n_min, n_max } => {
            let range = match (n_min, n_max) {
                (Some(a), Some(b)) => Some((*a, *b)),
                (None, None) => None,
                _ => {
                    return Err(CliError::Usage(
                        "--n-min and --n-max must be given together".into(),
                    ))
                }
            };
            let ctx = VerifyCtx { guards, tol: cli.tol, tie_tol: cli.tie_tol, seed: cli.seed };
            let report = verify::run(id, range, &ctx)?;
            let text = match cli.format {
                Some(Format::Csv) => verification_to_csv(&report),
                _ => to_json(&report)?,
            };
            emit(cli, &text)?;
            Ok(if report.confirmed() { 0 } else { 1 })
        }
        Command::Family { args } => {
            let spec = commands::parse_family_args(args)?;
            let graph = spec.build()?;
            let text = match cli.format {
                Some(Format::Json) => to_json(&GraphDto::from_graph(&graph))?,
                Some(Format::Csv) => {
                    return Err(CliError::Usage(
                        "family emits edge-list text or json, not csv".into(),
                    ))
                }
                None => to_edge_list(&graph, Some(&format!("family {}", args.join(" ")))),
            };
            emit(cli, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("wall time: {} ms", start.elapsed().as_millis());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err) as u8)
        }
    }
}
