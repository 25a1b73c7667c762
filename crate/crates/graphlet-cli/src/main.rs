//! Batch command-line front end: load an edge list, run the counting
//! pipeline, and emit a JSON or CSV report. Exit codes: 0 success, 2 input
//! or usage error, 3 integrity error, 4 oracle budget refusal.

use std::fs::File;
use std::io::{self, BufReader, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphlet_core::graph::load_edge_list;
use graphlet_core::oracle::DEFAULT_ORACLE_BUDGET;
use graphlet_core::pipeline::analyze;
use graphlet_core::report::ReportOptions;
use graphlet_core::{CountReport, Error, Graph, LoadStats, PatternCatalog, PipelineOptions};

#[derive(Parser)]
#[command(
    name = "graphlet",
    version,
    about = "Exact counts of all 3-, 4-, and 5-vertex patterns in a graph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count patterns in an edge-list graph and print a report.
    Count(CountArgs),
    /// Print the machine-readable pattern atlas.
    Atlas,
}

#[derive(Args)]
struct CountArgs {
    /// Edge-list file; '-' reads standard input.
    input: String,

    /// Largest pattern size to count.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(3..=5))]
    size: u8,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Vertex count override when isolated vertices exist beyond the
    /// largest id appearing in the input.
    #[arg(long)]
    num_vertices: Option<u64>,

    /// Emit per-vertex or per-edge structure profiles (repeatable);
    /// requires --size 4 or 5.
    #[arg(long, value_enum)]
    profiles: Vec<ProfileKind>,

    /// Recompute every reported vector with the brute-force oracle and
    /// fail on any disagreement.
    #[arg(long)]
    oracle_check: bool,

    /// Subset budget for --oracle-check.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    oracle_budget: u64,

    /// Peak-memory budget in bytes; when the accounting estimate exceeds
    /// it, triangle lists are skipped and list-dependent 5-patterns are
    /// reported as null.
    #[arg(long)]
    memory_budget: Option<u64>,

    /// Include trend ratios in the report; requires --size 5.
    #[arg(long)]
    trends: bool,

    /// Include per-stage wall-clock timings in the report (timings always
    /// go to stderr; embedding them breaks byte-identical reruns).
    #[arg(long)]
    timings: bool,

    /// Worker cap. The engine currently runs single-threaded; values
    /// above 1 are accepted for forward compatibility.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileKind {
    Vertex,
    Edge,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => run_count(&args),
        Command::Atlas => run_atlas(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Parse { .. } | Error::Io(_) => 2,
                Error::Integrity(_) | Error::ListsUnavailable => 3,
                Error::BudgetExceeded { .. } => 4,
            })
        }
    }
}

fn load_input(args: &CountArgs) -> graphlet_core::Result<(Graph, LoadStats)> {
    if args.input == "-" {
        load_edge_list(io::stdin().lock(), args.num_vertices)
    } else {
        let file = File::open(&args.input)?;
        load_edge_list(BufReader::new(file), args.num_vertices)
    }
}

fn run_count(args: &CountArgs) -> graphlet_core::Result<()> {
    if !args.profiles.is_empty() && args.size < 4 {
        // Usage error, reported like clap's own (exit 2).
        eprintln!("error: --profiles requires --size 4 or 5");
        std::process::exit(2);
    }
    if args.trends && args.size < 5 {
        eprintln!("error: --trends requires --size 5");
        std::process::exit(2);
    }
    if args.threads > 1 {
        eprintln!("note: running single-threaded; --threads above 1 is not implemented yet");
    }

    let (graph, stats) = load_input(args)?;
    let catalog = PatternCatalog::build();
    let options = PipelineOptions {
        size: args.size,
        memory_budget: args.memory_budget,
        oracle_check: args.oracle_check,
        oracle_budget: args.oracle_budget,
        threads: args.threads as usize,
    };
    let analysis = analyze(&graph, &catalog, &options)?;

    for timing in &analysis.timings {
        eprintln!("timing {:<18} {:.6}s", timing.stage, timing.seconds);
    }
    if let Some(reason) = &analysis.degraded_reason {
        eprintln!("degraded: {reason}");
    }
    if analysis.oracle_checked {
        eprintln!("oracle-check: PASS");
    }

    let report_options = ReportOptions {
        vertex_profiles: args.profiles.contains(&ProfileKind::Vertex),
        edge_profiles: args.profiles.contains(&ProfileKind::Edge),
        trends: args.trends,
        timings: args.timings,
    };
    let input_name = if args.input == "-" { "stdin" } else { args.input.as_str() };
    let report =
        CountReport::build(input_name, &graph, &stats, &analysis, &catalog, &report_options)?;
    let rendered = match args.format {
        Format::Json => report.to_json_string(),
        Format::Csv => report.to_csv_string(),
    };
    io::stdout().write_all(rendered.as_bytes())?;
    Ok(())
}

fn run_atlas() -> graphlet_core::Result<()> {
    let catalog = PatternCatalog::build();
    io::stdout().write_all(catalog.atlas().to_json_string().as_bytes())?;
    Ok(())
}
