//! `sdnbench` command-line front end.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 I/O error. Every
//! failure prints exactly one diagnostic line on stderr.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use sdnbench::TopologyClass;

#[derive(Debug, Parser)]
#[command(
    name = "sdnbench",
    version,
    about = "Seeded SDN evaluation scenario generator and path analyzer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a scenario and write it as canonical JSON.
    Generate(GenerateArgs),
    /// Report simple-path counts between node pairs of a scenario.
    Analyze(AnalyzeArgs),
    /// Export a scenario as a flat R/F dataset or a Mininet script.
    Export(ExportArgs),
    /// Check a scenario file against every invariant.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Sparse,
    PartialMesh,
    FullMesh,
}

impl From<ClassArg> for TopologyClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Sparse => TopologyClass::Sparse,
            ClassArg::PartialMesh => TopologyClass::PartialMesh,
            ClassArg::FullMesh => TopologyClass::FullMesh,
        }
    }
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long)]
    nodes: usize,
    /// Seed for every random draw. Required: there is no clock-based default.
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    flows: usize,
    /// Scenario timestamp (ISO-8601 UTC). Defaults to the Unix epoch so output is reproducible.
    #[arg(long)]
    created: Option<String>,
    #[arg(long, short)]
    output: PathBuf,

    #[command(flatten)]
    links: LinkRangeArgs,
    #[command(flatten)]
    flow_ranges: FlowRangeArgs,
}

#[derive(Debug, Args)]
struct LinkRangeArgs {
    /// Link bandwidth bounds, Mbit/s.
    #[arg(long, default_value_t = 10)]
    bw_min: u64,
    #[arg(long, default_value_t = 100)]
    bw_max: u64,
    /// Link delay bounds, ms.
    #[arg(long, default_value_t = 1.0)]
    delay_min: f64,
    #[arg(long, default_value_t = 10.0)]
    delay_max: f64,
    /// Link jitter bounds, ms.
    #[arg(long, default_value_t = 0.0)]
    jitter_min: f64,
    #[arg(long, default_value_t = 1.0)]
    jitter_max: f64,
    /// Link loss bounds, as a fraction.
    #[arg(long, default_value_t = 0.0)]
    plr_min: f64,
    #[arg(long, default_value_t = 0.05)]
    plr_max: f64,
}

#[derive(Debug, Args)]
struct FlowRangeArgs {
    /// Flow bandwidth requirement bounds, Mbit/s.
    #[arg(long, default_value_t = 10)]
    flow_bw_min: u64,
    #[arg(long, default_value_t = 100)]
    flow_bw_max: u64,
    #[arg(long, default_value_t = 1.0)]
    flow_delay_min: f64,
    #[arg(long, default_value_t = 10.0)]
    flow_delay_max: f64,
    #[arg(long, default_value_t = 0.0)]
    flow_jitter_min: f64,
    #[arg(long, default_value_t = 1.0)]
    flow_jitter_max: f64,
    #[arg(long, default_value_t = 0.0)]
    flow_plr_min: f64,
    #[arg(long, default_value_t = 0.05)]
    flow_plr_max: f64,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    scenario: PathBuf,
    /// Only count paths with at most this many hops.
    #[arg(long)]
    max_length: Option<usize>,
    /// Enumerate without a cap even on large topologies.
    #[arg(long)]
    force: bool,
    /// Also print the full pair matrix.
    #[arg(long)]
    matrix: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Flat,
    Emulator,
}

#[derive(Debug, Args)]
struct ExportArgs {
    scenario: PathBuf,
    #[arg(long, value_enum)]
    format: ExportFormat,
    #[arg(long, short)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    scenario: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            eprintln!("error: {first}");
            return ExitCode::from(2);
        }
    };

    let result = match cli.command {
        Command::Generate(args) => commands::generate(args),
        Command::Analyze(args) => commands::analyze(args),
        Command::Export(args) => commands::export(args),
        Command::Validate(args) => commands::validate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
