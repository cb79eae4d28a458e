use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use sdnbench::dataset::{
    export_emulator_script, export_flat_dataset, export_scenario_json, parse_scenario_json,
};
use sdnbench::scenario::DEFAULT_CREATED;
use sdnbench::{
    path_count_matrix, summarize, Error, IntRange, PathQuery, QosRanges, RealRange, Scenario,
    ScenarioSpec,
};

use crate::{
    AnalyzeArgs, ExportArgs, ExportFormat, FlowRangeArgs, GenerateArgs, LinkRangeArgs, ValidateArgs,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Domain(Error::Guard { n, guard }) => write!(
                f,
                "exact path enumeration on {n} nodes exceeds the guard of {guard}; rerun with --max-length <hops> or --force"
            ),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_scenario(path: &Path) -> Result<Scenario> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    Ok(parse_scenario_json(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

impl LinkRangeArgs {
    fn ranges(&self) -> QosRanges {
        QosRanges {
            bandwidth: IntRange::new(self.bw_min, self.bw_max),
            delay: RealRange::new(self.delay_min, self.delay_max),
            jitter: RealRange::new(self.jitter_min, self.jitter_max),
            plr: RealRange::new(self.plr_min, self.plr_max),
        }
    }
}

impl FlowRangeArgs {
    fn ranges(&self) -> QosRanges {
        QosRanges {
            bandwidth: IntRange::new(self.flow_bw_min, self.flow_bw_max),
            delay: RealRange::new(self.flow_delay_min, self.flow_delay_max),
            jitter: RealRange::new(self.flow_jitter_min, self.flow_jitter_max),
            plr: RealRange::new(self.flow_plr_min, self.flow_plr_max),
        }
    }
}

pub fn generate(args: GenerateArgs) -> Result<()> {
    let link_ranges = args.links.ranges();
    let flow_ranges = args.flow_ranges.ranges();
    link_ranges
        .validate()
        .map_err(|e| CliError::Usage(format!("link {e}")))?;
    flow_ranges
        .validate()
        .map_err(|e| CliError::Usage(format!("flow {e}")))?;

    let spec = ScenarioSpec {
        class: args.class.into(),
        n: args.nodes,
        seed: args.seed,
        flow_count: args.flows,
        link_ranges,
        flow_ranges,
        created: args.created.unwrap_or_else(|| DEFAULT_CREATED.to_string()),
    };
    let scenario = spec.build()?;
    write_file(&args.output, &export_scenario_json(&scenario))?;
    println!(
        "class={} n={} E={} flows={} -> {}",
        scenario.topology.class(),
        scenario.topology.node_count(),
        scenario.topology.edge_count(),
        scenario.flows.len(),
        args.output.display()
    );
    Ok(())
}

pub fn analyze(args: AnalyzeArgs) -> Result<()> {
    let scenario = read_scenario(&args.scenario)?;
    let query = PathQuery {
        max_length: args.max_length,
        force: args.force,
    };
    if args.max_length == Some(0) {
        return Err(CliError::Usage("--max-length must be at least 1".into()));
    }
    let matrix = path_count_matrix(&scenario.topology, query)?;
    let stats = summarize(&matrix)?;
    let t = &scenario.topology;
    println!(
        "class={} n={} E={} pairs={} min={} max={} mean={} capped={}",
        t.class(),
        t.node_count(),
        t.edge_count(),
        matrix.pair_counts().count(),
        stats.min_pairs,
        stats.max_pairs,
        fmt_mean(stats.mean_pairs),
        matrix.capped()
    );
    if args.matrix {
        for u in 0..matrix.node_count() {
            let row: Vec<String> = matrix.row(u).iter().map(u64::to_string).collect();
            println!("{}", row.join(" "));
        }
    }
    Ok(())
}

// `{:?}` on f64 prints the shortest round-trip form and keeps a trailing `.0`.
fn fmt_mean(x: f64) -> String {
    format!("{x:?}")
}

pub fn export(args: ExportArgs) -> Result<()> {
    let scenario = read_scenario(&args.scenario)?;
    let text = match args.format {
        ExportFormat::Flat => export_flat_dataset(&scenario),
        ExportFormat::Emulator => export_emulator_script(&scenario)?,
    };
    write_file(&args.output, &text)?;
    println!(
        "wrote {} lines -> {}",
        text.lines().count(),
        args.output.display()
    );
    Ok(())
}

pub fn validate(args: ValidateArgs) -> Result<()> {
    let scenario = read_scenario(&args.scenario)?;
    println!(
        "ok: class={} n={} E={} flows={} reproducible={}",
        scenario.topology.class(),
        scenario.topology.node_count(),
        scenario.topology.edge_count(),
        scenario.flows.len(),
        if scenario.is_reproducible() {
            "yes"
        } else {
            "no"
        }
    );
    Ok(())
}
