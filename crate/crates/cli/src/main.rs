use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use matchspectrum::graph::{parse_graph, to_edge_list, to_odd_graph, to_odd_graph_forced};
use matchspectrum::harness::{run_bench, run_verification, write_csv, BenchConfig, VerifyConfig};
use matchspectrum::matching::count_with;
use matchspectrum::{
    cut_distribution, BipartiteGraph, Caps, CountMethod, CountOptions, Engine, EngineOptions,
    GraphFormat, ShiftMode, SplitStrategy,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "matchspectrum", version, about = "Exact perfect-matching counts for bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count perfect matchings.
    Count {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Print the cut weight distribution over all vertex subsets.
    Cutdist {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Apply the odd-graph construction and print the result as an edge list.
    Transform {
        #[command(flatten)]
        input: InputArgs,
        /// Transform even if the graph is already odd.
        #[arg(long)]
        force: bool,
    },
    /// Time engines on seeded random graphs.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "8,10,12")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3.0)]
        degree: f64,
        #[arg(long, default_value_t = 3)]
        instances: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Methods to compare.
        #[arg(long, value_delimiter = ',', default_value = "halfenum,split,ryser")]
        engines: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Cross-check all engines and oracles on seeded random graphs.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin. Edge list or JSON, detected from content.
    #[arg(long, default_value = "-")]
    input: PathBuf,
}

#[derive(Args)]
struct EngineArgs {
    /// bruteforce, halfenum, split, auto, ryser or enumerate.
    #[arg(long, default_value = "auto")]
    engine: String,
    /// Explicit left vertices for the split engine, comma separated.
    #[arg(long, value_delimiter = ',')]
    u1: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Paper)]
    strategy: StrategyArg,
    /// Fail instead of truncating when a shift leaves the vector.
    #[arg(long)]
    checked: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Paper,
    Greedy,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

impl EngineArgs {
    fn options(&self, caps: Caps) -> CountOptions {
        let strategy = match (&self.u1, self.strategy) {
            (Some(u1), _) => SplitStrategy::Explicit(u1.clone()),
            (None, StrategyArg::Paper) => SplitStrategy::Paper,
            (None, StrategyArg::Greedy) => SplitStrategy::Greedy,
        };
        let mode = if self.checked { ShiftMode::Checked } else { ShiftMode::Unchecked };
        CountOptions {
            engine: EngineOptions { strategy, mode, caps },
            force_transform: false,
        }
    }
}

fn read_graph(input: &InputArgs) -> anyhow::Result<BipartiteGraph> {
    let mut text = String::new();
    if input.input.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(&input.input)
            .with_context(|| format!("reading {}", input.input.display()))?;
    }
    let graph = parse_graph(&text, GraphFormat::detect(&text))
        .with_context(|| format!("parsing {}", input.input.display()))?;
    Ok(graph)
}

fn print_json(value: &serde_json::Value) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let caps = Caps::from_env().context("reading MATCHSPECTRUM_CAPS")?;
    match cli.command {
        Command::Count { input, engine } => {
            let g = read_graph(&input)?;
            let method: CountMethod = engine.engine.parse()?;
            let result = count_with(&g, method, &engine.options(caps))?;
            print_json(&serde_json::to_value(&result)?)?;
        }
        Command::Cutdist { input, engine } => {
            let g = read_graph(&input)?;
            let which: Engine = engine.engine.parse()?;
            let out = cut_distribution(&g, which, &engine.options(caps).engine)?;
            print_json(&json!({
                "engine": out.engine.to_string(),
                "distribution": out.distribution,
                "stats": out.ops,
            }))?;
        }
        Command::Transform { input, force } => {
            let g = read_graph(&input)?;
            let t = if force { to_odd_graph_forced(&g)? } else { to_odd_graph(&g)? };
            eprintln!("{}", serde_json::to_string(&t)?);
            print!("{}", to_edge_list(&t.graph));
        }
        Command::Bench { sizes, degree, instances, seed, engines, format, engine } => {
            let methods = engines
                .iter()
                .map(|e| e.parse::<CountMethod>())
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = BenchConfig {
                sizes,
                degree,
                seed,
                instances,
                methods,
                options: engine.options(caps),
            };
            let records = run_bench(&cfg)?;
            match format {
                OutputFormat::Csv => write_csv(&records, io::stdout().lock())?,
                OutputFormat::Json => print_json(&serde_json::to_value(&records)?)?,
            }
        }
        Command::Verify { seed, max_n, trials } => {
            if max_n == 0 {
                bail!("--max-n must be at least 1");
            }
            let report = run_verification(&VerifyConfig { seed, max_n, trials, caps });
            for failure in &report.failures {
                eprintln!("mismatch: {failure}");
            }
            print_json(&serde_json::to_value(&report)?)?;
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
