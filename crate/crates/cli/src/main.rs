mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dconn::generate::{generate, random_weights, Family, Shape};
use dconn::io::{read_graph, save_graph, write_graph};
use dconn::maxflow::min_st_cut;
use dconn::{rooted_edge_connectivity, Config, Work};
use serde::Serialize;

use report::{render_text, run, InvariantViolation, Mode, RunConfig, Target};

/// Rooted and global edge/vertex connectivity of directed graphs.
#[derive(Debug, Parser)]
#[command(name = "dconn", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a seeded random graph.
    Gen(GenArgs),
    /// Count work of rooted edge connectivity against n independent flows.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Graph file in the `p dconn` text format.
    graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "rooted-ec")]
    mode: Mode,
    /// Root vertex for rooted modes.
    #[arg(long)]
    root: Option<usize>,
    /// Approximation parameter in (0, 1], as a decimal or a fraction `a/b`.
    #[arg(long, value_parser = parse_eps)]
    eps: Option<f64>,
    /// Exact vertex connectivity.
    #[arg(long)]
    exact: bool,
    #[arg(long, env = "DCONN_SEED", default_value_t = 0)]
    seed: u64,
    /// Repetitions per sink-size bucket.
    #[arg(long)]
    reps: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Quantity computed in oracle mode.
    #[arg(long, value_enum, default_value = "rooted-ec")]
    oracle_target: Target,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    GnpDense,
    GnpSparse,
    PlantedSink,
    PlantedVertex,
    Bidirected,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Edge probability.
    #[arg(long, default_value_t = 0.9)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    max_cap: u64,
    /// Expected out-degree for gnp-sparse.
    #[arg(long, default_value_t = 4.0)]
    avg_degree: f64,
    /// Sink size for planted families.
    #[arg(long, default_value_t = 2)]
    sink: usize,
    /// Planted in-cut capacity for planted-sink.
    #[arg(long, default_value_t = 1)]
    cut: u64,
    /// Separator size for planted-vertex.
    #[arg(long, default_value_t = 1)]
    separator: usize,
    #[arg(long, value_enum, default_value = "gnp")]
    shape: ShapeName,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShapeName {
    Cycle,
    Complete,
    Gnp,
}

impl FamilyArgs {
    fn family(&self) -> Family {
        match self.family {
            FamilyName::GnpDense => Family::GnpDense {
                p: self.p,
                max_cap: self.max_cap,
            },
            FamilyName::GnpSparse => Family::GnpSparse {
                avg_degree: self.avg_degree,
                max_cap: self.max_cap,
            },
            FamilyName::PlantedSink => Family::PlantedSink {
                sink: self.sink,
                cut: self.cut,
                p: self.p,
                max_cap: self.max_cap,
            },
            FamilyName::PlantedVertex => Family::PlantedVertex {
                sink: self.sink,
                separator: self.separator,
                p: self.p,
            },
            FamilyName::Bidirected => Family::Bidirected {
                shape: match self.shape {
                    ShapeName::Cycle => Shape::Cycle,
                    ShapeName::Complete => Shape::Complete,
                    ShapeName::Gnp => Shape::Gnp,
                },
                p: self.p,
            },
        }
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, env = "DCONN_SEED", default_value_t = 0)]
    seed: u64,
    /// Attach uniform random vertex weights in [1, MAX_WEIGHT].
    #[arg(long)]
    max_weight: Option<u64>,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
    sizes: Vec<usize>,
    #[arg(long, env = "DCONN_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Skip the n-flow baseline.
    #[arg(long)]
    no_baseline: bool,
}

fn parse_eps(s: &str) -> Result<f64, String> {
    let value = match s.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let b: f64 = b.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            a / b
        }
        None => s.parse().map_err(|_| format!("bad number `{s}`"))?,
    };
    if value > 0.0 && value <= 1.0 {
        Ok(value)
    } else {
        Err(format!("eps {s} not in (0, 1]"))
    }
}

fn run_command(args: RunArgs) -> Result<()> {
    let path = args
        .graph
        .ok_or_else(|| anyhow!("a graph file is required (or use the gen / bench subcommands)"))?;
    let g = read_graph(&path).with_context(|| format!("reading {}", path.display()))?;
    let cfg = RunConfig {
        mode: args.mode,
        target: args.oracle_target,
        root: args.root,
        eps: args.eps,
        exact: args.exact,
        seed: args.seed,
        reps: args.reps,
    };
    let report = run(&cfg, &g)?;
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&report)?),
        Format::Text => print!("{}", render_text(&report)),
    }
    Ok(())
}

fn gen_command(args: GenArgs) -> Result<()> {
    let mut g = generate(&args.family.family(), args.n, args.seed)?;
    if let Some(max_w) = args.max_weight {
        g = g.with_weights(random_weights(args.n, max_w, args.seed ^ 0x9e37_79b9_7f4a_7c15)?)?;
    }
    match args.output {
        Some(path) => save_graph(&g, &path).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", write_graph(&g)),
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    m: usize,
    value: u64,
    edge_scans: u64,
    flow_calls: u64,
    wall_time_ms: f64,
    baseline_edge_scans: Option<u64>,
    baseline_value: Option<u64>,
}

fn bench_command(args: BenchArgs) -> Result<()> {
    let family = args.family.family();
    for &n in &args.sizes {
        let g = generate(&family, n, args.seed)?;
        if args.root >= n {
            bail!("root {} out of range for {n} vertices", args.root);
        }
        let mut work = Work::new();
        let start = Instant::now();
        let cut = rooted_edge_connectivity(&g, args.root, &Config::with_seed(args.seed), &mut work)?;
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        let (baseline_edge_scans, baseline_value) = if args.no_baseline {
            (None, None)
        } else {
            let mut base = Work::new();
            let mut best = u64::MAX;
            for t in (0..n).filter(|&t| t != args.root) {
                best = best.min(min_st_cut(&g, args.root, t, None, &mut base)?.value);
            }
            (Some(base.edge_scans), Some(best))
        };
        let row = BenchRow {
            n,
            m: g.m(),
            value: cut.value,
            edge_scans: work.edge_scans,
            flow_calls: work.flow_calls,
            wall_time_ms,
            baseline_edge_scans,
            baseline_value,
        };
        println!("{}", serde_json::to_string(&row)?);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Some(Command::Gen(args)) => gen_command(args),
        Some(Command::Bench(args)) => bench_command(args),
        None => run_command(cli.run),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let invariant = err.downcast_ref::<InvariantViolation>().is_some();
            let body = serde_json::json!({
                "error": format!("{err:#}"),
                "kind": if invariant { "invariant" } else { "input" },
            });
            eprintln!("{body}");
            ExitCode::from(if invariant { 3 } else { 2 })
        }
    }
}
