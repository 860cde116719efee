//! Thin command-line front end over the library: `generate` writes synthetic
//! networks as edge lists, `compress` runs one rewiring method on an edge
//! list and exports the trajectory/summary, `reproduce` runs the canned
//! experiments. Exit codes: 0 success, 1 usage error, 2 runtime error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use netcompress::experiment::{
    load_flat_config, reproduce_figure, run_to_files, ExperimentError, Figure, Method, MetricSet,
    ReproduceOptions, Scale,
};
use netcompress::generators::GeneratorSpec;
use netcompress::io::{read_edge_list, write_edge_list, DuplicatePolicy};

#[derive(Parser)]
#[command(
    name = "netcompress",
    about = "Degree-preserving rewiring that shrinks a network's average distance",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic network and write it as an edge list.
    Generate(GenerateArgs),
    /// Rewire a network from an edge list and export trajectory + summary.
    Compress(CompressArgs),
    /// Run a canned experiment and write its CSV.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Generator family: ba, ws, er, or multipop.
    #[arg(long)]
    kind: String,
    /// Node count (ba, ws, er).
    #[arg(long)]
    n: Option<usize>,
    /// Edges per new node (ba).
    #[arg(long)]
    m: Option<usize>,
    /// Ring degree, even (ws, multipop modules).
    #[arg(long)]
    k: Option<usize>,
    /// Rewiring probability (ws, multipop) or edge probability (er).
    #[arg(long)]
    p: Option<f64>,
    /// Module count (multipop).
    #[arg(long)]
    modules: Option<usize>,
    /// Nodes per module (multipop).
    #[arg(long = "module-size")]
    module_size: Option<usize>,
    /// Edges between consecutive modules (multipop).
    #[arg(long = "m-inter")]
    m_inter: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output edge-list path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Default)]
struct CompressArgs {
    /// Input edge-list path.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Rewiring fraction in (0, 1].
    #[arg(long = "p-rew")]
    p_rew: Option<f64>,
    /// effective, random, or both.
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated subset of avg_distance,clustering,fiedler.
    #[arg(long)]
    metrics: Option<String>,
    /// Node-attribute file enabling constrained rewiring.
    #[arg(long)]
    constraints: Option<PathBuf>,
    /// Collapse duplicate input edges instead of rejecting them.
    #[arg(long, default_value_t = false)]
    dedup: bool,
    /// Output directory for trajectory CSV and summary JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key=value config file; explicit flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// One of s1, s2, s4, s5, s6, s7, s8, s10.
    #[arg(long)]
    figure: String,
    /// desk (100 nodes, 5 seeds) or full (300 nodes, 10 seeds).
    #[arg(long, default_value = "desk")]
    scale: String,
    /// Override the node count of the chosen scale.
    #[arg(long)]
    n: Option<usize>,
    /// Override the seed count of the chosen scale.
    #[arg(long)]
    seeds: Option<usize>,
    /// Edge-list path for the real-network experiment (s7).
    #[arg(long)]
    data: Option<PathBuf>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

enum CliError {
    Usage(String),
    Runtime(ExperimentError),
}

impl<E: Into<ExperimentError>> From<E> for CliError {
    fn from(e: E) -> CliError {
        CliError::Runtime(e.into())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version land here too and are not errors.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Compress(args) => compress(args),
        Command::Reproduce(args) => reproduce(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let need = |name: &str, value: Option<usize>| {
        value.ok_or_else(|| usage(format!("--{name} is required for --kind {}", args.kind)))
    };
    let spec = match args.kind.as_str() {
        "ba" => GeneratorSpec::BarabasiAlbert {
            n: need("n", args.n)?,
            m: need("m", args.m)?,
        },
        "ws" => GeneratorSpec::WattsStrogatz {
            n: need("n", args.n)?,
            k: need("k", args.k)?,
            p: args.p.ok_or_else(|| usage("--p is required for --kind ws"))?,
        },
        "er" => GeneratorSpec::ErdosRenyi {
            n: need("n", args.n)?,
            p: args.p.ok_or_else(|| usage("--p is required for --kind er"))?,
        },
        "multipop" => GeneratorSpec::MultiPopulation {
            modules: need("modules", args.modules)?,
            module_size: need("module-size", args.module_size)?,
            k: need("k", args.k)?,
            p: args.p.unwrap_or(0.5),
            inter_edges: need("m-inter", args.m_inter)?,
        },
        other => return Err(usage(format!("unknown --kind '{other}'"))),
    };
    let graph = spec.generate(args.seed)?;
    write_edge_list(&graph, &args.out)?;
    println!("nodes: {}", graph.node_count());
    println!("edges: {}", graph.edge_count());
    println!(
        "avg_distance: {}",
        graph.average_distance().map_err(ExperimentError::from)?
    );
    println!("clustering: {}", graph.clustering_coefficient());
    println!("wrote: {}", args.out.display());
    Ok(())
}

fn compress(args: CompressArgs) -> Result<(), CliError> {
    // Fill unset flags from the config file, if any.
    let mut args = args;
    if let Some(path) = &args.config {
        let file = load_flat_config(path)?;
        let parse_err =
            |key: &str, v: &str| usage(format!("config key '{key}' has invalid value '{v}'"));
        for (key, value) in &file {
            match key.as_str() {
                "in" => {
                    args.input.get_or_insert_with(|| PathBuf::from(value));
                }
                "p-rew" => {
                    if args.p_rew.is_none() {
                        args.p_rew = Some(value.parse().map_err(|_| parse_err(key, value))?);
                    }
                }
                "method" => {
                    args.method.get_or_insert_with(|| value.clone());
                }
                "seed" => {
                    if args.seed.is_none() {
                        args.seed = Some(value.parse().map_err(|_| parse_err(key, value))?);
                    }
                }
                "metrics" => {
                    args.metrics.get_or_insert_with(|| value.clone());
                }
                "constraints" => {
                    args.constraints.get_or_insert_with(|| PathBuf::from(value));
                }
                "dedup" => {
                    if !args.dedup {
                        args.dedup = value.parse().map_err(|_| parse_err(key, value))?;
                    }
                }
                "out" => {
                    args.out.get_or_insert_with(|| PathBuf::from(value));
                }
                other => return Err(usage(format!("unknown config key '{other}'"))),
            }
        }
    }

    let input_path = args.input.ok_or_else(|| usage("--in is required"))?;
    let fraction = args.p_rew.ok_or_else(|| usage("--p-rew is required"))?;
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(usage(format!("--p-rew must be in (0, 1], got {fraction}")));
    }
    let out_dir = args.out.ok_or_else(|| usage("--out is required"))?;
    let method: Method = args
        .method
        .as_deref()
        .unwrap_or("effective")
        .parse()
        .map_err(usage)?;
    let metrics = match &args.metrics {
        Some(list) => MetricSet::parse_list(list).map_err(usage)?,
        None => MetricSet::default(),
    };
    let seed = args.seed.unwrap_or(0);
    let policy = if args.dedup {
        DuplicatePolicy::Collapse
    } else {
        DuplicatePolicy::Error
    };

    let input = read_edge_list(&input_path, policy).map_err(ExperimentError::from)?;
    for single in method.single_methods() {
        let summary = run_to_files(
            &input,
            fraction,
            single,
            seed,
            metrics,
            args.constraints.as_deref(),
            &out_dir,
        )?;
        println!(
            "{}: avg_distance {} -> {} (steps: {}, conservation: {})",
            single.as_str(),
            summary.initial.avg_distance,
            summary.final_metrics.avg_distance,
            summary.total_steps,
            summary.conservation.all_hold(),
        );
    }
    println!("wrote: {}", out_dir.display());
    Ok(())
}

fn reproduce(args: ReproduceArgs) -> Result<(), CliError> {
    let figure: Figure = args.figure.parse().map_err(usage)?;
    let mut scale = match args.scale.as_str() {
        "desk" => Scale::desk(),
        "full" => Scale::full(),
        other => return Err(usage(format!("unknown --scale '{other}'"))),
    };
    if let Some(n) = args.n {
        scale.n = n;
    }
    if let Some(seeds) = args.seeds {
        if seeds == 0 {
            return Err(usage("--seeds must be positive"));
        }
        scale.seeds = seeds;
    }
    let options = ReproduceOptions {
        scale,
        data: args.data,
    };
    let path = reproduce_figure(figure, &options, &args.out)?;
    println!("wrote: {}", path.display());
    Ok(())
}
