//! Experiment harness: stable CSV/JSON exports, canned figure sweeps, and
//! the flat key-value config format used by the command line.
//!
//! Output schemas:
//! - trajectory CSV: `step,cut_u,cut_v,add_u,add_v,psi_cut,psi_add,`
//!   `disconnected_after_cut,avg_distance`, one row per completed step
//!   (`psi_cut` is `inf` when a bridge was cut);
//! - run summary JSON: input identity, per-run metrics before and after, and
//!   the four conservation booleans (nodes, edges, connectivity, degree
//!   sequence);
//! - figure CSVs: long-format rows matching each canned experiment's axes.
//!
//! All exports are byte-stable for a fixed input, configuration, and seed.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::baseline::random_rewire;
use crate::evolution::{
    compress, ConservationReport, EvolutionConfig, EvolutionError, EvolutionTrajectory,
};
use crate::generators::{GeneratorError, GeneratorSpec};
use crate::graph::{Graph, GraphError};
use crate::io::{
    largest_component_subgraph, read_edge_list, read_node_constraint, DuplicatePolicy,
    FileFormatError, LoadedGraph,
};
use crate::spectral::fiedler_value;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("MissingDataset: {0}")]
    MissingDataset(String),
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Evolution(#[from] EvolutionError),
    #[error(transparent)]
    Format(#[from] FileFormatError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("IoError: {0}")]
    Io(#[from] std::io::Error),
}

/// Which rewiring method(s) a run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Effective,
    Random,
    Both,
}

impl Method {
    pub fn single_methods(self) -> Vec<Method> {
        match self {
            Method::Both => vec![Method::Effective, Method::Random],
            m => vec![m],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Effective => "effective",
            Method::Random => "random",
            Method::Both => "both",
        }
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Method, String> {
        match s {
            "effective" => Ok(Method::Effective),
            "random" => Ok(Method::Random),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}

/// Metrics reported in run summaries.
#[derive(Debug, Clone, Copy)]
pub struct MetricSet {
    pub avg_distance: bool,
    pub clustering: bool,
    pub fiedler: bool,
}

impl Default for MetricSet {
    fn default() -> MetricSet {
        MetricSet {
            avg_distance: true,
            clustering: true,
            fiedler: false,
        }
    }
}

impl MetricSet {
    pub fn parse_list(list: &str) -> Result<MetricSet, String> {
        let mut set = MetricSet {
            avg_distance: false,
            clustering: false,
            fiedler: false,
        };
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "avg_distance" => set.avg_distance = true,
                "clustering" => set.clustering = true,
                "fiedler" => set.fiedler = true,
                other => return Err(format!("unknown metric '{other}'")),
            }
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct MetricValues {
    pub avg_distance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clustering: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiedler: Option<f64>,
}

fn measure(g: &Graph, metrics: MetricSet) -> Result<MetricValues, GraphError> {
    Ok(MetricValues {
        avg_distance: g.average_distance()?,
        clustering: metrics.clustering.then(|| g.clustering_coefficient()),
        fiedler: metrics.fiedler.then(|| fiedler_value(g)),
    })
}

/// JSON-serializable record of one rewiring run.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RunSummary {
    pub method: String,
    pub seed: u64,
    pub rewiring_fraction: f64,
    pub node_count: usize,
    pub edge_count: usize,
    pub input_fingerprint: String,
    pub planned_steps: usize,
    pub total_steps: usize,
    pub extension_steps: usize,
    pub constraint_fallback_steps: Vec<usize>,
    pub initial: MetricValues,
    #[serde(rename = "final")]
    pub final_metrics: MetricValues,
    pub conservation: ConservationReport,
}

/// Renders the trajectory CSV (see the module docs for the schema).
pub fn trajectory_csv(trajectory: &EvolutionTrajectory) -> String {
    let mut out = String::from(
        "step,cut_u,cut_v,add_u,add_v,psi_cut,psi_add,disconnected_after_cut,avg_distance\n",
    );
    for step in &trajectory.steps {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            step.index,
            step.cut_edge.u(),
            step.cut_edge.v(),
            step.added_edge.u(),
            step.added_edge.v(),
            step.psi_cut,
            step.psi_add,
            step.disconnected_after_cut,
            step.avg_distance,
        ));
    }
    out
}

/// Runs one method on a loaded graph and writes `trajectory_<method>.csv`
/// and `summary_<method>.json` into `out_dir`.
pub fn run_to_files(
    input: &LoadedGraph,
    fraction: f64,
    method: Method,
    seed: u64,
    metrics: MetricSet,
    constraint_file: Option<&Path>,
    out_dir: &Path,
) -> Result<RunSummary, ExperimentError> {
    assert!(method != Method::Both, "resolve Both before running");
    let mut config = EvolutionConfig::new(fraction);
    config.seed = seed;
    config.record_metrics_every = 0;
    if let Some(path) = constraint_file {
        config.constraint = Some(read_node_constraint(path, &input.labels)?);
    }
    let trajectory = match method {
        Method::Effective => compress(&input.graph, &config)?,
        Method::Random => random_rewire(&input.graph, &config)?,
        Method::Both => unreachable!(),
    };
    let summary = RunSummary {
        method: method.as_str().to_string(),
        seed,
        rewiring_fraction: fraction,
        node_count: trajectory.node_count,
        edge_count: trajectory.initial_edge_count,
        input_fingerprint: format!("{:016x}", trajectory.initial_fingerprint),
        planned_steps: trajectory.planned_steps,
        total_steps: trajectory.steps.len(),
        extension_steps: trajectory.extension_steps,
        constraint_fallback_steps: trajectory.constraint_fallback_steps(),
        initial: measure(&input.graph, metrics)?,
        final_metrics: measure(&trajectory.final_graph, metrics)?,
        conservation: trajectory.conservation(),
    };
    fs::create_dir_all(out_dir)?;
    fs::write(
        out_dir.join(format!("trajectory_{}.csv", method.as_str())),
        trajectory_csv(&trajectory),
    )?;
    fs::write(
        out_dir.join(format!("summary_{}.json", method.as_str())),
        serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n",
    )?;
    Ok(summary)
}

/// Where a sweep's input graphs come from: a generator (one sample per
/// seed) or a fixed edge-list file (the seeds then only drive the random
/// baseline).
#[derive(Debug, Clone)]
pub enum ExperimentInput {
    Generator(GeneratorSpec),
    EdgeList(PathBuf),
}

/// A full experiment sweep: every `(fraction, seed, method)` combination is
/// one rewiring run, exported under `output_dir/p<fraction>_s<seed>/`.
#[derive(Debug)]
pub struct ExperimentConfig {
    pub input: ExperimentInput,
    pub method: Method,
    pub fractions: Vec<f64>,
    pub seeds: Vec<u64>,
    pub metrics: MetricSet,
    pub constraint_file: Option<PathBuf>,
    pub output_dir: PathBuf,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ExperimentError> {
        if self.seeds.is_empty() {
            return Err(ExperimentError::InvalidArgument(
                "at least one seed is required".into(),
            ));
        }
        if self.fractions.is_empty() {
            return Err(ExperimentError::InvalidArgument(
                "at least one rewiring fraction is required".into(),
            ));
        }
        for &fraction in &self.fractions {
            if !(fraction > 0.0 && fraction <= 1.0) {
                return Err(ExperimentError::InvalidArgument(format!(
                    "rewiring fractions must lie in (0, 1], got {fraction}"
                )));
            }
        }
        if let ExperimentInput::Generator(spec) = &self.input {
            spec.validate()?;
        }
        Ok(())
    }

    /// Runs the whole sweep and returns one summary per run, in
    /// `(seed, fraction, method)` order.
    pub fn run(&self) -> Result<Vec<RunSummary>, ExperimentError> {
        self.validate()?;
        let mut summaries = Vec::new();
        let mut fixed_input: Option<LoadedGraph> = None;
        for &seed in &self.seeds {
            let input = match &self.input {
                ExperimentInput::Generator(spec) => LoadedGraph::from_graph(spec.generate(seed)?),
                ExperimentInput::EdgeList(path) => match &fixed_input {
                    Some(loaded) => loaded.clone(),
                    None => {
                        let loaded = read_edge_list(path, DuplicatePolicy::Error)?;
                        fixed_input = Some(loaded.clone());
                        loaded
                    }
                },
            };
            for &fraction in &self.fractions {
                let run_dir = self
                    .output_dir
                    .join(format!("p{fraction}_s{seed}"));
                for method in self.method.single_methods() {
                    summaries.push(run_to_files(
                        &input,
                        fraction,
                        method,
                        seed,
                        self.metrics,
                        self.constraint_file.as_deref(),
                        &run_dir,
                    )?);
                }
            }
        }
        Ok(summaries)
    }
}

/// Canned experiments, named after the report panels they correspond to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    S1,
    S2,
    S4,
    S5,
    S6,
    S7,
    S8,
    S10,
}

impl Figure {
    pub const ALL: [Figure; 8] = [
        Figure::S1,
        Figure::S2,
        Figure::S4,
        Figure::S5,
        Figure::S6,
        Figure::S7,
        Figure::S8,
        Figure::S10,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Figure::S1 => "s1",
            Figure::S2 => "s2",
            Figure::S4 => "s4",
            Figure::S5 => "s5",
            Figure::S6 => "s6",
            Figure::S7 => "s7",
            Figure::S8 => "s8",
            Figure::S10 => "s10",
        }
    }
}

impl FromStr for Figure {
    type Err = String;
    fn from_str(s: &str) -> Result<Figure, String> {
        Figure::ALL
            .iter()
            .copied()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown figure '{s}'"))
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Size/repetition presets for the canned experiments.
#[derive(Debug, Clone, Copy)]
pub struct Scale {
    pub n: usize,
    pub seeds: usize,
}

impl Scale {
    /// Shrunk defaults that run on a desk: 100 nodes, 5 seeds.
    pub fn desk() -> Scale {
        Scale { n: 100, seeds: 5 }
    }

    /// The original experiment sizes: 300 nodes, 10 seeds.
    pub fn full() -> Scale {
        Scale { n: 300, seeds: 10 }
    }
}

#[derive(Debug)]
pub struct ReproduceOptions {
    pub scale: Scale,
    /// Edge-list path for the real-network experiment (`s7`).
    pub data: Option<PathBuf>,
}

fn multipop_spec(n: usize) -> GeneratorSpec {
    // Five equal modules as in the original setup, sized to the target n.
    GeneratorSpec::MultiPopulation {
        modules: 5,
        module_size: (n / 5).max(4),
        k: 4,
        p: 0.5,
        inter_edges: 2,
    }
}

fn er_probability(n: usize) -> f64 {
    // Mean degree matched to the k = 4 small-world settings.
    4.0 / (n as f64 - 1.0)
}

fn final_distance(
    g: &Graph,
    fraction: f64,
    method: Method,
    seed: u64,
) -> Result<f64, ExperimentError> {
    if fraction == 0.0 {
        return Ok(g.average_distance()?);
    }
    let mut config = EvolutionConfig::new(fraction);
    config.seed = seed;
    config.record_metrics_every = 0;
    let trajectory = match method {
        Method::Effective => compress(g, &config)?,
        Method::Random => random_rewire(g, &config)?,
        Method::Both => unreachable!("resolved earlier"),
    };
    Ok(trajectory.final_avg_distance())
}

/// Runs one canned experiment and writes `<figure>.csv` (plus
/// `<figure>_README.txt` describing the scale substitutions) into `out_dir`.
/// Returns the CSV path.
pub fn reproduce_figure(
    figure: Figure,
    options: &ReproduceOptions,
    out_dir: &Path,
) -> Result<PathBuf, ExperimentError> {
    fs::create_dir_all(out_dir)?;
    let scale = options.scale;
    let seeds: Vec<u64> = (0..scale.seeds as u64).collect();
    let mut csv = String::new();
    let mut notes = vec![
        format!("figure: {figure}"),
        format!("nodes: {} (original runs used 300)", scale.n),
        format!("seeds: {} (original runs used 10)", scale.seeds),
    ];

    match figure {
        Figure::S1 | Figure::S2 => {
            // Average distance against size for the two growth models.
            let sizes = [100usize, 200, 400, 800];
            csv.push_str("network_kind,n,seed,avg_distance\n");
            notes.push(format!("sizes: {sizes:?}"));
            for &n in &sizes {
                for &seed in &seeds {
                    let ba = GeneratorSpec::BarabasiAlbert { n, m: 4 }.generate(seed)?;
                    csv.push_str(&format!("ba,{n},{seed},{}\n", ba.average_distance()?));
                    let ws = GeneratorSpec::WattsStrogatz { n, k: 4, p: 0.5 }.generate(seed)?;
                    csv.push_str(&format!("ws,{n},{seed},{}\n", ws.average_distance()?));
                }
            }
        }
        Figure::S4 | Figure::S5 | Figure::S6 | Figure::S7 => {
            // Final average distance against rewiring fraction, both methods.
            let fractions = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3];
            csv.push_str("p_rew,method,seed,avg_distance\n");
            notes.push(format!("fractions: {fractions:?}"));
            for &seed in &seeds {
                let input: Graph = match figure {
                    Figure::S4 => {
                        GeneratorSpec::BarabasiAlbert { n: scale.n, m: 4 }.generate(seed)?
                    }
                    Figure::S5 => GeneratorSpec::WattsStrogatz {
                        n: scale.n,
                        k: 4,
                        p: 0.5,
                    }
                    .generate(seed)?,
                    Figure::S6 => multipop_spec(scale.n).generate(seed)?,
                    Figure::S7 => {
                        let path = options.data.as_ref().ok_or_else(|| {
                            ExperimentError::MissingDataset(
                                "s7 needs --data <edge list> (real network, not bundled)".into(),
                            )
                        })?;
                        let loaded = read_edge_list(path, DuplicatePolicy::Collapse)?;
                        let (lcc, _) = largest_component_subgraph(&loaded.graph);
                        notes.push(format!(
                            "dataset: {} ({} nodes in largest component of {})",
                            path.display(),
                            lcc.node_count(),
                            loaded.graph.node_count()
                        ));
                        lcc
                    }
                    _ => unreachable!(),
                };
                for &fraction in &fractions {
                    for method in [Method::Effective, Method::Random] {
                        let d = final_distance(&input, fraction, method, seed)?;
                        csv.push_str(&format!(
                            "{fraction},{},{seed},{d}\n",
                            method.as_str()
                        ));
                    }
                }
            }
        }
        Figure::S8 => {
            // Compression limit sweep per generator family, guided method.
            let fractions = [0.0, 0.1, 0.2, 0.3, 0.4];
            csv.push_str("p_rew,network_kind,seed,avg_distance\n");
            notes.push(format!("fractions: {fractions:?}"));
            for spec in [
                GeneratorSpec::WattsStrogatz {
                    n: scale.n,
                    k: 4,
                    p: 0.5,
                },
                GeneratorSpec::BarabasiAlbert { n: scale.n, m: 4 },
                GeneratorSpec::ErdosRenyi {
                    n: scale.n,
                    p: er_probability(scale.n),
                },
            ] {
                for &seed in &seeds {
                    let input = spec.generate(seed)?;
                    for &fraction in &fractions {
                        let d = final_distance(&input, fraction, Method::Effective, seed)?;
                        csv.push_str(&format!("{fraction},{},{seed},{d}\n", spec.kind()));
                    }
                }
            }
        }
        Figure::S10 => {
            // Clustering and Fiedler value against rewiring fraction.
            let fractions = [0.0, 0.1, 0.2, 0.3];
            csv.push_str("p_rew,network_kind,seed,clustering,fiedler\n");
            notes.push(format!("fractions: {fractions:?}"));
            for spec in [
                GeneratorSpec::WattsStrogatz {
                    n: scale.n,
                    k: 4,
                    p: 0.5,
                },
                GeneratorSpec::BarabasiAlbert { n: scale.n, m: 4 },
                GeneratorSpec::ErdosRenyi {
                    n: scale.n,
                    p: er_probability(scale.n),
                },
            ] {
                for &seed in &seeds {
                    let input = spec.generate(seed)?;
                    for &fraction in &fractions {
                        let graph = if fraction == 0.0 {
                            input.clone()
                        } else {
                            let mut config = EvolutionConfig::new(fraction);
                            config.record_metrics_every = 0;
                            compress(&input, &config)?.final_graph
                        };
                        csv.push_str(&format!(
                            "{fraction},{},{seed},{},{}\n",
                            spec.kind(),
                            graph.clustering_coefficient(),
                            fiedler_value(&graph)
                        ));
                    }
                }
            }
        }
    }

    let csv_path = out_dir.join(format!("{figure}.csv"));
    fs::write(&csv_path, csv)?;
    fs::write(
        out_dir.join(format!("{figure}_README.txt")),
        notes.join("\n") + "\n",
    )?;
    Ok(csv_path)
}

/// Parses the flat `key = value` config format (one pair per line, `#`
/// comments). Keys mirror the long command-line flags.
pub fn load_flat_config(path: &Path) -> Result<BTreeMap<String, String>, ExperimentError> {
    let text = fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for (line_index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            ExperimentError::InvalidArgument(format!(
                "{}:{}: expected 'key = value', got '{line}'",
                path.display(),
                line_index + 1
            ))
        })?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}
