//! Seeded synthetic network generators: Barabási–Albert preferential
//! attachment, Watts–Strogatz small-world rings, Erdős–Rényi random graphs,
//! and a chained multi-population (modular) construction.
//!
//! All generators draw from [`rand_chacha::ChaCha8Rng`] seeded with
//! `seed_from_u64`, so a given `(spec, seed)` reproduces the same graph
//! bit-for-bit on every platform. Generators that can emit a disconnected
//! sample (Watts–Strogatz rewiring, Erdős–Rényi) regenerate with the seed
//! bumped by one until the sample is connected, giving up after
//! [`MAX_CONNECTIVITY_RETRIES`] attempts.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeKey, Graph, NodeId};

/// Attempts before a regenerate-until-connected generator reports failure.
pub const MAX_CONNECTIVITY_RETRIES: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("InvalidSpec: {0}")]
    InvalidSpec(String),
    #[error("ConnectivityRetriesExhausted: no connected sample in {attempts} attempts")]
    ConnectivityRetriesExhausted { attempts: u64 },
}

/// A generator family with its parameters; pair with a seed to produce a
/// concrete graph.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    /// Preferential attachment: `n` nodes, each newcomer attaching `m` edges.
    BarabasiAlbert { n: usize, m: usize },
    /// Ring of `n` nodes with degree `k` (even), each edge rewired with
    /// probability `p`.
    WattsStrogatz { n: usize, k: usize, p: f64 },
    /// Each of the `n(n-1)/2` pairs is an edge independently with
    /// probability `p`.
    ErdosRenyi { n: usize, p: f64 },
    /// `modules` Watts–Strogatz modules of `module_size` nodes each,
    /// consecutive modules joined by `inter_edges` random edges.
    MultiPopulation {
        modules: usize,
        module_size: usize,
        k: usize,
        p: f64,
        inter_edges: usize,
    },
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<(), GeneratorError> {
        let fail = |msg: String| Err(GeneratorError::InvalidSpec(msg));
        match *self {
            GeneratorSpec::BarabasiAlbert { n, m } => {
                if m < 1 || m >= n {
                    return fail(format!("ba requires 1 <= m < n, got n={n}, m={m}"));
                }
            }
            GeneratorSpec::WattsStrogatz { n, k, p } => {
                if k % 2 != 0 || k >= n {
                    return fail(format!("ws requires even k < n, got n={n}, k={k}"));
                }
                if !(0.0..=1.0).contains(&p) {
                    return fail(format!("ws requires p in [0, 1], got {p}"));
                }
            }
            GeneratorSpec::ErdosRenyi { n, p } => {
                if n == 0 {
                    return fail("er requires n >= 1".into());
                }
                if !(0.0..=1.0).contains(&p) {
                    return fail(format!("er requires p in [0, 1], got {p}"));
                }
            }
            GeneratorSpec::MultiPopulation {
                modules,
                module_size,
                k,
                p,
                inter_edges,
            } => {
                if modules < 2 {
                    return fail(format!("multipop requires modules > 1, got {modules}"));
                }
                if inter_edges < 1 {
                    return fail("multipop requires inter_edges >= 1".into());
                }
                if inter_edges > module_size * module_size {
                    return fail(format!(
                        "multipop cannot place {inter_edges} distinct edges between \
                         modules of {module_size} nodes"
                    ));
                }
                GeneratorSpec::WattsStrogatz {
                    n: module_size,
                    k,
                    p,
                }
                .validate()?;
            }
        }
        Ok(())
    }

    pub fn generate(&self, seed: u64) -> Result<Graph, GeneratorError> {
        match *self {
            GeneratorSpec::BarabasiAlbert { n, m } => ba_network(n, m, seed),
            GeneratorSpec::WattsStrogatz { n, k, p } => ws_network(n, k, p, seed),
            GeneratorSpec::ErdosRenyi { n, p } => er_network(n, p, seed),
            GeneratorSpec::MultiPopulation {
                modules,
                module_size,
                k,
                p,
                inter_edges,
            } => multi_population(modules, module_size, k, p, inter_edges, seed),
        }
    }

    /// Short name of the family, as used in output tables.
    pub fn kind(&self) -> &'static str {
        match self {
            GeneratorSpec::BarabasiAlbert { .. } => "ba",
            GeneratorSpec::WattsStrogatz { .. } => "ws",
            GeneratorSpec::ErdosRenyi { .. } => "er",
            GeneratorSpec::MultiPopulation { .. } => "multipop",
        }
    }
}

/// Stateless mixing for derived sub-seeds (splitmix64 finalizer), so that
/// retry attempt `a` of seed `s` never shares a stream with attempt zero of
/// seed `s + a`.
fn subseed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Barabási–Albert scale-free network.
///
/// Starts from a complete core of `m + 1` nodes (so every early target has a
/// nonzero degree), then each of the remaining `n - m - 1` nodes attaches to
/// `m` distinct existing nodes drawn with probability proportional to degree;
/// already-chosen targets are rejected and redrawn. The result is connected
/// with exactly `m(m+1)/2 + m(n-m-1)` edges.
pub fn ba_network(n: usize, m: usize, seed: u64) -> Result<Graph, GeneratorError> {
    GeneratorSpec::BarabasiAlbert { n, m }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = m + 1;
    let mut g = Graph::empty(n);
    for i in 0..core {
        for j in (i + 1)..core {
            g.add_edge(EdgeKey::new(NodeId(i), NodeId(j)))
                .expect("distinct core pairs");
        }
    }
    let mut degrees: Vec<u64> = (0..n).map(|v| g.degree(NodeId(v)) as u64).collect();
    let mut total_degree: u64 = degrees.iter().sum();

    for new in core..n {
        let mut chosen: BTreeSet<usize> = BTreeSet::new();
        while chosen.len() < m {
            let mut r = rng.gen_range(0..total_degree);
            let mut target = 0usize;
            for (v, &d) in degrees.iter().enumerate().take(new) {
                if r < d {
                    target = v;
                    break;
                }
                r -= d;
            }
            chosen.insert(target);
        }
        for &t in &chosen {
            g.add_edge(EdgeKey::new(NodeId(new), NodeId(t)))
                .expect("new node has no prior edges");
            degrees[t] += 1;
        }
        degrees[new] = m as u64;
        total_degree += 2 * m as u64;
    }
    debug_assert!(g.is_connected());
    Ok(g)
}

fn ws_ring(n: usize, k: usize) -> Graph {
    let mut g = Graph::empty(n);
    for lane in 1..=(k / 2) {
        for i in 0..n {
            let j = (i + lane) % n;
            // A lane can wrap onto an existing edge only when k >= n, which
            // parameter validation excludes.
            g.add_edge(EdgeKey::new(NodeId(i), NodeId(j)))
                .expect("ring lanes are distinct");
        }
    }
    g
}

fn ws_sample(n: usize, k: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = ws_ring(n, k);
    for lane in 1..=(k / 2) {
        for i in 0..n {
            let u = NodeId(i);
            let v = NodeId((i + lane) % n);
            if !rng.gen_bool(p) {
                continue;
            }
            if g.degree(u) >= n - 1 {
                continue; // nowhere left to rewire to
            }
            let w = loop {
                let w = NodeId(rng.gen_range(0..n));
                if w != u && !g.has_edge(u, w) {
                    break w;
                }
            };
            g.remove_edge(EdgeKey::new(u, v)).expect("ring edge present");
            g.add_edge(EdgeKey::new(u, w)).expect("screened above");
        }
    }
    g
}

/// Watts–Strogatz small-world network: a `k`-nearest-neighbor ring whose
/// edges are each rewired (far endpoint replaced by a uniform non-duplicate,
/// non-self target) with probability `p`. The edge count is exactly
/// `n * k / 2` for every `p`. Regenerates with a bumped seed until connected.
pub fn ws_network(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    GeneratorSpec::WattsStrogatz { n, k, p }.validate()?;
    for attempt in 0..MAX_CONNECTIVITY_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(subseed(seed, attempt));
        let g = ws_sample(n, k, p, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GeneratorError::ConnectivityRetriesExhausted {
        attempts: MAX_CONNECTIVITY_RETRIES,
    })
}

fn er_sample(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(EdgeKey::new(NodeId(i), NodeId(j)))
                    .expect("fresh pair");
            }
        }
    }
    g
}

/// Erdős–Rényi random graph: every unordered pair is an edge independently
/// with probability `p`. Regenerates with a bumped seed until connected.
///
/// Note that a mean degree `(n - 1) p` below `ln n` puts samples under the
/// connectivity threshold; there the retry loop will usually exhaust itself,
/// and the samples it does accept carry more edges than `n (n - 1) p / 2`
/// on average. Pick `p` accordingly.
pub fn er_network(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    GeneratorSpec::ErdosRenyi { n, p }.validate()?;
    for attempt in 0..MAX_CONNECTIVITY_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(subseed(seed, attempt));
        let g = er_sample(n, p, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GeneratorError::ConnectivityRetriesExhausted {
        attempts: MAX_CONNECTIVITY_RETRIES,
    })
}

/// Multi-population network: `modules` Watts–Strogatz modules of equal size
/// laid out contiguously, with consecutive modules (a chain) joined by
/// `inter_edges` uniformly chosen distinct cross edges. Connected by
/// construction, with exactly
/// `modules * module_size * k / 2 + (modules - 1) * inter_edges` edges.
pub fn multi_population(
    modules: usize,
    module_size: usize,
    k: usize,
    p: f64,
    inter_edges: usize,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    let spec = GeneratorSpec::MultiPopulation {
        modules,
        module_size,
        k,
        p,
        inter_edges,
    };
    spec.validate()?;
    let n = modules * module_size;
    let mut g = Graph::empty(n);
    for s in 0..modules {
        let module = ws_network(module_size, k, p, subseed(seed, s as u64))?;
        let base = s * module_size;
        for e in module.edges() {
            g.add_edge(EdgeKey::new(
                NodeId(base + e.u().index()),
                NodeId(base + e.v().index()),
            ))
            .expect("modules are node-disjoint");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(subseed(seed, modules as u64));
    for s in 0..modules - 1 {
        let left = s * module_size;
        let right = (s + 1) * module_size;
        let mut placed = 0;
        while placed < inter_edges {
            let u = NodeId(left + rng.gen_range(0..module_size));
            let v = NodeId(right + rng.gen_range(0..module_size));
            if g.add_edge(EdgeKey::new(u, v)).is_ok() {
                placed += 1;
            }
        }
    }
    debug_assert!(g.is_connected());
    Ok(g)
}
