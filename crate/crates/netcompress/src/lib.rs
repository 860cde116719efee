//! Degree-preserving network rewiring that shrinks the average shortest-path
//! distance, together with the distance-variation bounds that justify each
//! move, a random-rewiring baseline, synthetic generators, and spectral
//! metrics.
//!
//! The centerpiece is [`evolution::compress`]: a chain of cut/add rewiring
//! steps, each steered by the local compression modulus (edge betweenness
//! times pair distance), that provably conserves the node set, edge count,
//! connectivity, and degree sequence while driving the mean geodesic distance
//! down. [`baseline::random_rewire`] runs the same chain with uniform-random
//! choices for comparison, [`bounds`] provides the per-move change bounds,
//! and [`generators`]/[`spectral`] cover the synthetic inputs and the
//! Laplacian-based metrics used in the canned experiments.
//!
//! Everything is deterministic: random draws come from seeded ChaCha8
//! streams, tie-breaking is canonical, and all query operations are pure
//! functions over immutable graph snapshots (safe to call from multiple
//! threads; a rewiring run owns its single working copy).
//!
//! See the crate `examples/` directory for one runnable program per major
//! capability, and the `netcompress` binary for the file-based interface.

pub mod baseline;
pub mod bounds;
pub mod centrality;
pub mod evolution;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod io;
pub mod spectral;

pub use baseline::random_rewire;
pub use bounds::{addition_lower_bound, delta_on_addition, delta_on_removal, removal_upper_bound};
pub use centrality::{edge_betweenness_all, edge_betweenness_single, psi_addition, psi_removal};
pub use evolution::{
    compress, compression_profile, EvolutionConfig, EvolutionTrajectory, NodeConstraint,
};
pub use generators::{ba_network, er_network, multi_population, ws_network, GeneratorSpec};
pub use graph::{Distance, EdgeKey, ExtReal, Graph, GraphError, NodeId};
pub use spectral::{fiedler_value, fit_log, fit_loglog, ultra_small_world_gap};
