//! Random-rewiring comparator.
//!
//! Identical chain mechanics, candidate sets, repair branches, and
//! conservation guarantees as [`crate::evolution::compress`], but the initial
//! edge, every removal edge, and every addition target are drawn uniformly at
//! random (seeded through [`crate::evolution::EvolutionConfig::seed`]) instead
//! of by modulus. This isolates the modulus guidance as the only variable
//! when comparing final average distances.

use crate::evolution::{run_random_baseline, EvolutionConfig, EvolutionError, EvolutionTrajectory};
use crate::graph::Graph;

/// Uniform-random rewiring run with the same invariants as the guided
/// evolution. Deterministic for a fixed `(input, config.seed)`.
pub fn random_rewire(
    g: &Graph,
    config: &EvolutionConfig,
) -> Result<EvolutionTrajectory, EvolutionError> {
    run_random_baseline(g, config)
}
