//! Compression under per-node constraints: nodes sit on a ring in the plane
//! and may only receive edges from nodes within their radio range.
//!
//! Steps whose constrained candidate set comes up empty fall back to the
//! unconstrained set and are flagged in the trajectory.
//!
//! ```bash
//! cargo run --example node_constraints
//! ```

use netcompress::evolution::{compress, EvolutionConfig, NodeConstraint};
use netcompress::generators::ws_network;

fn main() {
    let n = 60;
    let g = ws_network(n, 4, 0.5, 13).expect("valid spec");

    // Coordinates on the unit circle; each node accepts links within a fixed
    // chord length (about a quarter of the ring).
    let coordinates: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let t = i as f64 / n as f64 * std::f64::consts::TAU;
            vec![t.cos(), t.sin()]
        })
        .collect();
    let radius = 0.8;

    let mut constrained = EvolutionConfig::new(0.25);
    constrained.constraint = Some(NodeConstraint::euclidean(
        coordinates.clone(),
        vec![radius; n],
    ));
    let with = compress(&g, &constrained).expect("run");

    let free = compress(&g, &EvolutionConfig::new(0.25)).expect("run");

    println!(
        "unconstrained: avg distance {:.4} -> {:.4}",
        free.initial_avg_distance,
        free.final_avg_distance()
    );
    println!(
        "radius {radius}:    avg distance {:.4} -> {:.4} ({} fallback steps)",
        with.initial_avg_distance,
        with.final_avg_distance(),
        with.constraint_fallback_steps().len(),
    );

    let chord = |a: usize, b: usize| {
        let (xa, xb) = (&coordinates[a], &coordinates[b]);
        ((xa[0] - xb[0]).powi(2) + (xa[1] - xb[1]).powi(2)).sqrt()
    };
    // The forced closing edge (last step) is exempt from the constraint.
    let long_links = with
        .steps
        .iter()
        .take(with.steps.len() - 1)
        .filter(|s| !s.constraint_relaxed)
        .filter(|s| chord(s.added_edge.u().index(), s.added_edge.v().index()) >= radius)
        .count();
    println!(
        "added edges breaking the radius outside fallbacks/closure: {long_links}"
    );
    println!(
        "conserved: {:?}",
        with.conservation()
    );
}
