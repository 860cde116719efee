//! One guided compression run on a small-world network, step by step.
//!
//! Watch the average distance fall while the degree sequence, edge count,
//! and connectivity are conserved.
//!
//! ```bash
//! cargo run --example compress_small_world
//! ```

use netcompress::evolution::{compress, EvolutionConfig};
use netcompress::generators::ws_network;

fn main() {
    let g = ws_network(100, 4, 0.5, 7).expect("valid spec");
    let config = EvolutionConfig::new(0.2);
    let trajectory = compress(&g, &config).expect("connected input");

    println!(
        "ws(100, 4, 0.5): {} planned steps (+{} relocations), anchor node {}",
        trajectory.planned_steps, trajectory.extension_steps, trajectory.anchor
    );
    println!(
        "avg distance {:.4} -> {:.4}\n",
        trajectory.initial_avg_distance,
        trajectory.final_avg_distance()
    );

    println!("step  cut        add        psi_cut      psi_add     avg_distance");
    for step in &trajectory.steps {
        println!(
            "{:>4}  {:<9} {:<9} {:<12} {:<11.4} {:.4}{}",
            step.index,
            step.cut_edge.to_string(),
            step.added_edge.to_string(),
            step.psi_cut.to_string(),
            step.psi_add,
            step.avg_distance,
            if step.disconnected_after_cut {
                "  (cut split the graph; add reconnected it)"
            } else {
                ""
            },
        );
    }

    let report = trajectory.conservation();
    println!(
        "\nconserved: nodes={} edges={} connected={} degree_sequence={}",
        report.nodes_preserved,
        report.edges_preserved,
        report.connected,
        report.degree_sequence_preserved
    );
}
