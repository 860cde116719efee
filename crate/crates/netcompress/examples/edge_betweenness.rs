//! Edge betweenness and the local compression moduli on a small graph.
//!
//! The betweenness convention sums over ordered node pairs and excludes each
//! edge's own endpoint pair, so a triangle edge scores zero. The removal
//! modulus (betweenness times post-cut detour distance) is infinite exactly
//! for bridges; the addition modulus scores absent edges by how much traffic
//! the new edge would attract times how far apart its endpoints currently
//! are.
//!
//! ```bash
//! cargo run --example edge_betweenness
//! ```

use netcompress::centrality::{edge_betweenness_all, psi_addition, psi_removal};
use netcompress::graph::{EdgeKey, Graph, NodeId};

fn main() {
    // A barbell-ish shape: two triangles joined by a path.
    let g = Graph::from_edge_list(
        8,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (4, 6),
            (6, 7),
        ],
        true,
    )
    .expect("simple graph");

    println!("edge betweenness (ordered pairs, endpoints excluded):");
    for (edge, value) in edge_betweenness_all(&g) {
        let psi = psi_removal(&g, edge).expect("edge present");
        println!("  {edge}: B = {value:<6} removal modulus = {psi}");
    }

    println!("\naddition moduli for a few absent edges:");
    for (a, b) in [(0, 7), (1, 5), (0, 3)] {
        let edge = EdgeKey::new(NodeId(a), NodeId(b));
        let psi = psi_addition(&g, edge).expect("edge absent");
        println!("  {edge}: addition modulus = {psi:.4}");
    }
}
