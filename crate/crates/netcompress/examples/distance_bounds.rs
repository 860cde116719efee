//! Per-edge distance-variation bounds against the realized changes.
//!
//! Removing an edge raises the mean distance by at most
//! `(B(e) + 2)(d_removed(a,b) - 1) / (|V|(|V|-1))` (infinite for bridges);
//! adding an absent edge lowers it by at least the number of shortened pairs
//! times the smallest per-pair drop. This walks every edge of a small graph
//! and prints bound vs actual.
//!
//! ```bash
//! cargo run --example distance_bounds
//! ```

use netcompress::bounds::{
    addition_lower_bound, delta_on_addition, delta_on_removal, removal_upper_bound,
};
use netcompress::generators::ws_network;
use netcompress::graph::EdgeKey;

fn main() {
    let g = ws_network(16, 4, 0.3, 5).expect("valid spec");
    println!(
        "ws(16, 4, 0.3), |E| = {}, avg distance = {:.4}\n",
        g.edge_count(),
        g.average_distance().expect("connected")
    );

    println!("removals (actual increase <= bound):");
    for e in g.edges() {
        let bound = removal_upper_bound(&g, e).expect("edge present");
        let actual = delta_on_removal(&g, e).expect("connected").avg_delta;
        println!("  cut {e}: actual {actual} <= bound {bound}");
    }

    println!("\nadditions (actual decrease >= bound), first few absent pairs:");
    let mut shown = 0;
    for u in g.nodes() {
        for v in g.nodes() {
            if u < v && !g.has_edge(u, v) && shown < 8 {
                let e = EdgeKey::new(u, v);
                let bound = addition_lower_bound(&g, e).expect("edge absent");
                let report = delta_on_addition(&g, e).expect("edge absent");
                let actual = -report.avg_delta.finite().expect("stays connected");
                println!(
                    "  add {e}: actual {actual:.5} >= bound {bound:.5} ({} pairs shortened)",
                    report.changed.len() * 2
                );
                shown += 1;
            }
        }
    }
}
