//! How far compression goes as the rewiring fraction grows: the mean
//! distance falls quickly at first and flattens out near a fraction of 0.3,
//! the network's practical compression limit.
//!
//! ```bash
//! cargo run --example compression_profile
//! ```

use netcompress::evolution::compression_profile;
use netcompress::generators::GeneratorSpec;
use netcompress::graph::Graph;

fn main() {
    let fractions = [0.0, 0.05, 0.1, 0.2, 0.3, 0.4];
    for spec in [
        GeneratorSpec::WattsStrogatz { n: 100, k: 4, p: 0.5 },
        GeneratorSpec::ErdosRenyi { n: 100, p: 4.0 / 99.0 },
        GeneratorSpec::BarabasiAlbert { n: 100, m: 4 },
    ] {
        let inputs: Vec<Graph> = (0..5)
            .map(|seed| spec.generate(seed).expect("valid spec"))
            .collect();
        let rows = compression_profile(&inputs, &fractions, false).expect("profile");
        let initial = rows[0].avg_distance.mean;
        println!("{} (initial mean distance {initial:.4}):", spec.kind());
        for row in rows {
            println!(
                "  p_rew {:<5} mean D {:.4} +/- {:.4}  ({:+.2}%)",
                row.rewiring_fraction,
                row.avg_distance.mean,
                row.avg_distance.std,
                100.0 * (row.avg_distance.mean - initial) / initial,
            );
        }
        println!();
    }
}
