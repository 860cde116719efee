//! Build one network per generator family and print its basic shape.
//!
//! ```bash
//! cargo run --example generate_networks
//! ```

use netcompress::generators::GeneratorSpec;

fn main() {
    let seed = 42;
    for spec in [
        GeneratorSpec::BarabasiAlbert { n: 300, m: 4 },
        GeneratorSpec::WattsStrogatz { n: 300, k: 4, p: 0.5 },
        GeneratorSpec::ErdosRenyi { n: 300, p: 4.0 / 299.0 },
        GeneratorSpec::MultiPopulation {
            modules: 5,
            module_size: 60,
            k: 4,
            p: 0.5,
            inter_edges: 2,
        },
    ] {
        let g = spec.generate(seed).expect("valid spec");
        println!(
            "{:<8} |V|={:<4} |E|={:<5} avg_distance={:.4} clustering={:.4} max_degree={}",
            spec.kind(),
            g.node_count(),
            g.edge_count(),
            g.average_distance().expect("connected"),
            g.clustering_coefficient(),
            g.degree_sequence()[0],
        );
    }
}
