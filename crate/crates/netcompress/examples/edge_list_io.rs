//! File round trip: write a generated network as an edge list, read it back
//! (labels are arbitrary tokens, mapped densely in first-appearance order),
//! and extract the largest connected component of a messier file.
//!
//! ```bash
//! cargo run --example edge_list_io
//! ```

use netcompress::generators::ws_network;
use netcompress::io::{
    largest_component_subgraph, parse_edge_list, read_edge_list, write_edge_list, DuplicatePolicy,
};

fn main() {
    let dir = std::env::temp_dir().join("netcompress_edge_list_io");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("ws.edges");

    let g = ws_network(50, 4, 0.5, 3).expect("valid spec");
    write_edge_list(&g, &path).expect("write");
    let loaded = read_edge_list(&path, DuplicatePolicy::Error).expect("read");
    println!(
        "round trip: wrote |V|={} |E|={}, read back |V|={} |E|={}",
        g.node_count(),
        g.edge_count(),
        loaded.graph.node_count(),
        loaded.graph.edge_count()
    );

    // Named labels, comments, duplicates, and a stray small component.
    let text = "\
# a hand-written network
alice bob
bob carol
carol alice
bob carol
dave erin
";
    let loaded = parse_edge_list(text, "inline", DuplicatePolicy::Collapse).expect("parse");
    println!(
        "messy file: {} nodes ({}), {} edges after collapsing duplicates",
        loaded.graph.node_count(),
        loaded.labels.join(", "),
        loaded.graph.edge_count()
    );
    let (core, original) = largest_component_subgraph(&loaded.graph);
    println!(
        "largest component: {} nodes ({})",
        core.node_count(),
        original
            .iter()
            .map(|&i| loaded.labels[i].as_str())
            .collect::<Vec<_>>()
            .join(", ")
    );
}
