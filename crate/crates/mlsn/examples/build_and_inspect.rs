//! Build a multi-layered network from an edge-list CSV, inspect it, and
//! compare raw against out-normalized weights.
//!
//! ```bash
//! cargo run --example build_and_inspect
//! ```

use std::path::Path;

use mlsn::io::parse_edge_file;
use mlsn::{build_network, DedupPolicy};

fn main() -> mlsn::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/interactions.csv");
    let events = parse_edge_file(&data, true)?;
    println!(
        "loaded {} interaction events from {}",
        events.len(),
        data.display()
    );

    // Repeated (source, target, layer) interactions aggregate by sum:
    // the more often two people interact, the heavier the edge.
    let net = build_network(events, DedupPolicy::Sum)?;
    println!(
        "network: {} nodes, {} layers, {} directed edges",
        net.node_count(),
        net.layer_count(),
        net.edge_count()
    );
    println!(
        "nodes:  {:?}",
        net.nodes().iter().map(|n| n.as_str()).collect::<Vec<_>>()
    );
    println!(
        "layers: {:?}",
        net.layers().iter().map(|l| l.as_str()).collect::<Vec<_>>()
    );

    for layer in net.layers() {
        let view = net.layer_view(layer.as_str())?;
        println!(
            "  layer {layer}: {} edges over the same {} nodes",
            view.edge_count(),
            view.node_count()
        );
    }

    // Out-normalization rescales each node's outgoing weights per layer
    // to sum to 1; the snapshot itself is immutable.
    let normalized = net.normalize_out_weights()?;
    println!("\nweights of x's outgoing edges on l1, raw vs normalized:");
    for (s, t, l, w) in net
        .edges()
        .filter(|(s, _, l, _)| s.as_str() == "x" && l.as_str() == "l1")
    {
        let nw = normalized
            .edge_weight(s.as_str(), t.as_str(), l.as_str())
            .unwrap();
        println!("  x -> {t}: {w} -> {nw}");
    }

    Ok(())
}
