//! Degree centralities: per-layer DC/IDC/ODC, cross-layer CDC, and the
//! three multi-layered MDC versions.
//!
//! ```bash
//! cargo run --example centrality
//! ```

use mlsn::{samples, Direction, MdcVersion, Metric};

fn main() -> mlsn::Result<()> {
    let net = samples::demo_network();

    // Classic degree centrality is a single-layer notion; take a view.
    let l1 = net.layer_view("l1")?;
    println!("layer-l1 degree centralities (fraction of possible neighbours):");
    println!("{:<6} {:>8} {:>8} {:>8}", "node", "dc", "idc", "odc");
    for node in l1.nodes() {
        let name = node.as_str();
        println!(
            "{name:<6} {:>8.4} {:>8.4} {:>8.4}",
            l1.degree_centrality(name, Direction::Both, false)?,
            l1.degree_centrality(name, Direction::In, false)?,
            l1.degree_centrality(name, Direction::Out, false)?,
        );
    }

    println!("\ncross-layer degree centrality of x as alpha narrows the neighbourhood:");
    for alpha in 1..=3 {
        println!(
            "  cdc(x, {alpha}) = {:.4}  (in {:.4} + out {:.4})",
            net.cdc("x", alpha, Direction::Both)?,
            net.cdc("x", alpha, Direction::In)?,
            net.cdc("x", alpha, Direction::Out)?,
        );
    }

    println!("\nmulti-layered degree centralities (per-layer sums, three denominators):");
    println!("{:<6} {:>8} {:>8} {:>8}", "node", "mdc1", "mdc2", "mdc3");
    for node in net.nodes() {
        let name = node.as_str();
        println!(
            "{name:<6} {:>8.4} {:>8.4} {:>8.4}",
            net.mdc(MdcVersion::V1, name, Direction::Both)?,
            net.mdc(MdcVersion::V2, name, Direction::Both)?,
            net.mdc(MdcVersion::V3, name, Direction::Both)?,
        );
    }

    // Whole-network reports evaluate one measure for every node in
    // parallel and render deterministically.
    let report = mlsn::measure_report(&net, Metric::Cdc, Some(2))?;
    println!("\ncdc report at alpha 2 as CSV:\n{}", report.to_csv());

    Ok(())
}
