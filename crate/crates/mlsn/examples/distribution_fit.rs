//! Distribution analytics on a larger synthetic network: an alpha
//! sweep of activity counts, a histogram with cumulative percentages,
//! and an exponential-decay fit of the sorted measure values.
//!
//! ```bash
//! cargo run --example distribution_fit
//! ```

use mlsn::{
    alpha_sweep, build_network, fit_exp_decay, histogram, measure_report, samples, DedupPolicy,
    Metric,
};

fn main() -> mlsn::Result<()> {
    let events = samples::synthetic_events(500, 6, 12_000, 450, 0xFEED);
    let net = build_network(events, DedupPolicy::Sum)?;
    println!(
        "synthetic network: {} nodes, {} layers, {} edges",
        net.node_count(),
        net.layer_count(),
        net.edge_count()
    );

    // How many nodes keep a neighbourhood, positive CDC, and positive
    // CLCC as the layer threshold rises.
    println!("\nalpha sweep:");
    println!(
        "{:>5} {:>10} {:>11} {:>12}",
        "alpha", "mn_nonzero", "cdc_nonzero", "clcc_nonzero"
    );
    for row in alpha_sweep(&net, 6) {
        println!(
            "{:>5} {:>10} {:>11} {:>12}",
            row.alpha, row.mn_nonzero, row.cdc_nonzero, row.clcc_nonzero
        );
    }

    // Distribution of a normalized degree measure.
    let normalized = net.normalize_out_weights()?;
    let report = measure_report(&normalized, Metric::Mdc2, None)?;
    let values: Vec<f64> = report.rows.iter().map(|r| r.value).collect();

    let edges: Vec<f64> = (1..=15).map(|i| i as f64 * 0.0001).chain([1.0]).collect();
    let hist = histogram(&values, &edges)?;
    println!("\nmdc2 histogram (upper edge, count, cumulative %):");
    for i in 0..hist.bin_upper_edges.len() {
        println!(
            "  {:>8.4} {:>5} {:>8.2}%",
            hist.bin_upper_edges[i], hist.counts[i], hist.cumulative_percent[i]
        );
    }

    // Sorted descending, the values tend to follow an exponential
    // decay over rank; the fit reports how well.
    let fit = fit_exp_decay(&values)?;
    println!("\nexponential fit over descending rank:");
    println!("  amplitude        {:.6}", fit.amplitude);
    println!("  decay constant   {:.2}", fit.decay_constant);
    println!("  correlation rate {:.4}", fit.correlation_rate);
    println!(
        "  points fitted    {} ({} non-positive excluded)",
        fit.n_points, fit.excluded_nonpositive
    );

    Ok(())
}
