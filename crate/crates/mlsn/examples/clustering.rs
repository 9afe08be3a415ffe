//! Cross-layer clustering: how densely a node's multi-layered
//! neighbours interact with each other, across every layer at once.
//!
//! ```bash
//! cargo run --example clustering
//! ```

use mlsn::{samples, NeighbourhoodVariant};

fn main() -> mlsn::Result<()> {
    let net = samples::demo_network();

    println!("cross-layer clustering on the demo network (unit weights):");
    println!("{:<6} {:>3} {:>6} {:>14}", "node", "a", "|MN|", "clcc");
    for node in net.nodes() {
        for alpha in 1..=3 {
            let r = net.clcc(node.as_str(), alpha)?;
            println!(
                "{:<6} {alpha:>3} {:>6} {:>14.6}",
                node.as_str(),
                r.neighbourhood_size,
                r.value
            );
        }
    }

    // z's neighbours interact heavily on l1 but barely elsewhere, so
    // the value drops as alpha narrows the neighbourhood.
    let z1 = net.clcc("z", 1)?;
    let z2 = net.clcc("z", 2)?;
    println!(
        "\nclcc(z, 1) = {:.6} over {}",
        z1.value,
        net.mn_any("z", 1)?
    );
    println!("clcc(z, 2) = {:.6} over {}", z2.value, net.mn_any("z", 2)?);

    // t's two neighbours never interact with each other at all.
    println!(
        "clcc(t, 1) = {} over {}",
        net.clcc("t", 1)?.value,
        net.mn_any("t", 1)?
    );

    // The widest and narrowest thresholds have dedicated shorthands.
    println!("\nextended (alpha=1) vs reduced (alpha=|L|) for x:");
    println!("  extended: {:.6}", net.clcc_extended("x")?.value);
    println!("  reduced:  {:.6}", net.clcc_reduced("x")?.value);

    // Any variant can drive the member set; restrictive ones can only
    // lower the value.
    let strict = net.clcc_with_variant("x", 2, NeighbourhoodVariant::InOut)?;
    println!("  clcc over reciprocated-only members: {:.6}", strict.value);

    // Under out-normalized weights the coefficient lives in [0, 1].
    let normalized = net.normalize_out_weights()?;
    println!(
        "\nnormalized clcc(z, 1) = {:.6}",
        normalized.clcc("z", 1)?.value
    );

    Ok(())
}
