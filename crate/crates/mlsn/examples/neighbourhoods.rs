//! The five multi-layered neighbourhood variants and how the alpha
//! threshold narrows them.
//!
//! ```bash
//! cargo run --example neighbourhoods
//! ```

use mlsn::{samples, NeighbourhoodVariant};

fn main() -> mlsn::Result<()> {
    let net = samples::demo_network();

    println!("per-layer neighbourhoods of x:");
    for layer in net.layers() {
        println!(
            "  N(x, {layer}) = {}",
            net.neighbourhood("x", layer.as_str())?
        );
    }

    // alpha is the minimum number of layers a connection must span.
    // `in` and `out` count directed edges, `inoutany` needs both
    // directions on possibly different layers, `inout` needs
    // reciprocation on common layers, and `any` accepts either
    // direction anywhere.
    println!("\nmulti-layered neighbourhoods of x by variant and alpha:");
    println!("{:<10} {:>3}  members", "variant", "a");
    for variant in NeighbourhoodVariant::ALL {
        for alpha in 1..=3 {
            let members = net.multi_neighbourhood("x", alpha, variant)?;
            println!("{:<10} {alpha:>3}  {members}", variant.name());
        }
    }

    // Raising alpha can only shrink a neighbourhood, down to empty once
    // it exceeds the layer count.
    println!(
        "\nshrinkage for t: {} -> {} -> {}",
        net.mn_any("t", 1)?,
        net.mn_any("t", 2)?,
        net.mn_any("t", 3)?
    );
    println!(
        "alpha above |L| is legal: MN(x, 4) = {}",
        net.mn_any("x", 4)?
    );

    Ok(())
}
