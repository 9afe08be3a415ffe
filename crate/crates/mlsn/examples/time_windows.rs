//! Slice a timestamped interaction log into fixed 90-day windows and
//! study who stays active across them.
//!
//! ```bash
//! cargo run --example time_windows
//! ```

use mlsn::{combination_counts, partition_windows, samples, NeighbourhoodVariant};

const DAY: i64 = 86_400;

fn main() -> mlsn::Result<()> {
    let events = samples::demo_events();
    let part = partition_windows(&events, 0, 90 * DAY, 5)?;

    println!("five 90-day windows starting at epoch 0:");
    for (i, ((start, end), net)) in part.windows().iter().zip(part.networks()).enumerate() {
        println!(
            "  W{}: days {:>3}..{:>3}  {} events -> {} nodes, {} layers, {} edges",
            i + 1,
            start / DAY,
            end / DAY,
            part.event_counts()[i],
            net.node_count(),
            net.layer_count(),
            net.edge_count()
        );
    }
    println!("dropped (outside all windows): {}", part.dropped_events());

    // A node is active in a window when its multi-layered neighbourhood
    // there is non-empty.
    let profile = part.activity_profile(1, NeighbourhoodVariant::Any)?;
    println!("\nactivity masks at alpha 1 (W1 = rightmost bit):");
    for (node, mask) in profile.iter() {
        println!("  {node}: {mask:05b}");
    }

    // Each node lands in exactly one combination bucket.
    let counts = combination_counts(&profile);
    println!("\nwindow combinations at alpha 1:");
    println!("  never active: {}", counts.no_active());
    for (label, count) in counts.labels() {
        println!("  {label}: {count}");
    }

    // Raising alpha empties the demo's single-layer windows entirely.
    let strict = part.activity_profile(2, NeighbourhoodVariant::Any)?;
    let strict_counts = combination_counts(&strict);
    println!(
        "\nat alpha 2: {} of {} nodes never active",
        strict_counts.no_active(),
        strict_counts.total()
    );

    Ok(())
}
