//! # mlsn: multi-layered social network analysis
//!
//! A library for analysing networks in which the same people are linked
//! by many kinds of relations at once. Each relation type is a *layer*:
//! a directed, weighted graph slice over a shared node set, with at most
//! one edge per `(source, target, layer)` triple and no loops.
//!
//! What it computes:
//!
//! * **Neighbourhoods**: the per-layer neighbourhood and five
//!   multi-layered variants (`in`, `out`, `inoutany`, `inout`, `any`)
//!   thresholded by the minimum number of layers `alpha`.
//! * **Clustering**: the cross-layer clustering coefficient, i.e. how
//!   densely a node's multi-layered neighbours interact with each other,
//!   weighted and averaged over layers.
//! * **Centrality**: classic single-layer degree centralities plus the
//!   cross-layer (CDC) and three multi-layered (MDC) weighted degree
//!   families.
//! * **Dynamics**: fixed non-overlapping time windows over timestamped
//!   interactions, per-window activity profiles, and window-combination
//!   counts.
//! * **Distributions**: alpha-sweep activity counts, histograms with
//!   cumulative percentages, and exponential-decay fits of sorted
//!   measure values.
//!
//! Networks are immutable snapshots; every measure is a pure function of
//! the snapshot and whole-network sweeps run in parallel.
//!
//! ## Start with the examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example build_and_inspect   # events -> network, views, normalization
//! cargo run --example neighbourhoods      # the five variants and alpha thresholds
//! cargo run --example clustering          # cross-layer clustering coefficients
//! cargo run --example centrality          # DC, CDC, and the three MDC versions
//! cargo run --example time_windows        # windowing, activity, combinations
//! cargo run --example distribution_fit    # sweeps, histograms, exponential fit
//! ```
//!
//! ## Quick taste
//!
//! ```
//! use mlsn::{build_network, DedupPolicy, EdgeEvent};
//!
//! let net = build_network(
//!     vec![
//!         EdgeEvent::new("ana", "bo", "email"),
//!         EdgeEvent::new("bo", "ana", "email"),
//!         EdgeEvent::new("ana", "bo", "chat").with_weight(3.0),
//!         EdgeEvent::new("bo", "cat", "chat"),
//!         EdgeEvent::new("cat", "ana", "email"),
//!     ],
//!     DedupPolicy::Sum,
//! )?;
//!
//! // bo reaches ana on two layers, cat on one; ana and cat close a
//! // triangle around bo, so bo's neighbourhood clusters.
//! assert_eq!(net.mn_any("bo", 2)?.to_string(), "{ana}");
//! assert!(net.clcc("bo", 1)?.value > 0.0);
//! # Ok::<(), mlsn::Error>(())
//! ```

pub mod centrality;
pub mod clustering;
pub mod dynamics;
mod error;
pub mod io;
pub mod neighbourhood;
pub mod network;
pub mod report;
pub mod samples;
pub mod stats;

pub use centrality::{Direction, MdcVersion};
pub use clustering::ClccResult;
pub use dynamics::{
    combination_counts, combination_label, partition_windows, ActivityProfile, CombinationCounts,
    WindowPartition,
};
pub use error::{Error, Result};
pub use neighbourhood::{NeighbourhoodVariant, NodeSet};
pub use network::{
    build_network, DedupPolicy, EdgeEvent, LayerId, MultiLayerNetwork, NetworkBuilder, NodeId,
};
pub use report::{measure_report, MeasureReport, MeasureRow, MeasureSummary, Metric};
pub use stats::{
    alpha_sweep, default_bin_edges, fit_exp_decay, histogram, AlphaSweepRow, ExpFitResult,
    Histogram,
};
