//! Error type shared by every module in the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of network construction, measure evaluation,
/// windowing, fitting, and ingestion.
#[derive(Debug, Error)]
pub enum Error {
    /// An edge whose source equals its target. `line` is set when the
    /// record came from a file, `record` when it came from an in-memory
    /// event list.
    #[error("self-loop edge at node '{node}' on layer '{layer}'{}", location(.line, .record))]
    LoopEdge {
        node: String,
        layer: String,
        line: Option<u64>,
        record: Option<usize>,
    },

    /// Two events map to the same (source, target, layer) triple under
    /// [`DedupPolicy::Error`](crate::network::DedupPolicy::Error).
    #[error("duplicate edge '{from}' -> '{to}' on layer '{layer}'")]
    DuplicateEdge {
        from: String,
        to: String,
        layer: String,
    },

    /// Negative, NaN, or infinite edge weight.
    #[error("invalid weight {weight} on edge '{from}' -> '{to}' (layer '{layer}'): weights must be finite and non-negative")]
    InvalidWeight {
        from: String,
        to: String,
        layer: String,
        weight: f64,
    },

    #[error("node '{0}' not found in the network")]
    NodeNotFound(String),

    #[error("layer '{0}' not found in the network")]
    LayerNotFound(String),

    /// Out-normalization hit a node whose outgoing weights on a layer
    /// all equal zero; the rescale target of 1 is unreachable.
    #[error("cannot normalize outgoing weights of node '{node}' on layer '{layer}': outgoing edges exist but their weights sum to 0")]
    ZeroOutSum { node: String, layer: String },

    /// Degree-style centralities need at least two members.
    #[error("degenerate network: {nodes} node(s), need at least 2 for degree centralities")]
    DegenerateNetwork { nodes: usize },

    /// Index-width ceilings of the snapshot layout.
    #[error("network too large: {count} {what} exceeds the supported maximum of {max}")]
    TooLarge {
        what: &'static str,
        count: usize,
        max: usize,
    },

    /// A single-layer measure received a multi-layer network.
    #[error(
        "measure is defined on single-layer networks, got {layers} layers; take a layer view first"
    )]
    NotSingleLayer { layers: usize },

    /// Alpha must be at least 1 for every multi-layered neighbourhood.
    #[error("alpha must be >= 1, got {0}")]
    AlphaOutOfRange(u32),

    /// Time-window partitioning requires timestamps on every event.
    #[error("{count} event(s) carry no timestamp and cannot be windowed; first offenders (by record index): {}", format_indices(.indices))]
    MissingTimestamps { count: usize, indices: Vec<usize> },

    /// Bad window-partition parameters.
    #[error("invalid window specification: {0}")]
    InvalidWindows(String),

    /// Malformed input file content.
    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    /// A histogram value exceeds the last bin edge.
    #[error("value {value} exceeds the last histogram edge {max_edge}")]
    ValueAboveRange { value: f64, max_edge: f64 },

    /// Histogram edges not strictly increasing or empty.
    #[error("invalid histogram edges: {0}")]
    InvalidHistogramEdges(String),

    /// A value list contains NaN or infinity where a finite real is required.
    #[error("non-finite value {value} in input{}", at_index(.index))]
    NonFiniteValue { value: f64, index: Option<usize> },

    /// All fit inputs identical: the decay constant is undefined.
    #[error("degenerate fit: all {0} values are identical, decay constant is undefined")]
    DegenerateFit(usize),

    /// Too few usable points to fit.
    #[error("insufficient data: need at least {needed} positive values, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// A measure that needs alpha was asked for without one.
    #[error("measure '{0}' requires an alpha parameter")]
    AlphaRequired(String),

    /// A measure that ignores alpha was given one.
    #[error("measure '{0}' does not take an alpha parameter")]
    AlphaNotApplicable(String),

    #[error("unknown measure '{0}'")]
    UnknownMetric(String),

    #[error("unknown neighbourhood variant '{0}' (expected in|out|inoutany|inout|any)")]
    UnknownVariant(String),

    #[error("unknown dedup policy '{0}' (expected sum|max|last|error)")]
    UnknownDedupPolicy(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn location(line: &Option<u64>, record: &Option<usize>) -> String {
    match (line, record) {
        (Some(l), _) => format!(" (line {l})"),
        (None, Some(r)) => format!(" (record {r})"),
        (None, None) => String::new(),
    }
}

fn at_index(index: &Option<usize>) -> String {
    match index {
        Some(i) => format!(" (index {i})"),
        None => String::new(),
    }
}

fn format_indices(indices: &[usize]) -> String {
    let shown: Vec<String> = indices.iter().take(10).map(|i| i.to_string()).collect();
    let mut s = shown.join(", ");
    if indices.len() > 10 {
        s.push_str(", ...");
    }
    s
}
