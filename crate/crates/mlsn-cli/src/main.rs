//! Thin command-line front end over the `mlsn` library.
//!
//! Exit codes: 0 on success, 1 on validation or data errors, 2 on usage
//! errors. The `MLSN_THREADS` environment variable caps parallel
//! workers; 0 or unset means all available cores.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mlsn::io::{parse_edge_file, parse_timestamp, read_roster_file, read_values_file};
use mlsn::report::{
    render_fit_json, render_histogram_csv, render_histogram_json, render_node_set_json,
    render_sweep_csv, render_window_combinations_csv,
};
use mlsn::{
    alpha_sweep, build_network, combination_counts, default_bin_edges, fit_exp_decay, histogram,
    measure_report, partition_windows, DedupPolicy, Metric, MultiLayerNetwork,
    NeighbourhoodVariant,
};

#[derive(Parser)]
#[command(
    name = "mlsn",
    version,
    about = "Multi-layered social network analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct EdgesInput {
    /// Edge-list CSV with header source,target,layer,weight,timestamp
    #[arg(long)]
    edges: PathBuf,
    /// How to resolve repeated (source,target,layer) triples
    #[arg(long, default_value = "sum", value_parser = ["sum", "max", "last", "error"])]
    dedup: String,
}

#[derive(Subcommand)]
enum Command {
    /// Multi-layered neighbourhood of one node
    Neighbourhood {
        #[command(flatten)]
        input: EdgesInput,
        #[arg(long)]
        node: String,
        /// in | out | inoutany | inout | any
        #[arg(long, default_value = "any")]
        variant: String,
        /// Minimum number of layers a connection must span
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-node values of one measure
    Measure {
        #[command(flatten)]
        input: EdgesInput,
        /// dc|idc|odc|clcc|cdc|cdc-in|cdc-out|mdc1|mdc1-in|mdc1-out|mdc2|...|mdc3-out
        #[arg(long)]
        metric: String,
        #[arg(long)]
        alpha: Option<u32>,
        /// Layer to view for the single-layer measures dc/idc/odc
        #[arg(long)]
        layer: Option<String>,
        /// Rescale each node's outgoing weights per layer to sum to 1 first
        #[arg(long)]
        normalize: bool,
        #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-alpha counts of nodes with non-empty neighbourhood, CDC > 0,
    /// and CLCC > 0
    Sweep {
        #[command(flatten)]
        input: EdgesInput,
        #[arg(long)]
        max_alpha: u32,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Window-combination activity counts over fixed time windows
    Windows {
        #[command(flatten)]
        input: EdgesInput,
        /// Partition start: epoch seconds or ISO-8601 UTC
        #[arg(long)]
        start: String,
        /// Window length, e.g. 90d, 12h, 30m, or plain seconds
        #[arg(long)]
        length: String,
        /// Number of consecutive windows
        #[arg(long)]
        count: usize,
        /// Emit one count column per alpha in 1..=alpha
        #[arg(long)]
        alpha: u32,
        /// Neighbourhood variant defining activity
        #[arg(long, default_value = "any")]
        variant: String,
        /// Extra roster of node ids (one per line) counted in the universe
        #[arg(long)]
        roster: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Histogram of a value file with cumulative percentages
    Hist {
        /// One decimal value per line
        #[arg(long)]
        values: PathBuf,
        /// Bin upper edges, strictly increasing
        #[arg(long = "edges-list", num_args = 1.., value_delimiter = ' ')]
        edges_list: Option<Vec<f64>>,
        #[arg(long, default_value = "json", value_parser = ["csv", "json"])]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exponential-decay fit of a value file
    Fit {
        /// One decimal value per line
        #[arg(long)]
        values: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Run(mlsn::Error),
    Io(std::io::Error),
}

impl From<mlsn::Error> for CliError {
    fn from(e: mlsn::Error) -> Self {
        Self::Run(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() {
    if let Ok(raw) = std::env::var("MLSN_THREADS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Neighbourhood {
            input,
            node,
            variant,
            alpha,
            out,
        } => {
            let variant: NeighbourhoodVariant = variant
                .parse()
                .map_err(|e: mlsn::Error| CliError::Usage(e.to_string()))?;
            if alpha < 1 {
                return Err(CliError::Usage("--alpha must be at least 1".to_string()));
            }
            let net = load_network(&input)?;
            let set = net.multi_neighbourhood(&node, alpha, variant)?;
            emit(out, render_node_set_json(&node, variant, alpha, &set))
        }
        Command::Measure {
            input,
            metric,
            alpha,
            layer,
            normalize,
            format,
            out,
        } => {
            let metric: Metric = metric
                .parse()
                .map_err(|e: mlsn::Error| CliError::Usage(e.to_string()))?;
            if metric.requires_alpha() && alpha.is_none() {
                return Err(CliError::Usage(format!(
                    "--metric {metric} requires --alpha"
                )));
            }
            if !metric.requires_alpha() && alpha.is_some() {
                return Err(CliError::Usage(format!(
                    "--metric {metric} does not take --alpha"
                )));
            }
            if !metric.single_layer() && layer.is_some() {
                return Err(CliError::Usage(format!(
                    "--metric {metric} does not take --layer"
                )));
            }
            let mut net = load_network(&input)?;
            if normalize {
                net = net.normalize_out_weights()?;
            }
            if let Some(layer) = &layer {
                net = net.layer_view(layer)?;
            } else if metric.single_layer() && net.layer_count() != 1 {
                return Err(CliError::Usage(format!(
                    "--metric {metric} needs --layer on a {}-layer network",
                    net.layer_count()
                )));
            }
            let report = measure_report(&net, metric, alpha)?;
            let rendered = match format.as_str() {
                "json" => report.to_json(),
                _ => report.to_csv(),
            };
            emit(out, rendered)
        }
        Command::Sweep {
            input,
            max_alpha,
            normalize,
            out,
        } => {
            if max_alpha < 1 {
                return Err(CliError::Usage(
                    "--max-alpha must be at least 1".to_string(),
                ));
            }
            let mut net = load_network(&input)?;
            if normalize {
                net = net.normalize_out_weights()?;
            }
            let rows = alpha_sweep(&net, max_alpha);
            emit(out, render_sweep_csv(&rows))
        }
        Command::Windows {
            input,
            start,
            length,
            count,
            alpha,
            variant,
            roster,
            out,
        } => {
            let variant: NeighbourhoodVariant = variant
                .parse()
                .map_err(|e: mlsn::Error| CliError::Usage(e.to_string()))?;
            if alpha < 1 {
                return Err(CliError::Usage("--alpha must be at least 1".to_string()));
            }
            let start = parse_timestamp(&start)
                .map_err(|_| CliError::Usage(format!("unparseable --start '{start}'")))?;
            let length = parse_duration(&length)
                .ok_or_else(|| CliError::Usage(format!("unparseable --length '{length}'")))?;
            let events = parse_edge_file(&input.edges, true)?;
            let roster = match roster {
                Some(path) => read_roster_file(path)?,
                None => Vec::new(),
            };
            let partition = partition_windows(&events, start, length, count)?;
            let mut per_alpha = Vec::new();
            for a in 1..=alpha {
                let profile = partition.activity_profile_with_roster(a, variant, &roster)?;
                per_alpha.push(combination_counts(&profile));
            }
            let refs: Vec<&_> = per_alpha.iter().collect();
            emit(out, render_window_combinations_csv(&refs))
        }
        Command::Hist {
            values,
            edges_list,
            format,
            out,
        } => {
            let values = read_values_file(values)?;
            let edges = edges_list.unwrap_or_else(default_bin_edges);
            let h = histogram(&values, &edges)?;
            let rendered = match format.as_str() {
                "csv" => render_histogram_csv(&h),
                _ => render_histogram_json(&h),
            };
            emit(out, rendered)
        }
        Command::Fit { values, out } => {
            let values = read_values_file(values)?;
            let fit = fit_exp_decay(&values)?;
            emit(out, render_fit_json(&fit))
        }
    }
}

fn load_network(input: &EdgesInput) -> Result<MultiLayerNetwork, CliError> {
    let policy: DedupPolicy = input
        .dedup
        .parse()
        .map_err(|e: mlsn::Error| CliError::Usage(e.to_string()))?;
    let events = parse_edge_file(&input.edges, true)?;
    Ok(build_network(events, policy)?)
}

/// Duration in seconds from `90d`, `12h`, `30m`, `45s`, or plain seconds.
fn parse_duration(raw: &str) -> Option<i64> {
    let raw = raw.trim();
    let (digits, multiplier) = match raw.chars().last()? {
        'd' | 'D' => (&raw[..raw.len() - 1], 86_400),
        'h' | 'H' => (&raw[..raw.len() - 1], 3_600),
        'm' | 'M' => (&raw[..raw.len() - 1], 60),
        's' | 'S' => (&raw[..raw.len() - 1], 1),
        _ => (raw, 1),
    };
    let n: i64 = digits.trim().parse().ok()?;
    if n <= 0 {
        return None;
    }
    n.checked_mul(multiplier)
}

fn emit(out: Option<PathBuf>, rendered: String) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}
