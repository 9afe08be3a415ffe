//! Distribution analytics: alpha-sweep activity counts, histograms with
//! cumulative percentages, and exponential-decay fitting of sorted
//! measure values.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::MultiLayerNetwork;

/// Per-alpha counts of nodes with a non-empty neighbourhood, non-zero
/// cross-layer degree centrality, and non-zero cross-layer clustering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaSweepRow {
    pub alpha: u32,
    pub mn_nonzero: usize,
    pub cdc_nonzero: usize,
    pub clcc_nonzero: usize,
}

/// Counts, for each alpha in `1..=max_alpha`, how many nodes have
/// `|MN(x, alpha)| > 0`, `cdc(x, alpha) > 0`, and `clcc(x, alpha) > 0`.
///
/// The predicates avoid the measures' denominators entirely, so the
/// sweep is well-defined on degenerate and empty networks (all counts 0)
/// and runs in parallel across nodes.
pub fn alpha_sweep(net: &MultiLayerNetwork, max_alpha: u32) -> Vec<AlphaSweepRow> {
    let a_max = max_alpha as usize;
    if a_max == 0 {
        return Vec::new();
    }
    let m = net.node_count();
    let totals = (0..m as u32)
        .into_par_iter()
        .fold(
            || vec![[0usize; 3]; a_max],
            |mut acc, x| {
                node_sweep_flags(net, x, a_max, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![[0usize; 3]; a_max],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    ra[0] += rb[0];
                    ra[1] += rb[1];
                    ra[2] += rb[2];
                }
                a
            },
        );
    totals
        .into_iter()
        .enumerate()
        .map(|(i, [mn, cdc, clcc])| AlphaSweepRow {
            alpha: (i + 1) as u32,
            mn_nonzero: mn,
            cdc_nonzero: cdc,
            clcc_nonzero: clcc,
        })
        .collect()
}

/// Adds node `x`'s per-alpha flags into `acc[alpha - 1]`.
fn node_sweep_flags(net: &MultiLayerNetwork, x: u32, a_max: usize, acc: &mut [[usize; 3]]) {
    let adj = net.adjacency_of(x);
    // |MN(x, a)| > 0 iff some neighbour is adjacent on >= a layers.
    let mn_max = adj.iter().map(|e| e.any_layers as usize).max().unwrap_or(0);
    // cdc(x, a) > 0 iff some such neighbour carries positive weight
    // towards x: the numerator ranges exactly over x's edges to members.
    let cdc_max = adj
        .iter()
        .filter(|e| e.weight_total > 0.0)
        .map(|e| e.any_layers as usize)
        .max()
        .unwrap_or(0);
    for a in 1..=mn_max.min(a_max) {
        acc[a - 1][0] += 1;
    }
    for a in 1..=cdc_max.min(a_max) {
        acc[a - 1][1] += 1;
    }

    // clcc(x, a) > 0 iff two members of MN(x, a) share a positive-weight
    // edge. Membership only grows as alpha decreases, so walk alpha
    // downwards, admitting new members and scanning just their incident
    // edges; once an internal edge appears it persists for all smaller
    // alpha.
    let start = mn_max.min(a_max);
    if start == 0 {
        return;
    }
    let mut in_set = vec![false; net.node_count()];
    let mut order: Vec<(u16, u32)> = adj.iter().map(|e| (e.any_layers, e.neighbour)).collect();
    order.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
    let mut next = 0;
    for alpha in (1..=start).rev() {
        let first_new = next;
        while next < order.len() && order[next].0 as usize >= alpha {
            in_set[order[next].1 as usize] = true;
            next += 1;
        }
        // An internal edge between two long-standing members would have
        // been seen when the later of them joined, so scanning the fresh
        // members' incident edges is exhaustive.
        let new_members = &order[first_new..next];
        let found = new_members.iter().any(|&(_, y)| {
            net.out_edges(y)
                .iter()
                .any(|e| e.weight > 0.0 && in_set[e.target as usize])
                || net
                    .in_edges(y)
                    .any(|e| e.weight > 0.0 && in_set[e.source as usize])
        });
        if found {
            for a in 1..=alpha {
                acc[a - 1][2] += 1;
            }
            return;
        }
    }
}

/// Histogram with right-closed bins and cumulative percentages.
///
/// The first bin counts values `v <= edge_0`; bin `i > 0` counts
/// `edge_{i-1} < v <= edge_i`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Histogram {
    pub bin_upper_edges: Vec<f64>,
    pub counts: Vec<usize>,
    pub cumulative_percent: Vec<f64>,
}

/// Bins `values` against strictly increasing upper `edges`. Values above
/// the last edge are an error naming the value.
pub fn histogram(values: &[f64], edges: &[f64]) -> Result<Histogram> {
    if edges.is_empty() {
        return Err(Error::InvalidHistogramEdges(
            "no edges supplied".to_string(),
        ));
    }
    if edges.iter().any(|e| !e.is_finite()) {
        return Err(Error::InvalidHistogramEdges(
            "edges must be finite".to_string(),
        ));
    }
    if edges.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidHistogramEdges(
            "edges must be strictly increasing".to_string(),
        ));
    }
    let last = *edges.last().unwrap();
    let mut counts = vec![0usize; edges.len()];
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::NonFiniteValue {
                value: v,
                index: Some(i),
            });
        }
        if v > last {
            return Err(Error::ValueAboveRange {
                value: v,
                max_edge: last,
            });
        }
        // first edge at or above v; bins are right-closed
        let bin = edges.partition_point(|&e| e < v);
        counts[bin] += 1;
    }
    let n = values.len();
    let mut cumulative_percent = Vec::with_capacity(counts.len());
    let mut running = 0usize;
    for &c in &counts {
        running += c;
        let pct = if n == 0 {
            0.0
        } else {
            100.0 * running as f64 / n as f64
        };
        cumulative_percent.push(pct);
    }
    Ok(Histogram {
        bin_upper_edges: edges.to_vec(),
        counts,
        cumulative_percent,
    })
}

/// Default bin edges suited to the small values the normalized degree
/// measures take: a zero bin, fine steps of 2e-5 up to 3e-4, then a
/// catch-all up to 1.
pub fn default_bin_edges() -> Vec<f64> {
    vec![
        0.0, 0.00002, 0.00004, 0.00006, 0.00008, 0.00010, 0.00012, 0.00014, 0.00016, 0.00018,
        0.00020, 0.00022, 0.00024, 0.00026, 0.00028, 0.00030, 1.0,
    ]
}

/// Parameters of a fitted exponential decay
/// `value = amplitude * exp(rank / decay_constant)` over the
/// descending-rank axis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpFitResult {
    pub amplitude: f64,
    pub decay_constant: f64,
    /// Pearson correlation between the observed (sorted) values and the
    /// fitted curve.
    pub correlation_rate: f64,
    pub n_points: usize,
    /// Zero or negative inputs dropped before fitting (log undefined).
    pub excluded_nonpositive: usize,
}

/// Fits an exponential decay to `values` by sorting them descending,
/// taking the rank index as abscissa, and solving the log-linear least
/// squares problem `ln(v) = ln(amplitude) + rank / decay_constant`.
///
/// Constant input is an error (the decay constant is undefined), as are
/// fewer than two positive values.
pub fn fit_exp_decay(values: &[f64]) -> Result<ExpFitResult> {
    if let Some((i, &v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFiniteValue {
            value: v,
            index: Some(i),
        });
    }
    let mut kept: Vec<f64> = values.iter().copied().filter(|&v| v > 0.0).collect();
    let excluded = values.len() - kept.len();
    if kept.len() < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: kept.len(),
        });
    }
    kept.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
    if kept.first() == kept.last() {
        return Err(Error::DegenerateFit(kept.len()));
    }

    let n = kept.len() as f64;
    let mean_x = (kept.len() as f64 - 1.0) / 2.0;
    let mean_ln: f64 = kept.iter().map(|v| v.ln()).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (i, v) in kept.iter().enumerate() {
        let dx = i as f64 - mean_x;
        sxx += dx * dx;
        sxy += dx * (v.ln() - mean_ln);
    }
    let slope = sxy / sxx;
    let intercept = mean_ln - slope * mean_x;

    let fitted: Vec<f64> = (0..kept.len())
        .map(|i| (intercept + slope * i as f64).exp())
        .collect();
    let correlation_rate = pearson(&kept, &fitted);

    Ok(ExpFitResult {
        amplitude: intercept.exp(),
        decay_constant: 1.0 / slope,
        correlation_rate,
        n_points: kept.len(),
        excluded_nonpositive: excluded,
    })
}

fn pearson(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    if va == 0.0 || vb == 0.0 {
        return 0.0;
    }
    cov / (va.sqrt() * vb.sqrt())
}
