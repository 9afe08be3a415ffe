//! Measure reports and deterministic serialization.
//!
//! Reports carry per-node values for one (measure, alpha) configuration
//! plus a small summary, and render to CSV (RFC-4180 quoting) or JSON
//! with stable key order. Output bytes are deterministic for a fixed
//! input: rows sort lexicographically by node, numbers print with up to
//! 12 significant digits, and no timestamps or environment data appear.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::centrality::{Direction, MdcVersion};
use crate::dynamics::{combination_label, CombinationCounts};
use crate::error::{Error, Result};
use crate::neighbourhood::{NeighbourhoodVariant, NodeSet};
use crate::network::{MultiLayerNetwork, NodeId};
use crate::stats::{AlphaSweepRow, ExpFitResult, Histogram};

/// Every measure the report layer can evaluate, under its CLI spelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Dc,
    Idc,
    Odc,
    Clcc,
    Cdc,
    CdcIn,
    CdcOut,
    Mdc1,
    Mdc1In,
    Mdc1Out,
    Mdc2,
    Mdc2In,
    Mdc2Out,
    Mdc3,
    Mdc3In,
    Mdc3Out,
}

impl Metric {
    pub const ALL: [Metric; 16] = [
        Self::Dc,
        Self::Idc,
        Self::Odc,
        Self::Clcc,
        Self::Cdc,
        Self::CdcIn,
        Self::CdcOut,
        Self::Mdc1,
        Self::Mdc1In,
        Self::Mdc1Out,
        Self::Mdc2,
        Self::Mdc2In,
        Self::Mdc2Out,
        Self::Mdc3,
        Self::Mdc3In,
        Self::Mdc3Out,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dc => "dc",
            Self::Idc => "idc",
            Self::Odc => "odc",
            Self::Clcc => "clcc",
            Self::Cdc => "cdc",
            Self::CdcIn => "cdc-in",
            Self::CdcOut => "cdc-out",
            Self::Mdc1 => "mdc1",
            Self::Mdc1In => "mdc1-in",
            Self::Mdc1Out => "mdc1-out",
            Self::Mdc2 => "mdc2",
            Self::Mdc2In => "mdc2-in",
            Self::Mdc2Out => "mdc2-out",
            Self::Mdc3 => "mdc3",
            Self::Mdc3In => "mdc3-in",
            Self::Mdc3Out => "mdc3-out",
        }
    }

    /// Whether the measure takes the alpha threshold.
    pub fn requires_alpha(self) -> bool {
        matches!(self, Self::Clcc | Self::Cdc | Self::CdcIn | Self::CdcOut)
    }

    /// Whether the measure is defined on single-layer networks only.
    pub fn single_layer(self) -> bool {
        matches!(self, Self::Dc | Self::Idc | Self::Odc)
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownMetric(s.to_string()))
    }
}

/// One `(node, value)` report row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureRow {
    pub node: NodeId,
    pub value: f64,
}

/// Min/max/mean and the number of exact zeros across the rows.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureSummary {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub zero_count: usize,
}

/// Per-node values of one measure, sorted lexicographically by node.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureReport {
    pub measure: String,
    pub alpha: Option<u32>,
    pub rows: Vec<MeasureRow>,
    pub summary: MeasureSummary,
}

/// Evaluates `metric` for every node of the network in parallel.
/// `alpha` is mandatory for the CLCC/CDC family and rejected elsewhere.
pub fn measure_report(
    net: &MultiLayerNetwork,
    metric: Metric,
    alpha: Option<u32>,
) -> Result<MeasureReport> {
    let alpha = match (metric.requires_alpha(), alpha) {
        (true, None) => return Err(Error::AlphaRequired(metric.name().to_string())),
        (false, Some(_)) => return Err(Error::AlphaNotApplicable(metric.name().to_string())),
        (true, Some(a)) if a < 1 => return Err(Error::AlphaOutOfRange(a)),
        (_, a) => a,
    };
    if metric.single_layer() && net.layer_count() != 1 {
        return Err(Error::NotSingleLayer {
            layers: net.layer_count(),
        });
    }
    if metric != Metric::Clcc && net.node_count() > 0 && net.node_count() < 2 {
        return Err(Error::DegenerateNetwork {
            nodes: net.node_count(),
        });
    }

    let a = alpha.unwrap_or(1);
    let values: Vec<f64> = (0..net.node_count() as u32)
        .into_par_iter()
        .map(|x| evaluate(net, metric, x, a))
        .collect();

    let rows: Vec<MeasureRow> = net
        .nodes()
        .iter()
        .zip(values)
        .map(|(node, value)| MeasureRow {
            node: node.clone(),
            value: round_significant(value),
        })
        .collect();
    let summary = summarize(&rows);
    Ok(MeasureReport {
        measure: metric.name().to_string(),
        alpha,
        rows,
        summary,
    })
}

fn evaluate(net: &MultiLayerNetwork, metric: Metric, x: u32, alpha: u32) -> f64 {
    use NeighbourhoodVariant::Any;
    let name = net.node_name(x).as_str().to_owned();
    match metric {
        Metric::Dc => net
            .degree_centrality(&name, Direction::Both, false)
            .unwrap_or(0.0),
        Metric::Idc => net
            .degree_centrality(&name, Direction::In, false)
            .unwrap_or(0.0),
        Metric::Odc => net
            .degree_centrality(&name, Direction::Out, false)
            .unwrap_or(0.0),
        Metric::Clcc => net.clcc_idx(x, alpha, Any).0,
        Metric::Cdc => net.cdc_idx(x, alpha, Direction::Both, Any),
        Metric::CdcIn => net.cdc_idx(x, alpha, Direction::In, Any),
        Metric::CdcOut => net.cdc_idx(x, alpha, Direction::Out, Any),
        Metric::Mdc1 => net.mdc_idx(MdcVersion::V1, x, Direction::Both),
        Metric::Mdc1In => net.mdc_idx(MdcVersion::V1, x, Direction::In),
        Metric::Mdc1Out => net.mdc_idx(MdcVersion::V1, x, Direction::Out),
        Metric::Mdc2 => net.mdc_idx(MdcVersion::V2, x, Direction::Both),
        Metric::Mdc2In => net.mdc_idx(MdcVersion::V2, x, Direction::In),
        Metric::Mdc2Out => net.mdc_idx(MdcVersion::V2, x, Direction::Out),
        Metric::Mdc3 => net.mdc_idx(MdcVersion::V3, x, Direction::Both),
        Metric::Mdc3In => net.mdc_idx(MdcVersion::V3, x, Direction::In),
        Metric::Mdc3Out => net.mdc_idx(MdcVersion::V3, x, Direction::Out),
    }
}

fn summarize(rows: &[MeasureRow]) -> MeasureSummary {
    if rows.is_empty() {
        return MeasureSummary {
            min: 0.0,
            max: 0.0,
            mean: 0.0,
            zero_count: 0,
        };
    }
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut zero_count = 0;
    for r in rows {
        min = min.min(r.value);
        max = max.max(r.value);
        sum += r.value;
        if r.value == 0.0 {
            zero_count += 1;
        }
    }
    MeasureSummary {
        min,
        max,
        mean: round_significant(sum / rows.len() as f64),
        zero_count,
    }
}

/// Rounds to 12 significant digits; report values pass through this so
/// CSV and JSON print identically and round-trip exactly.
pub fn round_significant(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap()
}

/// Formats a value with up to 12 significant digits in plain decimal
/// notation, no locale dependence.
pub fn format_value(v: f64) -> String {
    let r = round_significant(v);
    if r == 0.0 {
        return "0".to_string();
    }
    // Decimal expansion of the rounded value: enough fractional digits
    // to cover 12 significant ones, then trimmed.
    let magnitude = r.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{r:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

impl MeasureReport {
    /// CSV rendering: header `measure,alpha,node,value`, one row per
    /// node. The summary lives in the JSON form only.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["measure", "alpha", "node", "value"])
            .unwrap();
        let alpha = self.alpha.map(|a| a.to_string()).unwrap_or_default();
        for row in &self.rows {
            w.write_record([
                self.measure.as_str(),
                alpha.as_str(),
                row.node.as_str(),
                format_value(row.value).as_str(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    /// Parses the CSV form back into a report; the summary is
    /// recomputed from the parsed rows.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(text.as_bytes());
        let mut measure = String::new();
        let mut alpha = None;
        let mut rows = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let line = i as u64 + 2;
            let record = record.map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            if record.len() != 4 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected 4 fields, got {}", record.len()),
                });
            }
            measure = record[0].to_string();
            alpha = if record[1].is_empty() {
                None
            } else {
                Some(record[1].parse().map_err(|e| Error::Parse {
                    line,
                    message: format!("bad alpha: {e}"),
                })?)
            };
            let value: f64 = record[3].parse().map_err(|e| Error::Parse {
                line,
                message: format!("bad value: {e}"),
            })?;
            rows.push(MeasureRow {
                node: NodeId::from(&record[2]),
                value,
            });
        }
        let summary = summarize(&rows);
        Ok(Self {
            measure,
            alpha,
            rows,
            summary,
        })
    }

    /// JSON rendering with stable key order: measure, alpha, rows,
    /// summary.
    pub fn to_json(&self) -> String {
        pretty_json(self)
    }
}

/// Per-alpha count table: `alpha,mn_nonzero,cdc_nonzero,clcc_nonzero`.
pub fn render_sweep_csv(rows: &[AlphaSweepRow]) -> String {
    let mut out = String::from("alpha,mn_nonzero,cdc_nonzero,clcc_nonzero\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.alpha, r.mn_nonzero, r.cdc_nonzero, r.clcc_nonzero
        ));
    }
    out
}

/// Window-combination count table: one row per combination label plus a
/// leading `no_active` row, one column per alpha. Labels are ordered by
/// descending combination size, then lexicographically; a label appears
/// when any alpha observed it.
pub fn render_window_combinations_csv(per_alpha: &[&CombinationCounts]) -> String {
    assert!(!per_alpha.is_empty(), "need counts for at least one alpha");
    let window_count = per_alpha[0].window_count();

    let mut header = String::from("label");
    for (i, _) in per_alpha.iter().enumerate() {
        header.push_str(&format!(",alpha_{}", i + 1));
    }
    header.push('\n');

    let mut masks: Vec<u64> = per_alpha
        .iter()
        .flat_map(|c| c.by_mask().map(|(m, _)| m))
        .collect();
    masks.sort_unstable_by_key(|&m| {
        (
            std::cmp::Reverse(m.count_ones()),
            combination_label(m, window_count),
        )
    });
    masks.dedup();

    let mut out = header;
    out.push_str("no_active");
    for c in per_alpha {
        out.push_str(&format!(",{}", c.no_active()));
    }
    out.push('\n');
    for mask in masks {
        out.push_str(&combination_label(mask, window_count));
        for c in per_alpha {
            out.push_str(&format!(",{}", c.count_for_mask(mask)));
        }
        out.push('\n');
    }
    out
}

/// Histogram table: `range,frequency,cumulative_percent`.
pub fn render_histogram_csv(h: &Histogram) -> String {
    let mut out = String::from("range,frequency,cumulative_percent\n");
    for i in 0..h.bin_upper_edges.len() {
        out.push_str(&format!(
            "{},{},{}\n",
            format_value(h.bin_upper_edges[i]),
            h.counts[i],
            format_value(h.cumulative_percent[i]),
        ));
    }
    out
}

#[derive(Serialize)]
struct HistogramJson<'a> {
    bin_upper_edges: Vec<f64>,
    counts: &'a [usize],
    cumulative_percent: Vec<f64>,
}

/// Histogram as JSON with values rounded to 12 significant digits.
pub fn render_histogram_json(h: &Histogram) -> String {
    pretty_json(&HistogramJson {
        bin_upper_edges: h
            .bin_upper_edges
            .iter()
            .copied()
            .map(round_significant)
            .collect(),
        counts: &h.counts,
        cumulative_percent: h
            .cumulative_percent
            .iter()
            .copied()
            .map(round_significant)
            .collect(),
    })
}

#[derive(Serialize)]
struct FitJson {
    amplitude: f64,
    decay_constant: f64,
    correlation_rate: f64,
    n_points: usize,
    excluded_nonpositive: usize,
}

/// Fit result as JSON with values rounded to 12 significant digits.
pub fn render_fit_json(fit: &ExpFitResult) -> String {
    pretty_json(&FitJson {
        amplitude: round_significant(fit.amplitude),
        decay_constant: round_significant(fit.decay_constant),
        correlation_rate: round_significant(fit.correlation_rate),
        n_points: fit.n_points,
        excluded_nonpositive: fit.excluded_nonpositive,
    })
}

#[derive(Serialize)]
struct NodeSetJson<'a> {
    node: &'a str,
    variant: &'a str,
    alpha: u32,
    members: &'a NodeSet,
}

/// Neighbourhood query result as JSON.
pub fn render_node_set_json(
    node: &str,
    variant: NeighbourhoodVariant,
    alpha: u32,
    members: &NodeSet,
) -> String {
    pretty_json(&NodeSetJson {
        node,
        variant: variant.name(),
        alpha,
        members,
    })
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_network, DedupPolicy, EdgeEvent};

    fn demo() -> MultiLayerNetwork {
        build_network(
            vec![
                EdgeEvent::new("a", "b", "l1").with_weight(2.0),
                EdgeEvent::new("b", "a", "l1"),
                EdgeEvent::new("b", "c", "l2").with_weight(0.5),
            ],
            DedupPolicy::Sum,
        )
        .unwrap()
    }

    #[test]
    fn format_value_examples() {
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(0.5), "0.5");
        assert_eq!(format_value(2.0 / 3.0), "0.666666666667");
        assert_eq!(format_value(4.0 / 9.0), "0.444444444444");
        assert_eq!(format_value(100.0), "100");
        assert_eq!(format_value(0.00002), "0.00002");
        assert_eq!(format_value(-0.25), "-0.25");
    }

    #[test]
    fn metric_spellings_round_trip() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        assert!("pagerank".parse::<Metric>().is_err());
    }

    #[test]
    fn alpha_requirements_enforced() {
        let net = demo();
        assert!(matches!(
            measure_report(&net, Metric::Clcc, None).unwrap_err(),
            Error::AlphaRequired(_)
        ));
        assert!(matches!(
            measure_report(&net, Metric::Mdc1, Some(2)).unwrap_err(),
            Error::AlphaNotApplicable(_)
        ));
    }

    #[test]
    fn single_layer_requirement_enforced() {
        let net = demo();
        assert!(matches!(
            measure_report(&net, Metric::Dc, None).unwrap_err(),
            Error::NotSingleLayer { layers: 2 }
        ));
        let view = net.layer_view("l1").unwrap();
        let report = measure_report(&view, Metric::Dc, None).unwrap();
        assert_eq!(report.rows.len(), 3);
    }

    #[test]
    fn rows_are_sorted_and_summary_consistent() {
        let net = demo();
        let report = measure_report(&net, Metric::Mdc1, None).unwrap();
        let nodes: Vec<&str> = report.rows.iter().map(|r| r.node.as_str()).collect();
        assert_eq!(nodes, ["a", "b", "c"]);
        let max = report.rows.iter().map(|r| r.value).fold(f64::MIN, f64::max);
        assert_eq!(report.summary.max, max);
    }

    #[test]
    fn csv_round_trip_preserves_rows() {
        let net = demo();
        let report = measure_report(&net, Metric::Cdc, Some(1)).unwrap();
        let csv = report.to_csv();
        let parsed = MeasureReport::from_csv(&csv).unwrap();
        assert_eq!(parsed.measure, report.measure);
        assert_eq!(parsed.alpha, report.alpha);
        assert_eq!(parsed.rows, report.rows);
        // serialize -> parse -> serialize is byte-identical
        assert_eq!(parsed.to_csv(), csv);
    }

    #[test]
    fn csv_quotes_awkward_node_names() {
        let net = build_network(
            vec![EdgeEvent::new("who, me?", "a \"quoted\" one", "l1")],
            DedupPolicy::Sum,
        )
        .unwrap();
        let report = measure_report(&net, Metric::Mdc1, None).unwrap();
        let csv = report.to_csv();
        let parsed = MeasureReport::from_csv(&csv).unwrap();
        assert_eq!(parsed.rows, report.rows);
    }

    #[test]
    fn json_key_order_is_stable() {
        let net = demo();
        let json = measure_report(&net, Metric::Cdc, Some(1))
            .unwrap()
            .to_json();
        let m = json.find("\"measure\"").unwrap();
        let a = json.find("\"alpha\"").unwrap();
        let r = json.find("\"rows\"").unwrap();
        let s = json.find("\"summary\"").unwrap();
        assert!(m < a && a < r && r < s, "{json}");
    }

    #[test]
    fn sweep_render_shape() {
        let rows = vec![
            AlphaSweepRow {
                alpha: 1,
                mn_nonzero: 3,
                cdc_nonzero: 3,
                clcc_nonzero: 1,
            },
            AlphaSweepRow {
                alpha: 2,
                mn_nonzero: 1,
                cdc_nonzero: 1,
                clcc_nonzero: 0,
            },
        ];
        let csv = render_sweep_csv(&rows);
        assert_eq!(
            csv,
            "alpha,mn_nonzero,cdc_nonzero,clcc_nonzero\n1,3,3,1\n2,1,1,0\n"
        );
    }
}
