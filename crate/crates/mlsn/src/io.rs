//! Edge-list ingestion and small input-file helpers.
//!
//! The single ingestion format is a UTF-8 CSV edge list with the header
//! `source,target,layer,weight,timestamp`; the last two columns are
//! optional, per header and per row. LF and CRLF both parse. Weights
//! default to 1.0 when absent; timestamps are integer epoch seconds or
//! ISO-8601 UTC date-times.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use chrono::{DateTime, NaiveDateTime};

use crate::error::{Error, Result};
use crate::network::{EdgeEvent, NodeId};

const EXPECTED_HEADER: [&str; 5] = ["source", "target", "layer", "weight", "timestamp"];

/// Reads an edge-list CSV file into events. With `has_header` set, the
/// first row must spell (a prefix of) `source,target,layer,weight,timestamp`;
/// without it, columns are taken in that order.
pub fn parse_edge_file(path: impl AsRef<Path>, has_header: bool) -> Result<Vec<EdgeEvent>> {
    let file = File::open(path.as_ref())?;
    parse_edge_events(file, has_header)
}

/// Reader-based form of [`parse_edge_file`].
pub fn parse_edge_events<R: Read>(reader: R, has_header: bool) -> Result<Vec<EdgeEvent>> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);

    let mut events = Vec::new();
    let mut first = true;
    for record in csv_reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map(|p| p.line()).unwrap_or(0),
            message: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);

        if first && has_header {
            first = false;
            validate_header(&record, line)?;
            continue;
        }
        first = false;

        if record.iter().all(|f| f.trim().is_empty()) {
            continue; // blank line
        }
        events.push(parse_row(&record, line)?);
    }
    Ok(events)
}

fn validate_header(record: &csv::StringRecord, line: u64) -> Result<()> {
    if record.len() < 3 || record.len() > 5 {
        return Err(Error::Parse {
            line,
            message: format!(
                "expected header with 3 to 5 columns (source,target,layer[,weight[,timestamp]]), got {}",
                record.len()
            ),
        });
    }
    for (i, field) in record.iter().enumerate() {
        let name = field
            .trim_start_matches('\u{feff}')
            .trim()
            .to_ascii_lowercase();
        if name != EXPECTED_HEADER[i] {
            return Err(Error::Parse {
                line,
                message: format!(
                    "unexpected header column {} '{}', expected '{}'",
                    i + 1,
                    field,
                    EXPECTED_HEADER[i]
                ),
            });
        }
    }
    Ok(())
}

fn parse_row(record: &csv::StringRecord, line: u64) -> Result<EdgeEvent> {
    if record.len() < 3 || record.len() > 5 {
        return Err(Error::Parse {
            line,
            message: format!("expected 3 to 5 fields, got {}", record.len()),
        });
    }
    let source = record[0].trim();
    let target = record[1].trim();
    let layer = record[2].trim();
    if source.is_empty() || target.is_empty() || layer.is_empty() {
        return Err(Error::Parse {
            line,
            message: "source, target, and layer must be non-empty".to_string(),
        });
    }
    if source == target {
        return Err(Error::LoopEdge {
            node: source.to_string(),
            layer: layer.to_string(),
            line: Some(line),
            record: None,
        });
    }

    let weight = match record.get(3).map(str::trim) {
        None | Some("") => 1.0,
        Some(raw) => {
            let w: f64 = raw.parse().map_err(|e| Error::Parse {
                line,
                message: format!("bad weight '{raw}': {e}"),
            })?;
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::Parse {
                    line,
                    message: format!("weight must be a non-negative decimal, got '{raw}'"),
                });
            }
            w
        }
    };

    let timestamp = match record.get(4).map(str::trim) {
        None | Some("") => None,
        Some(raw) => Some(parse_timestamp(raw).map_err(|_| Error::Parse {
            line,
            message: format!(
                "bad timestamp '{raw}': expected integer epoch seconds or ISO-8601 UTC"
            ),
        })?),
    };

    let mut event = EdgeEvent::new(source, target, layer).with_weight(weight);
    event.timestamp = timestamp;
    Ok(event)
}

/// Parses integer epoch seconds, an RFC 3339 date-time, or a naive
/// `YYYY-MM-DDTHH:MM:SS` date-time interpreted as UTC.
pub fn parse_timestamp(raw: &str) -> Result<i64> {
    if let Ok(secs) = raw.parse::<i64>() {
        return Ok(secs);
    }
    if let Ok(dt) = DateTime::parse_from_rfc3339(raw) {
        return Ok(dt.timestamp());
    }
    if let Ok(naive) = NaiveDateTime::parse_from_str(raw, "%Y-%m-%dT%H:%M:%S") {
        return Ok(naive.and_utc().timestamp());
    }
    Err(Error::Parse {
        line: 0,
        message: format!("unparseable timestamp '{raw}'"),
    })
}

/// Reads one finite decimal per line; blank lines are skipped.
pub fn read_values_file(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i as u64 + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let v: f64 = trimmed.parse().map_err(|e| Error::Parse {
            line,
            message: format!("bad value '{trimmed}': {e}"),
        })?;
        values.push(v);
    }
    Ok(values)
}

/// Reads one node identifier per line; blank lines are skipped.
pub fn read_roster_file(path: impl AsRef<Path>) -> Result<Vec<NodeId>> {
    let text = std::fs::read_to_string(path.as_ref())?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(NodeId::from)
        .collect())
}
