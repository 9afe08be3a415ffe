//! Brute-force definition scans over the raw tuple set.

use std::collections::BTreeSet;

use super::RawNet;

/// Per-layer neighbourhood: adjacency in either direction on one layer.
pub fn neighbourhood(net: &RawNet, x: &str, layer: &str) -> BTreeSet<String> {
    net.edges
        .iter()
        .filter(|(s, t, l, _)| l == layer && (s == x || t == x))
        .map(|(s, t, _, _)| if s == x { t.clone() } else { s.clone() })
        .collect()
}

fn layers_with_edge(net: &RawNet, s: &str, t: &str) -> BTreeSet<String> {
    net.edges
        .iter()
        .filter(|(es, et, _, _)| es == s && et == t)
        .map(|(_, _, l, _)| l.clone())
        .collect()
}

pub fn mn_in(net: &RawNet, x: &str, alpha: usize) -> BTreeSet<String> {
    candidate_filter(net, x, |net, y| layers_with_edge(net, y, x).len() >= alpha)
}

pub fn mn_out(net: &RawNet, x: &str, alpha: usize) -> BTreeSet<String> {
    candidate_filter(net, x, |net, y| layers_with_edge(net, x, y).len() >= alpha)
}

pub fn mn_in_out_any(net: &RawNet, x: &str, alpha: usize) -> BTreeSet<String> {
    candidate_filter(net, x, |net, y| {
        layers_with_edge(net, y, x).len() >= alpha && layers_with_edge(net, x, y).len() >= alpha
    })
}

pub fn mn_in_out(net: &RawNet, x: &str, alpha: usize) -> BTreeSet<String> {
    candidate_filter(net, x, |net, y| {
        let fwd = layers_with_edge(net, x, y);
        let rev = layers_with_edge(net, y, x);
        fwd.intersection(&rev).count() >= alpha
    })
}

pub fn mn_any(net: &RawNet, x: &str, alpha: usize) -> BTreeSet<String> {
    candidate_filter(net, x, |net, y| {
        let fwd = layers_with_edge(net, x, y);
        let rev = layers_with_edge(net, y, x);
        fwd.union(&rev).count() >= alpha
    })
}

fn candidate_filter(
    net: &RawNet,
    x: &str,
    keep: impl Fn(&RawNet, &str) -> bool,
) -> BTreeSet<String> {
    net.nodes
        .iter()
        .filter(|y| y.as_str() != x)
        .filter(|y| keep(net, y))
        .cloned()
        .collect()
}

/// Literal triple loop over layers, members, and members.
pub fn clcc(net: &RawNet, x: &str, alpha: usize) -> f64 {
    let members = mn_any(net, x, alpha);
    if members.is_empty() || net.layers.is_empty() {
        return 0.0;
    }
    let mut total = 0.0;
    for layer in &net.layers {
        for y in &members {
            for z in &members {
                total += net.weight(z, y, layer); // in-degree of y
                total += net.weight(y, z, layer); // out-degree of y
            }
        }
    }
    total / (2.0 * members.len() as f64 * net.layers.len() as f64)
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Both,
    In,
    Out,
}

pub fn cdc(net: &RawNet, x: &str, alpha: usize, dir: Dir) -> f64 {
    let members = mn_any(net, x, alpha);
    if members.is_empty() || net.layers.is_empty() {
        return 0.0;
    }
    let mut in_sum = 0.0;
    let mut out_sum = 0.0;
    for layer in &net.layers {
        for y in &members {
            in_sum += net.weight(y, x, layer);
            out_sum += net.weight(x, y, layer);
        }
    }
    let numerator = match dir {
        Dir::Both => in_sum + out_sum,
        Dir::In => in_sum,
        Dir::Out => out_sum,
    };
    numerator / ((net.nodes.len() - 1) as f64 * net.layers.len() as f64)
}

pub fn mdc(net: &RawNet, version: u8, x: &str, dir: Dir) -> f64 {
    let mut in_sum = 0.0;
    let mut out_sum = 0.0;
    for layer in &net.layers {
        for y in neighbourhood(net, x, layer) {
            in_sum += net.weight(&y, x, layer);
            out_sum += net.weight(x, &y, layer);
        }
    }
    let numerator = match dir {
        Dir::Both => in_sum + out_sum,
        Dir::In => in_sum,
        Dir::Out => out_sum,
    };
    let units = match version {
        1 => net.layers.len() as f64,
        2 => mn_any(net, x, 1).len() as f64,
        3 => net
            .layers
            .iter()
            .map(|l| neighbourhood(net, x, l).len())
            .sum::<usize>() as f64,
        _ => unreachable!("versions are 1..=3"),
    };
    if units == 0.0 {
        return 0.0;
    }
    numerator / ((net.nodes.len() - 1) as f64 * units)
}

/// Distinct-neighbour degree centrality on one layer of the raw net.
pub fn degree_centrality(net: &RawNet, x: &str, layer: &str, dir: Dir) -> f64 {
    let count = match dir {
        Dir::Both => neighbourhood(net, x, layer).len(),
        Dir::In => net
            .nodes
            .iter()
            .filter(|y| y.as_str() != x && net.has_edge(y, x, layer))
            .count(),
        Dir::Out => net
            .nodes
            .iter()
            .filter(|y| y.as_str() != x && net.has_edge(x, y, layer))
            .count(),
    };
    count as f64 / (net.nodes.len() - 1) as f64
}
