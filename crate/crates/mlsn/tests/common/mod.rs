//! Shared test support: a raw tuple-set representation with brute-force
//! definition scans for every measure, plus random network generation.
//!
//! The oracles work straight off the edge tuple list and never touch the
//! library's adjacency indexes, so agreement between the two is a real
//! cross-check rather than a tautology.

#![allow(dead_code)]

pub mod oracle;

use mlsn::{EdgeEvent, MultiLayerNetwork};
use rand::Rng;

/// A network as nothing but its raw tuple set.
#[derive(Clone, Debug)]
pub struct RawNet {
    pub nodes: Vec<String>,
    pub layers: Vec<String>,
    /// (source, target, layer, weight); unique triples, no loops
    pub edges: Vec<(String, String, String, f64)>,
}

impl RawNet {
    /// Random network: every ordered (pair, layer) slot carries an edge
    /// with probability `density`, weights uniform in `(0, 2]`. The layer
    /// set is exactly the layers that ended up carrying edges, matching
    /// how construction derives it; nodes may stay isolated.
    pub fn random<R: Rng>(rng: &mut R, max_nodes: usize, max_layers: usize, density: f64) -> Self {
        let n = rng.random_range(2..=max_nodes);
        let l = rng.random_range(1..=max_layers);
        let nodes: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
        let candidate_layers: Vec<String> = (0..l).map(|i| format!("l{i}")).collect();
        let mut edges = Vec::new();
        for s in &nodes {
            for t in &nodes {
                if s == t {
                    continue;
                }
                for layer in &candidate_layers {
                    if rng.random_bool(density) {
                        let w = rng.random_range(0.01..=2.0f64);
                        edges.push((s.clone(), t.clone(), layer.clone(), w));
                    }
                }
            }
        }
        let mut layers: Vec<String> = edges.iter().map(|(_, _, l, _)| l.clone()).collect();
        layers.sort();
        layers.dedup();
        Self {
            nodes,
            layers,
            edges,
        }
    }

    /// Builds the library-side network, keeping isolated nodes.
    pub fn build(&self) -> MultiLayerNetwork {
        let events: Vec<EdgeEvent> = self
            .edges
            .iter()
            .map(|(s, t, l, w)| EdgeEvent::new(s.as_str(), t.as_str(), l.as_str()).with_weight(*w))
            .collect();
        let mut builder = mlsn::NetworkBuilder::new().events(events);
        for n in &self.nodes {
            builder = builder.node(n.as_str());
        }
        builder.build().expect("random raw networks are valid")
    }

    pub fn weight(&self, s: &str, t: &str, l: &str) -> f64 {
        self.edges
            .iter()
            .find(|(es, et, el, _)| es == s && et == t && el == l)
            .map(|(_, _, _, w)| *w)
            .unwrap_or(0.0)
    }

    pub fn has_edge(&self, s: &str, t: &str, l: &str) -> bool {
        self.edges
            .iter()
            .any(|(es, et, el, _)| es == s && et == t && el == l)
    }
}
