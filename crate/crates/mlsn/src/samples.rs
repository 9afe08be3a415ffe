//! Ready-made inputs for examples, demos, and tests.
//!
//! [`demo_events`] is a hand-built six-node, three-layer network that
//! exercises every neighbourhood variant: it mixes reciprocated and
//! one-way ties, pairs adjacent on one, two, or all three layers, and a
//! node (`t`) whose two neighbours never interact with each other. Each
//! event carries a timestamp so the same fixture also drives the
//! time-window analyses: the interactions spread over five 90-day
//! windows starting at epoch 0.
//!
//! [`synthetic_events`] grows reproducible networks of any size from a
//! seed, for scale tests and demo sweeps.

use crate::network::{build_network, DedupPolicy, EdgeEvent, MultiLayerNetwork};

const DAY: i64 = 86_400;

/// The demo interaction log: 30 unit-weight timestamped events over
/// nodes {t, u, v, x, y, z} and layers {l1, l2, l3}.
pub fn demo_events() -> Vec<EdgeEvent> {
    // (source, target, layer, day offset)
    const ROWS: [(&str, &str, &str, i64); 30] = [
        ("x", "y", "l1", 0),
        ("y", "x", "l1", 0),
        ("x", "z", "l1", 2),
        ("z", "x", "l1", 2),
        ("y", "z", "l1", 5),
        ("u", "z", "l1", 9),
        ("u", "v", "l1", 9),
        ("v", "u", "l1", 12),
        ("u", "x", "l1", 95),
        ("t", "z", "l1", 100),
        ("t", "v", "l1", 130),
        ("x", "y", "l2", 185),
        ("x", "z", "l2", 186),
        ("z", "x", "l2", 187),
        ("x", "v", "l2", 200),
        ("v", "x", "l2", 210),
        ("x", "u", "l2", 220),
        ("u", "x", "l2", 230),
        ("u", "v", "l2", 250),
        ("v", "y", "l2", 260),
        ("x", "y", "l3", 275),
        ("x", "z", "l3", 300),
        ("z", "x", "l3", 320),
        ("x", "v", "l3", 340),
        ("v", "x", "l3", 360),
        ("x", "u", "l3", 365),
        ("y", "z", "l3", 380),
        ("t", "z", "l3", 400),
        ("t", "v", "l3", 420),
        ("v", "y", "l3", 440),
    ];
    ROWS.iter()
        .map(|&(s, t, l, day)| EdgeEvent::new(s, t, l).with_timestamp(day * DAY))
        .collect()
}

/// The demo network: six nodes, three layers, thirty unit-weight edges.
pub fn demo_network() -> MultiLayerNetwork {
    build_network(demo_events(), DedupPolicy::Sum).expect("demo fixture is valid")
}

/// Deterministic synthetic event stream: `edge_count` weighted,
/// timestamped interactions over `node_count` nodes and `layer_count`
/// layers, timestamps uniform over `span_days` days from epoch 0.
/// Repeated triples are possible and aggregate naturally under
/// [`DedupPolicy::Sum`]. Identical arguments always produce identical
/// events on every platform.
pub fn synthetic_events(
    node_count: usize,
    layer_count: usize,
    edge_count: usize,
    span_days: u32,
    seed: u64,
) -> Vec<EdgeEvent> {
    assert!(node_count >= 2, "need at least two nodes to form edges");
    assert!(layer_count >= 1, "need at least one layer");
    let width = (node_count - 1).to_string().len();
    let node_names: Vec<String> = (0..node_count).map(|i| format!("n{i:0width$}")).collect();
    let layer_width = (layer_count - 1).to_string().len().max(2);
    let layer_names: Vec<String> = (0..layer_count)
        .map(|i| format!("l{i:0layer_width$}"))
        .collect();

    let mut rng = SplitMix64::new(seed);
    let mut events = Vec::with_capacity(edge_count);
    for _ in 0..edge_count {
        let s = rng.below(node_count as u64) as usize;
        let mut t = rng.below(node_count as u64 - 1) as usize;
        if t >= s {
            t += 1;
        }
        let layer = rng.below(layer_count as u64) as usize;
        let weight = (rng.below(1000) + 1) as f64 / 1000.0;
        let day = rng.below(span_days as u64) as i64;
        events.push(
            EdgeEvent::new(
                node_names[s].as_str(),
                node_names[t].as_str(),
                layer_names[layer].as_str(),
            )
            .with_weight(weight)
            .with_timestamp(day * DAY),
        );
    }
    events
}

/// splitmix64: tiny, stable, and good enough for sample data.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_network_shape() {
        let net = demo_network();
        assert_eq!(net.node_count(), 6);
        assert_eq!(net.layer_count(), 3);
        assert_eq!(net.edge_count(), 30);
        net.validate().unwrap();
        let names: Vec<&str> = net.nodes().iter().map(|n| n.as_str()).collect();
        assert_eq!(names, ["t", "u", "v", "x", "y", "z"]);
    }

    #[test]
    fn demo_layer_views() {
        let net = demo_network();
        let l1 = net.layer_view("l1").unwrap();
        assert_eq!(l1.node_count(), 6);
        assert_eq!(l1.edge_count(), 11);
        // node set stays intact even on layers where some nodes sit idle
        let l2 = net.layer_view("l2").unwrap();
        assert_eq!(l2.node_count(), 6);
        assert_eq!(l2.edge_count(), 9);
        assert!(l2.neighbourhood("t", "l2").unwrap().is_empty());
        assert_eq!(net.layer_view("l3").unwrap().edge_count(), 10);
    }

    #[test]
    fn synthetic_is_deterministic() {
        let a = synthetic_events(20, 3, 100, 450, 7);
        let b = synthetic_events(20, 3, 100, 450, 7);
        assert_eq!(a, b);
        let c = synthetic_events(20, 3, 100, 450, 8);
        assert_ne!(a, c);
    }

    #[test]
    fn synthetic_events_are_valid() {
        let events = synthetic_events(10, 2, 200, 90, 1);
        let net = build_network(events, DedupPolicy::Sum).unwrap();
        net.validate().unwrap();
        assert!(net.node_count() <= 10);
        assert_eq!(net.layer_count(), 2);
    }
}
