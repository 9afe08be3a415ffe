//! The multi-layered network data model.
//!
//! A [`MultiLayerNetwork`] is an immutable snapshot of a node set, an
//! ordered layer set, and weighted directed edges keyed by
//! `(source, target, layer)`. At most one edge exists per triple, loops
//! are rejected, and `(x, y, l)` is distinct from `(y, x, l)`. Once
//! built, a network is safely shareable across threads; every measure in
//! this crate is a pure function of the snapshot.
//!
//! Networks are constructed from [`EdgeEvent`] records (one timestamped
//! weighted interaction each) via [`build_network`] or the more flexible
//! [`NetworkBuilder`], which also admits isolated roster nodes.

use std::borrow::Borrow;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Opaque node identifier. Orderings throughout the crate are
/// lexicographic by the underlying string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(Box<str>);

impl NodeId {
    pub fn new(name: impl Into<Box<str>>) -> Self {
        Self(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for NodeId {
    fn from(s: &str) -> Self {
        Self(s.into())
    }
}

impl From<String> for NodeId {
    fn from(s: String) -> Self {
        Self(s.into())
    }
}

impl Borrow<str> for NodeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for NodeId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Opaque layer identifier; one relation type in the network.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LayerId(Box<str>);

impl LayerId {
    pub fn new(name: impl Into<Box<str>>) -> Self {
        Self(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for LayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for LayerId {
    fn from(s: &str) -> Self {
        Self(s.into())
    }
}

impl From<String> for LayerId {
    fn from(s: String) -> Self {
        Self(s.into())
    }
}

impl Borrow<str> for LayerId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for LayerId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// One timestamped weighted interaction record; the ingestion unit.
///
/// Weight defaults to 1.0 when absent from the input, the timestamp is
/// optional (epoch seconds) and only consulted by time-window analysis.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeEvent {
    pub source: NodeId,
    pub target: NodeId,
    pub layer: LayerId,
    pub weight: f64,
    pub timestamp: Option<i64>,
}

impl EdgeEvent {
    /// Unit-weight event without a timestamp.
    pub fn new(
        source: impl Into<NodeId>,
        target: impl Into<NodeId>,
        layer: impl Into<LayerId>,
    ) -> Self {
        Self {
            source: source.into(),
            target: target.into(),
            layer: layer.into(),
            weight: 1.0,
            timestamp: None,
        }
    }

    pub fn with_weight(mut self, weight: f64) -> Self {
        self.weight = weight;
        self
    }

    pub fn with_timestamp(mut self, epoch_seconds: i64) -> Self {
        self.timestamp = Some(epoch_seconds);
        self
    }
}

/// How repeated `(source, target, layer)` triples are resolved during
/// construction. `Sum` aggregates repeated interactions and is the CLI
/// default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DedupPolicy {
    #[default]
    Sum,
    Max,
    Last,
    Error,
}

impl std::str::FromStr for DedupPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sum" => Ok(Self::Sum),
            "max" => Ok(Self::Max),
            "last" => Ok(Self::Last),
            "error" => Ok(Self::Error),
            other => Err(Error::UnknownDedupPolicy(other.to_string())),
        }
    }
}

/// A directed weighted edge, internal index form.
#[derive(Clone, Copy, Debug)]
pub(crate) struct EdgeRecord {
    pub source: u32,
    pub target: u32,
    pub layer: u16,
    pub weight: f64,
}

/// Per-neighbour adjacency summary: how many layers carry an edge in
/// each direction, in either direction, and in both directions at once.
/// These four counts are exactly what the multi-layered neighbourhood
/// variants threshold on.
#[derive(Clone, Copy, Debug)]
pub(crate) struct AdjEntry {
    pub neighbour: u32,
    /// layers with node -> neighbour
    pub out_layers: u16,
    /// layers with neighbour -> node
    pub in_layers: u16,
    /// layers with an edge in either direction
    pub any_layers: u16,
    /// layers with edges in both directions
    pub both_layers: u16,
    /// total weight over both directions and all layers
    pub weight_total: f64,
}

/// Immutable multi-layered network snapshot.
pub struct MultiLayerNetwork {
    node_names: Vec<NodeId>,
    node_lookup: HashMap<NodeId, u32>,
    layer_names: Vec<LayerId>,
    layer_lookup: HashMap<LayerId, u16>,
    /// sorted by (source, target, layer)
    edges: Vec<EdgeRecord>,
    /// CSR offsets into `edges` by source
    out_offsets: Vec<usize>,
    /// edge indices sorted by (target, source, layer)
    in_edge_order: Vec<u32>,
    /// CSR offsets into `in_edge_order` by target
    in_offsets: Vec<usize>,
    /// per-node neighbour summaries, sorted by neighbour index
    adjacency: Vec<Vec<AdjEntry>>,
}

/// Builds a network from events, resolving duplicate triples per
/// `policy`. The node set is the union of event endpoints, the layer set
/// the union of event layers.
pub fn build_network(events: Vec<EdgeEvent>, policy: DedupPolicy) -> Result<MultiLayerNetwork> {
    NetworkBuilder::new()
        .dedup_policy(policy)
        .events(events)
        .build()
}

/// Incremental construction, including nodes that appear in no event
/// (roster members, isolated observers).
#[derive(Default)]
pub struct NetworkBuilder {
    events: Vec<EdgeEvent>,
    extra_nodes: Vec<NodeId>,
    policy: DedupPolicy,
}

impl NetworkBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dedup_policy(mut self, policy: DedupPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn event(mut self, event: EdgeEvent) -> Self {
        self.events.push(event);
        self
    }

    pub fn events(mut self, events: impl IntoIterator<Item = EdgeEvent>) -> Self {
        self.events.extend(events);
        self
    }

    /// Adds a node even if no event mentions it.
    pub fn node(mut self, node: impl Into<NodeId>) -> Self {
        self.extra_nodes.push(node.into());
        self
    }

    pub fn nodes(mut self, nodes: impl IntoIterator<Item = NodeId>) -> Self {
        self.extra_nodes.extend(nodes);
        self
    }

    pub fn build(self) -> Result<MultiLayerNetwork> {
        let Self {
            events,
            extra_nodes,
            policy,
        } = self;

        for (i, e) in events.iter().enumerate() {
            if e.source == e.target {
                return Err(Error::LoopEdge {
                    node: e.source.to_string(),
                    layer: e.layer.to_string(),
                    line: None,
                    record: Some(i),
                });
            }
            if !(e.weight.is_finite() && e.weight >= 0.0) {
                return Err(Error::InvalidWeight {
                    from: e.source.to_string(),
                    to: e.target.to_string(),
                    layer: e.layer.to_string(),
                    weight: e.weight,
                });
            }
        }

        let mut node_names: Vec<NodeId> = Vec::with_capacity(events.len() / 2 + extra_nodes.len());
        for e in &events {
            node_names.push(e.source.clone());
            node_names.push(e.target.clone());
        }
        node_names.extend(extra_nodes);
        node_names.sort_unstable();
        node_names.dedup();

        let mut layer_names: Vec<LayerId> = events.iter().map(|e| e.layer.clone()).collect();
        layer_names.sort_unstable();
        layer_names.dedup();

        // indexes are u32/u16; reject inputs that would wrap them
        if node_names.len() > u32::MAX as usize {
            return Err(Error::TooLarge {
                what: "nodes",
                count: node_names.len(),
                max: u32::MAX as usize,
            });
        }
        if layer_names.len() > u16::MAX as usize + 1 {
            return Err(Error::TooLarge {
                what: "layers",
                count: layer_names.len(),
                max: u16::MAX as usize + 1,
            });
        }

        let node_lookup: HashMap<NodeId, u32> = node_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();
        let layer_lookup: HashMap<LayerId, u16> = layer_names
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u16))
            .collect();

        // (source, target, layer, sequence, weight); sequence keeps the
        // Last policy well-defined after sorting.
        let mut raw: Vec<(u32, u32, u16, usize, f64)> = events
            .iter()
            .enumerate()
            .map(|(seq, e)| {
                (
                    node_lookup[&e.source],
                    node_lookup[&e.target],
                    layer_lookup[&e.layer],
                    seq,
                    e.weight,
                )
            })
            .collect();
        raw.sort_unstable_by_key(|r| (r.0, r.1, r.2, r.3));

        let mut edges: Vec<EdgeRecord> = Vec::with_capacity(raw.len());
        let mut i = 0;
        while i < raw.len() {
            let (s, t, l, _, w0) = raw[i];
            let mut j = i + 1;
            let mut weight = w0;
            while j < raw.len() && raw[j].0 == s && raw[j].1 == t && raw[j].2 == l {
                match policy {
                    DedupPolicy::Sum => weight += raw[j].4,
                    DedupPolicy::Max => weight = weight.max(raw[j].4),
                    DedupPolicy::Last => weight = raw[j].4,
                    DedupPolicy::Error => {
                        return Err(Error::DuplicateEdge {
                            from: node_names[s as usize].to_string(),
                            to: node_names[t as usize].to_string(),
                            layer: layer_names[l as usize].to_string(),
                        });
                    }
                }
                j += 1;
            }
            edges.push(EdgeRecord {
                source: s,
                target: t,
                layer: l,
                weight,
            });
            i = j;
        }

        Ok(MultiLayerNetwork::from_parts(
            node_names,
            node_lookup,
            layer_names,
            layer_lookup,
            edges,
        ))
    }
}

impl MultiLayerNetwork {
    /// Shorthand for [`build_network`].
    pub fn from_events(events: Vec<EdgeEvent>, policy: DedupPolicy) -> Result<Self> {
        build_network(events, policy)
    }

    /// Assembles a snapshot from validated parts. `edges` must be sorted
    /// by (source, target, layer) and free of duplicates.
    fn from_parts(
        node_names: Vec<NodeId>,
        node_lookup: HashMap<NodeId, u32>,
        layer_names: Vec<LayerId>,
        layer_lookup: HashMap<LayerId, u16>,
        edges: Vec<EdgeRecord>,
    ) -> Self {
        let m = node_names.len();

        let mut out_offsets = vec![0usize; m + 1];
        for e in &edges {
            out_offsets[e.source as usize + 1] += 1;
        }
        for i in 0..m {
            out_offsets[i + 1] += out_offsets[i];
        }

        let mut in_order: Vec<u32> = (0..edges.len() as u32).collect();
        in_order.sort_unstable_by_key(|&i| {
            let e = &edges[i as usize];
            (e.target, e.source, e.layer)
        });
        let mut in_offsets = vec![0usize; m + 1];
        for &i in &in_order {
            in_offsets[edges[i as usize].target as usize + 1] += 1;
        }
        for i in 0..m {
            in_offsets[i + 1] += in_offsets[i];
        }

        // Group edges per unordered pair; the per-direction layer lists
        // arrive sorted because `edges` is sorted.
        struct PairAcc {
            fwd: Vec<u16>, // layers with min -> max
            rev: Vec<u16>, // layers with max -> min
            weight: f64,
        }
        let mut pairs: HashMap<(u32, u32), PairAcc> = HashMap::new();
        for e in &edges {
            let (a, b, forward) = if e.source < e.target {
                (e.source, e.target, true)
            } else {
                (e.target, e.source, false)
            };
            let acc = pairs.entry((a, b)).or_insert_with(|| PairAcc {
                fwd: Vec::new(),
                rev: Vec::new(),
                weight: 0.0,
            });
            if forward {
                acc.fwd.push(e.layer);
            } else {
                acc.rev.push(e.layer);
            }
            acc.weight += e.weight;
        }

        let mut adjacency: Vec<Vec<AdjEntry>> = vec![Vec::new(); m];
        for ((a, b), acc) in pairs {
            let (any, both) = union_intersection_sizes(&acc.fwd, &acc.rev);
            let fwd = acc.fwd.len() as u16;
            let rev = acc.rev.len() as u16;
            adjacency[a as usize].push(AdjEntry {
                neighbour: b,
                out_layers: fwd,
                in_layers: rev,
                any_layers: any,
                both_layers: both,
                weight_total: acc.weight,
            });
            adjacency[b as usize].push(AdjEntry {
                neighbour: a,
                out_layers: rev,
                in_layers: fwd,
                any_layers: any,
                both_layers: both,
                weight_total: acc.weight,
            });
        }
        for list in &mut adjacency {
            list.sort_unstable_by_key(|e| e.neighbour);
        }

        Self {
            node_names,
            node_lookup,
            layer_names,
            layer_lookup,
            edges,
            out_offsets,
            in_edge_order: in_order,
            in_offsets,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_names.len()
    }

    pub fn layer_count(&self) -> usize {
        self.layer_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Node identifiers in lexicographic order.
    pub fn nodes(&self) -> &[NodeId] {
        &self.node_names
    }

    /// Layer identifiers in lexicographic order.
    pub fn layers(&self) -> &[LayerId] {
        &self.layer_names
    }

    pub fn contains_node(&self, name: &str) -> bool {
        self.node_lookup.contains_key(name)
    }

    pub fn contains_layer(&self, name: &str) -> bool {
        self.layer_lookup.contains_key(name)
    }

    /// Weight of the edge `(source, target, layer)`, or `None` when the
    /// edge is absent. Measures treat absent edges as weight 0.
    pub fn edge_weight(&self, source: &str, target: &str, layer: &str) -> Option<f64> {
        let s = *self.node_lookup.get(source)?;
        let t = *self.node_lookup.get(target)?;
        let l = *self.layer_lookup.get(layer)?;
        let range = &self.edges[self.out_offsets[s as usize]..self.out_offsets[s as usize + 1]];
        range
            .binary_search_by_key(&(t, l), |e| (e.target, e.layer))
            .ok()
            .map(|i| range[i].weight)
    }

    /// Iterates all edges as `(source, target, layer, weight)` in
    /// (source, target, layer) order.
    pub fn edges(&self) -> impl Iterator<Item = (&NodeId, &NodeId, &LayerId, f64)> + '_ {
        self.edges.iter().map(move |e| {
            (
                &self.node_names[e.source as usize],
                &self.node_names[e.target as usize],
                &self.layer_names[e.layer as usize],
                e.weight,
            )
        })
    }

    /// Rescales each node's outgoing weights per layer so they sum to 1,
    /// returning a new snapshot. Nodes without outgoing edges on a layer
    /// are unchanged; all-zero outgoing weights on a layer are an error.
    pub fn normalize_out_weights(&self) -> Result<Self> {
        let layers = self.layer_count();
        let mut sums = vec![0.0f64; self.node_count() * layers.max(1)];
        for e in &self.edges {
            sums[e.source as usize * layers + e.layer as usize] += e.weight;
        }
        for e in &self.edges {
            if sums[e.source as usize * layers + e.layer as usize] == 0.0 {
                return Err(Error::ZeroOutSum {
                    node: self.node_names[e.source as usize].to_string(),
                    layer: self.layer_names[e.layer as usize].to_string(),
                });
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeRecord {
                weight: e.weight / sums[e.source as usize * layers + e.layer as usize],
                ..*e
            })
            .collect();
        Ok(Self::from_parts(
            self.node_names.clone(),
            self.node_lookup.clone(),
            self.layer_names.clone(),
            self.layer_lookup.clone(),
            edges,
        ))
    }

    /// Single-layer view: same node set, layer set `{layer}`, and exactly
    /// that layer's edges.
    pub fn layer_view(&self, layer: &str) -> Result<Self> {
        let l = self.layer_idx(layer)?;
        let layer_id = self.layer_names[l as usize].clone();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.layer == l)
            .map(|e| EdgeRecord { layer: 0, ..*e })
            .collect();
        let layer_lookup = HashMap::from([(layer_id.clone(), 0u16)]);
        Ok(Self::from_parts(
            self.node_names.clone(),
            self.node_lookup.clone(),
            vec![layer_id],
            layer_lookup,
            edges,
        ))
    }

    /// Checks every structural invariant of the snapshot. Construction
    /// upholds these by design; the check exists so tests and callers
    /// holding a network of unknown provenance can assert them.
    pub fn validate(&self) -> Result<()> {
        let mut prev: Option<(u32, u32, u16)> = None;
        for e in &self.edges {
            if e.source == e.target {
                return Err(Error::LoopEdge {
                    node: self.node_names[e.source as usize].to_string(),
                    layer: self.layer_names[e.layer as usize].to_string(),
                    line: None,
                    record: None,
                });
            }
            if !(e.weight.is_finite() && e.weight >= 0.0) {
                return Err(Error::InvalidWeight {
                    from: self.node_names[e.source as usize].to_string(),
                    to: self.node_names[e.target as usize].to_string(),
                    layer: self.layer_names[e.layer as usize].to_string(),
                    weight: e.weight,
                });
            }
            if (e.source as usize) >= self.node_count() || (e.target as usize) >= self.node_count()
            {
                return Err(Error::NodeNotFound(format!(
                    "index {}",
                    e.source.max(e.target)
                )));
            }
            if (e.layer as usize) >= self.layer_count() {
                return Err(Error::LayerNotFound(format!("index {}", e.layer)));
            }
            let key = (e.source, e.target, e.layer);
            if prev == Some(key) {
                return Err(Error::DuplicateEdge {
                    from: self.node_names[e.source as usize].to_string(),
                    to: self.node_names[e.target as usize].to_string(),
                    layer: self.layer_names[e.layer as usize].to_string(),
                });
            }
            prev = Some(key);
        }
        Ok(())
    }

    pub(crate) fn node_idx(&self, name: &str) -> Result<u32> {
        self.node_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::NodeNotFound(name.to_string()))
    }

    pub(crate) fn layer_idx(&self, name: &str) -> Result<u16> {
        self.layer_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::LayerNotFound(name.to_string()))
    }

    pub(crate) fn node_name(&self, idx: u32) -> &NodeId {
        &self.node_names[idx as usize]
    }

    pub(crate) fn out_edges(&self, node: u32) -> &[EdgeRecord] {
        &self.edges[self.out_offsets[node as usize]..self.out_offsets[node as usize + 1]]
    }

    pub(crate) fn in_edges(&self, node: u32) -> impl Iterator<Item = &EdgeRecord> + '_ {
        self.in_edge_order[self.in_offsets[node as usize]..self.in_offsets[node as usize + 1]]
            .iter()
            .map(move |&i| &self.edges[i as usize])
    }

    pub(crate) fn adjacency_of(&self, node: u32) -> &[AdjEntry] {
        &self.adjacency[node as usize]
    }
}

impl fmt::Debug for MultiLayerNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiLayerNetwork")
            .field("nodes", &self.node_count())
            .field("layers", &self.layer_count())
            .field("edges", &self.edge_count())
            .finish()
    }
}

/// Sizes of the union and intersection of two sorted duplicate-free
/// layer lists.
fn union_intersection_sizes(a: &[u16], b: &[u16]) -> (u16, u16) {
    let (mut i, mut j) = (0, 0);
    let (mut union, mut inter) = (0u16, 0u16);
    while i < a.len() && j < b.len() {
        union += 1;
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                inter += 1;
                i += 1;
                j += 1;
            }
        }
    }
    union += (a.len() - i + b.len() - j) as u16;
    (union, inter)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str, t: &str, l: &str, w: f64) -> EdgeEvent {
        EdgeEvent::new(s, t, l).with_weight(w)
    }

    /// The eight layer-one interactions of the canonical demo network.
    fn eight_tuple_events() -> Vec<EdgeEvent> {
        [
            ("x", "y"),
            ("y", "x"),
            ("x", "z"),
            ("z", "x"),
            ("y", "z"),
            ("u", "z"),
            ("u", "v"),
            ("v", "u"),
        ]
        .into_iter()
        .map(|(s, t)| EdgeEvent::new(s, t, "l1"))
        .collect()
    }

    #[test]
    fn builds_eight_tuple_layer() {
        let net = build_network(eight_tuple_events(), DedupPolicy::Sum).unwrap();
        assert_eq!(net.node_count(), 5);
        assert_eq!(net.layer_count(), 1);
        assert_eq!(net.edge_count(), 8);
        let names: Vec<&str> = net.nodes().iter().map(|n| n.as_str()).collect();
        assert_eq!(names, ["u", "v", "x", "y", "z"]);
        net.validate().unwrap();
    }

    #[test]
    fn empty_event_list_gives_empty_network() {
        let net = build_network(Vec::new(), DedupPolicy::Sum).unwrap();
        assert_eq!(net.node_count(), 0);
        assert_eq!(net.layer_count(), 0);
        assert_eq!(net.edge_count(), 0);
    }

    #[test]
    fn dedup_policies() {
        let events = vec![ev("a", "b", "l1", 0.5), ev("a", "b", "l1", 0.25)];
        let sum = build_network(events.clone(), DedupPolicy::Sum).unwrap();
        assert_eq!(sum.edge_weight("a", "b", "l1"), Some(0.75));
        let max = build_network(events.clone(), DedupPolicy::Max).unwrap();
        assert_eq!(max.edge_weight("a", "b", "l1"), Some(0.5));
        let last = build_network(events.clone(), DedupPolicy::Last).unwrap();
        assert_eq!(last.edge_weight("a", "b", "l1"), Some(0.25));
        let err = build_network(events, DedupPolicy::Error).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { .. }), "got {err:?}");
    }

    #[test]
    fn loop_event_is_rejected_naming_the_record() {
        let events = vec![ev("a", "b", "l1", 1.0), ev("c", "c", "l2", 1.0)];
        let err = build_network(events, DedupPolicy::Sum).unwrap_err();
        match err {
            Error::LoopEdge {
                node,
                layer,
                record,
                ..
            } => {
                assert_eq!(node, "c");
                assert_eq!(layer, "l2");
                assert_eq!(record, Some(1));
            }
            other => panic!("expected LoopEdge, got {other:?}"),
        }
    }

    #[test]
    fn negative_weight_is_rejected() {
        let err = build_network(vec![ev("a", "b", "l1", -0.5)], DedupPolicy::Sum).unwrap_err();
        assert!(matches!(err, Error::InvalidWeight { .. }));
    }

    #[test]
    fn builder_includes_isolated_roster_nodes() {
        let net = NetworkBuilder::new()
            .event(EdgeEvent::new("a", "b", "l1"))
            .node("watcher")
            .build()
            .unwrap();
        assert_eq!(net.node_count(), 3);
        assert!(net.contains_node("watcher"));
    }

    #[test]
    fn normalize_splits_equal_out_weights() {
        let net = build_network(
            vec![ev("a", "b", "l1", 2.0), ev("a", "c", "l1", 2.0)],
            DedupPolicy::Sum,
        )
        .unwrap();
        let normed = net.normalize_out_weights().unwrap();
        assert_eq!(normed.edge_weight("a", "b", "l1"), Some(0.5));
        assert_eq!(normed.edge_weight("a", "c", "l1"), Some(0.5));
        // input untouched
        assert_eq!(net.edge_weight("a", "b", "l1"), Some(2.0));
    }

    #[test]
    fn normalize_single_out_edge_becomes_one() {
        let net = build_network(vec![ev("a", "b", "l1", 7.0)], DedupPolicy::Sum).unwrap();
        let normed = net.normalize_out_weights().unwrap();
        assert_eq!(normed.edge_weight("a", "b", "l1"), Some(1.0));
    }

    #[test]
    fn normalize_is_idempotent() {
        let net = build_network(
            vec![
                ev("a", "b", "l1", 3.0),
                ev("a", "c", "l1", 1.0),
                ev("b", "c", "l2", 4.0),
            ],
            DedupPolicy::Sum,
        )
        .unwrap();
        let once = net.normalize_out_weights().unwrap();
        let twice = once.normalize_out_weights().unwrap();
        for (s, t, l, w) in once.edges() {
            let w2 = twice
                .edge_weight(s.as_str(), t.as_str(), l.as_str())
                .unwrap();
            assert!((w - w2).abs() < 1e-12);
        }
    }

    #[test]
    fn normalize_rejects_all_zero_out_weights() {
        let net = build_network(
            vec![ev("a", "b", "l1", 0.0), ev("a", "c", "l1", 0.0)],
            DedupPolicy::Sum,
        )
        .unwrap();
        let err = net.normalize_out_weights().unwrap_err();
        match err {
            Error::ZeroOutSum { node, layer } => {
                assert_eq!(node, "a");
                assert_eq!(layer, "l1");
            }
            other => panic!("expected ZeroOutSum, got {other:?}"),
        }
    }

    #[test]
    fn layer_view_keeps_node_set_and_filters_edges() {
        let net = build_network(
            vec![ev("a", "b", "l1", 1.0), ev("b", "c", "l2", 1.0)],
            DedupPolicy::Sum,
        )
        .unwrap();
        let view = net.layer_view("l1").unwrap();
        assert_eq!(view.node_count(), 3);
        assert_eq!(view.layer_count(), 1);
        assert_eq!(view.edge_count(), 1);
        assert_eq!(view.edge_weight("a", "b", "l1"), Some(1.0));
        assert!(view.edge_weight("b", "c", "l2").is_none());
    }

    #[test]
    fn layer_view_unknown_layer_errors() {
        let net = build_network(vec![ev("a", "b", "l1", 1.0)], DedupPolicy::Sum).unwrap();
        assert!(matches!(
            net.layer_view("nope").unwrap_err(),
            Error::LayerNotFound(_)
        ));
    }

    #[test]
    fn layer_view_of_single_layer_network_is_identity() {
        let net = build_network(eight_tuple_events(), DedupPolicy::Sum).unwrap();
        let view = net.layer_view("l1").unwrap();
        assert_eq!(view.node_count(), net.node_count());
        assert_eq!(view.edge_count(), net.edge_count());
    }

    #[test]
    fn edge_weight_lookup() {
        let net = build_network(
            vec![ev("a", "b", "l1", 0.25), ev("b", "a", "l1", 0.75)],
            DedupPolicy::Sum,
        )
        .unwrap();
        assert_eq!(net.edge_weight("a", "b", "l1"), Some(0.25));
        assert_eq!(net.edge_weight("b", "a", "l1"), Some(0.75));
        assert_eq!(net.edge_weight("a", "b", "l2"), None);
        assert_eq!(net.edge_weight("a", "missing", "l1"), None);
    }

    #[test]
    fn adjacency_counts_are_directional() {
        // a -> b on l1 and l2; b -> a on l2 and l3.
        let net = build_network(
            vec![
                ev("a", "b", "l1", 1.0),
                ev("a", "b", "l2", 1.0),
                ev("b", "a", "l2", 1.0),
                ev("b", "a", "l3", 1.0),
            ],
            DedupPolicy::Sum,
        )
        .unwrap();
        let a = net.node_idx("a").unwrap();
        let entry = &net.adjacency_of(a)[0];
        assert_eq!(entry.out_layers, 2);
        assert_eq!(entry.in_layers, 2);
        assert_eq!(entry.any_layers, 3);
        assert_eq!(entry.both_layers, 1);
        assert_eq!(entry.weight_total, 4.0);
    }
}
