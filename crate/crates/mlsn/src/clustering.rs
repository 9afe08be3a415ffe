//! Cross-layer clustering coefficient.
//!
//! For a node `x` and threshold `alpha`, take `S = MN(x, alpha)` (the
//! least restrictive neighbourhood variant unless overridden). The
//! coefficient averages, over every layer and every member of `S`, the
//! weighted in- plus out-degree counted only towards other members:
//!
//! ```text
//! clcc(x, alpha) = sum_l sum_{y in S} (in(y, S, l) + out(y, S, l))
//!                  / (2 * |S| * |L|)
//! ```
//!
//! Empty or singleton neighbourhoods score 0. When each node's outgoing
//! weights sum to 1 per layer (see
//! [`normalize_out_weights`](crate::network::MultiLayerNetwork::normalize_out_weights)),
//! the value always lies in `[0, 1]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::neighbourhood::{NeighbourhoodVariant, NodeSet};
use crate::network::{MultiLayerNetwork, NodeId};

/// Clustering value for one `(node, alpha)` query.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClccResult {
    pub node: NodeId,
    pub alpha: u32,
    pub value: f64,
    pub neighbourhood_size: usize,
}

impl MultiLayerNetwork {
    /// Sum of weights of edges incoming to `node` on `layer` from
    /// members of `within`. Absent nodes and absent edges contribute 0.
    pub fn weighted_in_within(&self, node: &str, within: &NodeSet, layer: &str) -> Result<f64> {
        let l = self.layer_idx(layer)?;
        let Ok(y) = self.node_idx(node) else {
            return Ok(0.0);
        };
        let members = self.member_indices(within);
        Ok(self
            .in_edges(y)
            .filter(|e| e.layer == l && members.binary_search(&e.source).is_ok())
            .map(|e| e.weight)
            .sum())
    }

    /// Sum of weights of edges outgoing from `node` on `layer` towards
    /// members of `within`. Mirror of [`weighted_in_within`].
    ///
    /// [`weighted_in_within`]: MultiLayerNetwork::weighted_in_within
    pub fn weighted_out_within(&self, node: &str, within: &NodeSet, layer: &str) -> Result<f64> {
        let l = self.layer_idx(layer)?;
        let Ok(y) = self.node_idx(node) else {
            return Ok(0.0);
        };
        let members = self.member_indices(within);
        Ok(self
            .out_edges(y)
            .iter()
            .filter(|e| e.layer == l && members.binary_search(&e.target).is_ok())
            .map(|e| e.weight)
            .sum())
    }

    /// Cross-layer clustering coefficient over the `Any` neighbourhood.
    pub fn clcc(&self, node: &str, alpha: u32) -> Result<ClccResult> {
        self.clcc_with_variant(node, alpha, NeighbourhoodVariant::Any)
    }

    /// Cross-layer clustering coefficient over an explicit neighbourhood
    /// variant; the more restrictive variants narrow the member set and
    /// can only lower the value.
    pub fn clcc_with_variant(
        &self,
        node: &str,
        alpha: u32,
        variant: NeighbourhoodVariant,
    ) -> Result<ClccResult> {
        if alpha < 1 {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let x = self.node_idx(node)?;
        let (value, neighbourhood_size) = self.clcc_idx(x, alpha, variant);
        Ok(ClccResult {
            node: self.node_name(x).clone(),
            alpha,
            value,
            neighbourhood_size,
        })
    }

    /// Clustering over the widest neighbourhood (`alpha = 1`): every node
    /// connected on any layer counts as a member.
    pub fn clcc_extended(&self, node: &str) -> Result<ClccResult> {
        self.clcc(node, 1)
    }

    /// Clustering over the narrowest threshold (`alpha = |L|`): only
    /// nodes connected on every layer count as members.
    pub fn clcc_reduced(&self, node: &str) -> Result<ClccResult> {
        self.clcc(node, self.layer_count().max(1) as u32)
    }

    /// Index-level kernel; returns `(value, |S|)`.
    pub(crate) fn clcc_idx(
        &self,
        node: u32,
        alpha: u32,
        variant: NeighbourhoodVariant,
    ) -> (f64, usize) {
        let members = self.mn_indices(node, alpha, variant);
        let size = members.len();
        if size <= 1 || self.layer_count() == 0 {
            return (0.0, size);
        }
        let mut in_set = vec![false; self.node_count()];
        for &m in &members {
            in_set[m as usize] = true;
        }
        // Each member's in- and out-degree towards other members, summed
        // over all layers at once. Every internal edge is counted twice,
        // matching the 2*|S|*|L| denominator.
        let mut total = 0.0;
        for &y in &members {
            for e in self.out_edges(y) {
                if in_set[e.target as usize] {
                    total += e.weight;
                }
            }
            for e in self.in_edges(y) {
                if in_set[e.source as usize] {
                    total += e.weight;
                }
            }
        }
        (
            total / (2.0 * size as f64 * self.layer_count() as f64),
            size,
        )
    }

    /// Resolves set members to sorted internal indices, skipping names
    /// the network does not know.
    fn member_indices(&self, set: &NodeSet) -> Vec<u32> {
        let mut v: Vec<u32> = set
            .iter()
            .filter_map(|n| self.node_idx(n.as_str()).ok())
            .collect();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_network, DedupPolicy, EdgeEvent};

    fn net(edges: &[(&str, &str, &str)]) -> MultiLayerNetwork {
        build_network(
            edges
                .iter()
                .map(|&(s, t, l)| EdgeEvent::new(s, t, l))
                .collect(),
            DedupPolicy::Sum,
        )
        .unwrap()
    }

    #[test]
    fn within_degrees_on_unit_triangle() {
        // a -> b -> c -> a on one layer.
        let n = net(&[("a", "b", "l1"), ("b", "c", "l1"), ("c", "a", "l1")]);
        let s = NodeSet::from_names(["a", "b", "c"]);
        assert_eq!(n.weighted_in_within("b", &s, "l1").unwrap(), 1.0);
        assert_eq!(n.weighted_out_within("b", &s, "l1").unwrap(), 1.0);
    }

    #[test]
    fn empty_set_sums_to_zero() {
        let n = net(&[("a", "b", "l1")]);
        let empty = NodeSet::empty();
        assert_eq!(n.weighted_in_within("b", &empty, "l1").unwrap(), 0.0);
        assert_eq!(n.weighted_out_within("a", &empty, "l1").unwrap(), 0.0);
    }

    #[test]
    fn set_excluding_all_in_neighbours_sums_to_zero() {
        let n = net(&[("a", "b", "l1"), ("c", "b", "l1")]);
        let s = NodeSet::from_names(["b"]); // no in-neighbour of b inside
        assert_eq!(n.weighted_in_within("b", &s, "l1").unwrap(), 0.0);
    }

    #[test]
    fn absent_node_contributes_zero_but_unknown_layer_errors() {
        let n = net(&[("a", "b", "l1")]);
        let s = NodeSet::from_names(["a", "b"]);
        assert_eq!(n.weighted_in_within("ghost", &s, "l1").unwrap(), 0.0);
        assert!(n.weighted_in_within("a", &s, "l9").is_err());
    }

    #[test]
    fn star_centre_scores_zero_at_every_alpha() {
        // Hub connected to four leaves, no edges among the leaves.
        let n = net(&[
            ("hub", "a", "l1"),
            ("a", "hub", "l1"),
            ("hub", "b", "l1"),
            ("hub", "c", "l2"),
            ("hub", "d", "l2"),
        ]);
        for alpha in 1..=3 {
            assert_eq!(n.clcc("hub", alpha).unwrap().value, 0.0);
        }
    }

    #[test]
    fn singleton_neighbourhood_scores_zero() {
        let n = net(&[("a", "b", "l1"), ("b", "a", "l1")]);
        let r = n.clcc("a", 1).unwrap();
        assert_eq!(r.neighbourhood_size, 1);
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn triangle_with_unit_weights() {
        // Complete bidirectional triangle on one layer. For any node the
        // member pair shares 2 unit edges, each counted once as in- and
        // once as out-degree: 4 / (2 * 2 * 1) = 1.
        let n = net(&[
            ("a", "b", "l1"),
            ("b", "a", "l1"),
            ("a", "c", "l1"),
            ("c", "a", "l1"),
            ("b", "c", "l1"),
            ("c", "b", "l1"),
        ]);
        let r = n.clcc("a", 1).unwrap();
        assert_eq!(r.neighbourhood_size, 2);
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn extended_and_reduced_are_alpha_aliases() {
        let n = net(&[
            ("a", "b", "l1"),
            ("b", "c", "l1"),
            ("c", "a", "l1"),
            ("a", "b", "l2"),
            ("b", "a", "l2"),
        ]);
        for node in ["a", "b", "c"] {
            assert_eq!(n.clcc_extended(node).unwrap(), n.clcc(node, 1).unwrap());
            assert_eq!(n.clcc_reduced(node).unwrap(), n.clcc(node, 2).unwrap());
        }
    }

    #[test]
    fn unknown_node_errors() {
        let n = net(&[("a", "b", "l1")]);
        assert!(n.clcc("ghost", 1).is_err());
    }
}
