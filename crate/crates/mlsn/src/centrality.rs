//! Degree centralities: single-layer, cross-layer, and multi-layered.
//!
//! * [`degree_centrality`](MultiLayerNetwork::degree_centrality) is the
//!   classic single-layer measure: distinct first-level neighbours (or,
//!   with the `weighted` flag, incident weight sums) over `m - 1`.
//! * [`cdc`](MultiLayerNetwork::cdc) sums the edge weights between a node
//!   and its multi-layered neighbourhood `MN(x, alpha)` over every layer,
//!   normalized by `(m - 1) * |L|`.
//! * [`mdc`](MultiLayerNetwork::mdc) sums each layer's local weighted
//!   degree and differs between versions only in the denominator:
//!   `(m - 1)` times the layer count (V1), the size of the union of
//!   per-layer neighbourhoods (V2), or the sum of per-layer neighbourhood
//!   sizes (V3).
//!
//! Every measure splits exactly into its `In` and `Out` parts:
//! `in + out = both` for CDC and all MDC versions. `cdc(x, 1, d)` equals
//! `mdc(V1, x, d)` because both numerators range over the same edge
//! multiset and the denominators coincide.

use std::fmt;

use crate::error::{Error, Result};
use crate::neighbourhood::NeighbourhoodVariant;
use crate::network::MultiLayerNetwork;

/// Edge direction selector for degree-style measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Both,
    In,
    Out,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Self::Both, Self::In, Self::Out];

    pub fn name(self) -> &'static str {
        match self {
            Self::Both => "both",
            Self::In => "in",
            Self::Out => "out",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Denominator flavour of the multi-layered degree centrality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MdcVersion {
    /// Divide by `(m - 1) * |L|`.
    V1,
    /// Divide by `(m - 1) * |MN(x, 1)|`, the union of per-layer
    /// neighbourhoods.
    V2,
    /// Divide by `(m - 1) * sum_l |N(x, l)|`.
    V3,
}

impl MdcVersion {
    pub const ALL: [MdcVersion; 3] = [Self::V1, Self::V2, Self::V3];
}

impl MultiLayerNetwork {
    /// Single-layer degree centrality. With `weighted` unset this counts
    /// distinct neighbours per `direction` over `m - 1`; with it set,
    /// weight sums replace counts.
    ///
    /// The network must hold exactly one layer (take a
    /// [`layer_view`](MultiLayerNetwork::layer_view) first) and at least
    /// two nodes.
    pub fn degree_centrality(
        &self,
        node: &str,
        direction: Direction,
        weighted: bool,
    ) -> Result<f64> {
        self.require_non_degenerate()?;
        if self.layer_count() != 1 {
            return Err(Error::NotSingleLayer {
                layers: self.layer_count(),
            });
        }
        let x = self.node_idx(node)?;
        let m1 = (self.node_count() - 1) as f64;
        let value = if weighted {
            let (in_sum, out_sum) = self.incident_weight_sums(x);
            match direction {
                Direction::Both => in_sum + out_sum,
                Direction::In => in_sum,
                Direction::Out => out_sum,
            }
        } else {
            self.adjacency_of(x)
                .iter()
                .filter(|e| match direction {
                    Direction::Both => e.any_layers >= 1,
                    Direction::In => e.in_layers >= 1,
                    Direction::Out => e.out_layers >= 1,
                })
                .count() as f64
        };
        Ok(value / m1)
    }

    /// Cross-layer degree centrality over the `Any` neighbourhood.
    pub fn cdc(&self, node: &str, alpha: u32, direction: Direction) -> Result<f64> {
        self.cdc_with_variant(node, alpha, direction, NeighbourhoodVariant::Any)
    }

    /// Cross-layer degree centrality with an explicit neighbourhood
    /// variant.
    pub fn cdc_with_variant(
        &self,
        node: &str,
        alpha: u32,
        direction: Direction,
        variant: NeighbourhoodVariant,
    ) -> Result<f64> {
        if alpha < 1 {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        self.require_non_degenerate()?;
        let x = self.node_idx(node)?;
        Ok(self.cdc_idx(x, alpha, direction, variant))
    }

    /// Multi-layered degree centrality, version selected by `version`.
    /// Isolated nodes score 0 under every version, so whole-network
    /// sweeps never abort on an empty denominator.
    pub fn mdc(&self, version: MdcVersion, node: &str, direction: Direction) -> Result<f64> {
        self.require_non_degenerate()?;
        let x = self.node_idx(node)?;
        Ok(self.mdc_idx(version, x, direction))
    }

    pub(crate) fn cdc_idx(
        &self,
        node: u32,
        alpha: u32,
        direction: Direction,
        variant: NeighbourhoodVariant,
    ) -> f64 {
        let members = self.mn_indices(node, alpha, variant);
        if members.is_empty() || self.layer_count() == 0 {
            return 0.0;
        }
        let in_sum: f64 = self
            .in_edges(node)
            .filter(|e| members.binary_search(&e.source).is_ok())
            .map(|e| e.weight)
            .sum();
        let out_sum: f64 = self
            .out_edges(node)
            .iter()
            .filter(|e| members.binary_search(&e.target).is_ok())
            .map(|e| e.weight)
            .sum();
        let numerator = match direction {
            Direction::Both => in_sum + out_sum,
            Direction::In => in_sum,
            Direction::Out => out_sum,
        };
        numerator / ((self.node_count() - 1) as f64 * self.layer_count() as f64)
    }

    pub(crate) fn mdc_idx(&self, version: MdcVersion, node: u32, direction: Direction) -> f64 {
        // sum_l sum_{y in N(x,l)} w(x,y,l) is just the total outgoing
        // weight of x: an edge exists exactly where its endpoint is a
        // layer neighbour, and absent edges weigh 0.
        let (in_sum, out_sum) = self.incident_weight_sums(node);
        let numerator = match direction {
            Direction::Both => in_sum + out_sum,
            Direction::In => in_sum,
            Direction::Out => out_sum,
        };
        let units = match version {
            MdcVersion::V1 => self.layer_count() as f64,
            MdcVersion::V2 => self.adjacency_of(node).len() as f64,
            MdcVersion::V3 => {
                // sum over layers of |N(x, l)| == sum over neighbours of
                // the number of layers on which the pair is adjacent
                self.adjacency_of(node)
                    .iter()
                    .map(|e| e.any_layers as f64)
                    .sum()
            }
        };
        if units == 0.0 {
            return 0.0;
        }
        numerator / ((self.node_count() - 1) as f64 * units)
    }

    fn incident_weight_sums(&self, node: u32) -> (f64, f64) {
        let in_sum = self.in_edges(node).map(|e| e.weight).sum();
        let out_sum = self.out_edges(node).iter().map(|e| e.weight).sum();
        (in_sum, out_sum)
    }

    fn require_non_degenerate(&self) -> Result<()> {
        if self.node_count() < 2 {
            return Err(Error::DegenerateNetwork {
                nodes: self.node_count(),
            });
        }
        Ok(())
    }
}
