//! Per-layer and multi-layered neighbourhoods.
//!
//! The per-layer neighbourhood `N(x, l)` contains every node adjacent to
//! `x` on layer `l` in either direction. The five multi-layered variants
//! lift this to the whole network with a threshold `alpha`, the minimum
//! number of layers on which a connection must exist:
//!
//! * `In`: at least `alpha` layers carry an edge into `x`;
//! * `Out`: at least `alpha` layers carry an edge out of `x`;
//! * `InOutAny`: both of the above hold, on possibly different layers;
//! * `InOut`: at least `alpha` layers carry edges in *both* directions;
//! * `Any`: at least `alpha` layers carry an edge in either direction.
//!
//! `InOut` is the most restrictive variant and `Any` the least; for every
//! node and alpha, `InOut ⊆ {In, Out, InOutAny} ⊆ Any` and
//! `InOutAny = In ∩ Out`. All variants are purely topological: weights
//! play no role. `alpha` above the layer count is legal and yields the
//! empty set, so alpha sweeps need no special casing.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{AdjEntry, MultiLayerNetwork, NodeId};

/// Which of the five multi-layered neighbourhood definitions to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NeighbourhoodVariant {
    In,
    Out,
    InOutAny,
    InOut,
    Any,
}

impl NeighbourhoodVariant {
    pub const ALL: [NeighbourhoodVariant; 5] =
        [Self::In, Self::Out, Self::InOutAny, Self::InOut, Self::Any];

    pub fn name(self) -> &'static str {
        match self {
            Self::In => "in",
            Self::Out => "out",
            Self::InOutAny => "inoutany",
            Self::InOut => "inout",
            Self::Any => "any",
        }
    }

    /// Whether an adjacency summary passes this variant's threshold.
    #[inline]
    pub(crate) fn admits(self, entry: &AdjEntry, alpha: u16) -> bool {
        match self {
            Self::In => entry.in_layers >= alpha,
            Self::Out => entry.out_layers >= alpha,
            Self::InOutAny => entry.in_layers >= alpha && entry.out_layers >= alpha,
            Self::InOut => entry.both_layers >= alpha,
            Self::Any => entry.any_layers >= alpha,
        }
    }
}

impl fmt::Display for NeighbourhoodVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NeighbourhoodVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "in" => Ok(Self::In),
            "out" => Ok(Self::Out),
            "inoutany" => Ok(Self::InOutAny),
            "inout" => Ok(Self::InOut),
            "any" => Ok(Self::Any),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

/// Result of a neighbourhood query: a duplicate-free set of node
/// identifiers in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct NodeSet {
    members: Vec<NodeId>,
}

impl NodeSet {
    pub fn empty() -> Self {
        Self {
            members: Vec::new(),
        }
    }

    /// Builds a set from arbitrary identifiers, sorting and deduplicating.
    pub fn from_names<I, T>(names: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<NodeId>,
    {
        let mut members: Vec<NodeId> = names.into_iter().map(Into::into).collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    /// Node indices sorted ascending map straight to lexicographic order
    /// because network construction sorts names.
    pub(crate) fn from_indices(net: &MultiLayerNetwork, indices: &[u32]) -> Self {
        Self {
            members: indices.iter().map(|&i| net.node_name(i).clone()).collect(),
        }
    }

    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.members
            .binary_search_by(|m| m.as_str().cmp(name))
            .is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NodeId> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a NodeSet {
    type Item = &'a NodeId;
    type IntoIter = std::slice::Iter<'a, NodeId>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl MultiLayerNetwork {
    /// Nodes adjacent to `node` on `layer` in either direction; never
    /// contains the node itself.
    pub fn neighbourhood(&self, node: &str, layer: &str) -> Result<NodeSet> {
        let x = self.node_idx(node)?;
        let l = self.layer_idx(layer)?;
        let mut found: Vec<u32> = self
            .out_edges(x)
            .iter()
            .filter(|e| e.layer == l)
            .map(|e| e.target)
            .chain(self.in_edges(x).filter(|e| e.layer == l).map(|e| e.source))
            .collect();
        found.sort_unstable();
        found.dedup();
        Ok(NodeSet::from_indices(self, &found))
    }

    /// Neighbours with edges into `node` on at least `alpha` layers.
    pub fn mn_in(&self, node: &str, alpha: u32) -> Result<NodeSet> {
        self.multi_neighbourhood(node, alpha, NeighbourhoodVariant::In)
    }

    /// Neighbours with edges out of `node` on at least `alpha` layers.
    pub fn mn_out(&self, node: &str, alpha: u32) -> Result<NodeSet> {
        self.multi_neighbourhood(node, alpha, NeighbourhoodVariant::Out)
    }

    /// Neighbours with at least `alpha` incoming and `alpha` outgoing
    /// edges, possibly on different layers.
    pub fn mn_in_out_any(&self, node: &str, alpha: u32) -> Result<NodeSet> {
        self.multi_neighbourhood(node, alpha, NeighbourhoodVariant::InOutAny)
    }

    /// Neighbours reciprocated on at least `alpha` common layers.
    pub fn mn_in_out(&self, node: &str, alpha: u32) -> Result<NodeSet> {
        self.multi_neighbourhood(node, alpha, NeighbourhoodVariant::InOut)
    }

    /// Neighbours connected in either direction on at least `alpha`
    /// layers; the least restrictive variant and the one used by the
    /// cross-layer measures.
    pub fn mn_any(&self, node: &str, alpha: u32) -> Result<NodeSet> {
        self.multi_neighbourhood(node, alpha, NeighbourhoodVariant::Any)
    }

    /// Multi-layered neighbourhood under an explicit variant.
    pub fn multi_neighbourhood(
        &self,
        node: &str,
        alpha: u32,
        variant: NeighbourhoodVariant,
    ) -> Result<NodeSet> {
        if alpha < 1 {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let x = self.node_idx(node)?;
        Ok(NodeSet::from_indices(
            self,
            &self.mn_indices(x, alpha, variant),
        ))
    }

    /// Index-level neighbourhood query; ascending order.
    pub(crate) fn mn_indices(
        &self,
        node: u32,
        alpha: u32,
        variant: NeighbourhoodVariant,
    ) -> Vec<u32> {
        let Ok(alpha) = u16::try_from(alpha) else {
            return Vec::new(); // layer counts are u16; no pair can qualify
        };
        self.adjacency_of(node)
            .iter()
            .filter(|e| variant.admits(e, alpha))
            .map(|e| e.neighbour)
            .collect()
    }
}
