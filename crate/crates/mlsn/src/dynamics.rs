//! Time-window dynamics: partitioning timestamped events into fixed
//! non-overlapping windows, per-window networks, per-alpha activity
//! profiles, and window-combination counts.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::neighbourhood::NeighbourhoodVariant;
use crate::network::{build_network, DedupPolicy, EdgeEvent, MultiLayerNetwork, NodeId};

/// At most this many windows fit an activity mask.
pub const MAX_WINDOWS: usize = 64;

/// An ordered list of disjoint, contiguous, equal-length half-open
/// intervals, one network snapshot per interval, plus the count of
/// events that fell outside every window.
#[derive(Debug)]
pub struct WindowPartition {
    windows: Vec<(i64, i64)>,
    networks: Vec<MultiLayerNetwork>,
    event_counts: Vec<usize>,
    dropped_events: usize,
}

/// Splits `events` into `count` consecutive windows of `window_length`
/// seconds starting at `start` (epoch seconds). Window `i` covers
/// `[start + i*len, start + (i+1)*len)`; events outside
/// `[start, start + count*len)` are dropped and counted. Repeated
/// interactions within a window aggregate by weight sum.
///
/// Every event must carry a timestamp; offenders are reported by record
/// index.
pub fn partition_windows(
    events: &[EdgeEvent],
    start: i64,
    window_length: i64,
    count: usize,
) -> Result<WindowPartition> {
    if count < 1 {
        return Err(Error::InvalidWindows(
            "window count must be at least 1".to_string(),
        ));
    }
    if count > MAX_WINDOWS {
        return Err(Error::InvalidWindows(format!(
            "window count {count} exceeds the supported maximum of {MAX_WINDOWS}"
        )));
    }
    if window_length <= 0 {
        return Err(Error::InvalidWindows(
            "window length must be positive".to_string(),
        ));
    }
    let missing: Vec<usize> = events
        .iter()
        .enumerate()
        .filter(|(_, e)| e.timestamp.is_none())
        .map(|(i, _)| i)
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingTimestamps {
            count: missing.len(),
            indices: missing,
        });
    }

    let mut buckets: Vec<Vec<EdgeEvent>> = vec![Vec::new(); count];
    let mut dropped = 0usize;
    let end = window_length
        .checked_mul(count as i64)
        .and_then(|span| start.checked_add(span))
        .ok_or_else(|| Error::InvalidWindows("window span overflows the time axis".to_string()))?;
    for e in events {
        let ts = e.timestamp.unwrap();
        if ts < start || ts >= end {
            dropped += 1;
            continue;
        }
        let idx = ((ts - start) / window_length) as usize;
        buckets[idx].push(e.clone());
    }

    let windows: Vec<(i64, i64)> = (0..count)
        .map(|i| {
            (
                start + window_length * i as i64,
                start + window_length * (i as i64 + 1),
            )
        })
        .collect();
    let event_counts: Vec<usize> = buckets.iter().map(Vec::len).collect();
    let networks = buckets
        .into_iter()
        .map(|b| build_network(b, DedupPolicy::Sum))
        .collect::<Result<Vec<_>>>()?;

    Ok(WindowPartition {
        windows,
        networks,
        event_counts,
        dropped_events: dropped,
    })
}

impl WindowPartition {
    /// Half-open `(start, end)` bounds per window.
    pub fn windows(&self) -> &[(i64, i64)] {
        &self.windows
    }

    pub fn window_count(&self) -> usize {
        self.windows.len()
    }

    pub fn networks(&self) -> &[MultiLayerNetwork] {
        &self.networks
    }

    pub fn network(&self, window: usize) -> &MultiLayerNetwork {
        &self.networks[window]
    }

    /// How many retained events each window received.
    pub fn event_counts(&self) -> &[usize] {
        &self.event_counts
    }

    /// Events outside all windows.
    pub fn dropped_events(&self) -> usize {
        self.dropped_events
    }

    /// Marks each node active in every window where its multi-layered
    /// neighbourhood is non-empty. The universe is every node appearing
    /// in any window.
    pub fn activity_profile(
        &self,
        alpha: u32,
        variant: NeighbourhoodVariant,
    ) -> Result<ActivityProfile> {
        self.activity_profile_with_roster(alpha, variant, &[])
    }

    /// Like [`activity_profile`](Self::activity_profile), with extra
    /// roster members added to the universe. Roster nodes absent from
    /// every window count as never active.
    pub fn activity_profile_with_roster(
        &self,
        alpha: u32,
        variant: NeighbourhoodVariant,
        roster: &[NodeId],
    ) -> Result<ActivityProfile> {
        if alpha < 1 {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        // alpha beyond the u16 layer-count range can never be met
        let threshold = u16::try_from(alpha).ok();
        let per_window: Vec<Vec<NodeId>> = self
            .networks
            .par_iter()
            .map(|net| {
                let Some(a) = threshold else {
                    return Vec::new();
                };
                (0..net.node_count() as u32)
                    .filter(|&x| net.adjacency_of(x).iter().any(|e| variant.admits(e, a)))
                    .map(|x| net.node_name(x).clone())
                    .collect()
            })
            .collect();

        let mut masks: BTreeMap<NodeId, u64> = BTreeMap::new();
        for net in &self.networks {
            for node in net.nodes() {
                masks.entry(node.clone()).or_insert(0);
            }
        }
        for node in roster {
            masks.entry(node.clone()).or_insert(0);
        }
        for (w, active) in per_window.into_iter().enumerate() {
            for node in active {
                *masks.entry(node).or_insert(0) |= 1 << w;
            }
        }
        Ok(ActivityProfile {
            alpha,
            variant,
            window_count: self.windows.len(),
            masks,
        })
    }
}

/// Which windows each node of the universe was active in, for one
/// `(alpha, variant)` configuration.
pub struct ActivityProfile {
    alpha: u32,
    variant: NeighbourhoodVariant,
    window_count: usize,
    masks: BTreeMap<NodeId, u64>,
}

impl ActivityProfile {
    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn variant(&self) -> NeighbourhoodVariant {
        self.variant
    }

    pub fn window_count(&self) -> usize {
        self.window_count
    }

    /// Universe size: nodes seen in any window plus roster members.
    pub fn universe_size(&self) -> usize {
        self.masks.len()
    }

    pub fn is_active(&self, node: &str, window: usize) -> bool {
        self.masks.get(node).is_some_and(|m| m & (1 << window) != 0)
    }

    /// Window-membership mask for a node; bit `i` set means active in
    /// window `i`. `None` for nodes outside the universe.
    pub fn mask(&self, node: &str) -> Option<u64> {
        self.masks.get(node).copied()
    }

    /// Iterates `(node, mask)` pairs in lexicographic node order.
    pub fn iter(&self) -> impl Iterator<Item = (&NodeId, u64)> + '_ {
        self.masks.iter().map(|(n, &m)| (n, m))
    }
}

/// Counts of nodes per exact active-window combination. Every universe
/// member lands in exactly one bucket: its combination when it was
/// active somewhere, or `no_active` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationCounts {
    window_count: usize,
    by_mask: BTreeMap<u64, usize>,
    no_active: usize,
    total: usize,
}

/// Tallies the exact active-window set of each node in the profile.
pub fn combination_counts(profile: &ActivityProfile) -> CombinationCounts {
    let mut by_mask: BTreeMap<u64, usize> = BTreeMap::new();
    let mut no_active = 0usize;
    for (_, mask) in profile.iter() {
        if mask == 0 {
            no_active += 1;
        } else {
            *by_mask.entry(mask).or_insert(0) += 1;
        }
    }
    CombinationCounts {
        window_count: profile.window_count(),
        by_mask,
        no_active,
        total: profile.universe_size(),
    }
}

impl CombinationCounts {
    pub fn window_count(&self) -> usize {
        self.window_count
    }

    /// Nodes active nowhere.
    pub fn no_active(&self) -> usize {
        self.no_active
    }

    /// Universe size; equals `no_active` plus the sum over labels.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Observed combinations as `(mask, count)` in ascending mask order.
    pub fn by_mask(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.by_mask.iter().map(|(&m, &c)| (m, c))
    }

    /// Count for one exact combination mask.
    pub fn count_for_mask(&self, mask: u64) -> usize {
        self.by_mask.get(&mask).copied().unwrap_or(0)
    }

    /// Observed combinations keyed by label, e.g. `"W124"` for the exact
    /// set {W1, W2, W4}.
    pub fn labels(&self) -> BTreeMap<String, usize> {
        self.by_mask
            .iter()
            .map(|(&m, &c)| (combination_label(m, self.window_count), c))
            .collect()
    }
}

/// Renders a window-combination mask as a label: `"W"` followed by the
/// 1-based window indices. Indices are concatenated directly for up to
/// nine windows and joined with `+` beyond that, where single digits
/// would be ambiguous.
pub fn combination_label(mask: u64, window_count: usize) -> String {
    let indices: Vec<String> = (0..window_count)
        .filter(|w| mask & (1 << w) != 0)
        .map(|w| (w + 1).to_string())
        .collect();
    if window_count <= 9 {
        format!("W{}", indices.concat())
    } else {
        format!("W{}", indices.join("+"))
    }
}

/// Nodes of the profile universe active in at least one window, in
/// lexicographic order. Convenience for roster comparisons.
pub fn active_nodes(profile: &ActivityProfile) -> BTreeSet<NodeId> {
    profile
        .iter()
        .filter(|&(_, m)| m != 0)
        .map(|(n, _)| n.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const DAY: i64 = 86_400;

    fn ev(s: &str, t: &str, l: &str, day: i64) -> EdgeEvent {
        EdgeEvent::new(s, t, l).with_timestamp(day * DAY)
    }

    #[test]
    fn half_open_interval_arithmetic() {
        let events = vec![
            ev("a", "b", "l1", 0),
            ev("a", "b", "l1", 89),
            ev("b", "c", "l1", 90),
            ev("c", "d", "l1", 449),
        ];
        let part = partition_windows(&events, 0, 90 * DAY, 5).unwrap();
        assert_eq!(part.event_counts(), &[2, 1, 0, 0, 1]);
        assert_eq!(part.dropped_events(), 0);
        assert_eq!(part.windows()[0], (0, 90 * DAY));
        assert_eq!(part.windows()[4], (360 * DAY, 450 * DAY));
    }

    #[test]
    fn boundary_event_is_dropped() {
        let events = vec![ev("a", "b", "l1", 450)];
        let part = partition_windows(&events, 0, 90 * DAY, 5).unwrap();
        assert_eq!(part.dropped_events(), 1);
        assert_eq!(part.event_counts().iter().sum::<usize>(), 0);
    }

    #[test]
    fn empty_event_list_gives_empty_windows() {
        let part = partition_windows(&[], 0, 90 * DAY, 5).unwrap();
        assert_eq!(part.window_count(), 5);
        assert_eq!(part.dropped_events(), 0);
        assert!(part.networks().iter().all(|n| n.node_count() == 0));
        // an empty universe tallies to nothing
        let profile = part.activity_profile(1, NeighbourhoodVariant::Any).unwrap();
        let counts = combination_counts(&profile);
        assert_eq!(counts.no_active(), 0);
        assert_eq!(counts.total(), 0);
        assert_eq!(counts.by_mask().count(), 0);
    }

    #[test]
    fn missing_timestamp_lists_offenders() {
        let events = vec![ev("a", "b", "l1", 1), EdgeEvent::new("b", "c", "l1")];
        let err = partition_windows(&events, 0, DAY, 2).unwrap_err();
        match err {
            Error::MissingTimestamps { count, indices } => {
                assert_eq!(count, 1);
                assert_eq!(indices, vec![1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_window_parameters_error() {
        assert!(partition_windows(&[], 0, DAY, 0).is_err());
        assert!(partition_windows(&[], 0, 0, 5).is_err());
        assert!(partition_windows(&[], 0, DAY, MAX_WINDOWS + 1).is_err());
    }

    #[test]
    fn single_window_activity() {
        let events = vec![ev("a", "b", "l1", 3), ev("b", "a", "l1", 3)];
        let part = partition_windows(&events, 0, 90 * DAY, 5).unwrap();
        let profile = part.activity_profile(1, NeighbourhoodVariant::Any).unwrap();
        assert_eq!(profile.mask("a"), Some(0b00001));
        assert!(profile.is_active("a", 0));
        assert!(!profile.is_active("a", 1));
    }

    #[test]
    fn activity_in_every_window() {
        let mut events = Vec::new();
        for w in 0..5 {
            events.push(ev("a", "b", "l1", w * 90 + 10));
            events.push(ev("a", "b", "l2", w * 90 + 11));
        }
        let part = partition_windows(&events, 0, 90 * DAY, 5).unwrap();
        let profile = part.activity_profile(2, NeighbourhoodVariant::Any).unwrap();
        assert_eq!(profile.mask("a"), Some(0b11111));
        assert_eq!(profile.mask("b"), Some(0b11111));
    }

    #[test]
    fn roster_nodes_count_as_never_active() {
        let events = vec![ev("a", "b", "l1", 3)];
        let part = partition_windows(&events, 0, 90 * DAY, 5).unwrap();
        let roster = vec![NodeId::from("ghost")];
        let profile = part
            .activity_profile_with_roster(1, NeighbourhoodVariant::Any, &roster)
            .unwrap();
        assert_eq!(profile.universe_size(), 3);
        assert_eq!(profile.mask("ghost"), Some(0));
        let counts = combination_counts(&profile);
        assert_eq!(counts.no_active(), 1);
        assert_eq!(counts.total(), 3);
    }

    #[test]
    fn combination_counts_partition_the_universe() {
        let events = vec![
            ev("a", "b", "l1", 3),   // W1
            ev("a", "c", "l1", 100), // W2
            ev("c", "d", "l1", 200), // W3
        ];
        let part = partition_windows(&events, 0, 90 * DAY, 5).unwrap();
        let profile = part.activity_profile(1, NeighbourhoodVariant::Any).unwrap();
        let counts = combination_counts(&profile);
        let sum: usize = counts.by_mask().map(|(_, c)| c).sum();
        assert_eq!(sum + counts.no_active(), counts.total());
        let labels = counts.labels();
        assert_eq!(labels.get("W12"), Some(&1)); // a
        assert_eq!(labels.get("W1"), Some(&1)); // b
        assert_eq!(labels.get("W23"), Some(&1)); // c
        assert_eq!(labels.get("W3"), Some(&1)); // d
    }

    #[test]
    fn label_rendering() {
        assert_eq!(combination_label(0b10110, 5), "W235");
        assert_eq!(combination_label(0b00001, 5), "W1");
        assert_eq!(combination_label(0b11111, 5), "W12345");
        // beyond nine windows the separator disambiguates
        assert_eq!(
            combination_label((1 << 0) | (1 << 9) | (1 << 11), 12),
            "W1+10+12"
        );
    }

    #[test]
    fn raising_alpha_never_adds_activity() {
        let events = vec![
            ev("a", "b", "l1", 3),
            ev("a", "b", "l2", 4),
            ev("b", "c", "l1", 100),
        ];
        let part = partition_windows(&events, 0, 90 * DAY, 5).unwrap();
        let p1 = part.activity_profile(1, NeighbourhoodVariant::Any).unwrap();
        let p2 = part.activity_profile(2, NeighbourhoodVariant::Any).unwrap();
        for (node, mask2) in p2.iter() {
            let mask1 = p1.mask(node.as_str()).unwrap();
            assert_eq!(
                mask2 & !mask1,
                0,
                "alpha=2 activity not within alpha=1 for {node}"
            );
        }
    }
}
