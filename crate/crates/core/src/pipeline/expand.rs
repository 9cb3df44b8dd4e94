//! Expanding the reduced LCP array back to the `2n` node copies.

use std::collections::VecDeque;
use std::fmt;

use super::sort::{InfSupRanks, Side};
use super::PipelineError;
use crate::graph::{WheelerPseudoforest, HASH};

/// A finite LCP value or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LcpValue(u64);

impl LcpValue {
    pub const INF: LcpValue = LcpValue(u64::MAX);

    pub fn finite(v: u64) -> Self {
        assert!(v != u64::MAX, "reserved for infinity");
        LcpValue(v)
    }

    pub fn is_inf(self) -> bool {
        self == Self::INF
    }

    pub fn get(self) -> Option<u64> {
        (!self.is_inf()).then_some(self.0)
    }
}

impl fmt::Display for LcpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for LcpValue {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(LcpValue::INF)
        } else {
            s.parse::<u64>().map(LcpValue::finite)
        }
    }
}

/// LCP values of positions `2, 3, ...` of the sorted node copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcpArray {
    values: Vec<LcpValue>,
}

impl LcpArray {
    /// `values[k]` is position `k + 2`.
    pub fn new(values: Vec<LcpValue>) -> Self {
        LcpArray { values }
    }

    pub fn values(&self) -> &[LcpValue] {
        &self.values
    }

    /// Value at position `j >= 2`.
    pub fn get(&self, j: usize) -> LcpValue {
        self.values[j - 2]
    }

    /// Lines `j<TAB>value` for `j = 2, 3, ...`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{}\t{}\n", k + 2, v));
        }
        s
    }
}

/// Length of each node's string up to the first `#`, or infinity for nodes not
/// reached from a `#`-loop. Index 0 unused.
pub fn string_lengths(gis: &WheelerPseudoforest) -> Vec<LcpValue> {
    let n = gis.n();
    let mut len = vec![LcpValue::INF; n + 1];
    let mut queue = VecDeque::new();
    for u in 1..=n {
        if gis.lambda(u) == HASH && gis.parent(u) == u {
            len[u] = LcpValue::finite(0);
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        let d = len[u].get().unwrap();
        for &(c, v) in gis.out_edges(u) {
            if c != HASH && len[v].is_inf() {
                len[v] = LcpValue::finite(d + 1);
                queue.push_back(v);
            }
        }
    }
    len
}

/// The node copies sorted by map value (stable: node-major, inf before sup).
pub fn sorted_copies(map: &InfSupRanks) -> Vec<(usize, Side, usize)> {
    let mut copies = map.entries();
    copies.sort_by_key(|&(_, _, r)| r);
    copies
}

/// `lcp_star[k]` is the reduced LCP value of `gis` node `k + 2`.
pub fn expand_lcp(
    lcp_star: &[u64],
    gis: &WheelerPseudoforest,
    map: &InfSupRanks,
) -> Result<LcpArray, PipelineError> {
    let big_n = gis.n();
    if lcp_star.len() != big_n.saturating_sub(1) {
        return Err(PipelineError::LcpLength {
            expected: big_n.saturating_sub(1),
            found: lcp_star.len(),
        });
    }
    let lens = string_lengths(gis);
    let copies = sorted_copies(map);
    if let Some(&(u, side, r)) = copies.iter().find(|c| c.2 == 0 || c.2 > big_n) {
        return Err(PipelineError::MapOutOfRange {
            node: u,
            side,
            rank: r,
            count: big_n,
        });
    }
    let mut values = Vec::with_capacity(copies.len().saturating_sub(1));
    for j in 1..copies.len() {
        let r = copies[j].2;
        let prev = copies[j - 1].2;
        let v = if prev == r {
            lens[r]
        } else {
            LcpValue::finite(lcp_star[r - 2])
        };
        values.push(v);
    }
    Ok(LcpArray::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dna_map, DNA_FOREST, DNA_LCP_STAR};
    use crate::graph::parse_graph_str;

    #[test]
    fn dna_expansion() {
        let gis = WheelerPseudoforest::from_graph(&parse_graph_str(DNA_FOREST).unwrap()).unwrap();
        let out = expand_lcp(&DNA_LCP_STAR, &gis, &dna_map()).unwrap();
        let text: Vec<String> = out.values().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            text.join(","),
            "0,0,0,0,0,0,1,1,3,inf,inf,inf,2,2,inf,0,1,1,2,1,0,2,inf,inf,inf,1,2,3,3,2,1"
        );
        // Rank 13 spells TCC: first copy gets LCP*[13], the others its length.
        assert_eq!(
            (out.get(28), out.get(29), out.get(30)),
            (
                LcpValue::finite(2),
                LcpValue::finite(3),
                LcpValue::finite(3)
            )
        );
    }

    #[test]
    fn single_node_forest() {
        let gis = WheelerPseudoforest::from_parents(2, vec![1], vec![0]).unwrap();
        let out = expand_lcp(&[], &gis, &InfSupRanks::new(vec![1], vec![1])).unwrap();
        assert_eq!(out.to_text(), "2\t0\n");
    }

    #[test]
    fn wrong_lengths_are_rejected() {
        let gis = WheelerPseudoforest::from_parents(2, vec![1], vec![0]).unwrap();
        assert!(expand_lcp(&[0], &gis, &InfSupRanks::new(vec![1], vec![1])).is_err());
        assert!(expand_lcp(&[], &gis, &InfSupRanks::new(vec![1], vec![2])).is_err());
    }

    #[test]
    fn value_parsing() {
        assert_eq!("inf".parse::<LcpValue>().unwrap(), LcpValue::INF);
        assert_eq!("7".parse::<LcpValue>().unwrap().get(), Some(7));
        assert!(LcpValue::finite(3) < LcpValue::INF);
    }
}
