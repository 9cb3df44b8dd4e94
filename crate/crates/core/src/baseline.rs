//! Breadth-first interval extension over the index, generalized from the
//! string setting to pseudoforests.
//!
//! A queue item `(lo, hi, t)` is the node range whose strings share one prefix
//! `w` of length `t`. Extending it by every distinct out-label `c` present in
//! the range yields the range of `c w`, whose first node is separated from its
//! predecessor after `t` symbols. The value is written there unless already
//! set, and only ranges that wrote are queued. Position 1 is never written, so
//! ranges of `#`-strings never recurse; their extensions start at the same node
//! as the range of their first label.
//!
//! A range holding `d` distinct out-labels costs `d` forward searches even when
//! every extension is a no-op, which makes unary chains feeding a wide fan-out
//! quadratic.

use std::collections::VecDeque;

use crate::index::SuccinctWheelerIndex;

const UNSET: u64 = u64::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BaselineReport {
    /// One unit per range extended by one label.
    pub steps: u64,
}

/// Reduced LCP by position (entry `k` is node `k + 2`). Requires distinct
/// strings; entries that stay unset (only possible otherwise) read as 0.
pub fn baseline_lcp_star(idx: &SuccinctWheelerIndex) -> (Vec<u64>, BaselineReport) {
    let n = idx.n();
    let mut lcp = vec![UNSET; n + 1];
    let mut report = BaselineReport::default();
    let mut queue = VecDeque::from([(1usize, n, 0u64)]);
    let mut labels = Vec::new();
    while let Some((lo, hi, t)) = queue.pop_front() {
        labels.clear();
        idx.distinct_out_labels(lo, hi, |c| labels.push(c));
        let (a, b) = (idx.out_prefix(lo), idx.out_prefix(hi + 1));
        for &c in &labels {
            report.steps += 1;
            let lo2 = idx.c(c) + idx.l_rank(c, a) + 1;
            let hi2 = idx.c(c) + idx.l_rank(c, b);
            let fresh = lo2 >= 2 && lcp[lo2] == UNSET;
            if fresh {
                lcp[lo2] = t;
            }
            if fresh {
                queue.push_back((lo2, hi2, t + 1));
            }
        }
    }
    let out = lcp
        .iter()
        .skip(2)
        .map(|&v| if v == UNSET { 0 } else { v })
        .collect();
    (out, report)
}
