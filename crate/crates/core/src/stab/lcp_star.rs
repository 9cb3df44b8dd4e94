//! Streaming the reduced LCP array of a Wheeler pseudoforest.
//!
//! Positions whose incoming label differs from their predecessor's start at
//! value 0. Popping `(i, d)` emits it, stabs the bridges covering `i` and, for
//! each stabbed label `c`, pushes `forward_step(i, c)` with value `d + 1`. For a
//! stabbed bridge `(l, r, c)` the smallest `k >= i` with a `c`-edge is `r`, so
//! the step lands on the node entered from `r`.

use thiserror::Error;

use super::bridge::enumerate_bridges;
use super::queue::LevelQueue;
use super::stabber::{BlockedStabber, StabError};
use crate::index::SuccinctWheelerIndex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LcpError {
    #[error(transparent)]
    Stab(#[from] StabError),
    #[error("forward step from position {i} along label {c} fell off the index")]
    DanglingStep { i: usize, c: u32 },
    #[error("only {emitted} of {expected} positions were reached; the strings entering the nodes are not pairwise distinct")]
    Incomplete { emitted: usize, expected: usize },
}

/// Counters returned after a complete run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LcpReport {
    pub emitted: usize,
    pub forward_steps: u64,
    /// Forward steps plus stabbing work.
    pub work: u64,
    pub max_value: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LcpOptions {
    /// Level-queue bitset threshold; `None` selects `n / log2(n)`.
    pub queue_threshold: Option<usize>,
}

/// Emitted `(position, value)` pairs in emission order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LcpStream {
    pub pairs: Vec<(usize, u64)>,
}

impl LcpStream {
    /// Values indexed by position: entry `k` holds position `k + 2`.
    pub fn by_position(&self) -> Vec<u64> {
        let mut out = vec![u64::MAX; self.pairs.len()];
        for &(i, d) in &self.pairs {
            out[i - 2] = d;
        }
        out
    }
}

pub fn lcp_star<F: FnMut(usize, u64)>(
    idx: &SuccinctWheelerIndex,
    sink: F,
) -> Result<LcpReport, LcpError> {
    lcp_star_with(idx, LcpOptions::default(), sink)
}

pub fn lcp_star_with<F: FnMut(usize, u64)>(
    idx: &SuccinctWheelerIndex,
    opts: LcpOptions,
    mut sink: F,
) -> Result<LcpReport, LcpError> {
    let n = idx.n();
    let bridges = enumerate_bridges(idx);
    let mut stabber = BlockedStabber::build(&bridges, n, idx.sigma())?;
    let threshold = opts
        .queue_threshold
        .unwrap_or_else(|| LevelQueue::default_threshold(n));
    let mut queue = LevelQueue::with_threshold(n, threshold);

    let mut prev = idx.incoming_label(1);
    for i in 2..=n {
        let cur = idx.incoming_label(i);
        if cur != prev {
            queue.push_current(i);
        }
        prev = cur;
    }

    let mut report = LcpReport::default();
    while let Some((i, d)) = queue.pop() {
        sink(i, d);
        report.emitted += 1;
        report.max_value = report.max_value.max(d);
        for c in stabber.stab_and_remove(i) {
            report.forward_steps += 1;
            let target = idx
                .forward_step(i, c)
                .ok_or(LcpError::DanglingStep { i, c })?;
            queue.push_next(target);
        }
    }
    report.work = report.forward_steps + stabber.work();
    let expected = n.saturating_sub(1);
    if report.emitted != expected {
        return Err(LcpError::Incomplete {
            emitted: report.emitted,
            expected,
        });
    }
    Ok(report)
}

/// Runs [`lcp_star`] and collects the stream.
pub fn lcp_star_to_vec(idx: &SuccinctWheelerIndex) -> Result<(LcpStream, LcpReport), LcpError> {
    let mut stream = LcpStream::default();
    let report = lcp_star(idx, |i, d| stream.pairs.push((i, d)))?;
    Ok((stream, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::DNA_FOREST;
    use crate::graph::{parse_graph_str, WheelerPseudoforest};

    fn dna() -> SuccinctWheelerIndex {
        let g = parse_graph_str(DNA_FOREST).unwrap();
        SuccinctWheelerIndex::build(&WheelerPseudoforest::from_graph(&g).unwrap()).unwrap()
    }

    #[test]
    fn dna_by_position() {
        let (stream, report) = lcp_star_to_vec(&dna()).unwrap();
        assert_eq!(
            stream.by_position(),
            vec![0, 1, 3, 2, 2, 0, 1, 1, 0, 2, 1, 2, 2, 1]
        );
        assert_eq!(report.emitted, 14);
        assert_eq!(report.forward_steps, 11);
        assert_eq!(report.max_value, 3);
    }

    #[test]
    fn dna_trace_in_fifo_order() {
        let opts = LcpOptions {
            queue_threshold: Some(usize::MAX),
        };
        let mut pairs = Vec::new();
        lcp_star_with(&dna(), opts, |i, d| pairs.push((i, d))).unwrap();
        let want = vec![
            (2, 0),
            (7, 0),
            (10, 0),
            (3, 1),
            (8, 1),
            (12, 1),
            (9, 1),
            (15, 1),
            (11, 2),
            (13, 2),
            (5, 2),
            (14, 2),
            (6, 2),
            (4, 3),
        ];
        assert_eq!(pairs, want);
    }

    #[test]
    fn single_node_emits_nothing() {
        let p = WheelerPseudoforest::from_parents(1, vec![1], vec![0]).unwrap();
        let idx = SuccinctWheelerIndex::build(&p).unwrap();
        let (stream, _) = lcp_star_to_vec(&idx).unwrap();
        assert!(stream.pairs.is_empty());
    }

    #[test]
    fn duplicate_strings_are_reported() {
        // Two a-loops on nodes 2 and 3 enter both with a^omega.
        let p = WheelerPseudoforest::from_parents(2, vec![1, 2, 3], vec![0, 1, 1]).unwrap();
        let idx = SuccinctWheelerIndex::build(&p).unwrap();
        assert!(matches!(
            lcp_star_to_vec(&idx),
            Err(LcpError::Incomplete { .. })
        ));
    }
}
