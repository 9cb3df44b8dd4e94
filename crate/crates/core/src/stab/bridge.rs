use std::fmt;

use crate::index::SuccinctWheelerIndex;

/// Consecutive nodes `l < r` with an outgoing `c`-edge; no node strictly
/// between them has one. Stabbed by positions `i` with `l < i <= r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bridge {
    pub l: usize,
    pub r: usize,
    pub c: u32,
}

impl Bridge {
    pub fn new(l: usize, r: usize, c: u32) -> Self {
        Bridge { l, r, c }
    }

    pub fn is_stabbed_by(&self, i: usize) -> bool {
        self.l < i && i <= self.r
    }
}

impl fmt::Display for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.r, self.c)
    }
}

/// All bridges of the indexed pseudoforest, ordered by label then left end.
pub fn enumerate_bridges(idx: &SuccinctWheelerIndex) -> Vec<Bridge> {
    let mut last: Vec<Option<usize>> = vec![None; idx.sigma() as usize];
    let mut out = Vec::new();
    for i in 1..=idx.n() {
        let mut j = 1;
        while let Some(c) = idx.out_label(i, j) {
            if let Some(l) = last[c as usize] {
                out.push(Bridge::new(l, i, c));
            }
            last[c as usize] = Some(i);
            j += 1;
        }
    }
    out.sort_unstable_by_key(|b| (b.c, b.l));
    out
}
