//! Ranking infimum and supremum strings by joint prefix refinement.

use std::fmt;

use crate::graph::AugmentedGraph;

/// Which of the two strings of a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Inf,
    Sup,
}

impl Side {
    pub fn code(self) -> char {
        match self {
            Side::Inf => 'i',
            Side::Sup => 's',
        }
    }

    pub fn from_code(c: &str) -> Option<Side> {
        match c {
            "i" => Some(Side::Inf),
            "s" => Some(Side::Sup),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Dense ranks in `1..=count` of the infimum and supremum of every node; equal
/// strings share a rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfSupRanks {
    inf: Vec<usize>,
    sup: Vec<usize>,
    count: usize,
}

impl InfSupRanks {
    /// `inf[u-1]`, `sup[u-1]` are the ranks of node `u`. Ranks must cover
    /// `1..=count` densely.
    pub fn new(inf: Vec<usize>, sup: Vec<usize>) -> Self {
        assert_eq!(inf.len(), sup.len());
        let count = inf.iter().chain(&sup).copied().max().unwrap_or(0);
        let mut inf1 = Vec::with_capacity(inf.len() + 1);
        inf1.push(0);
        inf1.extend(inf);
        let mut sup1 = Vec::with_capacity(sup.len() + 1);
        sup1.push(0);
        sup1.extend(sup);
        InfSupRanks {
            inf: inf1,
            sup: sup1,
            count,
        }
    }

    pub fn n(&self) -> usize {
        self.inf.len() - 1
    }

    /// Number of distinct strings.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn inf(&self, u: usize) -> usize {
        self.inf[u]
    }

    pub fn sup(&self, u: usize) -> usize {
        self.sup[u]
    }

    pub fn get(&self, u: usize, side: Side) -> usize {
        match side {
            Side::Inf => self.inf[u],
            Side::Sup => self.sup[u],
        }
    }

    /// All `2n` copies `(u, side, rank)`, node-major.
    pub fn entries(&self) -> Vec<(usize, Side, usize)> {
        (1..=self.n())
            .flat_map(|u| [(u, Side::Inf, self.inf[u]), (u, Side::Sup, self.sup[u])])
            .collect()
    }

    /// Whether every rank in `1..=count` is used.
    pub fn is_dense(&self) -> bool {
        let mut seen = vec![false; self.count + 1];
        for (_, _, r) in self.entries() {
            seen[r] = true;
        }
        self.count >= 1 && seen[1..].iter().all(|&s| s)
    }

    /// Map file lines `u<TAB>{i|s}<TAB>rank`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (u, side, r) in self.entries() {
            s.push_str(&format!("{u}\t{side}\t{r}\n"));
        }
        s
    }
}

/// Ranks the `2n` strings of a source-free graph.
///
/// Round `t` ranks the length-`t` prefixes: the key of `inf_u` is the smallest
/// `(label, prefix rank of inf_v)` over in-edges `v -label-> u`, the key of
/// `sup_u` the largest `(label, prefix rank of sup_v)`. Partitions only refine,
/// so the first round without a new class is a fixed point.
pub fn sort_inf_sup(g: &AugmentedGraph) -> InfSupRanks {
    let n = g.n();
    let inc = g.graph().in_adjacency();
    debug_assert!((1..=n).all(|u| !inc[u].is_empty()), "graph has a source");
    // Slot 2(u-1) is inf_u, slot 2(u-1)+1 is sup_u.
    let mut rank = vec![0usize; 2 * n];
    let mut classes = 1;
    let mut keys: Vec<(u32, usize)> = vec![(0, 0); 2 * n];
    let mut order: Vec<usize> = (0..2 * n).collect();
    // Each round either adds a class or stops; there are at most 2n classes.
    for _ in 0..=2 * n {
        for u in 1..=n {
            let inf = inc[u]
                .iter()
                .map(|&(v, c)| (c, rank[2 * (v - 1)]))
                .min()
                .unwrap();
            let sup = inc[u]
                .iter()
                .map(|&(v, c)| (c, rank[2 * (v - 1) + 1]))
                .max()
                .unwrap();
            keys[2 * (u - 1)] = inf;
            keys[2 * (u - 1) + 1] = sup;
        }
        order.sort_unstable_by_key(|&s| keys[s]);
        let mut next = vec![0usize; 2 * n];
        let mut r = 0;
        for (k, &s) in order.iter().enumerate() {
            if k == 0 || keys[s] != keys[order[k - 1]] {
                r += 1;
            }
            next[s] = r;
        }
        let grew = r > classes;
        rank = next;
        classes = r;
        if !grew {
            break;
        }
    }
    let inf = (0..n).map(|k| rank[2 * k]).collect::<Vec<_>>();
    let sup = (0..n).map(|k| rank[2 * k + 1]).collect::<Vec<_>>();
    InfSupRanks::new(inf, sup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{eliminate_sources, parse_graph_str};

    fn ranks(text: &str) -> InfSupRanks {
        sort_inf_sup(&eliminate_sources(&parse_graph_str(text).unwrap()))
    }

    #[test]
    fn single_hash_loop() {
        let r = ranks("1 1 1\n1 1 0");
        assert_eq!((r.inf(1), r.sup(1), r.count()), (1, 1, 1));
    }

    #[test]
    fn two_cycle_collapses_to_one_class() {
        let r = ranks("2 2 1\n1 2 1\n2 1 1");
        assert_eq!(r.count(), 1);
        assert_eq!(
            r.entries().iter().map(|e| e.2).collect::<Vec<_>>(),
            vec![1; 4]
        );
    }

    #[test]
    fn source_then_two_children() {
        // s -a-> u, s -b-> w: strings #, a#, b#.
        let r = ranks("3 2 2\n1 2 1\n1 3 2");
        assert_eq!(
            r.to_text(),
            "1\ti\t1\n1\ts\t1\n2\ti\t2\n2\ts\t2\n3\ti\t3\n3\ts\t3\n"
        );
        assert!(r.is_dense());
    }

    #[test]
    fn inf_and_sup_split_on_two_in_labels() {
        // 1 -a-> 3, 2 -b-> 3, 1 and 2 sources: inf_3 = a#, sup_3 = b#.
        let r = ranks("3 2 2\n1 3 1\n2 3 2");
        assert_eq!((r.inf(1), r.inf(2)), (1, 1));
        assert_eq!((r.inf(3), r.sup(3)), (2, 3));
    }
}
