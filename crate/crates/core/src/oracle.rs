//! Brute-force ground truth: pair walks on pseudoforests, explicit prefix
//! expansion on general graphs, and naive scans for the index and stabbing
//! structures.

use std::cmp::Ordering;
use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{eliminate_sources, AugmentedGraph, LabeledGraph, WheelerPseudoforest, HASH};
use crate::pipeline::{InfSupRanks, LcpArray, LcpValue, Side};
use crate::stab::Bridge;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("nodes {i} and {j} are entered by the same string")]
    Duplicate { i: usize, j: usize },
    #[error("the string entering node {i} is smaller than the one entering node {}", i - 1)]
    NotSorted { i: usize },
}

/// Compares the strings entering `i` and `j` by walking both parent chains in
/// lockstep. Returns the order and the common prefix length; `Equal` means the
/// strings are identical (a state pair repeated).
pub fn compare_gamma(p: &WheelerPseudoforest, i: usize, j: usize) -> (Ordering, u64) {
    let mut seen = HashSet::new();
    let (mut u, mut v, mut k) = (i, j, 0u64);
    loop {
        if !seen.insert((u, v)) {
            return (Ordering::Equal, k);
        }
        match p.lambda(u).cmp(&p.lambda(v)) {
            Ordering::Equal => {}
            ord => return (ord, k),
        }
        k += 1;
        u = p.parent(u);
        v = p.parent(v);
    }
}

/// First `t` labels of the string entering `i`.
pub fn gamma_star_prefix(p: &WheelerPseudoforest, i: usize, t: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(t);
    let mut u = i;
    for _ in 0..t {
        out.push(p.lambda(u));
        u = p.parent(u);
    }
    out
}

/// The reduced LCP array by position (entry `k` is node `k + 2`), after
/// checking that the strings entering nodes `1..=n` strictly increase.
pub fn oracle_lcp_star(p: &WheelerPseudoforest) -> Result<Vec<u64>, OracleError> {
    let mut out = Vec::with_capacity(p.n().saturating_sub(1));
    for i in 2..=p.n() {
        match compare_gamma(p, i - 1, i) {
            (Ordering::Less, k) => out.push(k),
            (Ordering::Equal, _) => return Err(OracleError::Duplicate { i: i - 1, j: i }),
            (Ordering::Greater, _) => return Err(OracleError::NotSorted { i }),
        }
    }
    Ok(out)
}

/// Length-`len` prefixes of every infimum and supremum, by dynamic programming
/// over `prefix_t(inf_u) = min (c, prefix_{t-1}(inf_v))` across in-edges.
/// Index 0 unused.
pub fn inf_sup_prefixes(g: &AugmentedGraph, len: usize) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let n = g.n();
    let inc = g.graph().in_adjacency();
    let mut inf: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    let mut sup: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for _ in 0..len {
        let mut ni = vec![Vec::new(); n + 1];
        let mut ns = vec![Vec::new(); n + 1];
        for u in 1..=n {
            let &(vi, ci) = inc[u]
                .iter()
                .min_by(|a, b| (a.1, &inf[a.0]).cmp(&(b.1, &inf[b.0])))
                .expect("augmented graphs have no sources");
            let &(vs, cs) = inc[u]
                .iter()
                .max_by(|a, b| (a.1, &sup[a.0]).cmp(&(b.1, &sup[b.0])))
                .unwrap();
            ni[u] = std::iter::once(ci).chain(inf[vi].iter().copied()).collect();
            ns[u] = std::iter::once(cs).chain(sup[vs].iter().copied()).collect();
        }
        inf = ni;
        sup = ns;
    }
    (inf, sup)
}

/// Prefix length that separates any two distinct strings of an `n`-node graph.
///
/// The `2n` strings form a machine where each string emits its first label and
/// moves to its suffix; distinct states of a `k`-state machine differ within
/// `k` symbols, and a `#` occurs within `k` symbols if at all.
pub fn separating_length(n: usize) -> usize {
    4 * n + 2
}

/// Ranks of the infima and suprema by brute-force expansion.
pub fn oracle_ranks(g: &AugmentedGraph) -> InfSupRanks {
    let (inf, sup) = inf_sup_prefixes(g, separating_length(g.n()));
    let mut all: Vec<&Vec<u32>> = inf[1..].iter().chain(&sup[1..]).collect();
    all.sort();
    all.dedup();
    let rank = |s: &Vec<u32>| all.binary_search(&s).unwrap() + 1;
    InfSupRanks::new(
        inf[1..].iter().map(rank).collect(),
        sup[1..].iter().map(rank).collect(),
    )
}

/// The node copies sorted by their strings, each with its separating prefix.
pub fn oracle_sorted_copies(g: &LabeledGraph) -> Vec<(usize, Side, Vec<u32>)> {
    let aug = eliminate_sources(g);
    let (inf, sup) = inf_sup_prefixes(&aug, separating_length(aug.n()));
    let mut copies: Vec<(usize, Side, Vec<u32>)> = Vec::with_capacity(2 * g.n());
    for u in 1..=g.n() {
        copies.push((u, Side::Inf, inf[u].clone()));
        copies.push((u, Side::Sup, sup[u].clone()));
    }
    copies.sort_by(|a, b| a.2.cmp(&b.2));
    copies
}

/// The LCP array of `g` computed directly from its sorted strings. A string is
/// cut at its first `#`; two uncut strings agreeing on the separating prefix
/// are equal omega-strings and get infinity.
pub fn oracle_lcp_full(g: &LabeledGraph) -> LcpArray {
    let copies = oracle_sorted_copies(g);
    let cut = |s: &[u32]| -> (usize, bool) {
        match s.iter().position(|&c| c == HASH) {
            Some(k) => (k, false),
            None => (s.len(), true),
        }
    };
    let mut values = Vec::with_capacity(copies.len().saturating_sub(1));
    for w in copies.windows(2) {
        let (a, b) = (&w[0].2, &w[1].2);
        let (la, omega_a) = cut(a);
        let (lb, omega_b) = cut(b);
        let k = a[..la]
            .iter()
            .zip(&b[..lb])
            .take_while(|(x, y)| x == y)
            .count();
        if k == la && k == lb && omega_a && omega_b {
            values.push(LcpValue::INF);
        } else {
            values.push(LcpValue::finite(k as u64));
        }
    }
    LcpArray::new(values)
}

/// Target of the `c`-edge leaving the smallest `k >= i` that has one.
pub fn naive_forward_step(p: &WheelerPseudoforest, i: usize, c: u32) -> Option<usize> {
    (i..=p.n()).find_map(|k| p.child(k, c))
}

/// `j`-th smallest out-label of `i`, 1-based.
pub fn naive_out_label(p: &WheelerPseudoforest, i: usize, j: usize) -> Option<u32> {
    j.checked_sub(1)
        .and_then(|j| p.out_edges(i).get(j))
        .map(|&(c, _)| c)
}

/// Linear scan over a bridge list with deletion.
#[derive(Clone, Debug)]
pub struct NaiveStabber {
    bridges: Vec<(Bridge, bool)>,
}

impl NaiveStabber {
    pub fn new(bridges: &[Bridge]) -> Self {
        let mut b: Vec<(Bridge, bool)> = bridges.iter().map(|&x| (x, true)).collect();
        b.sort_unstable_by_key(|(x, _)| (x.c, x.l));
        NaiveStabber { bridges: b }
    }

    pub fn stab_and_remove(&mut self, i: usize) -> Vec<u32> {
        let mut out = Vec::new();
        for (b, alive) in &mut self.bridges {
            if *alive && b.is_stabbed_by(i) {
                *alive = false;
                out.push(b.c);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn surviving(&self) -> Vec<Bridge> {
        self.bridges
            .iter()
            .filter(|(_, a)| *a)
            .map(|(b, _)| *b)
            .collect()
    }
}
