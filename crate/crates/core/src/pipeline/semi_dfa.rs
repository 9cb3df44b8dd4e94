//! Infimum/supremum ranks of a Wheeler semi-DFA from a given Wheeler order.
//!
//! Along the order `v_1 < ... < v_n` the strings interleave as
//! `inf_1 <= sup_1 <= inf_2 <= ...`, so ranks follow from two kinds of
//! equalities: `inf_u = sup_u` exactly when `u` has a single path from the
//! source, and `sup_{v_j} = inf_{v_{j+1}}`. The second kind is decided on the
//! pruned graphs `G_i` (each node keeps its smallest predecessor) and `G_s`
//! (largest predecessor): on their cycles by comparing cycle labels, elsewhere
//! by propagation from the predecessors.

use std::collections::VecDeque;

use super::sort::InfSupRanks;
use super::PipelineError;
use crate::graph::{check_wheeler_order, LabeledGraph, HASH};

const NONE: usize = usize::MAX;

/// In-degree-one pruning of the graph, in order positions.
struct Pruned {
    parent: Vec<usize>,
    on_cycle: Vec<bool>,
    /// Non-cycle nodes, parents before children.
    topo: Vec<usize>,
}

impl Pruned {
    fn new(parent: Vec<usize>) -> Self {
        let n = parent.len();
        let mut children = vec![0usize; n];
        for &p in &parent {
            if p != NONE {
                children[p] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| children[x] == 0).collect();
        let mut peeled = Vec::with_capacity(n);
        let mut removed = vec![false; n];
        while let Some(x) = queue.pop_front() {
            removed[x] = true;
            peeled.push(x);
            let p = parent[x];
            if p != NONE {
                children[p] -= 1;
                if children[p] == 0 {
                    queue.push_back(p);
                }
            }
        }
        peeled.reverse();
        let on_cycle = removed.iter().map(|&r| !r).collect();
        Pruned {
            parent,
            on_cycle,
            topo: peeled,
        }
    }

    /// Smallest position and length of each cycle.
    fn cycles(&self) -> Vec<(usize, usize)> {
        let n = self.parent.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if !self.on_cycle[x] || seen[x] {
                continue;
            }
            let (mut y, mut rep, mut len) = (x, x, 0);
            loop {
                seen[y] = true;
                rep = rep.min(y);
                len += 1;
                y = self.parent[y];
                if y == x {
                    break;
                }
            }
            out.push((rep, len));
        }
        out
    }
}

/// Ranks for a semi-DFA `g` (one source, deterministic, every node reachable,
/// all in-edges of a node sharing one label) with Wheeler order `order`.
pub fn semi_dfa_map(g: &LabeledGraph, order: &[usize]) -> Result<InfSupRanks, PipelineError> {
    let n = g.n();
    let bad = |m: String| Err(PipelineError::NotSemiDfa(m));
    let mut pos = vec![NONE; n + 1];
    if order.len() != n {
        return Err(PipelineError::InvalidOrder(format!(
            "order lists {} nodes, graph has {n}",
            order.len()
        )));
    }
    for (p, &u) in order.iter().enumerate() {
        if u == 0 || u > n || pos[u] != NONE {
            return Err(PipelineError::InvalidOrder(format!(
                "node {u} is out of range or repeated"
            )));
        }
        pos[u] = p;
    }
    let sources = g.sources();
    if sources.len() != 1 {
        return bad(format!("expected one source, found {}", sources.len()));
    }
    if !g.is_deterministic() {
        return bad("two out-edges of one node share a label".into());
    }
    let inc = g.in_adjacency();
    for u in 1..=n {
        if inc[u].iter().any(|&(_, c)| c == HASH) {
            return bad(format!("node {u} has an in-edge labeled #"));
        }
        if inc[u].windows(2).any(|w| w[0].1 != w[1].1) {
            return bad(format!("in-edges of node {u} carry different labels"));
        }
    }
    let out = g.out_adjacency();
    let source = sources[0];
    let mut reached = vec![false; n + 1];
    reached[source] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &(_, v) in &out[u] {
            if !reached[v] {
                reached[v] = true;
                queue.push_back(v);
            }
        }
    }
    if let Some(u) = (1..=n).find(|&u| !reached[u]) {
        return bad(format!("node {u} is not reachable from the source"));
    }
    check_wheeler_order(g, order).map_err(PipelineError::NotWheelerOrder)?;

    // Everything below works on order positions 0..n.
    let mut label = vec![HASH; n];
    let mut min_pred = vec![NONE; n];
    let mut max_pred = vec![NONE; n];
    for u in 1..=n {
        let x = pos[u];
        if let Some(&(_, c)) = inc[u].first() {
            label[x] = c;
            min_pred[x] = inc[u].iter().map(|&(v, _)| pos[v]).min().unwrap();
            max_pred[x] = inc[u].iter().map(|&(v, _)| pos[v]).max().unwrap();
        }
    }

    // A single path from the source: in-degree one and a single-path predecessor.
    let mut unique = vec![false; n];
    unique[pos[source]] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &(_, v) in &out[u] {
            if inc[v].len() == 1 && !unique[pos[v]] {
                unique[pos[v]] = true;
                queue.push_back(v);
            }
        }
    }

    let gi = Pruned::new(min_pred.clone());
    let gs = Pruned::new(max_pred.clone());

    // eq[x]: sup of position x equals inf of position x + 1.
    let mut eq = vec![false; n];
    let mut gi_rep_len = vec![0usize; n];
    for (rep, len) in gi.cycles() {
        gi_rep_len[rep] = len;
    }
    for (a, len_a) in gs.cycles() {
        let b = a + 1;
        if b >= n || gi_rep_len[b] == 0 {
            continue;
        }
        let len_b = gi_rep_len[b];
        // Two periodic strings agreeing on len_a + len_b symbols are equal.
        let (mut x, mut y) = (a, b);
        let mut same = true;
        for _ in 0..len_a + len_b {
            if label[x] != label[y] {
                same = false;
                break;
            }
            x = max_pred[x];
            y = min_pred[y];
        }
        if !same {
            continue;
        }
        let steps = len_a / gcd(len_a, len_b) * len_b;
        let (mut x, mut y) = (a, b);
        for _ in 0..steps {
            if y != x + 1 {
                return Err(PipelineError::CycleMismatch {
                    first: order[x],
                    second: order[y],
                });
            }
            eq[x] = true;
            x = max_pred[x];
            y = min_pred[y];
        }
    }
    for &x in &gs.topo {
        let y = x + 1;
        if y >= n || max_pred[x] == NONE || min_pred[y] == NONE {
            continue;
        }
        let p = max_pred[x];
        eq[x] = label[x] == label[y] && min_pred[y] == p + 1 && eq[p];
    }

    let mut inf = vec![0usize; n + 1];
    let mut sup = vec![0usize; n + 1];
    let mut r = 1;
    for x in 0..n {
        if x > 0 && !eq[x - 1] {
            r += 1;
        }
        inf[x] = r;
        if !unique[x] {
            r += 1;
        }
        sup[x] = r;
    }
    let inf = (1..=n).map(|u| inf[pos[u]]).collect();
    let sup = (1..=n).map(|u| sup[pos[u]]).collect();
    Ok(InfSupRanks::new(inf, sup))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
