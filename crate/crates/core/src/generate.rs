//! Seeded instance generators. All randomness comes from `ChaCha8Rng`, so a
//! seed fixes the output on every platform.

use std::collections::{HashSet, VecDeque};

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Edge, LabeledGraph, WheelerPseudoforest, HASH};
use crate::oracle::oracle_lcp_star;

/// Attempts before a rejection sampler gives up.
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("no acceptable instance after {0} attempts")]
    Exhausted(usize),
}

/// The quadratic family for the interval-extension baseline, in Wheeler order:
/// node 1 carries the `#`-loop, node 2 is `u` with an `a`-loop, nodes
/// `3..=k+2` are the chain `u -b-> v_1 -b-> ... -b-> v_k` and nodes
/// `k+3..=2k+2` are the leaves `v_k -c_i-> z_i`. Labels: `a = 1`, `b = 2`,
/// `c_i = 2 + i`.
pub fn gen_adversarial(k: usize) -> WheelerPseudoforest {
    assert!(k >= 1, "k >= 1");
    let n = 2 * k + 2;
    let mut parents = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    parents.extend([1, 2]);
    labels.extend([HASH, 1]);
    for i in 1..=k {
        parents.push(i + 1);
        labels.push(2);
    }
    for i in 1..=k {
        parents.push(k + 2);
        labels.push(2 + i as u32);
    }
    WheelerPseudoforest::from_parents(k as u32 + 3, parents, labels).expect("valid by construction")
}

/// A random deterministic Wheeler pseudoforest on `n` nodes over user labels
/// `1..=sigma`, with pairwise distinct strings.
///
/// Labels are drawn and sorted; the nodes entered by label `c` get distinct
/// predecessors in increasing order. Node 1 usually carries a `#`-loop.
pub fn gen_random_pseudoforest(
    n: usize,
    sigma: u32,
    seed: u64,
) -> Result<WheelerPseudoforest, GenError> {
    if n == 0 {
        return Err(GenError::Parameters("n must be at least 1".into()));
    }
    if sigma == 0 && n > 1 {
        return Err(GenError::Parameters(
            "only one node fits an empty alphabet".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let hash_root = sigma == 0 || rng.gen_bool(0.75);
        let first = usize::from(hash_root);
        let mut labels: Vec<u32> = (first..n).map(|_| rng.gen_range(1..=sigma)).collect();
        labels.sort_unstable();
        let mut parents = Vec::with_capacity(n);
        if hash_root {
            labels.insert(0, HASH);
            parents.push(1);
        }
        let mut k = first;
        while k < n {
            let c = labels[k];
            let run = labels[k..].iter().take_while(|&&x| x == c).count();
            let mut preds: Vec<usize> = index::sample(&mut rng, n, run)
                .into_iter()
                .map(|p| p + 1)
                .collect();
            preds.sort_unstable();
            parents.extend(preds);
            k += run;
        }
        let p = WheelerPseudoforest::from_parents(sigma + 1, parents, labels)
            .expect("valid by construction");
        if oracle_lcp_star(&p).is_ok() {
            return Ok(p);
        }
    }
    Err(GenError::Exhausted(MAX_ATTEMPTS))
}

/// A random graph with `m` distinct edges over user labels `1..=sigma` and no
/// isolated node. Needs `n <= 2m <= 2 n^2 sigma`.
pub fn gen_random_graph(
    n: usize,
    m: usize,
    sigma: u32,
    seed: u64,
) -> Result<LabeledGraph, GenError> {
    if n == 0 || sigma == 0 {
        return Err(GenError::Parameters(
            "n and sigma must be at least 1".into(),
        ));
    }
    if 2 * m < n || m > n * n * sigma as usize {
        return Err(GenError::Parameters(format!(
            "{m} edges cannot cover {n} nodes without repeats"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut covered = vec![false; n + 1];
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(&mut rng);
    for (k, &u) in order.iter().enumerate() {
        if covered[u] {
            continue;
        }
        // Pair uncovered nodes so covering needs at most ceil(n/2) edges.
        let v = order[k + 1..]
            .iter()
            .copied()
            .find(|&v| !covered[v])
            .unwrap_or_else(|| rng.gen_range(1..=n));
        let c = rng.gen_range(1..=sigma);
        let e = if rng.gen_bool(0.5) {
            Edge::new(u, v, c)
        } else {
            Edge::new(v, u, c)
        };
        seen.insert(e);
        edges.push(e);
        covered[u] = true;
        covered[v] = true;
    }
    while edges.len() < m {
        let e = Edge::new(
            rng.gen_range(1..=n),
            rng.gen_range(1..=n),
            rng.gen_range(1..=sigma),
        );
        if seen.insert(e) {
            edges.push(e);
        }
    }
    LabeledGraph::new(n, sigma, edges).map_err(|e| GenError::Parameters(e.to_string()))
}

/// A random Wheeler semi-DFA on `n` nodes over user labels `1..=sigma`,
/// returned with a Wheeler order. Node ids are shuffled so the order is not
/// the identity.
///
/// In order positions, position 0 is the source and the others get sorted
/// labels. The nodes entered by `c` split a sorted set of distinct
/// predecessors into consecutive nonempty groups, one per target.
pub fn gen_random_wheeler_semi_dfa(
    n: usize,
    sigma: u32,
    seed: u64,
) -> Result<(LabeledGraph, Vec<usize>), GenError> {
    if n < 2 || sigma == 0 {
        return Err(GenError::Parameters("need n >= 2 and sigma >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut labels: Vec<u32> = (1..n).map(|_| rng.gen_range(1..=sigma)).collect();
        labels.sort_unstable();
        labels.insert(0, HASH);
        let mut edges = Vec::new();
        let mut x = 1;
        while x < n {
            let c = labels[x];
            let run = labels[x..].iter().take_while(|&&y| y == c).count();
            let q = rng.gen_range(run..=n.min(run + 2));
            // Bias towards earlier positions so most nodes are reachable.
            let mut preds: Vec<usize> = if rng.gen_bool(0.5) {
                index::sample(&mut rng, n, q).into_iter().collect()
            } else {
                let bound = (x + run).max(q).min(n);
                index::sample(&mut rng, bound, q).into_iter().collect()
            };
            preds.sort_unstable();
            let mut cuts: Vec<usize> = index::sample(&mut rng, q - 1, run - 1)
                .into_iter()
                .map(|c| c + 1)
                .collect();
            cuts.sort_unstable();
            cuts.insert(0, 0);
            cuts.push(q);
            for j in 0..run {
                for &p in &preds[cuts[j]..cuts[j + 1]] {
                    edges.push((p, x + j, c));
                }
            }
            x += run;
        }
        if !all_reachable(n, &edges) {
            continue;
        }
        let mut ids: Vec<usize> = (1..=n).collect();
        ids.shuffle(&mut rng);
        let edges = edges
            .iter()
            .map(|&(p, t, c)| Edge::new(ids[p], ids[t], c))
            .collect();
        let g = LabeledGraph::new(n, sigma, edges).expect("valid by construction");
        return Ok((g, ids));
    }
    Err(GenError::Exhausted(MAX_ATTEMPTS))
}

fn all_reachable(n: usize, edges: &[(usize, usize, u32)]) -> bool {
    let mut out = vec![Vec::new(); n];
    for &(p, t, _) in edges {
        out[p].push(t);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &y in &out[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_wheeler_order;
    use crate::pipeline::semi_dfa_map;

    #[test]
    fn adversarial_sizes() {
        let p = gen_adversarial(1);
        assert_eq!((p.n(), p.edges().count(), p.sigma() - 1), (4, 4, 3));
        for k in 1..=20 {
            let p = gen_adversarial(k);
            assert_eq!((p.n(), p.edges().count()), (2 * k + 2, 2 * k + 2));
            p.check_wheeler_axioms().unwrap();
            assert!(oracle_lcp_star(&p).is_ok());
        }
    }

    #[test]
    fn single_hash_node() {
        for seed in 0..5 {
            let p = gen_random_pseudoforest(1, 1, seed).unwrap();
            assert_eq!(p.n(), 1);
            assert_eq!(p.parent(1), 1);
        }
        let p = gen_random_pseudoforest(1, 0, 3).unwrap();
        assert_eq!((p.parent(1), p.lambda(1)), (1, HASH));
    }

    #[test]
    fn pseudoforests_are_reproducible_and_valid() {
        assert_eq!(
            gen_random_pseudoforest(40, 5, 11).unwrap(),
            gen_random_pseudoforest(40, 5, 11).unwrap()
        );
        let p = gen_random_pseudoforest(64, 8, 7).unwrap();
        p.check_wheeler_axioms().unwrap();
        assert!(oracle_lcp_star(&p).is_ok());
    }

    #[test]
    fn random_graphs_have_requested_shape() {
        for seed in 0..50 {
            let g = gen_random_graph(12, 20, 3, seed).unwrap();
            assert_eq!((g.n(), g.m()), (12, 20));
        }
        assert!(gen_random_graph(10, 4, 2, 0).is_err());
    }

    #[test]
    fn semi_dfas_satisfy_their_order() {
        for seed in 0..100 {
            let (g, order) = gen_random_wheeler_semi_dfa(10, 3, seed).unwrap();
            check_wheeler_order(&g, &order).unwrap();
            semi_dfa_map(&g, &order).unwrap();
        }
    }
}
