//! Inputs for the criterion benches.

use wheeler_lcp::{
    gen_adversarial, gen_random_graph, gen_random_pseudoforest, LabeledGraph, SuccinctWheelerIndex,
};

pub fn adversarial_index(k: usize) -> SuccinctWheelerIndex {
    SuccinctWheelerIndex::build(&gen_adversarial(k)).expect("family is Wheeler")
}

/// Index of a seeded random pseudoforest; `sigma` counts user labels.
pub fn random_index(n: usize, sigma: u32, seed: u64) -> SuccinctWheelerIndex {
    let p = gen_random_pseudoforest(n, sigma, seed).expect("sampler succeeds at bench sizes");
    SuccinctWheelerIndex::build(&p).expect("generated forests are Wheeler")
}

pub fn random_graph(n: usize, m: usize, sigma: u32, seed: u64) -> LabeledGraph {
    gen_random_graph(n, m, sigma, seed).expect("parameters admit a graph")
}
