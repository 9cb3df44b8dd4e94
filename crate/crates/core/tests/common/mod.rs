#![allow(dead_code)]

use proptest::prelude::*;
use wheeler_lcp::{gen_random_pseudoforest, WheelerPseudoforest};

/// Random pseudoforests with distinct strings, `n <= 64`, user alphabet `<= 8`.
pub fn pseudoforest() -> impl Strategy<Value = WheelerPseudoforest> {
    (1usize..=64, 1u32..=8, any::<u64>()).prop_filter_map("sampler exhausted", |(n, s, seed)| {
        gen_random_pseudoforest(n, s, seed).ok()
    })
}
