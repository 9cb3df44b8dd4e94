mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wheeler_lcp::oracle::NaiveStabber;
use wheeler_lcp::{enumerate_bridges, BlockedStabber, SuccinctWheelerIndex};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_scan_with_deletion(p in common::pseudoforest(), seed in any::<u64>(), keep in 0.3f64..=1.0) {
        let idx = SuccinctWheelerIndex::build(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bridges: Vec<_> = enumerate_bridges(&idx).into_iter().filter(|_| rng.gen_bool(keep)).collect();
        let mut fast = BlockedStabber::build(&bridges, p.n(), p.sigma()).unwrap();
        let mut slow = NaiveStabber::new(&bridges);
        let mut returned = HashSet::new();
        for _ in 0..3 * p.n() {
            let i = rng.gen_range(1..=p.n());
            let got = fast.stab_and_remove(i);
            prop_assert_eq!(&got, &slow.stab_and_remove(i), "query {}", i);
            prop_assert!(got.len() <= p.sigma() as usize);
            for c in got {
                // One bridge per label covers i, so (label, position) pins the bridge.
                let b = bridges.iter().find(|b| b.c == c && b.is_stabbed_by(i)).unwrap();
                prop_assert!(returned.insert(*b), "bridge {} returned twice", b);
            }
        }
        prop_assert_eq!(fast.surviving(), slow.surviving());
    }
}
