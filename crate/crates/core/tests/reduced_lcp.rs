mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use wheeler_lcp::oracle::gamma_star_prefix;
use wheeler_lcp::{
    baseline_lcp_star, lcp_star_to_vec, lcp_star_with, oracle_lcp_star, LcpOptions,
    SuccinctWheelerIndex,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn three_way_agreement(p in common::pseudoforest()) {
        let idx = SuccinctWheelerIndex::build(&p).unwrap();
        let (stream, report) = lcp_star_to_vec(&idx).unwrap();
        let want = oracle_lcp_star(&p).unwrap();
        prop_assert_eq!(&stream.by_position(), &want);
        prop_assert_eq!(&baseline_lcp_star(&idx).0, &want);
        prop_assert_eq!(report.emitted, p.n() - 1);
        prop_assert!(report.work >= report.forward_steps);
    }

    #[test]
    fn stream_discipline(p in common::pseudoforest()) {
        let idx = SuccinctWheelerIndex::build(&p).unwrap();
        let (stream, _) = lcp_star_to_vec(&idx).unwrap();
        let values: Vec<u64> = stream.pairs.iter().map(|&(_, d)| d).collect();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        let positions: BTreeSet<usize> = stream.pairs.iter().map(|&(i, _)| i).collect();
        prop_assert_eq!(positions.len(), p.n() - 1);
        prop_assert!(positions.iter().copied().eq(2..=p.n()));
        let present: BTreeSet<u64> = values.iter().copied().collect();
        for &d in &present {
            prop_assert!(d == 0 || present.contains(&(d - 1)), "value {} without {}", d, d - 1);
        }
    }

    #[test]
    fn values_are_witnessed(p in common::pseudoforest()) {
        let idx = SuccinctWheelerIndex::build(&p).unwrap();
        let (stream, _) = lcp_star_to_vec(&idx).unwrap();
        for &(i, d) in &stream.pairs {
            let a = gamma_star_prefix(&p, i - 1, d as usize + 1);
            let b = gamma_star_prefix(&p, i, d as usize + 1);
            prop_assert_eq!(&a[..d as usize], &b[..d as usize]);
            prop_assert!(a[d as usize] < b[d as usize]);
        }
    }

    #[test]
    fn queue_representation_is_invisible(p in common::pseudoforest()) {
        let idx = SuccinctWheelerIndex::build(&p).unwrap();
        let run = |t| {
            let mut v = vec![0u64; p.n() - 1];
            let r = lcp_star_with(&idx, LcpOptions { queue_threshold: Some(t) }, |i, d| v[i - 2] = d).unwrap();
            (v, r.forward_steps)
        };
        prop_assert_eq!(run(0), run(usize::MAX));
    }
}
