use proptest::prelude::*;
use wheeler_lcp::oracle::{oracle_ranks, oracle_sorted_copies};
use wheeler_lcp::{
    compute_lcp, compute_lcp_semi_dfa, eliminate_sources, gen_random_graph,
    gen_random_wheeler_semi_dfa, oracle_lcp_full, semi_dfa_map, sort_inf_sup, HASH,
};

fn graph_params() -> impl Strategy<Value = (usize, usize, u32, u64)> {
    (1usize..=24, 1u32..=5, any::<u64>()).prop_flat_map(|(n, s, seed)| {
        let lo = n.div_ceil(2);
        let hi = 60.min(n * n * s as usize).max(lo);
        (Just(n), lo..=hi, Just(s), Just(seed))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn refinement_matches_expansion((n, m, s, seed) in graph_params()) {
        let g = gen_random_graph(n, m, s, seed).unwrap();
        let aug = eliminate_sources(&g);
        prop_assert_eq!(sort_inf_sup(&aug), oracle_ranks(&aug));
    }

    #[test]
    fn end_to_end_matches_oracle((n, m, s, seed) in graph_params()) {
        let g = gen_random_graph(n, m, s, seed).unwrap();
        let out = compute_lcp(&g).unwrap();
        prop_assert_eq!(&out.lcp, &oracle_lcp_full(&g), "graph:\n{}", g.to_text());
        prop_assert_eq!(out.lcp.values().len(), 2 * n - 1);
    }

    #[test]
    fn infinity_sits_between_equal_omega_strings((n, m, s, seed) in graph_params()) {
        let g = gen_random_graph(n, m, s, seed).unwrap();
        let lcp = oracle_lcp_full(&g);
        let copies = oracle_sorted_copies(&g);
        for (k, v) in lcp.values().iter().enumerate() {
            let (a, b) = (&copies[k].2, &copies[k + 1].2);
            let omega = !a.contains(&HASH) && !b.contains(&HASH);
            prop_assert_eq!(v.is_inf(), omega && a == b);
        }
    }

    #[test]
    fn semi_dfa_map_matches_refinement(n in 2usize..=24, s in 1u32..=4, seed in any::<u64>()) {
        let (g, order) = gen_random_wheeler_semi_dfa(n, s, seed).unwrap();
        prop_assert_eq!(semi_dfa_map(&g, &order).unwrap(), sort_inf_sup(&eliminate_sources(&g)));
        prop_assert_eq!(compute_lcp_semi_dfa(&g, &order).unwrap().lcp, compute_lcp(&g).unwrap().lcp);
    }
}
