//! The pseudoforest of distinct infimum and supremum strings.

use super::sort::{InfSupRanks, Side};
use super::PipelineError;
use crate::graph::{AugmentedGraph, WheelerPseudoforest};

/// The reduced pseudoforest together with the map from node copies to its nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gis {
    pub forest: WheelerPseudoforest,
    pub map: InfSupRanks,
}

/// Node `r` of the result is the `r`-th smallest distinct string `alpha`; its
/// incoming edge is `alpha[2..] -alpha[1]-> alpha`, read off any copy of rank `r`.
pub fn build_gis(g: &AugmentedGraph, ranks: &InfSupRanks) -> Result<Gis, PipelineError> {
    let n = g.n();
    assert_eq!(ranks.n(), n, "ranks must cover every node");
    let inc = g.graph().in_adjacency();
    let count = ranks.count();
    let mut edge: Vec<Option<(usize, u32, usize, Side)>> = vec![None; count + 1];
    for u in 1..=n {
        let (c_inf, p_inf) = inc[u]
            .iter()
            .map(|&(v, c)| (c, ranks.inf(v)))
            .min()
            .expect("no sources");
        let (c_sup, p_sup) = inc[u]
            .iter()
            .map(|&(v, c)| (c, ranks.sup(v)))
            .max()
            .expect("no sources");
        for (side, r, parent, c) in [
            (Side::Inf, ranks.inf(u), p_inf, c_inf),
            (Side::Sup, ranks.sup(u), p_sup, c_sup),
        ] {
            match edge[r] {
                None => edge[r] = Some((parent, c, u, side)),
                Some((p0, c0, u0, s0)) if (p0, c0) != (parent, c) => {
                    return Err(PipelineError::WitnessConflict {
                        rank: r,
                        first: (u0, s0),
                        second: (u, side),
                    });
                }
                Some(_) => {}
            }
        }
    }
    let mut parents = Vec::with_capacity(count);
    let mut labels = Vec::with_capacity(count);
    for (r, e) in edge.iter().enumerate().skip(1) {
        let (p, c, _, _) = e.ok_or(PipelineError::SparseRanks { rank: r })?;
        parents.push(p);
        labels.push(c);
    }
    let forest = WheelerPseudoforest::from_parents(g.alphabet_size(), parents, labels)?;
    forest
        .check_wheeler_axioms()
        .map_err(PipelineError::GisNotWheeler)?;
    Ok(Gis {
        forest,
        map: ranks.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{eliminate_sources, parse_graph_str};
    use crate::pipeline::sort::sort_inf_sup;

    fn gis(text: &str) -> Gis {
        let g = eliminate_sources(&parse_graph_str(text).unwrap());
        build_gis(&g, &sort_inf_sup(&g)).unwrap()
    }

    #[test]
    fn all_hash_loops_collapse_to_one_node() {
        // Two sources feeding a sink: both sources become #^omega.
        let out = gis("3 2 1\n1 3 1\n2 3 1");
        assert_eq!(out.map.inf(1), out.map.inf(2));
        assert_eq!(out.forest.parent(1), 1);
        assert_eq!(out.forest.lambda(1), 0);
    }

    #[test]
    fn cycle_becomes_a_self_loop() {
        let out = gis("2 2 1\n1 2 1\n2 1 1");
        assert_eq!(out.forest.n(), 1);
        assert_eq!((out.forest.parent(1), out.forest.lambda(1)), (1, 1));
    }

    #[test]
    fn conflicting_witnesses_are_rejected() {
        let g = eliminate_sources(&parse_graph_str("3 2 2\n1 2 1\n1 3 2").unwrap());
        let bad = InfSupRanks::new(vec![1, 2, 2], vec![1, 2, 2]);
        assert!(matches!(
            build_gis(&g, &bad),
            Err(PipelineError::WitnessConflict { rank: 2, .. })
        ));
    }
}
