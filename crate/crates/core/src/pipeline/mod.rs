//! From an arbitrary graph to its LCP array: source elimination, ranking of
//! infimum/supremum strings, the reduced pseudoforest, the streaming reduced
//! LCP and the final expansion.

mod expand;
mod gis;
mod semi_dfa;
mod sort;

use thiserror::Error;

pub use expand::{expand_lcp, sorted_copies, string_lengths, LcpArray, LcpValue};
pub use gis::{build_gis, Gis};
pub use semi_dfa::semi_dfa_map;
pub use sort::{sort_inf_sup, InfSupRanks, Side};

use crate::graph::{
    eliminate_sources, AugmentedGraph, AxiomViolation, LabeledGraph, PseudoforestError,
};
use crate::index::{IndexError, SuccinctWheelerIndex};
use crate::stab::{lcp_star, LcpError, LcpReport};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("map: order is not a permutation: {0}")]
    InvalidOrder(String),
    #[error("map: not a semi-DFA: {0}")]
    NotSemiDfa(String),
    #[error("map: {0}")]
    NotWheelerOrder(AxiomViolation),
    #[error(
        "map: cycles through nodes {first} and {second} spell equal strings but are not adjacent"
    )]
    CycleMismatch { first: usize, second: usize },
    #[error(
        "gis: rank {rank} has conflicting incoming edges from copies {first:?} and {second:?}"
    )]
    WitnessConflict {
        rank: usize,
        first: (usize, Side),
        second: (usize, Side),
    },
    #[error("gis: rank {rank} has no copy")]
    SparseRanks { rank: usize },
    #[error("gis: {0}")]
    Gis(#[from] PseudoforestError),
    #[error("gis: result is not Wheeler-sorted: {0}")]
    GisNotWheeler(AxiomViolation),
    #[error("index: {0}")]
    Index(#[from] IndexError),
    #[error("lcp*: {0}")]
    Lcp(#[from] LcpError),
    #[error("expand: expected {expected} reduced LCP values, found {found}")]
    LcpLength { expected: usize, found: usize },
    #[error("expand: copy ({node}, {side}) has rank {rank} outside 1..={count}")]
    MapOutOfRange {
        node: usize,
        side: Side,
        rank: usize,
        count: usize,
    },
}

/// Everything produced by an end-to-end run.
#[derive(Clone, Debug)]
pub struct LcpOutput {
    pub lcp: LcpArray,
    pub gis: Gis,
    /// Reduced LCP of the pseudoforest by position: entry `k` is node `k + 2`.
    pub lcp_star: Vec<u64>,
    pub report: LcpReport,
}

/// Runs every stage on a general graph, ranking strings by refinement.
pub fn compute_lcp(g: &LabeledGraph) -> Result<LcpOutput, PipelineError> {
    let aug = eliminate_sources(g);
    let ranks = sort_inf_sup(&aug);
    lcp_from_ranks(&aug, &ranks)
}

/// Runs every stage on a Wheeler semi-DFA with a known Wheeler order.
pub fn compute_lcp_semi_dfa(g: &LabeledGraph, order: &[usize]) -> Result<LcpOutput, PipelineError> {
    let ranks = semi_dfa_map(g, order)?;
    lcp_from_ranks(&eliminate_sources(g), &ranks)
}

/// The stages after ranking.
pub fn lcp_from_ranks(
    aug: &AugmentedGraph,
    ranks: &InfSupRanks,
) -> Result<LcpOutput, PipelineError> {
    let gis = build_gis(aug, ranks)?;
    let idx = SuccinctWheelerIndex::build(&gis.forest)?;
    let mut star = vec![0u64; gis.forest.n().saturating_sub(1)];
    let report = lcp_star(&idx, |i, d| star[i - 2] = d)?;
    let lcp = expand_lcp(&star, &gis.forest, &gis.map)?;
    Ok(LcpOutput {
        lcp,
        gis,
        lcp_star: star,
        report,
    })
}
