//! LCP arrays of edge-labeled graphs.
//!
//! The input graph is reduced to a deterministic Wheeler pseudoforest whose
//! nodes are the distinct infimum and supremum strings; its reduced LCP array is
//! streamed by a queue-driven traversal that stabs and removes bridges over a
//! succinct FM-style index; the result is finally expanded back to the input.

pub mod baseline;
pub mod bits;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod index;
pub mod measure;
pub mod oracle;
pub mod pipeline;
pub mod stab;

pub use baseline::{baseline_lcp_star, BaselineReport};
pub use generate::{
    gen_adversarial, gen_random_graph, gen_random_pseudoforest, gen_random_wheeler_semi_dfa,
    GenError,
};
pub use graph::{
    check_wheeler_order, eliminate_sources, parse_graph, parse_graph_str, parse_graph_with_cap,
    AugmentedGraph, Axiom, AxiomViolation, Edge, GraphError, LabeledGraph, PseudoforestError,
    WheelerPseudoforest, DEFAULT_SIGMA_CAP, HASH,
};
pub use index::{IndexError, SpaceReport, SuccinctWheelerIndex};
pub use measure::{measure_adversarial, SeparationRow, CSV_HEADER};
pub use oracle::{oracle_lcp_full, oracle_lcp_star, NaiveStabber, OracleError};
pub use pipeline::{
    build_gis, compute_lcp, compute_lcp_semi_dfa, expand_lcp, lcp_from_ranks, semi_dfa_map,
    sort_inf_sup, Gis, InfSupRanks, LcpArray, LcpOutput, LcpValue, PipelineError, Side,
};
pub use stab::{
    enumerate_bridges, lcp_star, lcp_star_to_vec, lcp_star_with, BlockedStabber, Bridge, LcpError,
    LcpOptions, LcpReport, LcpStream, LevelQueue, StabError,
};
