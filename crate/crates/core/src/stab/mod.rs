//! Bridges, dynamic interval stabbing and the streaming reduced-LCP algorithm.

mod bridge;
mod interval_tree;
mod lcp_star;
mod queue;
mod stabber;

pub use bridge::{enumerate_bridges, Bridge};
pub use lcp_star::{
    lcp_star, lcp_star_to_vec, lcp_star_with, LcpError, LcpOptions, LcpReport, LcpStream,
};
pub use queue::LevelQueue;
pub use stabber::{BlockedStabber, StabError};
