//! Mutual visibility in directed graphs.
//!
//! Two vertices of a digraph are mutually visible with respect to a set `S`
//! when a shortest path exists in each direction whose internal vertices
//! avoid `S`. This crate provides:
//!
//! - [`digraph`]: the graph representation, edge-list/DOT formats, and BFS
//!   distances (plain and with blocked vertices);
//! - [`visibility`]: the four visibility variants, the polynomial verifier,
//!   and a brute-force oracle used for cross-checking;
//! - [`structure`]: strongly connected components, the condensation graph,
//!   strong bridges and their cuts, and neighborhood counts;
//! - [`solver`]: exact mutual-visibility numbers with structural pruning,
//!   plus brute-force baselines (directed and undirected);
//! - [`generators`]: constructors for the graph families used throughout
//!   (cycles, DAGs, tournaments, Paley tournaments, bridged cliques, ...).
//!
//! ```
//! use mvd::generators::gen_cycle;
//! use mvd::solver::mu;
//!
//! let d = gen_cycle(9).unwrap();
//! assert_eq!(mu(&d).unwrap().mu, 2);
//! ```

pub mod digraph;
mod error;
pub mod generators;
pub mod solver;
pub mod structure;
pub mod visibility;

pub use digraph::{Digraph, DistanceVector, VertexId};
pub use error::{Error, Result};

// The guide's code samples double as doctests, so `cargo test --doc`
// keeps book/ and the crate in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/visibility.md")]
    mod visibility {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
