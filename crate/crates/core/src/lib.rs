//! Recognition of module-composed graphs.
//!
//! A graph is *module-composed* when it can be built by one-vertex
//! insertions such that the neighbourhood of every inserted vertex is a
//! module (homogeneous set) of the graph built so far. The insertion order is
//! a [`ModuleSequence`].
//!
//! The crate provides:
//!
//! * [`Graph`] plus constructors for the small graphs the theory revolves
//!   around ([`NamedGraph`]) and random generators ([`generate`]);
//! * modular decomposition ([`modular`]);
//! * a recognizer driven by the modular decomposition tree and an
//!   exponential elimination oracle ([`recognize`]);
//! * the bipartite distance-hereditary pipeline: BFS levels, the level
//!   test, independent module-sequences and Lex-BFS ([`bdh`]);
//! * brute-force class oracles for cross-checking ([`oracles`]);
//! * a census harness over exhaustive or random graph families ([`census`]).
//!
//! ```
//! use modcomp::{recognize, verify_module_sequence, NamedGraph};
//!
//! let gem = NamedGraph::Gem.build().unwrap();
//! let seq = recognize(&gem).into_sequence().expect("the gem is module-composed");
//! assert!(verify_module_sequence(&gem, &seq).unwrap());
//!
//! let house = NamedGraph::House.build().unwrap();
//! assert!(!recognize(&house).is_yes());
//! ```

pub mod bdh;
pub mod census;
pub mod generate;
pub mod graph;
pub mod modular;
pub mod named;
pub mod oracles;
pub mod recognize;
pub mod sequence;

pub use bdh::{bfs_levels, check_bdh, independent_module_sequence, is_bipartite, lex_bfs, BfsLevels, TieBreak};
pub use graph::{Graph, Subgraph};
pub use modular::{
    is_module, modular_decomposition, quotient_graph, strong_modules_bruteforce, MDNode, MDTree, NodeKind,
};
pub use named::NamedGraph;
pub use oracles::{class_membership, classify, ClassId, ClassReport, Membership};

pub use recognize::{brute_force_recognize, recognize, Recognition};
pub use sequence::{verify_independent_module_sequence, verify_module_sequence, ModuleSequence};

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} is limited to {max} vertices, got {n}")]
    SizeGuard { what: &'static str, n: usize, max: usize },
    #[error("sequence is not a permutation of the vertex set")]
    NotPermutation,
    #[error("node {0} is a leaf of the decomposition tree")]
    LeafNode(usize),
    #[error("graph is not a cograph")]
    NotCograph,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::SizeGuard { what, n, max })
    } else {
        Ok(())
    }
}
