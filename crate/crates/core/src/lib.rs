//! Almost-clique minimal separators for treewidth preprocessing.
//!
//! Graphs are immutable values with 0-based vertex ids. Separators can be
//! listed from a minimal triangulation ([`acs::heuristic_list`]), by scanning
//! every vertex ([`acs::standard_list`]) or exhaustively ([`acs::all_acs`]);
//! [`acs::preprocess`] fills them round after round and splits the result
//! into atoms along clique minimal separators.

pub mod acs;
pub mod cliquesep;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod pace;
pub mod report;
pub mod separators;
pub mod treedec;
pub mod triangulation;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use separators::{Origin, Separator};
