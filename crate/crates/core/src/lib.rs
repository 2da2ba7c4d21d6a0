//! Longest paths and minimum path covers on cocomparability graphs.
//!
//! The pipeline takes a graph `G` with an umbrella-free ordering `π`, runs
//! LDFS+ on `π` to obtain an ordering `σ` that is both umbrella-free and an
//! LDFS ordering, and then either
//!
//! * sweeps `σ` with the rightmost-neighbor rule to get a minimum path cover
//!   ([`search::min_path_cover`]), or
//! * fills an `O(n³)`-entry table in `O(n⁴)` time whose best entry expands to
//!   a longest path ([`longest_path::longest_path`]).
//!
//! Exponential reference solvers live in [`oracle`]; seeded instance
//! generators with certified orderings live in [`generators`].

mod bits;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod longest_path;
pub mod normal;
pub mod oracle;
pub mod ordering;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, Path, PathCover};
pub use ordering::{TripleWitness, VertexOrdering, ViolationKind};
