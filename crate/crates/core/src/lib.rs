//! Construction, transformation, verification and exhaustive search of
//! b-edge consecutive magic labelings.
//!
//! A total labeling of a graph `G = (V, E)` is a bijection from `V ∪ E` onto
//! `{1, ..., |V| + |E|}`. It is *edge-magic* when `λ(x) + λ(y) + λ(xy)` is the
//! same constant `k` for every edge, and *b-edge consecutive* when in addition
//! the edge labels are exactly `{b + 1, ..., b + |E|}` for some `0 <= b <= |V|`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the graph type, bipartitions and the named families
//!   (caterpillars, double stars, lobsters, cycles, complete bipartite graphs).
//! * [`labeling`] verifies and classifies labelings.
//! * [`constructions`] builds explicit labelings and maps labelings to labelings.
//! * [`search`] is the exhaustive backtracking oracle.
//! * [`analysis`] compares structural predictions with what the oracle finds.
//! * [`io`] covers the JSON documents and DOT export used by the CLI.

pub mod analysis;
pub mod constructions;
pub mod corpus;
mod error;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Bipartition, CaterpillarSpec, Family, FamilyHandle, Graph, Side, VertexName};
pub use labeling::{Classification, TotalLabeling, VertexLabeling};
pub use search::{SearchQuery, SearchReport};

/// Labels, magic constants and consecutive indices are all small positive
/// integers.
pub type Label = u32;
