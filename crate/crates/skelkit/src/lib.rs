//! skelkit: structural equivalence, SEP groups, prime graphs, complete
//! skeletons, and the exact multiplicity of the -1 adjacency eigenvalue for
//! simple undirected graphs.
//!
//! Everything is exact: partitions and skeletons are purely combinatorial,
//! and the linear algebra runs on integer scalars (generic over
//! [`linalg::ExactScalar`], with the arbitrary-precision [`Int`] as the
//! default). All types are immutable after construction and safe to share
//! across threads.

#![forbid(unsafe_code)]

pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod format;
pub mod graph;
pub mod linalg;
pub mod prime_graph;
pub mod sep_group;
pub mod skeleton;
pub mod spectral;

/// Default exact scalar: arbitrary-precision signed integers.
pub type Int = num_bigint::BigInt;

/// Square integer matrix with arbitrary-precision entries, as used by the
/// public spectral operations.
pub type IntMatrix = linalg::SquareMatrix<Int>;

pub use crate::error::{Error, Result};
pub use crate::graph::{DistanceTable, Graph};
