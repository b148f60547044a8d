//! Constructions, certificates and exhaustive search for the Ramsey numbers
//! r(C4, B_n^(k)) of the 4-cycle against book graphs.
//!
//! The pieces, bottom up:
//!
//! - [`gf`]: arithmetic in GF(p^e).
//! - [`geometry`]: PG(2, q) and the orthogonal polarity graph `ER_q`.
//! - [`graph`]: bitset graphs, 4-cycle and common-neighbour kernels, graph6.
//! - [`bounds`]: every closed-form bound, evaluated exactly.
//! - [`ramsey`]: book numbers of complements, witnesses and lower-bound certificates.
//! - [`search`]: induced-subgraph and random-deletion constructions, orderly
//!   generation of C4-free graphs, and a heuristic probe for small witnesses.

pub mod arith;
pub mod bounds;
pub mod geometry;
pub mod gf;
pub mod graph;
pub mod ramsey;
pub mod search;

pub use bounds::{BoundReport, BoundsError, BoundsParams};
pub use geometry::{er_graph, polarity_graph, GeometryError, ProjPoint};
pub use gf::{Field, FieldElement, GfError};
pub use graph::{Graph, GraphError, VertexSet};
pub use ramsey::{BookWitness, LowerBoundCertificate, RamseyError};
pub use search::{DeletionRun, ExhaustionProof, SearchError};

use thiserror::Error;

/// Version string recorded in search artifacts.
pub const GENERATOR_VERSION: &str = concat!("c4book-", env!("CARGO_PKG_VERSION"), "/canaug-mindeg");

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Ramsey(#[from] RamseyError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
}
