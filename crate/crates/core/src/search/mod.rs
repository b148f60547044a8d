//! Constructions of extremal C4-free graphs and exhaustive search for small
//! Ramsey values.

pub mod canon;
pub mod deletion;
pub mod enumerate;
pub mod probe;
pub mod subgraph;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::GeometryError;
use crate::graph::Graph;
use crate::ramsey::RamseyError;

pub use canon::{canonical_form, CanonForm};
pub use deletion::{random_delete_construction, DeletionOverrides, DeletionRun};
pub use enumerate::{
    enumerate_c4_free, enumerate_graphs, search_exact, Enumeration, ExactOutcome, ExhaustionProof, MinDegreePruner,
    NoPrune, Pruner, MAX_C4_FREE_ORDER, MAX_UNFILTERED_ORDER,
};
pub use probe::{probe_gq, ProbeConfig};
pub use subgraph::greedy_min_degree_subgraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("budget of {budget} exhausted without a result; nothing is claimed about existence")]
    BudgetExhausted { budget: u64 },
    #[error("no success in {attempts} attempts")]
    AttemptsExhausted { attempts: u64 },
    #[error("default constants give m = {m} < 1 at this n; the smallest n with m >= 1 is {min_n}")]
    AsymptoticRegimeNotReached { m: i64, min_n: u64 },
    #[error("order {order} is above the supported cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Ramsey(#[from] RamseyError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{0}")]
    Construction(String),
}

impl From<crate::Error> for SearchError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::Geometry(g) => SearchError::Geometry(g),
            crate::Error::Ramsey(r) => SearchError::Ramsey(r),
            crate::Error::Search(s) => s,
            other => SearchError::Construction(other.to_string()),
        }
    }
}

/// Graph plus its graph6 string, for JSON artifacts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphArtifact {
    pub order: usize,
    pub graph6: String,
}

impl From<&Graph> for GraphArtifact {
    fn from(g: &Graph) -> Self {
        GraphArtifact { order: g.order(), graph6: crate::graph::g6_encode(g) }
    }
}
