//! Exact computation of locating and dominating codes in small graphs.
//!
//! The crate computes the domination number γ, the metric dimension β, the
//! metric-location-domination number η and the location-domination number λ
//! of a connected graph together with optimal codes, builds the graph
//! families on which these parameters are studied, enumerates connected
//! graphs up to isomorphism, and checks the known bounds and
//! characterizations against exhaustive computation.

pub mod bitset;
pub mod codes;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod solvers;
pub mod theorems;

pub use bitset::{VertexSet, MAX_ORDER};
pub use codes::{
    is_dominating, is_ld, is_locating, is_mld, metric_vector, Code, CodeChecker, MetricVector,
};
pub use error::{Error, Result};
pub use graph::{
    are_isomorphic, canonical_form, complement, disjoint_union, join, strong_product, tree_profile,
    CanonicalForm, DistanceMatrix, Graph, TreeProfile,
};
pub use solvers::{
    domination_number, full_report, ld_number, metric_dimension, mld_number, solve, Parameter,
    ParameterReport, Solution,
};
