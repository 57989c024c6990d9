//! Shared fixtures for the criterion benchmarks.

use locdom::families::{cycle, g_eta_construction, path, spider_k4, wheel};
use locdom::Graph;

/// Graphs of increasing size used by the solver benchmarks.
pub fn solver_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("P15", path(15).unwrap().graph),
        ("C15", cycle(15).unwrap().graph),
        ("W1,11", wheel(12).unwrap().graph),
        ("S3,4", spider_k4(3).unwrap().graph),
        ("g_eta(2)", g_eta_construction(2).unwrap().graph),
    ]
}

/// The 30-vertex graph with η = 3 that attains the upper bound on n.
pub fn large_fixture() -> Graph {
    g_eta_construction(3).unwrap().graph
}
