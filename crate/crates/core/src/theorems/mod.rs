//! Checkers for the bounds and characterizations of γ, β, η and λ, and
//! exhaustive sweeps of them over enumerated graphs.

mod checks;
mod verdict;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::enumeration::{connected_graphs_up_to, trees, MAX_ENUMERATION_ORDER, MAX_TREE_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use checks::{
    check_eta2_membership, check_eta_bounds, check_eta_equals_lambda_conditions,
    check_inequality_chain, check_lambda_bounds, check_lambda_extremal, check_tree_bounds,
    check_tree_identities, isometric_embedding_check, king_grid_5x5, lambda_extremal_family_forms,
    verify_realization, verify_tree_realization,
};
pub use verdict::{describe, Counterexample, Status, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    InequalityChain,
    EtaBounds,
    LambdaBounds,
    TreeBounds,
    TreeIdentities,
    EtaEqualsLambda,
    Eta2Lemma,
    LambdaExtremal,
    Realization,
    TreeRealization,
}

/// Which graphs a sweep runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// Connected graphs of order at least the given minimum.
    Connected(usize),
    /// Trees of order at least 3.
    Trees,
    /// A fixed list of parameter tuples.
    Parameters,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::InequalityChain,
        TheoremId::EtaBounds,
        TheoremId::LambdaBounds,
        TheoremId::TreeBounds,
        TheoremId::TreeIdentities,
        TheoremId::EtaEqualsLambda,
        TheoremId::Eta2Lemma,
        TheoremId::LambdaExtremal,
        TheoremId::Realization,
        TheoremId::TreeRealization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::InequalityChain => "prop1",
            TheoremId::EtaBounds => "eta-bounds",
            TheoremId::LambdaBounds => "lambda-bounds",
            TheoremId::TreeBounds => "tree-bounds",
            TheoremId::TreeIdentities => "tree-identities",
            TheoremId::EtaEqualsLambda => "eta-lambda",
            TheoremId::Eta2Lemma => "eta2-lemma",
            TheoremId::LambdaExtremal => "lambda-extremal",
            TheoremId::Realization => "realization",
            TheoremId::TreeRealization => "tree-realization",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::InequalityChain => "max(gamma,beta) <= eta <= min(gamma+beta, lambda)",
            TheoremId::EtaBounds => "eta + ceil(2D/3) <= n <= eta + eta*3^(eta-1) when D >= 3",
            TheoremId::LambdaBounds => {
                "lambda + ceil((3D-1)/5) <= n when D >= 3, and n <= lambda + 2^lambda - 1"
            }
            TheoremId::TreeBounds => "eta <= lambda <= 2eta-2 for trees of order >= 3 except P6",
            TheoremId::TreeIdentities => "eta = gamma + leaves - supports and lambda <= 2eta for trees",
            TheoremId::EtaEqualsLambda => "D = 2 or beta >= n-3 implies eta = lambda",
            TheoremId::Eta2Lemma => {
                "eta = 2 implies 3 <= n <= 8, d(u,v) <= 3 on eta-codes, isometric in P5xP5"
            }
            TheoremId::LambdaExtremal => {
                "lambda >= n-2 => D <= 3; lambda = n-2 <=> eta = n-2; seven families; eta = n-3 => lambda = n-3"
            }
            TheoremId::Realization => "(gamma,beta,eta) = (a,b,c) is realizable except 1=b<a<c=a+1",
            TheoremId::TreeRealization => "(eta,lambda) = (a,b) is realizable by a tree for 3 <= a <= b <= 2a-2",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            TheoremId::TreeBounds | TheoremId::TreeIdentities => Domain::Trees,
            TheoremId::LambdaExtremal => Domain::Connected(3),
            TheoremId::Realization | TheoremId::TreeRealization => Domain::Parameters,
            _ => Domain::Connected(2),
        }
    }

    /// Run the checker on one graph. Parameter-driven statements have no
    /// per-graph form.
    pub fn check(self, g: &Graph) -> Result<Verdict> {
        match self {
            TheoremId::InequalityChain => check_inequality_chain(g),
            TheoremId::EtaBounds => check_eta_bounds(g),
            TheoremId::LambdaBounds => check_lambda_bounds(g),
            TheoremId::TreeBounds => check_tree_bounds(g),
            TheoremId::TreeIdentities => check_tree_identities(g),
            TheoremId::EtaEqualsLambda => check_eta_equals_lambda_conditions(g),
            TheoremId::Eta2Lemma => check_eta2_membership(g),
            TheoremId::LambdaExtremal => check_lambda_extremal(g),
            TheoremId::Realization | TheoremId::TreeRealization => Err(Error::InvalidParameters(
                format!("{self} is checked over parameters, not over input graphs"),
            )),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown theorem id {s:?}")))
    }
}

/// Check every graph in `graphs` in parallel and merge the verdicts in
/// input order.
pub fn check_graphs(id: TheoremId, scope: &str, graphs: &[Graph]) -> Result<Verdict> {
    let verdicts = graphs
        .par_iter()
        .map(|g| id.check(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(Verdict::merge(id.name(), scope, verdicts))
}

/// Triples `(a, b, c)` with `1 <= a, b <= max_ab` and `max(a,b) <= c <= a+b`.
pub fn realization_triples(max_ab: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=max_ab {
        for b in 1..=max_ab {
            for c in a.max(b)..=a + b {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Pairs `(a, b)` with `3 <= a <= max_a` and `a <= b <= 2a - 2`.
pub fn tree_realization_pairs(max_a: usize) -> Vec<(usize, usize)> {
    (3..=max_a)
        .flat_map(|a| (a..=2 * a - 2).map(move |b| (a, b)))
        .collect()
}

/// Sweep one statement over its whole domain up to order `n_max`.
/// Parameter-driven statements use `a, b <= 3` for graphs and `a <= 5` for
/// trees regardless of `n_max`.
pub fn sweep(id: TheoremId, n_max: usize) -> Result<Verdict> {
    match id.domain() {
        Domain::Connected(min) => {
            if n_max > MAX_ENUMERATION_ORDER {
                return Err(Error::UnsupportedOrder {
                    order: n_max,
                    max: MAX_ENUMERATION_ORDER,
                });
            }
            let graphs: Vec<Graph> = if n_max < min {
                Vec::new()
            } else {
                connected_graphs_up_to(n_max)?
                    .into_iter()
                    .skip(min - 1)
                    .flatten()
                    .collect()
            };
            let scope = format!(
                "connected graphs, {min} <= n <= {n_max} ({} graphs)",
                graphs.len()
            );
            check_graphs(id, &scope, &graphs)
        }
        Domain::Trees => {
            if n_max > MAX_TREE_ORDER {
                return Err(Error::UnsupportedOrder {
                    order: n_max,
                    max: MAX_TREE_ORDER,
                });
            }
            let mut graphs = Vec::new();
            for n in 3..=n_max {
                graphs.extend(trees(n)?);
            }
            let scope = format!("trees, 3 <= n <= {n_max} ({} trees)", graphs.len());
            check_graphs(id, &scope, &graphs)
        }
        Domain::Parameters if id == TheoremId::Realization => {
            let triples = realization_triples(3);
            let verdicts = triples
                .par_iter()
                .map(|&(a, b, c)| verify_realization(a, b, c))
                .collect::<Result<Vec<_>>>()?;
            let scope = format!("triples with 1 <= a,b <= 3 ({})", triples.len());
            Ok(Verdict::merge(id.name(), scope, verdicts))
        }
        Domain::Parameters => {
            let pairs = tree_realization_pairs(5);
            let verdicts = pairs
                .par_iter()
                .map(|&(a, b)| verify_tree_realization(a, b))
                .collect::<Result<Vec<_>>>()?;
            let scope = format!("pairs with 3 <= a <= 5 ({})", pairs.len());
            Ok(Verdict::merge(id.name(), scope, verdicts))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert!("prop2".parse::<TheoremId>().is_err());
    }

    #[test]
    fn prop1_small_sweep() {
        let v = sweep(TheoremId::InequalityChain, 6).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.checked, 142);
    }

    #[test]
    fn tree_bounds_small_sweep() {
        let v = sweep(TheoremId::TreeBounds, 8).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.skipped, 1);
        assert_eq!(v.checked, 1 + 2 + 3 + 6 + 11 + 23 - 1);
    }

    #[test]
    fn parameter_sweeps() {
        assert_eq!(
            sweep(TheoremId::Realization, 0).unwrap().status,
            Status::Holds
        );
        assert_eq!(
            sweep(TheoremId::TreeRealization, 0).unwrap().status,
            Status::Holds
        );
        assert!(TheoremId::Realization
            .check(&Graph::empty(2).unwrap())
            .is_err());
    }
}
