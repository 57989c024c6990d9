//! Exact γ, β, η and λ by cardinality-increasing subset search.
//!
//! For each size `k` the `k`-subsets are scanned in lexicographic order and
//! the first satisfying one is returned, so the witness is the
//! lexicographically least optimal code and every smaller size has been
//! ruled out exhaustively.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::codes::{Code, CodeChecker};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    /// Domination number.
    Gamma,
    /// Metric dimension.
    Beta,
    /// Metric-location-domination number.
    Eta,
    /// Location-domination number.
    Lambda,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [
        Parameter::Gamma,
        Parameter::Beta,
        Parameter::Eta,
        Parameter::Lambda,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Gamma => "gamma",
            Parameter::Beta => "beta",
            Parameter::Eta => "eta",
            Parameter::Lambda => "lambda",
        }
    }

    fn accepts(self, checker: &CodeChecker<'_>, set: VertexSet) -> bool {
        match self {
            Parameter::Gamma => checker.is_dominating(set),
            Parameter::Beta => checker.is_locating(set),
            Parameter::Eta => checker.is_mld(set),
            Parameter::Lambda => checker.is_ld(set),
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" | "γ" => Ok(Parameter::Gamma),
            "beta" | "β" => Ok(Parameter::Beta),
            "eta" | "η" => Ok(Parameter::Eta),
            "lambda" | "λ" => Ok(Parameter::Lambda),
            other => Err(Error::InvalidParameters(format!(
                "unknown parameter `{other}`"
            ))),
        }
    }
}

/// An optimal value together with the lexicographically least optimal code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub value: usize,
    pub witness: Code,
}

/// Lexicographic iteration over the `k`-subsets of `0..n`.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let set = self.idx.iter().copied().collect();
        let k = self.idx.len();
        // advance to the next index tuple
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(set)
    }
}

/// The lexicographically least `k`-subset accepted for `param`, if any.
pub fn find_code_of_size(checker: &CodeChecker<'_>, param: Parameter, k: usize) -> Option<Code> {
    Combinations::new(checker.graph().order(), k)
        .find(|&s| param.accepts(checker, s))
        .map(Code::from_set)
}

/// Minimum over sizes `lower..=n`. `lower` must be a valid lower bound.
pub fn minimum_code(checker: &CodeChecker<'_>, param: Parameter, lower: usize) -> Solution {
    let n = checker.graph().order();
    for k in lower..=n {
        if let Some(witness) = find_code_of_size(checker, param, k) {
            return Solution { value: k, witness };
        }
    }
    unreachable!("the whole vertex set satisfies every code property")
}

pub fn solve(g: &Graph, param: Parameter) -> Result<Solution> {
    let n = g.order();
    if n == 1 {
        g.require_connected()?;
        return match param {
            // V \ D is empty, so {0} dominates K1 vacuously.
            Parameter::Gamma => Ok(Solution {
                value: 1,
                witness: Code::from_set(VertexSet::singleton(0)),
            }),
            _ => Err(Error::OrderTooSmall { order: 1, min: 2 }),
        };
    }
    let checker = CodeChecker::new(g)?;
    Ok(minimum_code(&checker, param, 1))
}

pub fn domination_number(g: &Graph) -> Result<Solution> {
    solve(g, Parameter::Gamma)
}

pub fn metric_dimension(g: &Graph) -> Result<Solution> {
    solve(g, Parameter::Beta)
}

pub fn mld_number(g: &Graph) -> Result<Solution> {
    solve(g, Parameter::Eta)
}

pub fn ld_number(g: &Graph) -> Result<Solution> {
    solve(g, Parameter::Lambda)
}

/// All four parameters of a connected graph with optimal witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterReport {
    pub order: usize,
    pub diameter: usize,
    pub gamma: usize,
    pub beta: usize,
    pub eta: usize,
    pub lambda: usize,
    pub witness_gamma: Code,
    pub witness_beta: Code,
    pub witness_eta: Code,
    pub witness_lambda: Code,
}

impl ParameterReport {
    pub fn value(&self, param: Parameter) -> usize {
        match param {
            Parameter::Gamma => self.gamma,
            Parameter::Beta => self.beta,
            Parameter::Eta => self.eta,
            Parameter::Lambda => self.lambda,
        }
    }

    pub fn witness(&self, param: Parameter) -> &Code {
        match param {
            Parameter::Gamma => &self.witness_gamma,
            Parameter::Beta => &self.witness_beta,
            Parameter::Eta => &self.witness_eta,
            Parameter::Lambda => &self.witness_lambda,
        }
    }
}

/// Computes γ, β, η and λ, seeding the η search at `max(γ, β)`, and checks
/// the witnesses and the chain `max(γ,β) ≤ η ≤ min(γ+β, λ)` before returning.
pub fn full_report(g: &Graph) -> Result<ParameterReport> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            min: 2,
        });
    }
    let checker = CodeChecker::new(g)?;
    let gamma = minimum_code(&checker, Parameter::Gamma, 1);
    let beta = minimum_code(&checker, Parameter::Beta, 1);
    let eta = minimum_code(&checker, Parameter::Eta, gamma.value.max(beta.value));
    let lambda = minimum_code(&checker, Parameter::Lambda, 1);
    let report = ParameterReport {
        order: g.order(),
        diameter: g.diameter()?,
        gamma: gamma.value,
        beta: beta.value,
        eta: eta.value,
        lambda: lambda.value,
        witness_gamma: gamma.witness,
        witness_beta: beta.witness,
        witness_eta: eta.witness,
        witness_lambda: lambda.witness,
    };
    for param in Parameter::ALL {
        let w = report.witness(param);
        if w.len() != report.value(param) || !param.accepts(&checker, w.to_set()) {
            return Err(Error::InvariantViolated(format!(
                "{param} witness {w} is invalid"
            )));
        }
    }
    let (ga, be, et, la) = (report.gamma, report.beta, report.eta, report.lambda);
    if !(ga.max(be) <= et && et <= (ga + be).min(la)) {
        return Err(Error::InvariantViolated(format!(
            "parameter chain fails: gamma={ga} beta={be} eta={et} lambda={la}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2)
            .map(|s| s.iter().collect())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(3, 4).count(), 0);
        assert_eq!(Combinations::new(10, 4).count(), 210);
    }

    #[test]
    fn p6_report() {
        let r = full_report(&path(6)).unwrap();
        assert_eq!((r.gamma, r.beta, r.eta, r.lambda), (2, 1, 2, 3));
        assert_eq!(r.diameter, 5);
        assert_eq!(r.witness_beta.vertices(), &[0]);
    }

    #[test]
    fn k4_report() {
        let r = full_report(&complete(4)).unwrap();
        assert_eq!((r.gamma, r.beta, r.eta, r.lambda), (1, 3, 3, 3));
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        let s = domination_number(&path(7)).unwrap();
        assert_eq!(s.value, 3);
        assert_eq!(s.witness.vertices(), &[0, 2, 5]);
    }

    #[test]
    fn trivial_orders() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(domination_number(&k1).unwrap().value, 1);
        assert!(metric_dimension(&k1).is_err());
        assert!(full_report(&k1).is_err());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(domination_number(&g), Err(Error::Disconnected));
        assert_eq!(full_report(&g), Err(Error::Disconnected));
    }

    #[test]
    fn parameter_names_round_trip() {
        for p in Parameter::ALL {
            assert_eq!(p.name().parse::<Parameter>().unwrap(), p);
        }
        assert!("delta".parse::<Parameter>().is_err());
    }
}
