//! Membership tests for dominating, locating, metric-locating-dominating and
//! locating-dominating codes.
//!
//! A locating code only needs to separate vertices outside the code: a code
//! vertex is the unique vertex at distance 0 from itself. This is the usual
//! resolving-set reading and gives the same metric dimension.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordered set of distinct vertices. The order fixes the coordinate order
/// of metric vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Code(Vec<usize>);

impl Code {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &v in &vertices {
            if v >= crate::MAX_ORDER {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: crate::MAX_ORDER,
                });
            }
            if seen.contains(v) {
                return Err(Error::DuplicateCodeVertex(v));
            }
            seen.insert(v);
        }
        Ok(Code(vertices))
    }

    /// The members of `set` in ascending order.
    pub fn from_set(set: VertexSet) -> Self {
        Code(set.iter().collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    fn check_range(&self, g: &Graph) -> Result<()> {
        match self.0.iter().find(|&&v| v >= g.order()) {
            Some(&vertex) => Err(Error::VertexOutOfRange {
                vertex,
                order: g.order(),
            }),
            None => Ok(()),
        }
    }
}

impl TryFrom<Vec<usize>> for Code {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Code::new(v)
    }
}

impl From<Code> for Vec<usize> {
    fn from(c: Code) -> Self {
        c.0
    }
}

impl std::fmt::Display for Code {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Distances from one vertex to each code vertex, in code order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MetricVector(pub Vec<usize>);

pub fn metric_vector(g: &Graph, code: &Code, v: usize) -> Result<MetricVector> {
    g.require_connected()?;
    code.check_range(g)?;
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let d = g.distances();
    Ok(MetricVector(
        code.vertices()
            .iter()
            .map(|&x| d.row(v)[x] as usize)
            .collect(),
    ))
}

pub fn is_dominating(g: &Graph, code: &Code) -> Result<bool> {
    checked(g, code).map(|(c, s)| c.is_dominating(s))
}

pub fn is_locating(g: &Graph, code: &Code) -> Result<bool> {
    checked(g, code).map(|(c, s)| c.is_locating(s))
}

pub fn is_mld(g: &Graph, code: &Code) -> Result<bool> {
    checked(g, code).map(|(c, s)| c.is_mld(s))
}

pub fn is_ld(g: &Graph, code: &Code) -> Result<bool> {
    checked(g, code).map(|(c, s)| c.is_ld(s))
}

fn checked<'a>(g: &'a Graph, code: &Code) -> Result<(CodeChecker<'a>, VertexSet)> {
    code.check_range(g)?;
    Ok((CodeChecker::new(g)?, code.to_set()))
}

/// Precomputed tables for testing many candidate codes on one connected graph.
///
/// For every pair `u < v` the checker stores the set of vertices whose
/// distances to `u` and `v` differ; a set locates the graph exactly when it
/// meets every such separator.
pub struct CodeChecker<'a> {
    graph: &'a Graph,
    separators: Vec<VertexSet>,
}

impl<'a> CodeChecker<'a> {
    pub fn new(graph: &'a Graph) -> Result<Self> {
        graph.require_connected()?;
        let n = graph.order();
        let d = graph.distances();
        let mut separators = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let (du, dv) = (d.row(u), d.row(v));
                separators.push((0..n).filter(|&x| du[x] != dv[x]).collect());
            }
        }
        Ok(CodeChecker { graph, separators })
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn is_dominating(&self, code: VertexSet) -> bool {
        (self.graph.vertices() - code)
            .iter()
            .all(|v| !(self.graph.neighbors(v) & code).is_empty())
    }

    pub fn is_locating(&self, code: VertexSet) -> bool {
        self.separators.iter().all(|&sep| !(sep & code).is_empty())
    }

    pub fn is_mld(&self, code: VertexSet) -> bool {
        self.is_dominating(code) && self.is_locating(code)
    }

    /// Neighbourhood traces `N(v) ∩ code` of the vertices outside the code
    /// must be non-empty and pairwise distinct.
    pub fn is_ld(&self, code: VertexSet) -> bool {
        let mut traces = [0u128; crate::MAX_ORDER];
        let mut len = 0;
        for v in self.graph.vertices() - code {
            let t = self.graph.neighbors(v) & code;
            if t.is_empty() {
                return false;
            }
            traces[len] = t.bits();
            len += 1;
        }
        let traces = &mut traces[..len];
        traces.sort_unstable();
        traces.windows(2).all(|w| w[0] != w[1])
    }
}
