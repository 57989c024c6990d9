//! Named graph families, each carrying the parameter values and codes claimed
//! for it so that they can be checked against exact computation.
//!
//! Labelling conventions: stars, wheels and spiders put their centre at 0;
//! paths and cycles run `0..n` in order; strong grids are row-major.

mod extremal;
mod geta;
mod realization;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::codes::{Code, CodeChecker};
use crate::error::{Error, Result};
use crate::graph::{strong_product, Graph};
use crate::solvers::{Parameter, ParameterReport};

pub use extremal::{eta_n_minus_2_family, eta_n_minus_2_instances, EtaNMinus2Kind};
pub use geta::{g_eta_construction, G_ETA_MAX};
pub use realization::{realization_graph, realization_tree, RealizationCase};

/// A generated graph with the values (and, where known, codes) claimed for it.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyInstance {
    pub name: String,
    #[serde(skip)]
    pub graph: Graph,
    pub labels: Vec<String>,
    pub claimed_codes: BTreeMap<Parameter, Code>,
    pub claimed_values: BTreeMap<Parameter, usize>,
}

/// A claimed value that differs from the computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimMismatch {
    pub parameter: Parameter,
    pub claimed: usize,
    pub computed: usize,
}

impl FamilyInstance {
    /// An instance with no claims, labelled by vertex number.
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        let labels = (0..graph.order()).map(|v| v.to_string()).collect();
        FamilyInstance {
            name: name.into(),
            graph,
            labels,
            claimed_codes: BTreeMap::new(),
            claimed_values: BTreeMap::new(),
        }
    }

    fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.graph.order());
        self.labels = labels;
        self
    }

    fn claim(mut self, param: Parameter, value: usize) -> Self {
        self.claimed_values.insert(param, value);
        self
    }

    fn claim_code(mut self, param: Parameter, code: Vec<usize>) -> Self {
        let code = Code::new(code).expect("family codes are duplicate free");
        self.claimed_values.entry(param).or_insert(code.len());
        self.claimed_codes.insert(param, code);
        self
    }

    fn finish(self) -> Self {
        debug_assert!(
            self.verify_claimed_codes().is_ok(),
            "{}: {:?}",
            self.name,
            self.verify_claimed_codes()
        );
        self
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Checks every claimed code against its predicate and its claimed size.
    pub fn verify_claimed_codes(&self) -> Result<(), Vec<String>> {
        let mut problems = Vec::new();
        let checker = match CodeChecker::new(&self.graph) {
            Ok(c) => c,
            Err(e) => return Err(vec![e.to_string()]),
        };
        for (&param, code) in &self.claimed_codes {
            if code.vertices().iter().any(|&v| v >= self.order()) {
                problems.push(format!("{param} code {code} has out-of-range vertices"));
                continue;
            }
            let set = code.to_set();
            let ok = match param {
                Parameter::Gamma => checker.is_dominating(set),
                Parameter::Beta => checker.is_locating(set),
                Parameter::Eta => checker.is_mld(set),
                Parameter::Lambda => checker.is_ld(set),
            };
            if !ok {
                problems.push(format!("{param} code {code} fails its predicate"));
            }
            if let Some(&v) = self.claimed_values.get(&param) {
                if v != code.len() {
                    problems.push(format!(
                        "{param} code {code} has size {} not {v}",
                        code.len()
                    ));
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems)
        }
    }

    /// Claimed values that disagree with `report`.
    pub fn mismatches(&self, report: &ParameterReport) -> Vec<ClaimMismatch> {
        self.claimed_values
            .iter()
            .filter(|(&p, &v)| report.value(p) != v)
            .map(|(&parameter, &claimed)| ClaimMismatch {
                parameter,
                claimed,
                computed: report.value(parameter),
            })
            .collect()
    }
}

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidParameters(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

fn path_graph(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `{1, 4, 7, ...}` truncated to `0..n`; dominates and (for `n > 3`) locates `P_n`.
fn path_domination_code(n: usize) -> Vec<usize> {
    (0..n.div_ceil(3)).map(|i| (3 * i + 1).min(n - 1)).collect()
}

/// `{1, 3}` in every block of five consecutive vertices, plus a tail fix-up.
fn path_ld_code(n: usize) -> Vec<usize> {
    let blocks = n / 5;
    let mut code: Vec<usize> = (0..blocks).flat_map(|j| [5 * j + 1, 5 * j + 3]).collect();
    let base = 5 * blocks;
    match n % 5 {
        0 => {}
        1 => code.push(base),
        2 => code.push(base + 1),
        3 => code.extend([base + 1, base + 2]),
        _ => code.extend([base + 1, base + 3]),
    }
    code
}

pub fn path(n: usize) -> Result<FamilyInstance> {
    positive("n", n)?;
    let inst = FamilyInstance::new(format!("path({n})"), path_graph(n)?);
    if n <= 3 {
        return Ok(inst);
    }
    Ok(inst
        .claim_code(Parameter::Gamma, path_domination_code(n))
        .claim_code(Parameter::Beta, vec![0])
        .claim_code(Parameter::Eta, path_domination_code(n))
        .claim_code(Parameter::Lambda, path_ld_code(n))
        .finish())
}

pub fn cycle(n: usize) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(Error::InvalidParameters(
            "a cycle needs at least 3 vertices".into(),
        ));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let inst = FamilyInstance::new(format!("cycle({n})"), Graph::from_edge_list(n, &edges)?);
    if n <= 6 {
        return Ok(inst);
    }
    Ok(inst
        .claim(Parameter::Gamma, n.div_ceil(3))
        .claim_code(Parameter::Beta, vec![0, 1])
        .claim(Parameter::Eta, n.div_ceil(3))
        .claim(Parameter::Lambda, (2 * n).div_ceil(5))
        .finish())
}

pub fn complete(n: usize) -> Result<FamilyInstance> {
    positive("n", n)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let inst = FamilyInstance::new(format!("complete({n})"), Graph::from_edge_list(n, &edges)?);
    if n <= 1 {
        return Ok(inst);
    }
    let most: Vec<usize> = (0..n - 1).collect();
    Ok(inst
        .claim_code(Parameter::Gamma, vec![0])
        .claim_code(Parameter::Beta, most.clone())
        .claim_code(Parameter::Eta, most.clone())
        .claim_code(Parameter::Lambda, most)
        .finish())
}

/// The star `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::InvalidParameters(
            "a star needs at least 2 vertices".into(),
        ));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    let inst = FamilyInstance::new(format!("star({n})"), Graph::from_edge_list(n, &edges)?);
    if n <= 2 {
        return Ok(inst);
    }
    let centre_and_leaves: Vec<usize> = (0..n - 1).collect();
    Ok(inst
        .claim_code(Parameter::Gamma, vec![0])
        .claim_code(Parameter::Beta, (1..n - 1).collect())
        .claim_code(Parameter::Eta, centre_and_leaves.clone())
        .claim_code(Parameter::Lambda, centre_and_leaves)
        .finish())
}

/// `K_{r,s}` with parts `0..r` and `r..r+s`.
pub fn complete_bipartite(r: usize, s: usize) -> Result<FamilyInstance> {
    positive("r", r)?;
    positive("s", s)?;
    let n = r + s;
    let edges: Vec<_> = (0..r).flat_map(|u| (r..n).map(move |v| (u, v))).collect();
    let inst = FamilyInstance::new(
        format!("complete-bipartite({r},{s})"),
        Graph::from_edge_list(n, &edges)?,
    );
    if r.min(s) < 2 {
        return Ok(inst);
    }
    let all_but_one_per_side: Vec<usize> = (1..r).chain(r + 1..n).collect();
    Ok(inst
        .claim_code(Parameter::Gamma, vec![0, r])
        .claim_code(Parameter::Beta, all_but_one_per_side.clone())
        .claim_code(Parameter::Eta, all_but_one_per_side.clone())
        .claim_code(Parameter::Lambda, all_but_one_per_side)
        .finish())
}

/// The wheel `W_{1,n-1}`: hub 0 joined to the cycle `1..n`.
pub fn wheel(n: usize) -> Result<FamilyInstance> {
    if n < 4 {
        return Err(Error::InvalidParameters(
            "a wheel needs at least 4 vertices".into(),
        ));
    }
    let rim = n - 1;
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    let inst = FamilyInstance::new(format!("wheel({n})"), Graph::from_edge_list(n, &edges)?);
    if n <= 7 {
        return Ok(inst);
    }
    Ok(inst
        .claim_code(Parameter::Gamma, vec![0])
        .claim(Parameter::Beta, 2 * n / 5)
        .claim(Parameter::Eta, (2 * n - 2).div_ceil(5))
        .claim(Parameter::Lambda, (2 * n - 2).div_ceil(5))
        .finish())
}

/// `P_{d1} ⊠ P_{d2} ⊠ ...` with row-major vertex numbering.
pub fn strong_grid(dims: &[usize]) -> Result<Graph> {
    let (&first, rest) = dims.split_first().ok_or_else(|| {
        Error::InvalidParameters("strong grid needs at least one dimension".into())
    })?;
    positive("dimension", first)?;
    let mut g = path_graph(first)?;
    for &d in rest {
        positive("dimension", d)?;
        g = strong_product(&g, &path_graph(d)?)?;
    }
    Ok(g)
}

/// A spider: centre 0 and one path per leg, each leg's vertices numbered
/// consecutively from the centre outwards. Leg vertices are labelled
/// `a_r, b_r, c_r, ...` by distance from the centre.
pub fn spider(leg_lengths: &[usize]) -> Result<FamilyInstance> {
    if leg_lengths.len() < 2 {
        return Err(Error::InvalidParameters(
            "a spider needs at least 2 legs".into(),
        ));
    }
    if leg_lengths.contains(&0) {
        return Err(Error::InvalidParameters(
            "spider legs must have length at least 1".into(),
        ));
    }
    let n = 1 + leg_lengths.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut labels = vec!["x".to_string()];
    let mut next = 1;
    for (r, &len) in leg_lengths.iter().enumerate() {
        let mut prev = 0;
        for depth in 0..len {
            edges.push((prev, next));
            labels.push(leg_label(depth, r + 1));
            prev = next;
            next += 1;
        }
    }
    let lens: Vec<String> = leg_lengths.iter().map(|l| l.to_string()).collect();
    Ok(FamilyInstance::new(
        format!("spider({})", lens.join(",")),
        Graph::from_edge_list(n, &edges)?,
    )
    .with_labels(labels))
}

fn leg_label(depth: usize, leg: usize) -> String {
    match depth {
        0..=25 => format!("{}{leg}", (b'a' + depth as u8) as char),
        _ => format!("p{depth}_{leg}"),
    }
}

/// Index of the vertex at `depth` (0 = adjacent to the centre) on leg `leg`
/// (0-based) of a spider with the given legs.
fn spider_vertex(legs: &[usize], leg: usize, depth: usize) -> usize {
    1 + legs[..leg].iter().sum::<usize>() + depth
}

/// `S_{k,3}`: `k` legs with 3 edges each.
pub fn spider_k3(k: usize) -> Result<FamilyInstance> {
    spider_mixed(0, k).map(|i| FamilyInstance {
        name: format!("spider-k3({k})"),
        ..i
    })
}

/// `S_{k,4}`: `k` legs with 4 edges each.
pub fn spider_k4(k: usize) -> Result<FamilyInstance> {
    spider_mixed(k, k).map(|i| FamilyInstance {
        name: format!("spider-k4({k})"),
        ..i
    })
}

/// `S_{r,4,k-r,3}`: `k` legs, the first `r` with 4 edges and the rest with 3.
///
/// Claimed η-code: `{c_i : i ≤ r} ∪ {b_i : i > r} ∪ {x}`. Claimed λ-code:
/// `{a_i, c_i : i ≤ r} ∪ {b_i : i > r} ∪ {x}` when some leg has 3 edges,
/// and `{a_i, c_i}` when all legs have 4 edges.
pub fn spider_mixed(r: usize, k: usize) -> Result<FamilyInstance> {
    if k < 2 || r > k {
        return Err(Error::InvalidParameters(format!(
            "spider-mixed needs k >= 2 and 0 <= r <= k (got r={r}, k={k})"
        )));
    }
    let legs: Vec<usize> = (0..k).map(|i| if i < r { 4 } else { 3 }).collect();
    let base = spider(&legs)?;
    let at = |leg: usize, depth: usize| spider_vertex(&legs, leg, depth);
    let mut eta: Vec<usize> = vec![0];
    eta.extend((0..r).map(|i| at(i, 2)));
    eta.extend((r..k).map(|i| at(i, 1)));
    let mut lambda: Vec<usize> = (0..r).flat_map(|i| [at(i, 0), at(i, 2)]).collect();
    if r < k {
        lambda.push(0);
        lambda.extend((r..k).map(|i| at(i, 1)));
    }
    eta.sort_unstable();
    lambda.sort_unstable();
    Ok(FamilyInstance {
        name: format!("spider-mixed({r},{k})"),
        ..base
    }
    .claim_code(Parameter::Eta, eta)
    .claim_code(Parameter::Lambda, lambda)
    .finish())
}

/// Builds graphs vertex by vertex with labels.
#[derive(Default)]
struct Builder {
    rows: Vec<VertexSet>,
    labels: Vec<String>,
}

impl Builder {
    fn vertex(&mut self, label: impl Into<String>) -> usize {
        self.rows.push(VertexSet::EMPTY);
        self.labels.push(label.into());
        self.rows.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    fn build(self, name: impl Into<String>) -> Result<FamilyInstance> {
        let graph = Graph::from_rows(self.rows)?;
        Ok(FamilyInstance::new(name, graph).with_labels(self.labels))
    }
}
