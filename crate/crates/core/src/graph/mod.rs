//! Immutable simple undirected graphs over vertices `0..n`.

mod canon;
mod distance;
mod ops;
mod tree;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::bitset::{VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

pub(crate) use canon::canonical_form_and_labeling;
pub use canon::{are_isomorphic, canonical_form, canonical_labeling, same_orbit, CanonicalForm};
pub use distance::DistanceMatrix;
pub use ops::{complement, disjoint_union, join, strong_product};
pub use tree::{tree_profile, TreeProfile};

/// A finite simple undirected graph with dense bit-row adjacency.
///
/// Graphs are immutable; the all-pairs distance matrix is computed on first
/// request and cached.
pub struct Graph {
    rows: Vec<VertexSet>,
    distances: OnceLock<DistanceMatrix>,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self::from_rows_unchecked(vec![VertexSet::EMPTY; n]))
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut rows = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Builds a graph from adjacency rows, validating symmetry and the absence of loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (u, &row) in rows.iter().enumerate() {
            if row.contains(u) {
                return Err(Error::LoopEdge(u));
            }
            if !row.is_subset(all) {
                let vertex = (row - all).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex, order: n });
            }
            for v in row {
                if !rows[v].contains(u) {
                    return Err(Error::Asymmetric(u, v));
                }
            }
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(u, r)| !r.contains(u) && r.iter().all(|v| rows[v].contains(u))));
        Graph {
            rows,
            distances: OnceLock::new(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, r)| r.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.rows[v];
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        n == 0 || self.component_within(0, self.vertices()).len() == n
    }

    /// Whether removing `v` leaves the remaining vertices connected.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let rest = self.vertices() - VertexSet::singleton(v);
        match rest.first() {
            None => false,
            Some(start) => self.component_within(start, rest) != rest,
        }
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.order()
    }

    /// All-pairs hop distances, computed by breadth-first search on first use.
    pub fn distances(&self) -> &DistanceMatrix {
        self.distances.get_or_init(|| DistanceMatrix::compute(self))
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances().get(u, v)
    }

    pub fn diameter(&self) -> Result<usize> {
        self.distances().diameter().ok_or(Error::Disconnected)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// The graph with one extra vertex `n` adjacent to `neighbors`.
    pub fn with_new_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        let n = self.order();
        check_order(n + 1)?;
        if !neighbors.is_subset(self.vertices()) {
            let vertex = (neighbors - self.vertices()).first().unwrap_or(n);
            return Err(Error::VertexOutOfRange { vertex, order: n });
        }
        let mut rows = self.rows.clone();
        for v in neighbors {
            rows[v].insert(n);
        }
        rows.push(neighbors);
        Ok(Self::from_rows_unchecked(rows))
    }

    /// The subgraph induced by `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        check_order(keep.len())?;
        let mut position = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order(),
                });
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidParameters(format!("vertex {v} listed twice")));
            }
            position[v] = i;
        }
        let rows = keep
            .iter()
            .map(|&v| {
                self.rows[v]
                    .iter()
                    .filter(|&w| position[w] != usize::MAX)
                    .map(|w| position[w])
                    .collect()
            })
            .collect();
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidParameters(format!(
                "permutation has length {} for order {n}",
                perm.len()
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut rows = vec![VertexSet::EMPTY; n];
        for (u, row) in self.rows.iter().enumerate() {
            rows[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Ok(Self::from_rows_unchecked(rows))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::UnsupportedOrder {
            order: n,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            rows: self.rows.clone(),
            distances: self.distances.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn single_edge_is_p2() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.are_adjacent(1, 0));
        assert_eq!(g.diameter().unwrap(), 1);
    }

    #[test]
    fn p6_has_diameter_five() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(g.diameter().unwrap(), 5);
        assert_eq!(g.distance(0, 5), Some(5));
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert!(Graph::from_edge_list(0, &[]).is_err());
        assert!(Graph::from_edge_list(MAX_ORDER + 1, &[]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn from_rows_validates() {
        let a = VertexSet::singleton(1);
        assert_eq!(
            Graph::from_rows(vec![a, VertexSet::EMPTY]),
            Err(Error::Asymmetric(0, 1))
        );
    }

    #[test]
    fn cycle_distances_wrap() {
        let c7 = cycle(7);
        assert_eq!(c7.distance(0, 4), Some(3));
        assert_eq!(c7.diameter().unwrap(), 3);
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance(0, 3), None);
        assert_eq!(g.diameter(), Err(Error::Disconnected));
        assert!(!g.is_connected());
    }

    #[test]
    fn cut_vertices_of_a_path() {
        let p = path(4);
        assert!(!p.is_cut_vertex(0));
        assert!(p.is_cut_vertex(1));
        assert!(p.is_cut_vertex(2));
        assert!(!p.is_cut_vertex(3));
        assert!(p.is_tree());
    }

    #[test]
    fn induced_and_relabel() {
        let p = path(5);
        let sub = p.induced_subgraph(&[4, 3, 2]).unwrap();
        assert_eq!(sub, path(3));
        let r = p.relabel(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(r, p);
        assert!(p.relabel(&[0, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn new_vertex_extends() {
        let p = path(3);
        let g = p.with_new_vertex(VertexSet::singleton(2)).unwrap();
        assert_eq!(g, path(4));
    }
}
