//! Connected graphs and trees up to isomorphism, and censuses over them.
//!
//! Generation is by canonical augmentation: a graph on `n` vertices is
//! produced from a parent on `n - 1` vertices by adding one vertex, and the
//! child is kept only when the added vertex lies in the orbit of the child's
//! canonical deletion vertex. The deletion vertex is the non-cut vertex of
//! least degree with the largest canonical position, so deleting it always
//! leaves a connected parent, and each class is reached from exactly one
//! parent class. Children of one parent are then deduplicated by canonical
//! form.

mod graph6;

use std::collections::{BTreeMap, HashSet};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_form_and_labeling, same_orbit, CanonicalForm, Graph};

pub use graph6::{read_graph6, read_graph6_stream, write_graph6, GRAPH6_MAX_ORDER};

/// Largest order accepted by [`connected_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 9;
/// Largest order accepted by [`trees`].
pub const MAX_TREE_ORDER: usize = 16;

fn check_range(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::UnsupportedOrder { order: n, max });
    }
    Ok(())
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, each in canonical labelling, sorted by canonical form.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(n)?.pop().unwrap_or_default())
}

/// `connected_graphs(k)` for every `k` in `1..=n`, sharing the work.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Vec<Graph>>> {
    check_range(n, MAX_ENUMERATION_ORDER)?;
    let mut levels = vec![vec![Graph::empty(1)?]];
    for _ in 1..n {
        let next = extend_connected(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels)
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    check_range(n, MAX_TREE_ORDER)?;
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = augment(&level, |parent| {
            (0..parent.order()).map(VertexSet::singleton).collect()
        });
    }
    Ok(level)
}

/// All connected one-vertex extensions of `parents`, one per isomorphism
/// class. `parents` must be pairwise non-isomorphic connected graphs of
/// one order; the result does not depend on their order.
pub fn extend_connected(parents: &[Graph]) -> Vec<Graph> {
    augment(parents, |parent| {
        let n = parent.order();
        (1..1u128 << n).map(VertexSet::from_bits).collect()
    })
}

fn augment<F>(parents: &[Graph], neighbourhoods: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> Vec<VertexSet> + Sync,
{
    let mut children: Vec<(CanonicalForm, Graph)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let mut seen = HashSet::new();
            let mut kept = Vec::new();
            for nbhd in neighbourhoods(parent) {
                let child = parent
                    .with_new_vertex(nbhd)
                    .expect("parent order is below the bitset capacity");
                if let Some(form) = accept(&child) {
                    if seen.insert(form.clone()) {
                        kept.push(form);
                    }
                }
            }
            kept.into_iter().map(|form| {
                let g = form.to_graph();
                (form, g)
            })
        })
        .collect();
    children.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(children.windows(2).all(|w| w[0].0 != w[1].0));
    children.into_iter().map(|(_, g)| g).collect()
}

/// The canonical form of `child` if its last vertex is a canonical deletion.
fn accept(child: &Graph) -> Option<CanonicalForm> {
    let n = child.order();
    let new = n - 1;
    // The new vertex is never a cut vertex (its parent is connected), so it
    // must have least degree among non-cut vertices.
    let d = child.degree(new);
    let mut candidates = VertexSet::EMPTY;
    for v in 0..n {
        let dv = child.degree(v);
        if dv > d {
            continue;
        }
        if child.is_cut_vertex(v) {
            continue;
        }
        if dv < d {
            return None;
        }
        candidates.insert(v);
    }
    let (form, labeling) = canonical_form_and_labeling(child);
    let chosen = candidates.iter().max_by_key(|&v| labeling[v]).unwrap();
    (chosen == new || same_orbit(child, chosen, new)).then_some(form)
}

/// A serialized census representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub order: usize,
    pub canonical_form: String,
    pub graph6: String,
}

/// Counts and representatives of the classes satisfying a filter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub filter: String,
    pub per_order: BTreeMap<usize, usize>,
    pub total: usize,
    pub representatives: Vec<Representative>,
}

impl CensusReport {
    pub fn count(&self, order: usize) -> usize {
        self.per_order.get(&order).copied().unwrap_or(0)
    }
}

/// The connected graphs with order in `orders` satisfying `predicate`, each
/// in canonical labelling, grouped by order.
pub fn filter_connected<P>(orders: RangeInclusive<usize>, predicate: P) -> Result<Vec<Graph>>
where
    P: Fn(&Graph) -> bool + Sync,
{
    let (lo, hi) = (*orders.start(), *orders.end());
    check_range(lo.max(1), MAX_ENUMERATION_ORDER)?;
    if hi < lo {
        return Ok(Vec::new());
    }
    let levels = connected_graphs_up_to(hi)?;
    Ok(levels[lo.max(1) - 1..]
        .iter()
        .flat_map(|level| {
            level
                .par_iter()
                .filter(|g| predicate(g))
                .cloned()
                .collect::<Vec<_>>()
        })
        .collect())
}

pub fn census<P>(orders: RangeInclusive<usize>, filter: &str, predicate: P) -> Result<CensusReport>
where
    P: Fn(&Graph) -> bool + Sync,
{
    let mut per_order: BTreeMap<usize, usize> = orders.clone().map(|n| (n, 0)).collect();
    let mut representatives = Vec::new();
    for g in filter_connected(orders, predicate)? {
        *per_order.entry(g.order()).or_default() += 1;
        representatives.push(Representative {
            order: g.order(),
            canonical_form: canonical_form(&g).to_string(),
            graph6: write_graph6(&g)?,
        });
    }
    Ok(CensusReport {
        filter: filter.to_string(),
        total: representatives.len(),
        per_order,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = connected_graphs_up_to(6)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(trees(8).unwrap().iter().all(Graph::is_tree));
    }

    #[test]
    fn range_errors() {
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(10).is_err());
        assert!(trees(17).is_err());
    }

    #[test]
    fn census_of_k2() {
        let report = census(2..=2, "any", |_| true).unwrap();
        assert_eq!(report.total, 1);
        assert_eq!(report.representatives[0].graph6, "A_");
    }

    #[test]
    fn parent_order_does_not_matter() {
        let mut parents = connected_graphs(5).unwrap();
        let forward = extend_connected(&parents);
        parents.reverse();
        parents.rotate_left(7);
        assert_eq!(extend_connected(&parents), forward);
    }
}
