//! Canonical labelling by partition refinement and backtracking.
//!
//! The search individualizes one vertex of the first smallest non-singleton
//! cell at a time, refines to an equitable partition, and at every discrete
//! leaf reads the relabelled adjacency rows. The lexicographically least
//! leaf is the canonical graph. Leaves equal to the current best yield
//! automorphisms, which prune sibling branches lying in the same orbit.

use std::fmt;

use super::Graph;
use crate::bitset::VertexSet;

/// Byte encoding of an isomorphism class: the order followed by the packed
/// upper-triangle adjacency bits of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize + 1
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![VertexSet::EMPTY; n];
        let mut bit = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.0[1 + bit / 8] >> (7 - bit % 8) & 1 == 1 {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
                bit += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    fn from_rows(rows: &[VertexSet]) -> Self {
        let n = rows.len();
        let bits = n * (n - 1) / 2;
        let mut bytes = vec![0u8; 1 + bits.div_ceil(8)];
        bytes[0] = (n - 1) as u8;
        let mut bit = 0usize;
        for j in 1..n {
            for row in rows.iter().take(j) {
                if row.contains(j) {
                    bytes[1 + bit / 8] |= 1 << (7 - bit % 8);
                }
                bit += 1;
            }
        }
        CanonicalForm(bytes)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Canonical position of every vertex: `labeling[v]` is the index `v`
/// receives in the canonical relabelling. `colors`, when given, is an
/// invariant vertex colouring that the labelling must respect (vertices
/// are ordered by colour first).
pub fn canonical_labeling(g: &Graph, colors: Option<&[usize]>) -> Vec<usize> {
    let (_, order) = search(g, colors);
    let mut labeling = vec![0; g.order()];
    for (p, &v) in order.iter().enumerate() {
        labeling[v] = p;
    }
    labeling
}

/// Canonical form and labelling from a single search.
pub(crate) fn canonical_form_and_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let (key, order) = search(g, None);
    let mut labeling = vec![0; g.order()];
    for (p, &v) in order.iter().enumerate() {
        labeling[v] = p;
    }
    (CanonicalForm::from_rows(&key), labeling)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (key, _) = search(g, None);
    CanonicalForm::from_rows(&key)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

/// Whether some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let mark = |w: usize| {
        let mut colors = vec![0; g.order()];
        colors[w] = 1;
        search(g, Some(&colors)).0
    };
    mark(u) == mark(v)
}

type Partition = Vec<Vec<usize>>;

fn search(g: &Graph, colors: Option<&[usize]>) -> (Vec<VertexSet>, Vec<usize>) {
    let n = g.order();
    let initial = match colors {
        None => vec![(0..n).collect()],
        Some(colors) => {
            let mut by_color: Vec<usize> = (0..n).collect();
            by_color.sort_by_key(|&v| colors[v]);
            let mut cells: Partition = Vec::new();
            for v in by_color {
                match cells.last_mut() {
                    Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
                    _ => cells.push(vec![v]),
                }
            }
            cells
        }
    };
    let mut state = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
        prefix: Vec::new(),
    };
    state.descend(initial);
    let (key, order) = state.best.expect("search visits at least one leaf");
    (key, order)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<VertexSet>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition) {
        let cells = refine(self.g, cells);
        if cells.len() == self.g.order() {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &u in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(u, &explored) {
                continue;
            }
            explored.push(u);
            let mut child = cells.clone();
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != u).collect();
            child[target] = vec![u];
            child.insert(target + 1, rest);
            self.prefix.push(u);
            self.descend(child);
            self.prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut position = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let key: Vec<VertexSet> = order
            .iter()
            .map(|&v| self.g.neighbors(v).iter().map(|w| position[w]).collect())
            .collect();
        match &self.best {
            None => self.best = Some((key, order)),
            Some((best_key, best_order)) => match key.cmp(best_key) {
                std::cmp::Ordering::Less => self.best = Some((key, order)),
                std::cmp::Ordering::Equal => {
                    let mut sigma = vec![0; n];
                    for (p, &v) in order.iter().enumerate() {
                        sigma[v] = best_order[p];
                    }
                    if sigma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(sigma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit test under the automorphisms found so far that fix the current
    /// prefix pointwise. Those automorphisms map the subtree of one child onto
    /// the subtree of the other, so the skipped branch has the same leaves.
    fn equivalent_to_explored(&self, u: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for sigma in &self.automorphisms {
            if self.prefix.iter().any(|&p| sigma[p] != p) {
                continue;
            }
            any = true;
            for (v, &image) in sigma.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let ru = find(&mut parent, u);
        explored.iter().any(|&e| find(&mut parent, e) == ru)
    }
}

/// Refines an ordered partition until it is equitable: within every cell all
/// vertices have the same number of neighbours in every cell. Split cells
/// keep their position and sub-cells are ordered by their neighbour-count
/// signature, so the result depends only on the graph and the input order
/// of cells.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut changed = false;
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbors(v);
                    let sig = masks.iter().map(|&m| (row & m).len() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let start = next.len();
            let mut prev: Option<&Vec<u8>> = None;
            for (sig, v) in &keyed {
                if prev == Some(sig) {
                    next.last_mut().expect("cell opened").push(*v);
                } else {
                    next.push(vec![*v]);
                    prev = Some(sig);
                }
            }
            if next.len() - start > 1 {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complement;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn relabelled_path_is_isomorphic() {
        let p = path(4);
        let q = p.relabel(&[2, 0, 3, 1]).unwrap();
        assert!(are_isomorphic(&p, &q));
        assert_eq!(canonical_form(&p), canonical_form(&q));
    }

    #[test]
    fn path_is_not_a_claw() {
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&path(4), &claw));
    }

    #[test]
    fn hexagon_is_not_k33() {
        let k33 = Graph::from_edge_list(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&k33));
    }

    #[test]
    fn canonical_graph_round_trips() {
        let g = path(7);
        let cf = canonical_form(&g);
        assert_eq!(cf.order(), 7);
        let h = cf.to_graph();
        assert_eq!(canonical_form(&h), cf);
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn labeling_is_a_permutation_realizing_the_form() {
        let g = cycle(5).with_new_vertex(VertexSet::singleton(2)).unwrap();
        let lab = canonical_labeling(&g, None);
        let h = g.relabel(&lab).unwrap();
        assert_eq!(CanonicalForm::from_rows(h.rows()), canonical_form(&g));
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let k = complement(&Graph::empty(24).unwrap());
        assert_eq!(canonical_form(&k).to_graph(), k);
        let e = Graph::empty(20).unwrap();
        assert_eq!(canonical_form(&e).to_graph(), e);
    }

    #[test]
    fn orbits_of_a_path() {
        let p = path(5);
        assert!(same_orbit(&p, 0, 4));
        assert!(same_orbit(&p, 1, 3));
        assert!(!same_orbit(&p, 0, 1));
        assert!(!same_orbit(&p, 2, 1));
    }
}
