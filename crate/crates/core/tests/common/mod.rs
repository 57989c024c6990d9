//! Independent reference implementations for the integration tests. Nothing
//! here calls into the library's predicates, solvers or canonical forms:
//! graphs are adjacency bitmasks over at most 9 vertices and every question
//! is answered by exhaustive search.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use locdom::Graph;

/// Adjacency masks, `adj[v]` holding the neighbours of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Small {
    pub adj: Vec<u32>,
}

impl Small {
    pub fn from_graph(g: &Graph) -> Small {
        let adj = (0..g.order())
            .map(|v| {
                (0..g.order())
                    .filter(|&u| g.are_adjacent(u, v))
                    .map(|u| 1 << u)
                    .sum()
            })
            .collect();
        Small { adj }
    }

    /// Graph on `n` vertices whose edges are the set bits of `mask`, edges
    /// numbered in the order (0,1), (0,2), ..., (1,2), ...
    pub fn from_edge_mask(n: usize, mask: u64) -> Small {
        let mut adj = vec![0u32; n];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        Small { adj }
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n(), &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n())
            .map(|s| {
                let mut d = vec![None; self.n()];
                d[s] = Some(0);
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for w in 0..self.n() {
                        if self.adj[u] >> w & 1 == 1 && d[w].is_none() {
                            d[w] = Some(d[u].unwrap() + 1);
                            queue.push_back(w);
                        }
                    }
                }
                d
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let (mut seen, mut frontier) = (1u32, 1u32);
        while frontier != 0 {
            let next = (0..self.n())
                .filter(|&v| frontier >> v & 1 == 1)
                .fold(0, |acc, v| acc | self.adj[v]);
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n()
    }

    /// Adjacency key under the permutation `p` (vertex `v` goes to `p[v]`).
    fn key_under(&self, p: &[usize]) -> u64 {
        let n = self.n();
        debug_assert!(n <= 11);
        let mut key = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u] >> v & 1 == 1 {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    key |= 1 << (b * (b - 1) / 2 + a);
                }
            }
        }
        key
    }

    /// Least adjacency key over all vertex permutations: equal exactly for
    /// isomorphic graphs of equal order.
    pub fn brute_force_key(&self) -> u64 {
        let mut p: Vec<usize> = (0..self.n()).collect();
        let mut best = u64::MAX;
        permute(&mut p, 0, &mut |p| best = best.min(self.key_under(p)));
        best
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Brute-force isomorphism: some permutation maps one edge set onto the other.
pub fn isomorphic(a: &Small, b: &Small) -> bool {
    a.n() == b.n() && a.brute_force_key() == b.brute_force_key()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, found by listing every labelled graph.
pub fn labelled_oracle_classes(n: usize) -> Vec<Small> {
    labelled_oracle_classes_with(n, |_| true)
}

/// As [`labelled_oracle_classes`], restricted to edge masks accepted by
/// `keep_mask`.
pub fn labelled_oracle_classes_with(n: usize, keep_mask: impl Fn(u64) -> bool) -> Vec<Small> {
    let edges = n * (n - 1) / 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in (0..1u64 << edges).filter(|&m| keep_mask(m)) {
        let g = Small::from_edge_mask(n, mask);
        if g.is_connected() && seen.insert(g.brute_force_key()) {
            out.push(g);
        }
    }
    out
}

/// Minimum sizes of a dominating set, a resolving set, a resolving
/// dominating set and a locating-dominating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub gamma: usize,
    pub beta: usize,
    pub eta: usize,
    pub lambda: usize,
}

pub fn brute_force_params(g: &Small) -> Params {
    let n = g.n();
    let d = g.distances();
    let all = (1u32 << n) - 1;
    let dominating = |s: u32| (0..n).all(|v| s >> v & 1 == 1 || g.adj[v] & s != 0);
    let resolving = |s: u32| {
        let vectors: BTreeSet<Vec<Option<usize>>> = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&w| s >> w & 1 == 1)
                    .map(|w| d[w][v])
                    .collect()
            })
            .collect();
        vectors.len() == n
    };
    let locating_dominating = |s: u32| {
        let traces: Vec<u32> = (0..n)
            .filter(|&v| s >> v & 1 == 0)
            .map(|v| g.adj[v] & s)
            .collect();
        let distinct: BTreeSet<u32> = traces.iter().copied().collect();
        traces.iter().all(|&t| t != 0) && distinct.len() == traces.len()
    };
    let least = |pred: &dyn Fn(u32) -> bool| {
        (0..=all)
            .filter(|&s| pred(s))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    };
    Params {
        gamma: least(&dominating),
        beta: least(&resolving),
        eta: least(&|s| dominating(s) && resolving(s)),
        lambda: least(&locating_dominating),
    }
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, &edges).unwrap()
}
