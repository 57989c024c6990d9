use super::Graph;
use crate::bitset::VertexSet;

const UNREACHABLE: u8 = u8::MAX;

/// Hop distances between every pair of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u8>,
}

impl DistanceMatrix {
    pub(crate) fn compute(g: &Graph) -> Self {
        let n = g.order();
        let mut entries = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut entries[s * n..(s + 1) * n];
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut depth = 0u8;
            while !frontier.is_empty() {
                for v in frontier {
                    row[v] = depth;
                }
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= g.neighbors(v);
                }
                frontier = next - seen;
                seen |= frontier;
                depth += 1;
            }
        }
        DistanceMatrix { order: n, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `None` when `u` and `v` lie in different components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.entries[u * self.order + v];
        (d != UNREACHABLE).then_some(d as usize)
    }

    /// Raw row of distances from `u`; unreachable entries hold `u8::MAX`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u8] {
        &self.entries[u * self.order..(u + 1) * self.order]
    }

    pub fn is_connected(&self) -> bool {
        !self.entries.contains(&UNREACHABLE)
    }

    /// Largest finite distance, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        if self.is_connected() {
            self.entries.iter().max().map(|&d| d as usize)
        } else {
            None
        }
    }
}
