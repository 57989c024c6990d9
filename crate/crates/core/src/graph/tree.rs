use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Leaf and support-vertex counts of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeProfile {
    pub leaves: usize,
    pub support_vertices: usize,
    /// Vertices adjacent to at least two leaves.
    pub strong_support: VertexSet,
}

pub fn tree_profile(g: &Graph) -> Result<TreeProfile> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let leaves: VertexSet = (0..g.order()).filter(|&v| g.degree(v) == 1).collect();
    let mut support = VertexSet::EMPTY;
    let mut strong_support = VertexSet::EMPTY;
    for v in 0..g.order() {
        match (g.neighbors(v) & leaves).len() {
            0 => {}
            1 => support.insert(v),
            _ => {
                support.insert(v);
                strong_support.insert(v);
            }
        }
    }
    Ok(TreeProfile {
        leaves: leaves.len(),
        support_vertices: support.len(),
        strong_support,
    })
}
