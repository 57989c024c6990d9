use super::{check_order, Graph};
use crate::bitset::VertexSet;
use crate::error::Result;

/// Strong product `g ⊠ h`. Vertex `(i, j)` is numbered `i * h.order() + j`;
/// two pairs are adjacent when each coordinate is equal or adjacent and the
/// pairs differ.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    check_order(n * m)?;
    let mut rows = vec![VertexSet::EMPTY; n * m];
    for i in 0..n {
        let closed_i = g.neighbors(i) | VertexSet::singleton(i);
        for j in 0..m {
            let closed_j = h.neighbors(j) | VertexSet::singleton(j);
            let row = &mut rows[i * m + j];
            for i2 in closed_i {
                for j2 in closed_j {
                    row.insert(i2 * m + j2);
                }
            }
            row.remove(i * m + j);
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Disjoint union; the vertices of `h` are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order();
    check_order(n + h.order())?;
    let mut rows = g.rows().to_vec();
    rows.extend(h.rows().iter().map(|r| VertexSet::from_bits(r.bits() << n)));
    Ok(Graph::from_rows_unchecked(rows))
}

/// Join `g + h`: the disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order();
    let union = disjoint_union(g, h)?;
    let left = VertexSet::full(n);
    let right = union.vertices() - left;
    let rows = union
        .rows()
        .iter()
        .enumerate()
        .map(|(v, &r)| if v < n { r | right } else { r | left })
        .collect();
    Ok(Graph::from_rows_unchecked(rows))
}

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertices();
    let rows = g
        .rows()
        .iter()
        .enumerate()
        .map(|(v, &r)| all - r - VertexSet::singleton(v))
        .collect();
    Graph::from_rows_unchecked(rows)
}
