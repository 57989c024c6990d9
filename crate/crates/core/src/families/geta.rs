use super::{Builder, FamilyInstance};
use crate::error::{Error, Result};
use crate::solvers::Parameter;

/// Largest η accepted by [`g_eta_construction`]; η = 4 already has 112 vertices.
pub const G_ETA_MAX: usize = 4;

/// The graph attaining `n = η + η·3^(η-1)`: the subgraph of the king grid
/// `P_5^η` induced by
///
/// * `A_0 = {v_1, .., v_η}`, where `v_i` has coordinate 0 at position `i`
///   and 3 elsewhere, and
/// * `A_i = {x : x_i = 1 and 2 <= x_j <= 4 for j != i}` for each `i`.
///
/// `A_0` occupies vertices `0..η`; each `A_i` follows in lexicographic order.
/// The claimed η-code is `A_0`.
pub fn g_eta_construction(eta: usize) -> Result<FamilyInstance> {
    if !(2..=G_ETA_MAX).contains(&eta) {
        return Err(Error::InvalidParameters(format!(
            "g-eta construction supports 2 <= eta <= {G_ETA_MAX} (got {eta})"
        )));
    }
    let mut points: Vec<Vec<u8>> = (0..eta)
        .map(|i| (0..eta).map(|j| if i == j { 0 } else { 3 }).collect())
        .collect();
    for i in 0..eta {
        let mut others: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 1..eta {
            others = others
                .into_iter()
                .flat_map(|p| {
                    (2..=4u8).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        for rest in others {
            let mut p = rest;
            p.insert(i, 1);
            points.push(p);
        }
    }
    let mut b = Builder::default();
    for p in &points {
        let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        b.vertex(format!("({})", coords.join(",")));
    }
    for u in 0..points.len() {
        for v in u + 1..points.len() {
            let king = points[u]
                .iter()
                .zip(&points[v])
                .all(|(&a, &c)| a.abs_diff(c) <= 1);
            if king {
                b.edge(u, v);
            }
        }
    }
    Ok(b.build(format!("g-eta({eta})"))?
        .claim_code(Parameter::Eta, (0..eta).collect())
        .finish())
}
