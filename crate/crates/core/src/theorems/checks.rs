//! One checker per statement. Each takes a single graph and returns a
//! [`Verdict`] over it; hypotheses that are not met give a skipped verdict,
//! while inputs outside the checker's domain are errors.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::codes::CodeChecker;
use crate::error::{Error, Result};
use crate::families::{
    eta_n_minus_2_instances, realization_graph, realization_tree, RealizationCase,
};
use crate::graph::{canonical_form, strong_product, tree_profile, Graph};
use crate::solvers::{
    domination_number, full_report, ld_number, metric_dimension, mld_number, Parameter,
};

use super::verdict::{describe, Verdict};

fn require_order(g: &Graph, min: usize) -> Result<()> {
    if g.order() < min {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            min,
        });
    }
    g.require_connected()
}

fn pow_saturating(base: usize, exp: usize) -> usize {
    u32::try_from(exp).map_or(usize::MAX, |e| base.saturating_pow(e))
}

/// `max(γ, β) <= η <= min(γ + β, λ)`. Each parameter is computed by its own
/// unseeded search so that the chain is not assumed.
pub fn check_inequality_chain(g: &Graph) -> Result<Verdict> {
    require_order(g, 2)?;
    let gamma = domination_number(g)?.value;
    let beta = metric_dimension(g)?.value;
    let eta = mld_number(g)?.value;
    let lambda = ld_number(g)?.value;
    let mut v = Verdict::for_graph("prop1", g);
    v.require(
        gamma.max(beta) <= eta && eta <= (gamma + beta).min(lambda),
        || format!("gamma={gamma} beta={beta} eta={eta} lambda={lambda}"),
    );
    Ok(v)
}

/// `η + ⌈2D/3⌉ <= n <= η + η·3^(η-1)` for diameter at least 3.
pub fn check_eta_bounds(g: &Graph) -> Result<Verdict> {
    require_order(g, 2)?;
    let v = Verdict::for_graph("eta-bounds", g);
    let (n, d) = (g.order(), g.diameter()?);
    if d < 3 {
        return Ok(v.skip(format!("diameter {d} < 3")));
    }
    let eta = mld_number(g)?.value;
    let lower = eta + (2 * d).div_ceil(3);
    let upper = eta.saturating_add(eta.saturating_mul(pow_saturating(3, eta - 1)));
    Ok(bounds_verdict(v, lower, ("n", n), upper, || {
        format!("eta={eta} D={d}")
    }))
}

/// Checks `lower <= value <= upper`, where `name` is what `value` measures.
fn bounds_verdict(
    mut v: Verdict,
    lower: usize,
    (name, value): (&str, usize),
    upper: usize,
    detail: impl Fn() -> String,
) -> Verdict {
    v.require(lower <= value, || {
        format!("lower bound {lower} > {name}={value} ({})", detail())
    });
    v.require(value <= upper, || {
        format!("{name}={value} > upper bound {upper} ({})", detail())
    });
    if lower == value {
        v.note("lower bound attained");
    }
    if upper == value {
        v.note("upper bound attained");
    }
    v
}

/// `n <= λ + 2^λ - 1` always, and `λ + ⌈(3D-1)/5⌉ <= n` for diameter at
/// least 3.
pub fn check_lambda_bounds(g: &Graph) -> Result<Verdict> {
    require_order(g, 2)?;
    let mut v = Verdict::for_graph("lambda-bounds", g);
    let (n, d) = (g.order(), g.diameter()?);
    let lambda = ld_number(g)?.value;
    let upper = lambda.saturating_add(pow_saturating(2, lambda)) - 1;
    if d >= 3 {
        let lower = lambda + (3 * d - 1).div_ceil(5);
        return Ok(bounds_verdict(v, lower, ("n", n), upper, || {
            format!("lambda={lambda} D={d}")
        }));
    }
    v.require(n <= upper, || {
        format!("n={n} > upper bound {upper} (lambda={lambda})")
    });
    if upper == n {
        v.note("upper bound attained");
    }
    v.note("lower bound not applicable: diameter < 3");
    Ok(v)
}

fn is_path(g: &Graph) -> bool {
    g.is_tree() && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// `η <= λ <= 2η - 2` for trees of order at least 3 other than `P6`.
pub fn check_tree_bounds(t: &Graph) -> Result<Verdict> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    require_order(t, 3)?;
    let v = Verdict::for_graph("tree-bounds", t);
    let eta = mld_number(t)?.value;
    let lambda = ld_number(t)?.value;
    if t.order() == 6 && is_path(t) {
        let mut v = v.skip("P6 is excluded");
        v.note(format!(
            "P6 measured eta={eta} lambda={lambda}; upper bound 2*eta-2={} {}",
            2 * eta - 2,
            if lambda > 2 * eta - 2 {
                "is violated"
            } else {
                "holds"
            }
        ));
        return Ok(v);
    }
    Ok(bounds_verdict(
        v,
        eta,
        ("lambda", lambda),
        2 * eta - 2,
        || format!("eta={eta} lambda={lambda}"),
    ))
}

/// For trees of order at least 3: `η = γ + l - s` (leaves `l`, support
/// vertices `s`) and `λ <= 2η`.
pub fn check_tree_identities(t: &Graph) -> Result<Verdict> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    require_order(t, 3)?;
    let profile = tree_profile(t)?;
    let gamma = domination_number(t)?.value;
    let eta = mld_number(t)?.value;
    let lambda = ld_number(t)?.value;
    let (l, s) = (profile.leaves, profile.support_vertices);
    let mut v = Verdict::for_graph("tree-identities", t);
    v.require(eta + s == gamma + l, || {
        format!("eta={eta} but gamma+l-s = {gamma}+{l}-{s}")
    });
    v.require(lambda <= 2 * eta, || {
        format!("lambda={lambda} > 2*eta={}", 2 * eta)
    });
    Ok(v)
}

/// If `D = 2` or `β >= n - 3` then `η = λ`.
pub fn check_eta_equals_lambda_conditions(g: &Graph) -> Result<Verdict> {
    require_order(g, 2)?;
    let v = Verdict::for_graph("eta-lambda", g);
    let (n, d) = (g.order(), g.diameter()?);
    let beta = metric_dimension(g)?.value;
    if d != 2 && beta + 3 < n {
        return Ok(v.skip(format!("D={d} and beta={beta} < n-3")));
    }
    let eta = mld_number(g)?.value;
    let lambda = ld_number(g)?.value;
    let mut v = v;
    v.require(eta == lambda, || {
        format!("D={d} beta={beta} n={n} but eta={eta} lambda={lambda}")
    });
    Ok(v)
}

/// The king grid `P5 ⊠ P5`, vertex `(i, j)` numbered `5i + j`.
pub fn king_grid_5x5() -> Graph {
    let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).expect("valid path");
    strong_product(&p5, &p5).expect("25 vertices")
}

/// Whether `map` preserves every distance from `g` to `h`. `map[x]` is the
/// image of `x`; both graphs must be connected.
pub fn isometric_embedding_check(g: &Graph, h: &Graph, map: &[usize]) -> Result<bool> {
    if map.len() != g.order() {
        return Err(Error::InvalidParameters(format!(
            "map has {} entries for {} vertices",
            map.len(),
            g.order()
        )));
    }
    let mut image = VertexSet::EMPTY;
    for &y in map {
        if y >= h.order() {
            return Err(Error::VertexOutOfRange {
                vertex: y,
                order: h.order(),
            });
        }
        if image.contains(y) {
            return Err(Error::InvalidParameters(format!(
                "map is not injective at {y}"
            )));
        }
        image.insert(y);
    }
    g.require_connected()?;
    h.require_connected()?;
    Ok((0..g.order())
        .all(|x| (x + 1..g.order()).all(|y| g.distance(x, y) == h.distance(map[x], map[y]))))
}

/// For `η = 2`, reported as parts: (i) `3 <= n <= 8`; (ii) every η-code
/// `{u, v}` has `d(u, v) <= 3`; (iii) the metric coordinates of at least one
/// η-code embed `G` isometrically in the 5×5 king grid; and the weaker
/// (iii-adj) that those coordinates are injective and send edges to edges.
pub fn check_eta2_membership(g: &Graph) -> Result<Verdict> {
    require_order(g, 2)?;
    let v = Verdict::for_graph("eta2-lemma", g);
    let eta = mld_number(g)?.value;
    if eta != 2 {
        return Ok(v.skip(format!("eta={eta}")));
    }
    let n = g.order();
    let mut order = Verdict::for_graph("eta2-lemma(i)", g);
    order.require((3..=8).contains(&n), || format!("eta=2 with n={n}"));
    let mut close = Verdict::for_graph("eta2-lemma(ii)", g);
    let mut isometric = Verdict::for_graph("eta2-lemma(iii)", g);
    let mut adjacent = Verdict::for_graph("eta2-lemma(iii-adj)", g);

    let checker = CodeChecker::new(g)?;
    let grid = king_grid_5x5();
    let (mut codes, mut iso_codes, mut adj_codes) = (0, 0, 0);
    for a in 0..n {
        for b in a + 1..n {
            let pair = VertexSet::singleton(a) | VertexSet::singleton(b);
            if !checker.is_mld(pair) {
                continue;
            }
            codes += 1;
            let d = g.distance(a, b).expect("connected");
            close.require(d <= 3, || format!("eta-code {{{a},{b}}} has d={d}"));
            let coords: Vec<(usize, usize)> = (0..n)
                .map(|x| (g.distance(a, x).unwrap(), g.distance(b, x).unwrap()))
                .collect();
            if coords.iter().any(|&(i, j)| i >= 5 || j >= 5) {
                continue;
            }
            // Distinct because the code is locating.
            let map: Vec<usize> = coords.iter().map(|&(i, j)| 5 * i + j).collect();
            if g.edges().all(|(x, y)| grid.are_adjacent(map[x], map[y])) {
                adj_codes += 1;
            }
            if isometric_embedding_check(g, &grid, &map)? {
                iso_codes += 1;
            }
        }
    }
    isometric.require(iso_codes > 0, || {
        format!(
            "none of the {codes} eta-codes gives an isometric embedding (diameter {})",
            g.diameter().unwrap_or(0)
        )
    });
    if iso_codes > 0 && iso_codes < codes {
        isometric.note("isometric for some but not all eta-codes");
    }
    adjacent.require(adj_codes == codes, || {
        format!(
            "{} of {codes} eta-codes do not preserve adjacency",
            codes - adj_codes
        )
    });
    Ok(v.with_parts(vec![order, close, isometric, adjacent]))
}

/// Canonical forms of the seven `λ = n - 2` families at order `n`.
pub fn lambda_extremal_family_forms(n: usize) -> HashSet<crate::graph::CanonicalForm> {
    eta_n_minus_2_instances(n)
        .iter()
        .map(|inst| canonical_form(&inst.graph))
        .collect()
}

/// Four statements on graphs of order at least 3, reported as parts:
/// (a) `λ >= n-2` implies `D <= 3`; (b) `λ = n-2` iff `η = n-2`;
/// (c) `λ = n-2` implies membership of one of the seven families;
/// (d) `η = n-3` implies `λ = n-3`.
pub fn check_lambda_extremal(g: &Graph) -> Result<Verdict> {
    require_order(g, 3)?;
    let (n, d) = (g.order(), g.diameter()?);
    let eta = mld_number(g)?.value;
    let lambda = ld_number(g)?.value;
    let detail = || format!("n={n} D={d} eta={eta} lambda={lambda}");

    let mut a = Verdict::for_graph("lambda-extremal(a)", g);
    if lambda + 2 >= n {
        a.require(d <= 3, detail);
    } else {
        a = a.skip("lambda < n-2");
    }
    let mut b = Verdict::for_graph("lambda-extremal(b)", g);
    b.require((lambda + 2 == n) == (eta + 2 == n), detail);
    let mut c = Verdict::for_graph("lambda-extremal(c)", g);
    if lambda + 2 == n {
        let member = lambda_extremal_family_forms(n).contains(&canonical_form(g));
        c.require(member, || {
            format!("{} is in none of the seven families", detail())
        });
    } else {
        c = c.skip("lambda != n-2");
    }
    let mut e = Verdict::for_graph("lambda-extremal(d)", g);
    if eta + 3 == n {
        e.require(lambda + 3 == n, detail);
    } else {
        e = e.skip("eta != n-3");
        if lambda + 3 == n {
            e.note(format!("lambda = n-3 with eta = n-{}", n - eta));
        }
    }
    Ok(Verdict::for_graph("lambda-extremal", g).with_parts(vec![a, b, c, e]))
}

/// Builds the graph for `(γ, β, η) = (a, b, c)` and compares its computed
/// parameters. The one excluded family of triples holds when it is rejected.
pub fn verify_realization(a: usize, b: usize, c: usize) -> Result<Verdict> {
    let scope = format!("({a},{b},{c})");
    let mut v = Verdict::new("realization", scope.clone());
    match RealizationCase::classify(a, b, c) {
        Err(Error::NotRealizable { .. }) => {
            v.note("excluded triple rejected");
            return Ok(v);
        }
        Err(e) => return Err(e),
        Ok(_) => {}
    }
    let inst = realization_graph(a, b, c)?;
    let r = full_report(&inst.graph)?;
    let got = (r.gamma, r.beta, r.eta);
    if got != (a, b, c) {
        v.fail(
            describe(&inst.graph),
            format!("{scope} built {} with {got:?}", inst.name),
        );
    }
    if let Err(problems) = inst.verify_claimed_codes() {
        v.fail(describe(&inst.graph), problems.join("; "));
    }
    Ok(v)
}

/// Builds the tree for `(η, λ) = (a, b)` and compares its computed
/// parameters.
pub fn verify_tree_realization(a: usize, b: usize) -> Result<Verdict> {
    let inst = realization_tree(a, b)?;
    let mut v = Verdict::new("tree-realization", format!("({a},{b})"));
    let eta = mld_number(&inst.graph)?.value;
    let lambda = ld_number(&inst.graph)?.value;
    if !inst.graph.is_tree() || (eta, lambda) != (a, b) {
        v.fail(
            describe(&inst.graph),
            format!("{} has eta={eta} lambda={lambda}", inst.name),
        );
    }
    debug_assert_eq!(inst.claimed_values.get(&Parameter::Eta), Some(&a));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::theorems::Status;

    fn g(inst: Result<crate::families::FamilyInstance>) -> Graph {
        inst.unwrap().graph
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn chain_examples() {
        assert!(check_inequality_chain(&path(6)).unwrap().holds());
        assert!(check_inequality_chain(&g(families::complete(4)))
            .unwrap()
            .holds());
        assert!(check_inequality_chain(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn eta_bound_examples() {
        let v = check_eta_bounds(&path(7)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.notes.get("lower bound attained"), Some(&1));
        let v = check_eta_bounds(&g(families::g_eta_construction(2))).unwrap();
        assert_eq!(v.notes.get("upper bound attained"), Some(&1));
        assert!(check_eta_bounds(&g(families::complete(4)))
            .unwrap()
            .is_skipped());
    }

    #[test]
    fn lambda_bound_examples() {
        let v = check_lambda_bounds(&path(5)).unwrap();
        assert_eq!(v.notes.get("lower bound attained"), Some(&1));
        assert!(check_lambda_bounds(&path(6)).unwrap().holds());
    }

    #[test]
    fn tree_bound_examples() {
        let v = check_tree_bounds(&g(families::spider_k3(3))).unwrap();
        assert_eq!(v.notes.get("lower bound attained"), Some(&1));
        let v = check_tree_bounds(&g(families::spider_k4(3))).unwrap();
        assert_eq!(v.notes.get("upper bound attained"), Some(&1));
        let v = check_tree_bounds(&path(6)).unwrap();
        assert!(v.is_skipped());
        assert!(v
            .notes
            .keys()
            .any(|k| k.contains("eta=2 lambda=3") && k.contains("violated")));
        assert_eq!(
            check_tree_bounds(&g(families::cycle(5))).unwrap_err(),
            Error::NotATree
        );
    }

    #[test]
    fn eta_lambda_examples() {
        assert_eq!(
            check_eta_equals_lambda_conditions(&g(families::cycle(5)))
                .unwrap()
                .status,
            Status::Holds
        );
        assert_eq!(
            check_eta_equals_lambda_conditions(&g(families::complete(4)))
                .unwrap()
                .status,
            Status::Holds
        );
        assert!(check_eta_equals_lambda_conditions(&path(6))
            .unwrap()
            .is_skipped());
    }

    #[test]
    fn eta2_examples() {
        // P6 has diameter 5 and the grid only 4, so no map is isometric;
        // the coordinate map still sends edges to edges.
        let v = check_eta2_membership(&path(6)).unwrap();
        let status: Vec<_> = v.parts.iter().map(|p| p.status.clone()).collect();
        assert_eq!(
            status,
            [Status::Holds, Status::Holds, Status::Fails, Status::Holds]
        );
        assert_eq!(
            check_eta2_membership(&path(4)).unwrap().status,
            Status::Holds
        );
        assert!(check_eta2_membership(&path(7)).unwrap().is_skipped());
    }

    #[test]
    fn embedding_examples() {
        let p4 = path(4);
        assert!(isometric_embedding_check(&p4, &p4, &[0, 1, 2, 3]).unwrap());
        let grid = king_grid_5x5();
        assert!(isometric_embedding_check(&path(3), &grid, &[0, 1, 2]).unwrap());
        // The last vertex lands at (1,1), next to the first.
        assert!(!isometric_embedding_check(&p4, &grid, &[0, 1, 2, 6]).unwrap());
        assert!(isometric_embedding_check(&p4, &grid, &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn lambda_extremal_examples() {
        let v = check_lambda_extremal(&g(families::complete_bipartite(2, 3))).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(
            v.parts[..3].iter().all(|p| p.status == Status::Holds),
            "{v:?}"
        );
        let v = check_lambda_extremal(&path(6)).unwrap();
        assert!(v.parts[3].notes.contains_key("lambda = n-3 with eta = n-4"));
    }

    #[test]
    fn realization_examples() {
        assert_eq!(verify_realization(1, 1, 2).unwrap().status, Status::Holds);
        let v = verify_realization(2, 1, 3).unwrap();
        assert!(v.notes.contains_key("excluded triple rejected"));
        assert!(verify_realization(1, 1, 3).is_err());
        assert!(verify_tree_realization(3, 5).is_err());
        assert_eq!(verify_tree_realization(4, 6).unwrap().status, Status::Holds);
    }
}
