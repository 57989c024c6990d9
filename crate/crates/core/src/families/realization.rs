//! Graphs with prescribed `(γ, β, η) = (a, b, c)` and trees with prescribed
//! `(η, λ) = (a, b)`.
//!
//! The constructions for `a, b >= 2` are assembled from gadgets attached to
//! one hub vertex. Each gadget's contribution to the three parameters is
//! forced by twin classes (β), disjoint closed neighbourhoods (γ) and both
//! together (η):
//!
//! | gadget                                   | γ   | β | η     |
//! |------------------------------------------|-----|---|-------|
//! | triangle `u_i x_i x'_i`, `u_i` on hub     | 1   | 1 | 1     |
//! | `v_i` on hub with pendant twins `z_i z'_i` | 1   | 1 | 2     |
//! | hub `w` with `l+1` pendant leaves `α_j`    | 1   | l | l + 1 |
//! | hub `w` with an `(l+1)`-clique `α_j`       | 1   | l | l     |
//!
//! Two further shapes hang a path `p_0 .. p_m` off the gadgets and end it in
//! a twin pair `δ, δ'`, adjacent to each other (case 3.4) or not (case 3.5);
//! the path carries the extra domination cost while the twin pair carries
//! one unit of metric dimension.

use super::{path_domination_code, Builder, FamilyInstance};
use crate::error::{Error, Result};
use crate::solvers::Parameter;

/// Which construction realizes a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizationCase {
    /// `b = 1`: a path.
    Path,
    /// `a = 1, b = c`: the complete graph `K_{b+1}`.
    Complete,
    /// `a = 1, c = b + 1`: the star `K_{1,b+1}`.
    Star,
    /// `2 <= a <= b = c`.
    Case31,
    /// `2 <= a = b < c`.
    Case32,
    /// `2 <= a < b < c`.
    Case33,
    /// `2 <= b < a = c`.
    Case34,
    /// `2 <= b < a < c`.
    Case35,
}

impl RealizationCase {
    pub fn classify(a: usize, b: usize, c: usize) -> Result<RealizationCase> {
        if a == 0 || b == 0 || c == 0 || c < a.max(b) || c > a + b {
            return Err(Error::InvalidParameters(format!(
                "need positive a, b, c with max(a,b) <= c <= a+b (got {a}, {b}, {c})"
            )));
        }
        if b == 1 && a > 1 && c == a + 1 {
            return Err(Error::NotRealizable { a, b, c });
        }
        Ok(match (a, b) {
            (_, 1) => RealizationCase::Path,
            (1, _) if c == b => RealizationCase::Complete,
            (1, _) => RealizationCase::Star,
            _ if a <= b && b == c => RealizationCase::Case31,
            _ if a == b => RealizationCase::Case32,
            _ if a < b => RealizationCase::Case33,
            _ if a == c => RealizationCase::Case34,
            _ => RealizationCase::Case35,
        })
    }
}

pub fn realization_graph(a: usize, b: usize, c: usize) -> Result<FamilyInstance> {
    let case = RealizationCase::classify(a, b, c)?;
    let name = format!("realization({a},{b},{c})");
    let inst = match case {
        RealizationCase::Path => path_case(a, c, name)?,
        RealizationCase::Complete => {
            let mut g = Gadgets::default();
            let vs: Vec<usize> = (0..=b).map(|i| g.b.vertex(format!("k{i}"))).collect();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    g.b.edge(u, v);
                }
            }
            let most: Vec<usize> = (0..b).collect();
            g.b.build(name)?
                .claim_code(Parameter::Gamma, vec![0])
                .claim_code(Parameter::Beta, most.clone())
                .claim_code(Parameter::Eta, most)
        }
        RealizationCase::Star => {
            let mut g = Gadgets::default();
            let centre = g.b.vertex("c");
            for i in 1..=b + 1 {
                let leaf = g.b.vertex(format!("l{i}"));
                g.b.edge(centre, leaf);
            }
            g.b.build(name)?
                .claim_code(Parameter::Gamma, vec![0])
                .claim_code(Parameter::Beta, (1..=b).collect())
                .claim_code(Parameter::Eta, (0..=b).collect())
        }
        RealizationCase::Case31 => {
            let (r, l) = (a - 1, b - a + 1);
            let mut g = Gadgets::default();
            let w = g.b.vertex("w");
            let alphas = g.clique_leaves(w, l + 1);
            let xs = g.triangles(w, r);
            g.finish(
                name,
                [
                    (Parameter::Gamma, vec![xs.clone(), vec![w]]),
                    (Parameter::Beta, vec![xs.clone(), alphas[..l].to_vec()]),
                    (Parameter::Eta, vec![xs, alphas[..l].to_vec()]),
                ],
            )?
        }
        RealizationCase::Case32 => {
            let (r, s) = (2 * a - c, c - a);
            let mut g = Gadgets::default();
            let h = g.b.vertex("h");
            let xs = g.triangles(h, r);
            let (vs, zs) = g.twin_pendants(h, s);
            g.finish(
                name,
                [
                    (Parameter::Gamma, vec![xs.clone(), vs.clone()]),
                    (Parameter::Beta, vec![xs.clone(), zs.clone()]),
                    (Parameter::Eta, vec![xs, zs, vs]),
                ],
            )?
        }
        RealizationCase::Case33 => {
            let (r, s, l) = (a + b - c, c - b - 1, b - a + 1);
            let mut g = Gadgets::default();
            let w = g.b.vertex("w");
            let alphas = g.pendant_leaves(w, l + 1);
            let xs = g.triangles(w, r);
            let (vs, zs) = g.twin_pendants(w, s);
            let located = alphas[..l].to_vec();
            g.finish(
                name,
                [
                    (Parameter::Gamma, vec![xs.clone(), vs.clone(), vec![w]]),
                    (
                        Parameter::Beta,
                        vec![xs.clone(), zs.clone(), located.clone()],
                    ),
                    (Parameter::Eta, vec![xs, zs, located, vs, vec![w]]),
                ],
            )?
        }
        RealizationCase::Case34 => {
            let (r, l) = (b - 1, a - b);
            let mut g = Gadgets::default();
            let path = g.path(3 * l + 1);
            let xs = g.triangles(path[0], r);
            let end = path[3 * l];
            let delta = g.b.vertex("delta");
            let delta2 = g.b.vertex("delta'");
            g.b.edge(delta, delta2);
            g.b.edge(delta, end);
            g.b.edge(delta2, end);
            let ws: Vec<usize> = (1..=l).map(|i| path[3 * i - 2]).collect();
            g.finish(
                name,
                [
                    (Parameter::Gamma, vec![xs.clone(), ws.clone(), vec![delta]]),
                    (Parameter::Beta, vec![xs.clone(), vec![delta]]),
                    (Parameter::Eta, vec![xs, ws, vec![delta]]),
                ],
            )?
        }
        RealizationCase::Case35 => {
            let (r, s, l) = (a + b - c, c - a - 1, a - b + 1);
            let mut g = Gadgets::default();
            let path = g.path(3 * l - 1);
            let xs = g.triangles(path[0], r);
            let (vs, zs) = g.twin_pendants(path[0], s);
            let end = path[3 * l - 2];
            let delta = g.b.vertex("delta");
            let delta2 = g.b.vertex("delta'");
            g.b.edge(delta, end);
            g.b.edge(delta2, end);
            let mut ws: Vec<usize> = (1..l).map(|i| path[3 * i - 2]).collect();
            ws.push(end);
            g.finish(
                name,
                [
                    (Parameter::Gamma, vec![xs.clone(), vs.clone(), ws.clone()]),
                    (Parameter::Beta, vec![xs.clone(), zs.clone(), vec![delta]]),
                    (Parameter::Eta, vec![xs, zs, vec![delta], vs, ws]),
                ],
            )?
        }
    };
    Ok(inst
        .claim(Parameter::Gamma, a)
        .claim(Parameter::Beta, b)
        .claim(Parameter::Eta, c)
        .finish())
}

fn path_case(a: usize, c: usize, name: String) -> Result<FamilyInstance> {
    let n = match (a, c) {
        (1, 1) => 2,
        (1, 2) => 3,
        _ => 3 * a,
    };
    let mut g = Gadgets::default();
    g.path(n);
    let inst = g.b.build(name)?.claim_code(Parameter::Beta, vec![0]);
    Ok(match n {
        2 => inst
            .claim_code(Parameter::Gamma, vec![0])
            .claim_code(Parameter::Eta, vec![0]),
        3 => inst
            .claim_code(Parameter::Gamma, vec![1])
            .claim_code(Parameter::Eta, vec![0, 1]),
        _ => inst
            .claim_code(Parameter::Gamma, path_domination_code(n))
            .claim_code(Parameter::Eta, path_domination_code(n)),
    })
}

#[derive(Default)]
struct Gadgets {
    b: Builder,
}

impl Gadgets {
    fn path(&mut self, len: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..len).map(|i| self.b.vertex(format!("p{i}"))).collect();
        for w in vs.windows(2) {
            self.b.edge(w[0], w[1]);
        }
        vs
    }

    /// `count` triangles `u_i x_i x'_i` with `u_i` adjacent to `hub`; returns the `x_i`.
    fn triangles(&mut self, hub: usize, count: usize) -> Vec<usize> {
        (1..=count)
            .map(|i| {
                let u = self.b.vertex(format!("u{i}"));
                let x = self.b.vertex(format!("x{i}"));
                let x2 = self.b.vertex(format!("x{i}'"));
                self.b.edge(hub, u);
                self.b.edge(u, x);
                self.b.edge(u, x2);
                self.b.edge(x, x2);
                x
            })
            .collect()
    }

    /// `count` vertices `v_i` on `hub`, each with two pendant leaves
    /// `z_i, z'_i`; returns the `v_i` and the `z_i`.
    fn twin_pendants(&mut self, hub: usize, count: usize) -> (Vec<usize>, Vec<usize>) {
        (1..=count)
            .map(|i| {
                let v = self.b.vertex(format!("v{i}"));
                let z = self.b.vertex(format!("z{i}"));
                let z2 = self.b.vertex(format!("z{i}'"));
                self.b.edge(hub, v);
                self.b.edge(v, z);
                self.b.edge(v, z2);
                (v, z)
            })
            .unzip()
    }

    fn pendant_leaves(&mut self, hub: usize, count: usize) -> Vec<usize> {
        (1..=count)
            .map(|i| {
                let a = self.b.vertex(format!("alpha{i}"));
                self.b.edge(hub, a);
                a
            })
            .collect()
    }

    /// `count` mutually adjacent vertices, all adjacent to `hub`.
    fn clique_leaves(&mut self, hub: usize, count: usize) -> Vec<usize> {
        let vs = self.pendant_leaves(hub, count);
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.b.edge(u, v);
            }
        }
        vs
    }

    fn finish<const K: usize>(
        self,
        name: String,
        codes: [(Parameter, Vec<Vec<usize>>); K],
    ) -> Result<FamilyInstance> {
        let mut inst = self.b.build(name)?;
        for (param, parts) in codes {
            let mut code: Vec<usize> = parts.into_iter().flatten().collect();
            code.sort_unstable();
            inst = inst.claim_code(param, code);
        }
        Ok(inst)
    }
}

/// The spider `S_{b-a,4,2a-b-1,3}`, a tree with `η = a` and `λ = b`.
pub fn realization_tree(a: usize, b: usize) -> Result<FamilyInstance> {
    if !(3 <= a && a <= b && b + 2 <= 2 * a) {
        return Err(Error::InvalidParameters(format!(
            "tree realization needs 3 <= a <= b <= 2a-2 (got a={a}, b={b})"
        )));
    }
    let spider = super::spider_mixed(b - a, a - 1)?;
    debug_assert_eq!(spider.claimed_values[&Parameter::Eta], a);
    debug_assert_eq!(spider.claimed_values[&Parameter::Lambda], b);
    Ok(FamilyInstance {
        name: format!("realization-tree({a},{b})"),
        ..spider
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn classification() {
        use RealizationCase::*;
        let cases = [
            ((1, 1, 1), Path),
            ((1, 1, 2), Path),
            ((3, 1, 3), Path),
            ((1, 3, 3), Complete),
            ((1, 3, 4), Star),
            ((2, 2, 2), Case31),
            ((2, 3, 3), Case31),
            ((2, 2, 4), Case32),
            ((2, 3, 4), Case33),
            ((3, 2, 3), Case34),
            ((3, 2, 4), Case35),
        ];
        for ((a, b, c), case) in cases {
            assert_eq!(
                RealizationCase::classify(a, b, c).unwrap(),
                case,
                "{a},{b},{c}"
            );
        }
    }

    #[test]
    fn excluded_and_invalid_triples() {
        assert_eq!(
            realization_graph(2, 1, 3).unwrap_err(),
            Error::NotRealizable { a: 2, b: 1, c: 3 }
        );
        assert!(matches!(
            realization_graph(2, 2, 5),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            realization_graph(0, 2, 2),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn small_cases_are_the_expected_graphs() {
        assert_eq!(realization_graph(1, 1, 1).unwrap().order(), 2);
        let star = realization_graph(1, 3, 4).unwrap();
        assert!(are_isomorphic(
            &star.graph,
            &super::super::star(5).unwrap().graph
        ));
    }

    #[test]
    fn claimed_codes_hold_on_larger_parameters() {
        for a in 1..=6 {
            for b in 1..=6 {
                for c in a.max(b)..=a + b {
                    if let Ok(inst) = realization_graph(a, b, c) {
                        inst.verify_claimed_codes().unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn small_triples_are_exact() {
        use crate::solvers::full_report;
        for a in 1..=4 {
            for b in 1..=4 {
                for c in a.max(b)..=a + b {
                    let Ok(inst) = realization_graph(a, b, c) else {
                        continue;
                    };
                    let r = full_report(&inst.graph).unwrap();
                    assert_eq!((r.gamma, r.beta, r.eta), (a, b, c), "{}", inst.name);
                }
            }
        }
    }

    #[test]
    fn tree_realization_is_exact() {
        use crate::solvers::full_report;
        for a in 3..=5 {
            for b in a..=2 * a - 2 {
                let t = realization_tree(a, b).unwrap();
                assert!(t.graph.is_tree());
                let r = full_report(&t.graph).unwrap();
                assert_eq!((r.eta, r.lambda), (a, b), "{}", t.name);
            }
        }
    }

    #[test]
    fn tree_realization_shapes() {
        let t = realization_tree(3, 4).unwrap();
        assert_eq!(t.order(), 1 + 4 + 3);
        assert!(realization_tree(3, 5).is_err());
        assert!(realization_tree(2, 2).is_err());
    }
}
