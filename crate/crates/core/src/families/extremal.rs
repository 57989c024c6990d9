use std::fmt;
use std::str::FromStr;

use super::{Builder, FamilyInstance};
use crate::error::{Error, Result};
use crate::solvers::Parameter;

/// The seven families of connected graphs with `η = n - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EtaNMinus2Kind {
    /// `K_{r,s}`, `r, s >= 2`.
    CompleteBipartite,
    /// `K_r + co-K_s`, `r, s >= 2`.
    CliqueJoinIndependent,
    /// `K_1 + (K_r ∪ co-K_s)`, `r, s >= 2`.
    ApexOverCliqueAndIndependent,
    /// `K_r + (K_1 ∪ K_s)`, `r >= 1`, `s >= 2`.
    CliqueJoinVertexAndClique,
    /// Double star `K_2(r, s)`, `r, s >= 1`.
    DoubleStar,
    /// `K_1 + (K_{1,r} ∪ co-K_s)`, `r >= 2`, `s >= 1`.
    ApexOverStarAndIndependent,
    /// `K_{1,r}` plus a vertex adjacent to `s` of its leaves, `2 <= s <= r - 1`.
    StarWithLinkedLeaves,
}

impl EtaNMinus2Kind {
    pub const ALL: [EtaNMinus2Kind; 7] = [
        EtaNMinus2Kind::CompleteBipartite,
        EtaNMinus2Kind::CliqueJoinIndependent,
        EtaNMinus2Kind::ApexOverCliqueAndIndependent,
        EtaNMinus2Kind::CliqueJoinVertexAndClique,
        EtaNMinus2Kind::DoubleStar,
        EtaNMinus2Kind::ApexOverStarAndIndependent,
        EtaNMinus2Kind::StarWithLinkedLeaves,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EtaNMinus2Kind::CompleteBipartite => "complete-bipartite",
            EtaNMinus2Kind::CliqueJoinIndependent => "clique-join-independent",
            EtaNMinus2Kind::ApexOverCliqueAndIndependent => "apex-clique-independent",
            EtaNMinus2Kind::CliqueJoinVertexAndClique => "clique-join-vertex-clique",
            EtaNMinus2Kind::DoubleStar => "double-star",
            EtaNMinus2Kind::ApexOverStarAndIndependent => "apex-star-independent",
            EtaNMinus2Kind::StarWithLinkedLeaves => "star-linked-leaves",
        }
    }

    fn valid(self, r: usize, s: usize) -> bool {
        match self {
            EtaNMinus2Kind::CompleteBipartite
            | EtaNMinus2Kind::CliqueJoinIndependent
            | EtaNMinus2Kind::ApexOverCliqueAndIndependent => r >= 2 && s >= 2,
            EtaNMinus2Kind::CliqueJoinVertexAndClique => r >= 1 && s >= 2,
            EtaNMinus2Kind::DoubleStar => r >= 1 && s >= 1,
            EtaNMinus2Kind::ApexOverStarAndIndependent => r >= 2 && s >= 1,
            EtaNMinus2Kind::StarWithLinkedLeaves => s >= 2 && s < r,
        }
    }

    /// Order of the instance with parameters `(r, s)`.
    pub fn order(self, r: usize, s: usize) -> usize {
        match self {
            EtaNMinus2Kind::CompleteBipartite | EtaNMinus2Kind::CliqueJoinIndependent => r + s,
            EtaNMinus2Kind::ApexOverCliqueAndIndependent
            | EtaNMinus2Kind::CliqueJoinVertexAndClique => r + s + 1,
            EtaNMinus2Kind::DoubleStar | EtaNMinus2Kind::ApexOverStarAndIndependent => r + s + 2,
            EtaNMinus2Kind::StarWithLinkedLeaves => r + 2,
        }
    }
}

impl fmt::Display for EtaNMinus2Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EtaNMinus2Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EtaNMinus2Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown family kind `{s}`")))
    }
}

pub fn eta_n_minus_2_family(kind: EtaNMinus2Kind, r: usize, s: usize) -> Result<FamilyInstance> {
    if !kind.valid(r, s) {
        return Err(Error::InvalidParameters(format!(
            "{kind} does not accept r={r}, s={s}"
        )));
    }
    let mut b = Builder::default();
    let clique = |b: &mut Builder, tag: &str, k: usize| -> Vec<usize> {
        let vs: Vec<usize> = (1..=k).map(|i| b.vertex(format!("{tag}{i}"))).collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                b.edge(u, v);
            }
        }
        vs
    };
    let independent = |b: &mut Builder, tag: &str, k: usize| -> Vec<usize> {
        (1..=k).map(|i| b.vertex(format!("{tag}{i}"))).collect()
    };
    let join = |b: &mut Builder, left: &[usize], right: &[usize]| {
        for &u in left {
            for &v in right {
                b.edge(u, v);
            }
        }
    };
    match kind {
        EtaNMinus2Kind::CompleteBipartite => {
            let a = independent(&mut b, "a", r);
            let c = independent(&mut b, "b", s);
            join(&mut b, &a, &c);
        }
        EtaNMinus2Kind::CliqueJoinIndependent => {
            let k = clique(&mut b, "k", r);
            let i = independent(&mut b, "i", s);
            join(&mut b, &k, &i);
        }
        EtaNMinus2Kind::ApexOverCliqueAndIndependent => {
            let apex = b.vertex("apex");
            let k = clique(&mut b, "k", r);
            let i = independent(&mut b, "i", s);
            join(&mut b, &[apex], &k);
            join(&mut b, &[apex], &i);
        }
        EtaNMinus2Kind::CliqueJoinVertexAndClique => {
            let k = clique(&mut b, "k", r);
            let lone = b.vertex("y");
            let other = clique(&mut b, "m", s);
            join(&mut b, &k, &[lone]);
            join(&mut b, &k, &other);
        }
        EtaNMinus2Kind::DoubleStar => {
            let p = b.vertex("p");
            let q = b.vertex("q");
            b.edge(p, q);
            let lp = independent(&mut b, "lp", r);
            let lq = independent(&mut b, "lq", s);
            join(&mut b, &[p], &lp);
            join(&mut b, &[q], &lq);
        }
        EtaNMinus2Kind::ApexOverStarAndIndependent => {
            let apex = b.vertex("apex");
            let centre = b.vertex("c");
            let leaves = independent(&mut b, "l", r);
            let i = independent(&mut b, "i", s);
            join(&mut b, &[centre], &leaves);
            join(&mut b, &[apex], &[centre]);
            join(&mut b, &[apex], &leaves);
            join(&mut b, &[apex], &i);
        }
        EtaNMinus2Kind::StarWithLinkedLeaves => {
            let centre = b.vertex("c");
            let leaves = independent(&mut b, "l", r);
            join(&mut b, &[centre], &leaves);
            let extra = b.vertex("y");
            join(&mut b, &[extra], &leaves[..s]);
        }
    }
    let inst = b.build(format!("{kind}({r},{s})"))?;
    let target = inst.order() - 2;
    Ok(inst
        .claim(Parameter::Eta, target)
        .claim(Parameter::Lambda, target))
}

/// Every instance of the seven families with exactly `n` vertices.
pub fn eta_n_minus_2_instances(n: usize) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for kind in EtaNMinus2Kind::ALL {
        for r in 1..=n {
            for s in 1..=n {
                if kind.valid(r, s) && kind.order(r, s) == n {
                    out.push(eta_n_minus_2_family(kind, r, s).expect("parameters validated"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k23 = eta_n_minus_2_family(EtaNMinus2Kind::CompleteBipartite, 2, 3).unwrap();
        assert_eq!(k23.order(), 5);
        assert_eq!(k23.claimed_values[&Parameter::Eta], 3);
        let ds = eta_n_minus_2_family(EtaNMinus2Kind::DoubleStar, 2, 2).unwrap();
        assert_eq!(ds.order(), 6);
        assert!(ds.graph.is_tree());
        let sl = eta_n_minus_2_family(EtaNMinus2Kind::StarWithLinkedLeaves, 4, 2).unwrap();
        assert_eq!(sl.order(), 6);
        assert_eq!(sl.claimed_values[&Parameter::Lambda], 4);
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(eta_n_minus_2_family(EtaNMinus2Kind::CompleteBipartite, 1, 3).is_err());
        assert!(eta_n_minus_2_family(EtaNMinus2Kind::StarWithLinkedLeaves, 3, 3).is_err());
        assert!(eta_n_minus_2_family(EtaNMinus2Kind::CliqueJoinVertexAndClique, 1, 1).is_err());
    }

    #[test]
    fn instances_have_requested_order() {
        for n in 3..=8 {
            for inst in eta_n_minus_2_instances(n) {
                assert_eq!(inst.order(), n, "{}", inst.name);
                assert!(inst.graph.is_connected());
            }
        }
    }

    #[test]
    fn kind_names_parse() {
        for k in EtaNMinus2Kind::ALL {
            assert_eq!(k.name().parse::<EtaNMinus2Kind>().unwrap(), k);
        }
    }
}
