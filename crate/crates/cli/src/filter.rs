//! Filter expressions: comparisons between linear terms over the graph
//! quantities `gamma`, `beta`, `eta`, `lambda`, `n` and `diam`, joined by
//! `and`. For example `eta=2`, `lambda >= n-2 and diam <= 3`.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use locdom::{solve, Graph, Parameter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Param(Parameter),
    Order,
    Diameter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

/// `constant + Σ coefficient·quantity`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Linear {
    constant: i64,
    terms: Vec<(i64, Quantity)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Comparison {
    lhs: Linear,
    op: Op,
    rhs: Linear,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    text: String,
    clauses: Vec<Comparison>,
}

impl Filter {
    /// The filter that accepts everything.
    pub fn any() -> Self {
        Filter {
            text: "any".into(),
            clauses: Vec::new(),
        }
    }

    pub fn quantities(&self) -> impl Iterator<Item = Quantity> + '_ {
        self.clauses
            .iter()
            .flat_map(|c| c.lhs.terms.iter().chain(&c.rhs.terms))
            .map(|&(_, q)| q)
    }

    /// Whether the filter needs β, η or λ, which are undefined on `K1`.
    pub fn needs_order_two(&self) -> bool {
        self.quantities()
            .any(|q| matches!(q, Quantity::Param(p) if p != Parameter::Gamma))
    }

    pub fn eval(&self, g: &Graph) -> Result<bool> {
        let mut cache = [None; 6];
        let mut value = |q: Quantity| -> Result<i64> {
            let slot = match q {
                Quantity::Param(p) => p as usize,
                Quantity::Order => 4,
                Quantity::Diameter => 5,
            };
            if let Some(v) = cache[slot] {
                return Ok(v);
            }
            let v = match q {
                Quantity::Param(p) => solve(g, p)?.value,
                Quantity::Order => g.order(),
                Quantity::Diameter => g.diameter()?,
            } as i64;
            cache[slot] = Some(v);
            Ok(v)
        };
        for clause in &self.clauses {
            let mut side = |l: &Linear| -> Result<i64> {
                let mut total = l.constant;
                for &(k, q) in &l.terms {
                    total += k * value(q)?;
                }
                Ok(total)
            };
            let (a, b) = (side(&clause.lhs)?, side(&clause.rhs)?);
            let ok = match clause.op {
                Op::Eq => a == b,
                Op::Ne => a != b,
                Op::Lt => a < b,
                Op::Le => a <= b,
                Op::Gt => a > b,
                Op::Ge => a >= b,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for Filter {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.split_whitespace().collect::<Vec<_>>().join(" ");
        if text.is_empty() || text == "any" {
            return Ok(Filter::any());
        }
        let clauses = split_and(&text)
            .into_iter()
            .map(parse_comparison)
            .collect::<Result<Vec<_>>>()?;
        Ok(Filter { text, clauses })
    }
}

fn split_and(text: &str) -> Vec<&str> {
    text.split(" and ").map(str::trim).collect()
}

fn parse_comparison(clause: &str) -> Result<Comparison> {
    const OPS: [(&str, Op); 7] = [
        ("==", Op::Eq),
        ("!=", Op::Ne),
        ("<=", Op::Le),
        (">=", Op::Ge),
        ("=", Op::Eq),
        ("<", Op::Lt),
        (">", Op::Gt),
    ];
    for (token, op) in OPS {
        if let Some(at) = clause.find(token) {
            let (lhs, rhs) = (&clause[..at], &clause[at + token.len()..]);
            if rhs.starts_with(['=', '<', '>']) {
                bail!("malformed comparison `{clause}`");
            }
            return Ok(Comparison {
                lhs: parse_linear(lhs)?,
                op,
                rhs: parse_linear(rhs)?,
            });
        }
    }
    Err(anyhow!("no comparison operator in `{clause}`"))
}

fn parse_linear(expr: &str) -> Result<Linear> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        bail!("empty side in filter expression");
    }
    let mut out = Linear::default();
    let mut sign = 1;
    let mut rest = compact.as_str();
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (atom, tail) = rest.split_at(end);
        if atom.is_empty() {
            bail!("missing term in `{expr}`");
        }
        match atom.parse::<i64>() {
            Ok(k) => out.constant += sign * k,
            Err(_) => out.terms.push((sign, parse_quantity(atom)?)),
        }
        match tail.chars().next() {
            None => break,
            Some(c) => {
                sign = if c == '-' { -1 } else { 1 };
                rest = &tail[1..];
            }
        }
    }
    Ok(out)
}

fn parse_quantity(name: &str) -> Result<Quantity> {
    Ok(match name {
        "n" => Quantity::Order,
        "diam" | "D" => Quantity::Diameter,
        other => Quantity::Param(
            other
                .parse()
                .map_err(|_| anyhow!("unknown quantity `{other}` in filter"))?,
        ),
    })
}
