//! Reading graphs from a file or standard input.
//!
//! Two formats are accepted and told apart by the first non-blank line: an
//! edge list starts with a line holding only the order `n` and continues
//! with one `u v` pair per line; anything else is read as newline-delimited
//! graph6. Lines starting with `#` are ignored in edge lists.

use std::io::Read;
use std::path::Path;

use locdom::enumeration::read_graph6;
use locdom::Graph;
use sha2::{Digest, Sha256};

use crate::exit::CliError;

/// A parsed graph and the 1-based line it starts on.
pub struct InputGraph {
    pub line: usize,
    pub graph: Graph,
}

pub struct Input {
    pub graphs: Vec<InputGraph>,
    pub digest: String,
}

pub fn read_input(path: Option<&Path>) -> Result<Input, CliError> {
    let mut bytes = Vec::new();
    match path {
        None => std::io::stdin().read_to_end(&mut bytes),
        Some(p) if p == Path::new("-") => std::io::stdin().read_to_end(&mut bytes),
        Some(p) => std::fs::File::open(p).and_then(|mut f| f.read_to_end(&mut bytes)),
    }
    .map_err(|e| CliError::parse(format!("cannot read input: {e}")))?;
    let digest = format!("sha256:{}", hex::encode(Sha256::digest(&bytes)));
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| CliError::parse("input is not valid UTF-8".to_string()))?;
    Ok(Input {
        graphs: parse_graphs(text)?,
        digest,
    })
}

pub fn parse_graphs(text: &str) -> Result<Vec<InputGraph>, CliError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(CliError::parse("input holds no graph".to_string())),
        Some(l) if l.parse::<usize>().is_ok() => parse_edge_list(text).map(|g| vec![g]),
        Some(_) => parse_graph6_lines(text),
    }
}

fn parse_graph6_lines(text: &str) -> Result<Vec<InputGraph>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let graph = read_graph6(line.as_bytes())
            .map_err(|e| CliError::parse(format!("line {}: {e}", i + 1)))?;
        out.push(InputGraph { line: i + 1, graph });
    }
    Ok(out)
}

fn parse_edge_list(text: &str) -> Result<InputGraph, CliError> {
    let mut order = None;
    let mut start = 0;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| CliError::parse(format!("line {}: {what}: `{line}`", i + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        if order.is_none() {
            order = Some(
                line.parse::<usize>()
                    .map_err(|_| bad("expected the order"))?,
            );
            start = i + 1;
            continue;
        }
        let [u, v] = fields[..] else {
            return Err(bad("expected two vertices"));
        };
        let u = u.parse::<usize>().map_err(|_| bad("bad vertex"))?;
        let v = v.parse::<usize>().map_err(|_| bad("bad vertex"))?;
        edges.push((u, v));
    }
    let n = order.expect("caller checked for a first line");
    let graph = Graph::from_edge_list(n, &edges)
        .map_err(|e| CliError::parse(format!("edge list starting on line {start}: {e}")))?;
    Ok(InputGraph { line: start, graph })
}
