use std::collections::BTreeMap;
use std::path::Path;

use locdom::enumeration::{census, write_graph6, CensusReport, MAX_ENUMERATION_ORDER};
use locdom::families::{self, EtaNMinus2Kind, FamilyInstance};
use locdom::theorems::{self, describe, Status, TheoremId, Verdict};
use locdom::{full_report, solve, Code, Parameter};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exit::{self, CliError};
use crate::filter::Filter;
use crate::input::{read_input, InputGraph};
use crate::output::Output;
use crate::{Emit, EnumerateOutput};

type CmdResult = Result<u8, CliError>;

fn core_err(context: &str) -> impl Fn(locdom::Error) -> CliError + '_ {
    move |e| CliError::from_core(context, e)
}

pub fn compute(out: &mut Output, input: Option<&Path>, params: &[String]) -> CmdResult {
    let mut wanted = Vec::new();
    for p in params {
        let p: Parameter = p
            .trim()
            .parse()
            .map_err(|e: locdom::Error| CliError::parse(e.to_string()))?;
        if !wanted.contains(&p) {
            wanted.push(p);
        }
    }
    wanted.sort();
    let input = read_input(input)?;
    out.set_input_digest(input.digest);
    for InputGraph { line, graph } in &input.graphs {
        if !graph.is_connected() {
            return Err(CliError::precondition(format!(
                "line {line}: graph is disconnected"
            )));
        }
        if graph.order() < 2 && wanted.iter().any(|&p| p != Parameter::Gamma) {
            return Err(CliError::precondition(format!(
                "line {line}: beta, eta and lambda need at least two vertices"
            )));
        }
    }
    let rows = input
        .graphs
        .par_iter()
        .map(|ig| compute_one(ig, &wanted))
        .collect::<Result<Vec<_>, _>>()?;
    for (record, row) in rows {
        out.record("graph", record, || row)?;
    }
    let count = input.graphs.len();
    out.footer(json!({ "graphs": count }), vec![format!("{count} graphs")])?;
    Ok(exit::OK)
}

fn compute_one(ig: &InputGraph, wanted: &[Parameter]) -> Result<(Value, String), CliError> {
    let g = &ig.graph;
    let context = format!("line {}", ig.line);
    let mut values: Vec<(Parameter, usize, Code)> = Vec::new();
    if wanted.len() == Parameter::ALL.len() {
        let report = full_report(g).map_err(core_err(&context))?;
        for p in Parameter::ALL {
            values.push((p, report.value(p), report.witness(p).clone()));
        }
    } else {
        for &p in wanted {
            let s = solve(g, p).map_err(core_err(&context))?;
            values.push((p, s.value, s.witness));
        }
    }
    let diameter = g.diameter().map_err(core_err(&context))?;
    let g6 = describe(g);
    let mut record = json!({
        "line": ig.line,
        "graph6": g6,
        "n": g.order(),
        "diameter": diameter,
    });
    let mut row = format!(
        "line {:<4} {g6:<12} n={:<3} D={:<3}",
        ig.line,
        g.order(),
        diameter
    );
    for (p, value, witness) in values {
        record[p.name()] = json!(value);
        record[format!("witness_{}", p.name())] = json!(witness.vertices());
        row.push_str(&format!(" {}={value} {witness}", p.name()));
    }
    Ok((record, row))
}

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::parse(format!("bad order range `{text}` (expected N or A..B)"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn enumerate(out: &mut Output, n: &str, filter: &str, output: EnumerateOutput) -> CmdResult {
    let (lo, hi) = parse_range(n)?;
    let filter: Filter = filter
        .parse()
        .map_err(|e: anyhow::Error| CliError::parse(e.to_string()))?;
    if lo == 0 || hi > MAX_ENUMERATION_ORDER {
        return Err(CliError::precondition(format!(
            "orders must lie in 1..{MAX_ENUMERATION_ORDER} (got {lo}..{hi})"
        )));
    }
    if lo < 2 && filter.needs_order_two() {
        return Err(CliError::precondition(
            "the filter uses beta, eta or lambda, which need n >= 2".to_string(),
        ));
    }
    let report: CensusReport = census(lo..=hi, &filter.to_string(), |g| {
        filter
            .eval(g)
            .expect("filter quantities are defined on connected graphs of order >= 2")
    })
    .map_err(core_err("enumeration"))?;
    match output {
        EnumerateOutput::Graph6 => {
            for r in &report.representatives {
                out.raw(&r.graph6)?;
            }
            out.manifest_to_stderr();
            return Ok(exit::OK);
        }
        EnumerateOutput::Census => {
            for r in &report.representatives {
                let row = format!("n={:<3} {:<12} {}", r.order, r.graph6, r.canonical_form);
                out.record(
                    "graph",
                    serde_json::to_value(r).expect("serializable"),
                    || row,
                )?;
            }
        }
        EnumerateOutput::Count => {}
    }
    let mut rows: Vec<String> = report
        .per_order
        .iter()
        .map(|(n, c)| format!("n={n:<3} {c}"))
        .collect();
    rows.push(format!("total {} ({})", report.total, report.filter));
    let summary = json!({
        "filter": report.filter,
        "per_order": report.per_order,
        "total": report.total,
    });
    out.footer(summary, rows)?;
    Ok(exit::OK)
}

const FAMILIES: &[(&str, &str)] = &[
    ("path", "N"),
    ("cycle", "N"),
    ("complete", "N"),
    ("star", "N"),
    ("complete-bipartite", "R S"),
    ("wheel", "N"),
    ("strong-grid", "D1 D2 ..."),
    ("spider", "L1 L2 ..."),
    ("spider-k3", "K"),
    ("spider-k4", "K"),
    ("spider-mixed", "R K"),
    ("geta", "ETA"),
    ("eta-n-2", "KIND R S"),
    ("realization", "A B C"),
    ("tree-realization", "A B"),
];

fn build_family(name: &str, params: &[String]) -> Result<FamilyInstance, CliError> {
    let usage = || {
        let shape = FAMILIES.iter().find(|f| f.0 == name).map_or("", |f| f.1);
        CliError::precondition(format!("usage: family {name} {shape}"))
    };
    if name == "eta-n-2" {
        let [kind, r, s] = params else {
            return Err(usage());
        };
        let kind: EtaNMinus2Kind = kind.parse().map_err(core_err("eta-n-2"))?;
        let r = r.parse().map_err(|_| usage())?;
        let s = s.parse().map_err(|_| usage())?;
        return families::eta_n_minus_2_family(kind, r, s).map_err(core_err(name));
    }
    let nums = params
        .iter()
        .map(|p| p.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage())?;
    let inst = match (name, &nums[..]) {
        ("path", &[n]) => families::path(n),
        ("cycle", &[n]) => families::cycle(n),
        ("complete", &[n]) => families::complete(n),
        ("star", &[n]) => families::star(n),
        ("complete-bipartite", &[r, s]) => families::complete_bipartite(r, s),
        ("wheel", &[n]) => families::wheel(n),
        ("strong-grid", dims) if !dims.is_empty() => families::strong_grid(dims)
            .map(|g| FamilyInstance::new(format!("strong-grid{dims:?}"), g)),
        ("spider", legs) if !legs.is_empty() => families::spider(legs),
        ("spider-k3", &[k]) => families::spider_k3(k),
        ("spider-k4", &[k]) => families::spider_k4(k),
        ("spider-mixed", &[r, k]) => families::spider_mixed(r, k),
        ("geta", &[eta]) => families::g_eta_construction(eta),
        ("realization", &[a, b, c]) => families::realization_graph(a, b, c),
        ("tree-realization", &[a, b]) => families::realization_tree(a, b),
        _ if FAMILIES.iter().any(|f| f.0 == name) => return Err(usage()),
        _ => {
            return Err(CliError::precondition(format!(
                "unknown family `{name}`; `locdom family list` shows them"
            )))
        }
    };
    inst.map_err(core_err(name))
}

pub fn family(
    out: &mut Output,
    name: &str,
    params: &[String],
    emit: Emit,
    verify: bool,
) -> CmdResult {
    if name == "list" {
        for (f, shape) in FAMILIES {
            out.raw(&format!("{f} {shape}"))?;
        }
        let kinds: Vec<&str> = EtaNMinus2Kind::ALL.iter().map(|k| k.name()).collect();
        out.raw(&format!("eta-n-2 kinds: {}", kinds.join(", ")))?;
        return Ok(exit::OK);
    }
    let inst = build_family(name, params)?;
    let g = &inst.graph;
    let mut record = json!({
        "name": inst.name,
        "n": g.order(),
        "edges": g.edge_count(),
        "labels": inst.labels,
        "claimed": inst.claimed_values,
        "claimed_codes": inst.claimed_codes,
    });
    let mut rows = vec![format!(
        "{} n={} m={}",
        inst.name,
        g.order(),
        g.edge_count()
    )];
    match emit {
        Emit::Graph6 => {
            let g6 = write_graph6(g)
                .map_err(|e| CliError::precondition(format!("{e}; use --emit edgelist")))?;
            record["graph6"] = json!(g6);
            rows.push(g6);
        }
        Emit::Edgelist => {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            record["edge_list"] = json!(edges);
            rows.push(g.order().to_string());
            rows.extend(edges.iter().map(|(u, v)| format!("{u} {v}")));
        }
        Emit::None => {}
    }
    let mut code = exit::OK;
    if verify {
        let (verification, ok, lines) = verify_family(&inst)?;
        record["verification"] = verification;
        rows.extend(lines);
        if !ok {
            code = exit::VERIFICATION_FAILED;
        }
    }
    let mut row_iter = rows.into_iter();
    let head = row_iter.next().unwrap_or_default();
    out.record("family", record, || head)?;
    let ok = code == exit::OK;
    out.footer(json!({ "verified": verify, "ok": ok }), row_iter.collect())?;
    Ok(code)
}

fn verify_family(inst: &FamilyInstance) -> Result<(Value, bool, Vec<String>), CliError> {
    let g = &inst.graph;
    let mut ok = true;
    let mut results = BTreeMap::new();
    let mut lines = Vec::new();
    if inst.claimed_values.is_empty() {
        lines.push("no claims to verify".to_string());
    }
    let computed = inst
        .claimed_values
        .par_iter()
        .map(|(&p, &claimed)| solve(g, p).map(|s| (p, claimed, s)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(core_err(&inst.name))?;
    for (p, claimed, s) in computed {
        let matches = claimed == s.value;
        ok &= matches;
        lines.push(format!(
            "{}={} claimed {claimed} {} witness {}",
            p.name(),
            s.value,
            if matches { "OK" } else { "MISMATCH" },
            s.witness
        ));
        results.insert(
            p.name(),
            json!({ "claimed": claimed, "computed": s.value, "witness": s.witness.vertices(), "ok": matches }),
        );
    }
    let code_problems = inst.verify_claimed_codes().err().unwrap_or_default();
    ok &= code_problems.is_empty();
    lines.extend(
        code_problems
            .iter()
            .map(|p| format!("claimed code problem: {p}")),
    );
    lines.push(if ok { "OK".into() } else { "FAILED".into() });
    Ok((
        json!({ "parameters": results, "code_problems": code_problems, "ok": ok }),
        ok,
        lines,
    ))
}

pub fn verify(out: &mut Output, theorem: &str, n_max: usize, input: Option<&Path>) -> CmdResult {
    if theorem == "list" {
        for id in TheoremId::ALL {
            out.raw(&format!("{:<18} {}", id.name(), id.statement()))?;
        }
        return Ok(exit::OK);
    }
    let ids: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(core_err("verify"))?]
    };
    let mut verdicts = Vec::new();
    match input {
        Some(path) => {
            let input = read_input(Some(path))?;
            out.set_input_digest(input.digest);
            for id in ids {
                if matches!(id.domain(), theorems::Domain::Parameters) {
                    if theorem == "all" {
                        continue;
                    }
                    return Err(CliError::precondition(format!(
                        "{id} is checked over parameters and takes no input graphs"
                    )));
                }
                let per_graph = input
                    .graphs
                    .par_iter()
                    .map(|ig| {
                        id.check(&ig.graph)
                            .map_err(core_err(&format!("line {}", ig.line)))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let scope = format!("{} input graphs", input.graphs.len());
                verdicts.push(Verdict::merge(id.name(), scope, per_graph));
            }
        }
        None => {
            for id in ids {
                verdicts.push(theorems::sweep(id, n_max).map_err(core_err(id.name()))?);
            }
        }
    }
    let mut failed = Vec::new();
    for v in &verdicts {
        if v.status == Status::Fails {
            failed.push(v.theorem.clone());
        }
        let rows = verdict_rows(v);
        out.record(
            "verdict",
            serde_json::to_value(v).expect("serializable"),
            || rows.join("\n"),
        )?;
    }
    let summary_row = if failed.is_empty() {
        format!("{} statements, no failures", verdicts.len())
    } else {
        format!(
            "{} statements, failed: {}",
            verdicts.len(),
            failed.join(", ")
        )
    };
    out.footer(
        json!({ "statements": verdicts.len(), "failed": failed }),
        vec![summary_row],
    )?;
    Ok(if failed.is_empty() {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    })
}

fn status_text(status: &Status) -> String {
    match status {
        Status::Holds => "holds".into(),
        Status::Fails => "FAILS".into(),
        Status::Skipped(reason) => format!("skipped ({reason})"),
    }
}

fn verdict_rows(v: &Verdict) -> Vec<String> {
    let mut rows = vec![format!(
        "{:<20} {:<8} checked={} skipped={}  [{}]",
        v.theorem,
        status_text(&v.status),
        v.checked,
        v.skipped,
        v.scope
    )];
    for p in &v.parts {
        rows.push(format!(
            "  {:<18} {:<8} checked={} skipped={}",
            p.theorem,
            status_text(&p.status),
            p.checked,
            p.skipped
        ));
    }
    for (note, count) in &v.notes {
        rows.push(format!("  note: {note} ({count})"));
    }
    for p in &v.parts {
        for (note, count) in &p.notes {
            rows.push(format!("  note: {}: {note} ({count})", p.theorem));
        }
    }
    for c in &v.counterexamples {
        rows.push(format!("  counterexample {} {}", c.graph6, c.detail));
    }
    rows
}
