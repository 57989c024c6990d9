use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumeration::write_graph6;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    /// The hypothesis that was not met.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of a checker on one graph or, after [`Verdict::merge`], on many.
///
/// `checked` counts graphs on which the statement was actually tested and
/// `skipped` those whose hypotheses were unmet. Notes are free-form
/// observations (bounds attained, exceptions measured) with the number of
/// graphs that produced each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: String,
    pub scope: String,
    pub status: Status,
    pub checked: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    pub notes: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Verdict>,
}

/// Text identifying a graph in a report: its graph6 string, or its edge
/// list when it is too large for graph6.
pub fn describe(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| {
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("n={} edges={}", g.order(), edges.join(","))
    })
}

impl Verdict {
    pub(crate) fn new(theorem: &str, scope: impl Into<String>) -> Self {
        Verdict {
            theorem: theorem.to_string(),
            scope: scope.into(),
            status: Status::Holds,
            checked: 1,
            skipped: 0,
            counterexamples: Vec::new(),
            notes: BTreeMap::new(),
            parts: Vec::new(),
        }
    }

    pub(crate) fn for_graph(theorem: &str, g: &Graph) -> Self {
        Verdict::new(theorem, describe(g))
    }

    pub(crate) fn skip(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped(reason.into());
        self.checked = 0;
        self.skipped = 1;
        self
    }

    pub(crate) fn fail(&mut self, graph6: impl Into<String>, detail: impl Into<String>) {
        self.status = Status::Fails;
        self.counterexamples.push(Counterexample {
            graph6: graph6.into(),
            detail: detail.into(),
        });
    }

    /// Record `detail` as a failure on this verdict's own graph unless `ok`.
    pub(crate) fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            let g6 = self.scope.clone();
            self.fail(g6, detail());
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        *self.notes.entry(note.into()).or_default() += 1;
    }

    pub(crate) fn with_parts(mut self, parts: Vec<Verdict>) -> Self {
        for part in &parts {
            for c in &part.counterexamples {
                self.fail(c.graph6.clone(), format!("{}: {}", part.theorem, c.detail));
            }
        }
        self.parts = parts;
        self
    }

    pub fn holds(&self) -> bool {
        self.status != Status::Fails
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped(_))
    }

    /// Combine per-graph verdicts of one checker into a single verdict over
    /// `scope`. Parts are merged position by position.
    pub fn merge(theorem: &str, scope: impl Into<String>, verdicts: Vec<Verdict>) -> Verdict {
        let mut out = Verdict::new(theorem, scope);
        out.checked = 0;
        let mut first_skip = None;
        let mut parts: Vec<Vec<Verdict>> = Vec::new();
        for v in verdicts {
            out.checked += v.checked;
            out.skipped += v.skipped;
            if let Status::Skipped(reason) = &v.status {
                first_skip.get_or_insert_with(|| reason.clone());
            }
            out.counterexamples.extend(v.counterexamples);
            for (note, count) in v.notes {
                *out.notes.entry(note).or_default() += count;
            }
            for (i, part) in v.parts.into_iter().enumerate() {
                if parts.len() <= i {
                    parts.push(Vec::new());
                }
                parts[i].push(part);
            }
        }
        out.parts = parts
            .into_iter()
            .map(|group| {
                let name = group[0].theorem.clone();
                Verdict::merge(&name, out.scope.clone(), group)
            })
            .collect();
        out.status = if !out.counterexamples.is_empty() {
            Status::Fails
        } else if out.checked == 0 {
            match first_skip {
                Some(reason) => {
                    Status::Skipped(format!("all {} graphs skipped: {reason}", out.skipped))
                }
                None => Status::Skipped("no graphs in scope".into()),
            }
        } else {
            Status::Holds
        };
        out
    }
}
