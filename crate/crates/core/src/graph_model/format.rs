//! Line-based instance files.
//!
//! ```text
//! # comment
//! vertices 3
//! v 0 ship L
//! v 1 value 4
//! v 2 ship R
//! e 0 1
//! e 1 2
//! score 0
//! ```
//!
//! Graph-only files (used as reduction and oracle input) have the header and
//! edge lines; vertex lines are optional there and ignored.

use std::fmt::Write;

use crate::error::{Error, InstanceError, Result};
use crate::graph_model::{Graph, Instance, Player};
use crate::score::Score;

enum Decl<S> {
    Value(S),
    Ship(Player),
}

struct Parsed<S> {
    vertex_count: usize,
    decls: Vec<Vec<Decl<S>>>,
    edges: Vec<(usize, usize)>,
    score: Option<S>,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

fn parse_lines<S: Score>(text: &str) -> Result<Parsed<S>> {
    let mut parsed: Option<Parsed<S>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut toks = content.split_whitespace();
        let keyword = toks.next().expect("non-empty line");
        let Some(p) = parsed.as_mut() else {
            if keyword != "vertices" {
                return Err(syntax(line, "expected `vertices <n>` header"));
            }
            let n: usize = number(toks.next(), line, "vertex count")?;
            if toks.next().is_some() {
                return Err(syntax(line, "trailing tokens"));
            }
            parsed = Some(Parsed {
                vertex_count: n,
                decls: (0..n).map(|_| Vec::new()).collect(),
                edges: Vec::new(),
                score: None,
            });
            continue;
        };
        match keyword {
            "v" => {
                let id: usize = number(toks.next(), line, "vertex id")?;
                if id >= p.vertex_count {
                    return Err(syntax(line, format!("vertex id {id} out of range")));
                }
                let decl = match toks.next() {
                    Some("value") => Decl::Value(number(toks.next(), line, "value")?),
                    Some("ship") => match toks.next() {
                        Some("L") => Decl::Ship(Player::Left),
                        Some("R") => Decl::Ship(Player::Right),
                        other => {
                            return Err(syntax(
                                line,
                                format!("expected ship owner L or R, got {other:?}"),
                            ))
                        }
                    },
                    other => {
                        return Err(syntax(
                            line,
                            format!("expected `value` or `ship`, got {other:?}"),
                        ))
                    }
                };
                p.decls[id].push(decl);
            }
            "e" => {
                let u = number(toks.next(), line, "edge endpoint")?;
                let v = number(toks.next(), line, "edge endpoint")?;
                p.edges.push((u, v));
            }
            "score" => {
                if p.score.is_some() {
                    return Err(syntax(line, "duplicate score line"));
                }
                p.score = Some(number(toks.next(), line, "score")?);
            }
            "vertices" => return Err(syntax(line, "duplicate header")),
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    parsed.ok_or_else(|| syntax(1, "empty file"))
}

/// Parses and validates an instance file.
pub fn parse_instance<S: Score>(text: &str) -> Result<Instance<S>> {
    let parsed = parse_lines::<S>(text)?;
    let graph = Graph::new(parsed.vertex_count, parsed.edges)?;
    let mut weights = Vec::with_capacity(parsed.vertex_count);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (v, decls) in parsed.decls.into_iter().enumerate() {
        let mut weight = None;
        let mut ship = None;
        for decl in decls {
            match decl {
                Decl::Value(_) if weight.is_some() => {
                    return Err(InstanceError::DuplicateVertex(v).into())
                }
                Decl::Ship(_) if ship.is_some() => {
                    return Err(InstanceError::DuplicateShip(v).into())
                }
                Decl::Value(w) => weight = Some(w),
                Decl::Ship(p) => ship = Some(p),
            }
        }
        match ship {
            Some(_) if weight.is_some() => return Err(InstanceError::WeightedStart(v).into()),
            Some(Player::Left) => left.push(v),
            Some(Player::Right) => right.push(v),
            None if weight.is_none() => return Err(InstanceError::MissingWeight(v).into()),
            None => {}
        }
        weights.push(weight);
    }
    let score = parsed.score.unwrap_or_else(S::zero);
    Ok(Instance::new(graph, weights, left, right, score)?)
}

/// Canonical text: header, vertex lines by id, sorted edges, score if nonzero.
pub fn serialize_instance<S: Score>(inst: &Instance<S>) -> String {
    let mut out = format!("vertices {}\n", inst.vertex_count());
    for v in 0..inst.vertex_count() {
        if let Some(w) = inst.weight(v) {
            writeln!(out, "v {v} value {w}").unwrap();
        } else {
            let owner = if inst.left_starts().contains(&v) {
                'L'
            } else {
                'R'
            };
            writeln!(out, "v {v} ship {owner}").unwrap();
        }
    }
    for (u, v) in inst.graph().edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    if !inst.initial_score().is_zero() {
        writeln!(out, "score {}", inst.initial_score()).unwrap();
    }
    out
}

/// Parses a graph-only file. Vertex and score lines are accepted and ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let parsed = parse_lines::<i64>(text)?;
    Ok(Graph::new(parsed.vertex_count, parsed.edges)?)
}

pub fn serialize_graph(graph: &Graph) -> String {
    let mut out = format!("vertices {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

impl<S: Score> std::fmt::Display for Instance<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_instance(self))
    }
}

impl<S: Score> std::str::FromStr for Instance<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_instance(s)
    }
}
