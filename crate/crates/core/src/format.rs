//! Text formats for graphs, orderings, paths and covers.
//!
//! Graphs come in two flavours:
//!
//! * DIMACS-style: `c` comment lines, one `p <n> <m>` header (a `p edge <n> <m>`
//!   header is also accepted), then `e <u> <v>` lines with ids in `1..=n`.
//! * Edge pairs: one `<u> <v>` pair per line, `n` inferred. When every token is
//!   a positive integer the tokens are the ids themselves and `n` is the largest
//!   one; otherwise tokens are labels numbered by first appearance. A line with
//!   a single token declares an isolated vertex.
//!
//! Orderings and paths are one line of space-separated vertex labels.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, PathCover};
use crate::ordering::VertexOrdering;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Lines that carry content, with 1-based line numbers. `#` and `%` lines are
/// skipped in both formats; `c` lines only in DIMACS.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && !l.starts_with('%'))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let dimacs = content_lines(text)
        .find(|(_, l)| !is_dimacs_comment(l))
        .is_some_and(|(_, l)| l.split_whitespace().next() == Some("p"));
    if dimacs {
        parse_dimacs(text)
    } else {
        parse_pairs(text)
    }
}

fn is_dimacs_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ") || line.starts_with("c\t")
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut declared_m = 0;
    let mut edges = Vec::new();
    for (no, line) in content_lines(text) {
        if is_dimacs_comment(line) {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if n.is_some() {
                    return Err(parse_err(no, "second `p` line"));
                }
                let nums = match tokens.len() {
                    3 => &tokens[1..],
                    4 => &tokens[2..],
                    _ => return Err(parse_err(no, "expected `p <n> <m>`")),
                };
                let vn = parse_count(no, nums[0])?;
                declared_m = parse_count(no, nums[1])?;
                n = Some(vn);
            }
            "e" => {
                let Some(vn) = n else {
                    return Err(parse_err(no, "edge before `p` line"));
                };
                if tokens.len() != 3 {
                    return Err(parse_err(no, "expected `e <u> <v>`"));
                }
                let u = parse_id(no, tokens[1], vn)?;
                let v = parse_id(no, tokens[2], vn)?;
                if u == v {
                    return Err(parse_err(no, format!("self-loop on vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            other => return Err(parse_err(no, format!("unexpected line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `p` line"))?;
    // `m` counts edge lines, duplicates included.
    if edges.len() != declared_m {
        return Err(parse_err(
            0,
            format!("header declares {declared_m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

fn parse_count(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a non-negative integer")))
}

fn parse_id(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a vertex id")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn parse_pairs(text: &str) -> Result<Graph> {
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (no, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() > 2 {
            return Err(parse_err(no, "expected `<u> <v>` or a single vertex"));
        }
        rows.push((no, tokens));
    }
    let numeric = rows
        .iter()
        .flat_map(|(_, t)| t.iter())
        .all(|t| t.parse::<usize>().is_ok_and(|v| v > 0));

    if numeric {
        let n = rows
            .iter()
            .flat_map(|(_, t)| t.iter())
            .map(|t| t.parse::<usize>().unwrap())
            .max()
            .unwrap_or(0);
        let mut edges = Vec::new();
        for (no, t) in &rows {
            if let [u, v] = t[..] {
                let (u, v) = (parse_id(*no, u, n)?, parse_id(*no, v, n)?);
                if u == v {
                    return Err(parse_err(*no, format!("self-loop on vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
        }
        return Graph::from_edges(n, edges);
    }

    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (no, t) in &rows {
        let mut local = Vec::with_capacity(2);
        for &tok in t {
            let id = *ids.entry(tok).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            });
            local.push(id);
        }
        if let [u, v] = local[..] {
            if u == v {
                return Err(parse_err(*no, format!("self-loop on vertex `{}`", t[0])));
            }
            edges.push((u, v));
        }
    }
    Graph::from_edges(labels.len(), edges)?.with_labels(labels)
}

/// DIMACS when labels are the default ids, edge pairs otherwise.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    if g.has_default_labels() {
        let _ = writeln!(out, "p {} {}", g.n(), g.edge_count());
        for (u, v) in g.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
    } else {
        for v in 0..g.n() {
            if g.degree(v) == 0 {
                let _ = writeln!(out, "{}", g.label(v));
            }
        }
        for (u, v) in g.edges() {
            let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
        }
    }
    out
}

/// Parses a whitespace-separated list of vertex labels.
pub fn parse_sequence(g: &Graph, text: &str) -> Result<Vec<usize>> {
    let lookup: HashMap<&str, usize> = g
        .labels()
        .iter()
        .enumerate()
        .map(|(v, l)| (l.as_str(), v))
        .collect();
    content_lines(text)
        .flat_map(|(_, l)| l.split_whitespace())
        .map(|tok| {
            lookup
                .get(tok)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(tok.to_string()))
        })
        .collect()
}

pub fn parse_ordering(g: &Graph, text: &str) -> Result<VertexOrdering> {
    let seq = parse_sequence(g, text)?;
    VertexOrdering::for_graph(g, seq)
}

pub fn format_sequence(g: &Graph, seq: &[usize]) -> String {
    seq.iter()
        .map(|&v| g.label(v))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_ordering(g: &Graph, order: &VertexOrdering) -> String {
    format_sequence(g, order.sequence())
}

pub fn format_path(g: &Graph, path: &Path) -> String {
    format_sequence(g, path.vertices())
}

/// One path per line.
pub fn format_cover(g: &Graph, cover: &PathCover) -> String {
    let mut out = String::new();
    for p in cover.paths() {
        out.push_str(&format_path(g, p));
        out.push('\n');
    }
    out
}
