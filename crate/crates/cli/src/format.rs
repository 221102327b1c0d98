//! Graph and coloring file formats.
//!
//! Edge list: optional header `n <count>`, then one `u v` pair per line,
//! 0-based. Without a header the vertex count is one more than the largest
//! id. DIMACS: `p edge <n> <m>` followed by `e <u> <v>` lines, 1-based.
//! Lines starting with `#` (edge list) or `c` (DIMACS) are comments.

use std::fmt::Write as _;

use p6c4::{Coloring, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// Guess from the first non-comment line.
    #[default]
    Auto,
    EdgeList,
    Dimacs,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| at(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| at(line, format!("invalid {what} `{token}`")))
}

fn no_trailing<'a>(
    mut tokens: impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<(), ParseError> {
    match tokens.next() {
        Some(extra) => Err(at(line, format!("unexpected token `{extra}`"))),
        None => Ok(()),
    }
}

/// Non-blank lines with their 1-based numbers, comments removed.
fn content_lines<'a>(
    text: &'a str,
    comment: &'a str,
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment) && !l.starts_with('%'))
}

fn detect(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| {
        !l.is_empty() && !l.starts_with('#') && !l.starts_with('%') && !l.starts_with("c ")
    });
    match first {
        Some(l) if l.starts_with("p ") || l == "c" || l.starts_with("e ") => Format::Dimacs,
        _ => Format::EdgeList,
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Auto => parse_graph(text, detect(text)),
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn check_edge(u: usize, v: usize, n: Option<usize>, line: usize) -> Result<(), ParseError> {
    if u == v {
        return Err(at(line, format!("self-loop on vertex {u}")));
    }
    if let Some(n) = n {
        if u.max(v) >= n {
            return Err(at(
                line,
                format!("vertex {} out of range for n = {n}", u.max(v)),
            ));
        }
    }
    Ok(())
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (line, content) in content_lines(text, "#") {
        let mut tokens = content.split_whitespace();
        if content.starts_with('n') {
            tokens.next();
            if declared.is_some() || !edges.is_empty() {
                return Err(at(line, "the `n` header must come first and only once"));
            }
            declared = Some(number(tokens.next(), line, "vertex count")?);
            no_trailing(tokens, line)?;
            continue;
        }
        let u = number(tokens.next(), line, "vertex id")?;
        let v = number(tokens.next(), line, "vertex id")?;
        no_trailing(tokens, line)?;
        check_edge(u, v, declared, line)?;
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::new(n, edges)?)
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (line, content) in content_lines(text, "c") {
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(at(line, "duplicate `p` line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(at(line, format!("expected `p edge`, got {other:?}"))),
                }
                n = Some(number(tokens.next(), line, "vertex count")?);
                number(tokens.next(), line, "edge count")?;
                no_trailing(tokens, line)?;
            }
            Some("e") => {
                let declared = n.ok_or(ParseError::MissingHeader)?;
                let u = number(tokens.next(), line, "vertex id")?;
                let v = number(tokens.next(), line, "vertex id")?;
                no_trailing(tokens, line)?;
                if u == 0 || v == 0 {
                    return Err(at(line, "DIMACS vertex ids start at 1"));
                }
                check_edge(u - 1, v - 1, Some(declared), line)?;
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(at(line, format!("unknown line type `{other}`"))),
            None => {}
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::new(n, edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// One `v c` line per vertex.
pub fn coloring_lines(phi: &Coloring) -> String {
    let mut out = String::new();
    for (v, c) in phi.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}

/// Reads `v c` lines (or the JSON emitted by `color --json`) for a graph
/// on `n` vertices. Missing vertices keep color 0.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring, ParseError> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| at(e.line(), e.to_string()))?;
        let assignment = value
            .get("assignment")
            .and_then(|a| a.as_array())
            .ok_or_else(|| at(1, "JSON coloring needs an `assignment` array"))?;
        let colors = assignment
            .iter()
            .map(|c| c.as_u64().map(|c| c as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| at(1, "assignment entries must be non-negative integers"))?;
        if colors.len() != n {
            return Err(at(
                1,
                format!("assignment has {} entries for {n} vertices", colors.len()),
            ));
        }
        return Ok(Coloring::new(colors));
    }
    let mut colors = vec![0; n];
    for (line, content) in content_lines(text, "#") {
        let mut tokens = content.split_whitespace();
        let v = number(tokens.next(), line, "vertex id")?;
        let c = number(tokens.next(), line, "color")?;
        no_trailing(tokens, line)?;
        if v >= n {
            return Err(at(line, format!("vertex {v} out of range for n = {n}")));
        }
        colors[v] = c;
    }
    Ok(Coloring::new(colors))
}

/// Undirected DOT; with a coloring, each vertex gets `colorscheme` index
/// `fillcolor` and a `color` attribute with the raw value.
pub fn to_dot(g: &Graph, phi: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    if phi.is_some() {
        out.push_str("  node [style=filled, colorscheme=set312];\n");
    }
    for v in g.vertices() {
        match phi {
            Some(phi) => {
                let c = phi.color(v);
                let _ = writeln!(
                    out,
                    "  {v} [fillcolor={}, label=\"{v}:{c}\"];",
                    (c.max(1) - 1) % 12 + 1
                );
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
