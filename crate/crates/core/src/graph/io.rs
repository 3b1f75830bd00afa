//! Edge-list documents.
//!
//! ```text
//! c optional comment lines
//! p urm <n> <m>
//! <u> <v>        (m lines, 0-based ids)
//! ```
//!
//! A bare `<n> <m>` header is accepted as well. Matching files hold one `<u> <v>`
//! pair per line.

use super::{Graph, Matching};
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::parse(line_no, format!("`{tok}` is not a vertex id")))
    };
    let u = next("first endpoint")?;
    let v = next("second endpoint")?;
    if let Some(extra) = it.next() {
        return Err(Error::parse(line_no, format!("unexpected token `{extra}`")));
    }
    Ok((u, v))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `p urm <n> <m>` header"))?;
    let toks: Vec<&str> = header.split_ascii_whitespace().collect();
    let nums: &[&str] = match toks.as_slice() {
        ["p", _, rest @ ..] => rest,
        rest => rest,
    };
    let [n, m] = nums else {
        return Err(Error::parse(hline, "header must be `p urm <n> <m>`"));
    };
    let n: usize = n
        .parse()
        .map_err(|_| Error::parse(hline, format!("bad vertex count `{n}`")))?;
    let m: usize = m
        .parse()
        .map_err(|_| Error::parse(hline, format!("bad edge count `{m}`")))?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (no, line) in lines {
        let (u, v) = parse_pair(no, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                no,
                format!("vertex id out of range 0..{n} in edge {u} {v}"),
            ));
        }
        if u == v {
            return Err(Error::parse(no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert(super::norm(u, v)) {
            return Err(Error::parse(no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Parses a matching file against its host graph.
pub fn parse_matching(g: &Graph, text: &str) -> Result<Matching> {
    let mut edges = Vec::new();
    for (no, line) in content_lines(text) {
        let (u, v) = parse_pair(no, line)?;
        if !g.has_edge(u, v) {
            return Err(Error::parse(no, format!("{u} {v} is not an edge of the graph")));
        }
        edges.push((u, v));
    }
    Matching::new(g, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p urm {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_matching(m: &Matching) -> String {
    m.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}
