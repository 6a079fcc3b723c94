//! Plain-text graph format.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! Tokens are whitespace separated. The writer emits edges in lexicographic
//! order, so `write(read(x))` is the canonical form of `x`. The reader also
//! accepts an edge written as `v u`, but never a loop or a repeated edge.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(hline, "header must be \"n m\""));
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;
    let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max_edges {
        return Err(Error::parse(
            hline,
            format!("{m} edges impossible on {n} vertices"),
        ));
    }

    let mut b = GraphBuilder::new(n);
    let mut seen = 0;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(line, "edge line must be \"u v\""));
        }
        let u = parse_usize(toks[0], line, "vertex")?;
        let v = parse_usize(toks[1], line, "vertex")?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("vertex index {} out of range (n = {n})", u.max(v)),
            ));
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        if b.has_edge(u, v) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        if seen == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        b.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        let last = text.lines().count().max(1);
        return Err(Error::parse(
            last,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(b.build())
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 12);
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
