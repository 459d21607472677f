use std::fmt::Write as _;

use super::ColoredGraph;
use crate::error::{Error, Result};

/// Writes `p edge <n> <m>`, then `n <v> <color>` per vertex and `e <u> <v>`
/// per edge, all 1-based.
pub fn export_graph(g: &ColoredGraph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (v, c) in g.colors().iter().enumerate() {
        let _ = writeln!(out, "n {} {c}", v + 1);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Reads the [`export_graph`] format. Vertices without an `n` line get
/// color 0; `c` lines are comments.
pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut colors = Vec::new();
    let mut edges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |i: usize| -> Result<usize> {
            toks.get(i)
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, format!("expected a number in `{line}`")))
        };
        let vertex = |i: usize, n: usize| -> Result<u32> {
            let v = num(i)?;
            if v == 0 || v > n {
                return Err(Error::parse(lineno, format!("vertex {v} outside 1..={n}")));
            }
            Ok((v - 1) as u32)
        };
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "duplicate header"));
                }
                if toks.get(1) != Some(&"edge") || toks.len() != 4 {
                    return Err(Error::parse(lineno, "expected `p edge <n> <m>`"));
                }
                let n = num(2)?;
                header = Some((n, num(3)?));
                colors = vec![0; n];
            }
            Some(kind @ ("n" | "e")) => {
                let (n, _) = header.ok_or_else(|| Error::parse(lineno, "line before header"))?;
                if toks.len() != 3 {
                    return Err(Error::parse(lineno, format!("malformed `{kind}` line")));
                }
                if kind == "n" {
                    let v = vertex(1, n)?;
                    colors[v as usize] =
                        u32::try_from(num(2)?).map_err(|_| Error::parse(lineno, "color out of range"))?;
                } else {
                    edges.push((vertex(1, n)?, vertex(2, n)?));
                }
            }
            Some(other) => return Err(Error::parse(lineno, format!("unknown line kind `{other}`"))),
        }
    }
    let last = text.lines().count().max(1);
    let (_, m) = header.ok_or_else(|| Error::parse(last, "missing header"))?;
    let g = ColoredGraph::new(colors, edges).map_err(|e| Error::parse(last, e.to_string()))?;
    if g.edge_count() != m {
        return Err(Error::parse(
            last,
            format!("header promises {m} edges, found {}", g.edge_count()),
        ));
    }
    Ok(g)
}
