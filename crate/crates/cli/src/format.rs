//! Edge-list text format (line 1 `n m`, then `m` lines `u v`,
//! 0-indexed) and DOT export.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use graphinv_core::Graph;

/// Parses the edge-list format. Structural violations surface as the
/// graph constructor's errors.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| anyhow!("unexpected end of input, expected {what}"))?;
        tok.parse()
            .with_context(|| format!("bad {what} token {tok:?}"))
    };
    let n = next_usize("vertex count")?;
    let m = next_usize("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let u = next_usize(&format!("edge {i} endpoint"))?;
        let v = next_usize(&format!("edge {i} endpoint"))?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        bail!("trailing tokens after {m} edges");
    }
    Graph::new(n, &edges).map_err(|e| anyhow!("invalid graph: {e}"))
}

pub fn read_edge_list(path: &std::path::Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text)
}

/// Writes the same format the reader accepts.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT export for figures.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphinv_core::families;

    #[test]
    fn round_trip() {
        for g in [
            families::path(4).unwrap(),
            families::wheel(6).unwrap().0,
            families::bouquet(&[2, 3]).unwrap().0,
        ] {
            let text = write_edge_list(&g);
            assert_eq!(parse_edge_list(&text).unwrap(), g);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0 0").is_err());
        assert!(parse_edge_list("2 1\n0 1\n1 0").is_err());
        assert!(parse_edge_list("2 2\n0 1").is_err());
        assert!(parse_edge_list("x 1").is_err());
        assert!(parse_edge_list("3 1\n0 5").is_err());
    }

    #[test]
    fn dot_shape() {
        let p3 = families::path(3).unwrap();
        let dot = write_dot(&p3, "p3");
        assert!(dot.starts_with("graph p3 {"));
        assert!(dot.contains("  0 -- 1;"));
        assert!(dot.contains("  1 -- 2;"));
        assert!(dot.ends_with("}\n"));
    }
}
