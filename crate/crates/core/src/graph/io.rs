//! Text formats shared by the tools.
//!
//! Edge list: first line `n m [directed]`, then one `u v` pair per line,
//! 0-based. `#` starts a comment; blank lines are skipped. Labels travel in
//! a sidecar file with one `vertex label` pair per line. Cover files hold a
//! single line of space-separated vertex ids.

use super::Graph;
use crate::error::GraphError;
use std::fmt::Write as _;
use std::path::Path;

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = meaningful_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| GraphError::Malformed("empty edge list".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), "vertex count")?;
    let m: usize = parse_field(parts.next(), "edge count")?;
    let directed = match parts.next() {
        None => false,
        Some("directed") => true,
        Some(other) => {
            return Err(GraphError::Malformed(format!(
                "unexpected header token `{other}`"
            )))
        }
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), "edge endpoint")?;
        let v: usize = parse_field(it.next(), "edge endpoint")?;
        if it.next().is_some() {
            return Err(GraphError::Malformed(format!("trailing tokens on `{line}`")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Malformed(format!(
            "header promised {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, &edges, directed)
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T, GraphError> {
    tok.ok_or_else(|| GraphError::Malformed(format!("missing {what}")))?
        .parse()
        .map_err(|_| GraphError::Malformed(format!("unparseable {what}")))
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let tag = if g.is_directed() { " directed" } else { "" };
    writeln!(out, "{} {}{}", g.n(), g.m(), tag).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn load_edge_list(path: &Path) -> Result<Graph, GraphError> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn save_edge_list(g: &Graph, path: &Path) -> Result<(), GraphError> {
    Ok(std::fs::write(path, format_edge_list(g))?)
}

pub fn format_labels(g: &Graph) -> Option<String> {
    g.labels().map(|labels| {
        let mut out = String::new();
        for (v, label) in labels.iter().enumerate() {
            if !label.is_empty() {
                writeln!(out, "{v} {label}").unwrap();
            }
        }
        out
    })
}

pub fn parse_cover(text: &str) -> Result<Vec<usize>, GraphError> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        out.push(
            tok.parse()
                .map_err(|_| GraphError::Malformed(format!("bad cover vertex `{tok}`")))?,
        );
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn format_cover(cover: &[usize]) -> String {
    let strs: Vec<String> = cover.iter().map(|v| v.to_string()).collect();
    format!("{}\n", strs.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builders::*;

    #[test]
    fn round_trip() {
        let g = petersen();
        let text = format_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn comments_and_directed() {
        let text = "# a small digraph\n3 3 directed\n0 1 # arc\n1 2\n\n2 0\n";
        let g = parse_edge_list(text).unwrap();
        assert!(g.is_directed());
        assert!(g.is_solver_ready());
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0 1 9\n").is_err());
        assert!(parse_edge_list("2 2\n0 1\n").is_err());
        assert!(parse_edge_list("2 1 oriented\n0 1\n").is_err());
        assert!(parse_edge_list("2 1\n0 x\n").is_err());
    }

    #[test]
    fn cover_round_trip() {
        let cover = parse_cover("3 1 2 1\n").unwrap();
        assert_eq!(cover, vec![1, 2, 3]);
        assert_eq!(format_cover(&cover), "1 2 3\n");
    }
}
