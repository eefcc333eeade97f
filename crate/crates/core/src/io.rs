//! DIMACS `.col` and JSON graph encodings.
//!
//! JSON graphs are `{"n": <int>, "edges": [[u, v], ...]}` with 0-indexed
//! endpoints. The same shape is used for multigraphs, where repeated pairs
//! are kept as parallel edges.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl From<&Multigraph> for GraphJson {
    fn from(h: &Multigraph) -> Self {
        GraphJson {
            n: h.n(),
            edges: h.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(self.n, &edges)
    }

    pub fn to_multigraph(&self) -> Result<Multigraph> {
        Multigraph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])).collect())
    }
}

/// Parses DIMACS `.col` text. Vertices are 1-indexed in the file and
/// 0-indexed in the result. Duplicate edges are merged, loops rejected, and a
/// header edge count that disagrees with the body only logs a warning.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut header: Option<(usize, usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut edge_lines = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err(line_no, "duplicate problem line".into()));
                }
                let format = tok.next().ok_or_else(|| err(line_no, "missing format in problem line".into()))?;
                if format != "edge" && format != "col" {
                    return Err(err(line_no, format!("unsupported format {format:?}")));
                }
                let n = parse_num(tok.next(), line_no, "vertex count")?;
                let m = parse_num(tok.next(), line_no, "edge count")?;
                if tok.next().is_some() {
                    return Err(err(line_no, "trailing tokens in problem line".into()));
                }
                if n > MAX_VERTICES {
                    return Err(err(line_no, format!("vertex count {n} exceeds cap {MAX_VERTICES}")));
                }
                header = Some((n, m, line_no));
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err(line_no, "edge before problem line".into()))?;
                let u = parse_num(tok.next(), line_no, "edge endpoint")?;
                let v = parse_num(tok.next(), line_no, "edge endpoint")?;
                if tok.next().is_some() {
                    return Err(err(line_no, "trailing tokens in edge line".into()));
                }
                let n = g.n();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(line_no, format!("vertex index out of range 1..={n}: {u} {v}")));
                }
                if u == v {
                    return Err(err(line_no, format!("loop at vertex {u}")));
                }
                g.add_edge(u - 1, v - 1);
                edge_lines += 1;
            }
            Some(other) => return Err(err(line_no, format!("unknown line type {other:?}"))),
            None => {}
        }
    }

    let (_, m, line) = header.ok_or_else(|| err(0, "missing problem line".into()))?;
    let g = graph.expect("graph allocated with header");
    if m != edge_lines {
        log::warn!("header on line {line} declares {m} edges, found {edge_lines} edge lines");
    }
    Ok(g)
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = tok.ok_or_else(|| Error::Parse { line, message: format!("missing {what}") })?;
    t.parse().map_err(|_| Error::Parse { line, message: format!("malformed {what} {t:?}") })
}

pub fn write_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json is always serializable")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

pub fn multigraph_from_json(text: &str) -> Result<Multigraph> {
    serde_json::from_str::<GraphJson>(text)?.to_multigraph()
}

/// Reads a graph, choosing JSON for `.json` paths and DIMACS otherwise.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        graph_from_json(&text)
    } else {
        parse_dimacs(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_dimacs("c a comment\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn parses_edgeless() {
        let g = parse_dimacs("p edge 2 0\n").unwrap();
        assert_eq!(g, Graph::empty(2));
    }

    #[test]
    fn rejects_loop_with_line_number() {
        match parse_dimacs("p edge 2 1\ne 1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_dimacs("p edge x 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("c nothing\n").is_err());
        assert!(parse_dimacs("p edge 2 1\np edge 2 1\n").is_err());
    }

    #[test]
    fn duplicates_and_count_mismatch_tolerated() {
        let g = parse_dimacs("p edge 3 5\ne 1 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn json_multigraph_keeps_parallel_edges() {
        let h = multigraph_from_json(r#"{"n":2,"edges":[[0,1],[0,1]]}"#).unwrap();
        assert_eq!(h.edges().len(), 2);
        assert!(graph_from_json(r#"{"n":2,"edges":[[0,1]],"x":1}"#).is_err());
    }
}
