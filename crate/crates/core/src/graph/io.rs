//! Text formats for bipartite graphs.
//!
//! Edge list:
//!
//! ```text
//! # optional comments
//! bipartite <nL> <nR> <m>
//! <u> <v>        (m lines, 0 <= u < nL, 0 <= v < nR)
//! ```
//!
//! JSON: `{"left": nL, "right": nR, "edges": [[u, v], ...]}`.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::BipartiteGraph;
use crate::error::{Location, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl GraphFormat {
    /// JSON when the first non-blank character is `{`, edge list otherwise.
    pub fn detect(text: &str) -> Self {
        if text.trim_start().starts_with('{') {
            GraphFormat::Json
        } else {
            GraphFormat::EdgeList
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    left: usize,
    right: usize,
    edges: Vec<[usize; 2]>,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<BipartiteGraph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Json => parse_json(text),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_edge_list(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let at = Location::Line(hline);
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [tag, nl, nr, m] = fields[..] else {
        return Err(ParseError::Header(at));
    };
    if tag != "bipartite" {
        return Err(ParseError::Header(at));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| ParseError::Header(at));
    let (left, right, expected) = (num(nl)?, num(nr)?, num(m)?);

    let mut edges = Vec::with_capacity(expected.min(1 << 20));
    let mut seen = HashSet::new();
    for (lineno, line) in lines {
        let at = Location::Line(lineno);
        if edges.len() == expected {
            return Err(ParseError::Trailing(at));
        }
        let mut it = line.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(ParseError::Edge(at));
        };
        let u: usize = u.parse().map_err(|_| ParseError::Edge(at))?;
        let v: usize = v.parse().map_err(|_| ParseError::Edge(at))?;
        push_edge(&mut edges, &mut seen, left, right, (u, v), at)?;
    }
    if edges.len() != expected {
        return Err(ParseError::EdgeCount {
            expected,
            found: edges.len(),
        });
    }
    Ok(BipartiteGraph::from_checked_edges(left, right, edges))
}

fn parse_json(text: &str) -> Result<BipartiteGraph, ParseError> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    let mut seen = HashSet::new();
    for (k, [u, v]) in raw.edges.into_iter().enumerate() {
        push_edge(&mut edges, &mut seen, raw.left, raw.right, (u, v), Location::Edge(k))?;
    }
    Ok(BipartiteGraph::from_checked_edges(raw.left, raw.right, edges))
}

fn push_edge(
    edges: &mut Vec<(usize, usize)>,
    seen: &mut HashSet<(usize, usize)>,
    left: usize,
    right: usize,
    edge: (usize, usize),
    at: Location,
) -> Result<(), ParseError> {
    if edge.0 >= left || edge.1 >= right {
        return Err(ParseError::OutOfRange(at));
    }
    if !seen.insert(edge) {
        return Err(ParseError::Duplicate(at));
    }
    edges.push(edge);
    Ok(())
}

pub fn to_edge_list(g: &BipartiteGraph) -> String {
    let mut out = format!(
        "bipartite {} {} {}\n",
        g.left_count(),
        g.right_count(),
        g.edge_count()
    );
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_json(g: &BipartiteGraph) -> String {
    let doc = JsonGraph {
        left: g.left_count(),
        right: g.right_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("plain integers always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(text: &str) -> Result<BipartiteGraph, ParseError> {
        parse_graph(text, GraphFormat::EdgeList)
    }

    #[test]
    fn smallest_graph() {
        let g = el("bipartite 1 1 1\n0 0").unwrap();
        assert_eq!((g.left_count(), g.right_count()), (1, 1));
        assert_eq!(g.edges(), &[(0, 0)]);
    }

    #[test]
    fn k22_in_file_order() {
        let g = el("bipartite 2 2 4\n0 0\n0 1\n1 0\n1 1").unwrap();
        assert_eq!(g.edges(), &[(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = el("# a comment\n\nbipartite 2 1 2\n# mid\n1 0\n0 0\n").unwrap();
        assert_eq!(g.edges(), &[(1, 0), (0, 0)]);
    }

    #[test]
    fn out_of_range_names_line() {
        let err = el("bipartite 1 1 1\n0 5").unwrap_err();
        assert_eq!(err, ParseError::OutOfRange(Location::Line(2)));
        assert_eq!(err.to_string(), "vertex index out of range, line 2");
    }

    #[test]
    fn error_paths() {
        assert_eq!(el(""), Err(ParseError::MissingHeader));
        assert_eq!(el("graph 1 1 0"), Err(ParseError::Header(Location::Line(1))));
        assert_eq!(el("bipartite 1 1"), Err(ParseError::Header(Location::Line(1))));
        assert_eq!(
            el("bipartite 2 2 2\n0 0\n\n0 0"),
            Err(ParseError::Duplicate(Location::Line(4)))
        );
        assert_eq!(el("bipartite 2 2 1\n0 x"), Err(ParseError::Edge(Location::Line(2))));
        assert_eq!(el("bipartite 2 2 1\n0 1 1"), Err(ParseError::Edge(Location::Line(2))));
        assert_eq!(
            el("bipartite 2 2 2\n0 0"),
            Err(ParseError::EdgeCount { expected: 2, found: 1 })
        );
        assert_eq!(
            el("bipartite 2 2 1\n0 0\n1 1"),
            Err(ParseError::Trailing(Location::Line(3)))
        );
    }

    #[test]
    fn json_format() {
        let text = r#"{"left": 2, "right": 2, "edges": [[0, 1], [1, 0]]}"#;
        assert_eq!(GraphFormat::detect(text), GraphFormat::Json);
        let g = parse_graph(text, GraphFormat::Json).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 0)]);
        assert_eq!(parse_graph(&to_json(&g), GraphFormat::Json).unwrap(), g);
        let bad = r#"{"left": 1, "right": 1, "edges": [[0, 0], [0, 3]]}"#;
        assert_eq!(
            parse_graph(bad, GraphFormat::Json),
            Err(ParseError::OutOfRange(Location::Edge(1)))
        );
        assert!(matches!(
            parse_graph("{\"left\": 1", GraphFormat::Json),
            Err(ParseError::Json(_))
        ));
    }

    fn arb_graph() -> impl Strategy<Value = BipartiteGraph> {
        (0usize..6, 0usize..6).prop_flat_map(|(a, b)| {
            proptest::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
                let edges = bits
                    .iter()
                    .enumerate()
                    .filter(|(_, &on)| on)
                    .map(|(k, _)| (k / b.max(1), k % b.max(1)))
                    .collect();
                BipartiteGraph::new(a, b, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            let text = to_edge_list(&g);
            prop_assert_eq!(GraphFormat::detect(&text), GraphFormat::EdgeList);
            prop_assert_eq!(el(&text).unwrap(), g);
        }
    }
}
