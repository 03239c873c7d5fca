//! Text formats.
//!
//! Hypergraph (".hg"): optional `#` comment lines anywhere; first data line
//! `n m`; then `m` lines, each the space-separated vertex ids of one edge.
//! Graph (".gr"): `n m` followed by `m` lines `u v`.
//!
//! Serialization is canonical (no comments, edges in stored order with ids
//! increasing, graph edges sorted with `u < v`); parsing a canonical file
//! and re-serializing reproduces it byte for byte.

use thiserror::Error;

use super::{Graph, Hypergraph, ModelError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("no data lines found")]
    Empty,
    #[error("line {line}: expected header `n m`")]
    BadHeader { line: usize },
    #[error("line {line}: bad token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected {expected} ids, found {found}")]
    WrongTokenCount { line: usize, expected: usize, found: usize },
    #[error("expected {expected} data lines after the header, found {found}")]
    WrongLineCount { expected: usize, found: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Data lines (1-based line numbers), with comments and blanks skipped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ids(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| ParseError::BadToken { line, token: tok.to_string() })
        })
        .collect()
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<(usize, usize), ParseError> {
    let (line, text) = lines.next().ok_or(ParseError::Empty)?;
    let ids = parse_ids(line, text)?;
    match ids.as_slice() {
        &[n, m] => Ok((n, m)),
        _ => Err(ParseError::BadHeader { line }),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = data_lines(text);
    let (n, m) = parse_header(&mut lines)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        edges.push(parse_ids(line, text)?);
    }
    let extra = lines.count();
    if edges.len() != m || extra != 0 {
        return Err(ParseError::WrongLineCount { expected: m, found: edges.len() + extra });
    }
    Ok(Hypergraph::new(n, edges)?)
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = data_lines(text);
    let (n, m) = parse_header(&mut lines)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        let ids = parse_ids(line, text)?;
        match ids.as_slice() {
            &[u, v] => edges.push((u, v)),
            _ => {
                return Err(ParseError::WrongTokenCount { line, expected: 2, found: ids.len() })
            }
        }
    }
    let extra = lines.count();
    if edges.len() != m || extra != 0 {
        return Err(ParseError::WrongLineCount { expected: m, found: edges.len() + extra });
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edge_list() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::tests::fig2;

    #[test]
    fn hypergraph_round_trip_is_byte_identical() {
        let text = "5 3\n0 1 2\n1 2 3\n2 3 4\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h, fig2());
        assert_eq!(serialize_hypergraph(&h), text);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# a comment\n\n3 2\n0 1\n# another\n1 2\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_hypergraph(""), Err(ParseError::Empty));
        assert_eq!(parse_hypergraph("# only\n"), Err(ParseError::Empty));
        assert_eq!(parse_hypergraph("3\n"), Err(ParseError::BadHeader { line: 1 }));
        assert!(matches!(
            parse_hypergraph("3 1\n0 x\n"),
            Err(ParseError::BadToken { line: 2, .. })
        ));
        assert_eq!(
            parse_hypergraph("3 2\n0 1\n"),
            Err(ParseError::WrongLineCount { expected: 2, found: 1 })
        );
        assert_eq!(
            parse_hypergraph("3 1\n0 1\n1 2\n"),
            Err(ParseError::WrongLineCount { expected: 1, found: 2 })
        );
        assert!(matches!(
            parse_hypergraph("3 1\n0 4\n"),
            Err(ParseError::Model(ModelError::VertexOutOfRange { .. }))
        ));
        // singleton edges are fine, empty edge lines cannot even be written
        assert!(parse_hypergraph("2 1\n1\n").is_ok());
    }

    #[test]
    fn graph_round_trip() {
        let text = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(serialize_graph(&g), text);
        // orientation is normalized
        let g2 = parse_graph("5 5\n1 0\n4 0\n2 1\n3 2\n4 3\n").unwrap();
        assert_eq!(serialize_graph(&g2), text);
        assert!(matches!(
            parse_graph("2 1\n0 0\n"),
            Err(ParseError::Model(ModelError::SelfLoop { .. }))
        ));
        assert!(matches!(
            parse_graph("2 1\n0 1 2\n"),
            Err(ParseError::WrongTokenCount { .. })
        ));
    }
}
