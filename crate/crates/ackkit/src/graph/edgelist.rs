//! Plain-text edge list format.
//!
//! First significant line is the header `n <count>`, then one `i j` pair per
//! line. `#` starts a comment (whole-line or trailing); blank lines are
//! skipped. Errors carry 1-based line numbers.

use super::{FormatError, Graph, Vertex};

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<(usize, usize)> = None; // (order, header line)
    let mut edges: Vec<(Vertex, Vertex, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        match n {
            None => {
                if fields.next() != Some("n") {
                    return Err(FormatError::BadHeader { line: line_no });
                }
                let count = fields
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or(FormatError::BadHeader { line: line_no })?;
                if fields.next().is_some() || count == 0 {
                    return Err(FormatError::BadHeader { line: line_no });
                }
                n = Some((count, line_no));
            }
            Some(_) => {
                let i = fields.next().and_then(|t| t.parse::<Vertex>().ok());
                let j = fields.next().and_then(|t| t.parse::<Vertex>().ok());
                match (i, j, fields.next()) {
                    (Some(i), Some(j), None) => edges.push((i, j, line_no)),
                    _ => return Err(FormatError::BadEdge { line: line_no }),
                }
            }
        }
    }
    let (order, header_line) = n.ok_or(FormatError::MissingHeader)?;
    let mut g = Graph::from_edges(order, &[]).map_err(|source| FormatError::Graph {
        line: header_line,
        source,
    })?;
    for (i, j, line) in edges {
        g.insert_edge(i, j)
            .map_err(|source| FormatError::Graph { line, source })?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphError;

    #[test]
    fn parses_k2() {
        let g = parse_edge_list("n 2\n1 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn skips_comments_and_blanks() {
        let g = parse_edge_list("# a triangle\n\nn 3\n1 2 # first\n2 3\n1 3\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_out_of_range_vertex_with_line() {
        assert_eq!(
            parse_edge_list("n 3\n1 4\n"),
            Err(FormatError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange { u: 1, v: 4, n: 3 }
            })
        );
    }

    #[test]
    fn rejects_missing_header() {
        assert_eq!(
            parse_edge_list("1 2\n"),
            Err(FormatError::BadHeader { line: 1 })
        );
        assert_eq!(
            parse_edge_list("# nothing\n"),
            Err(FormatError::MissingHeader)
        );
    }

    #[test]
    fn rejects_malformed_edge_line() {
        assert_eq!(
            parse_edge_list("n 3\n1 two\n"),
            Err(FormatError::BadEdge { line: 2 })
        );
    }

    #[test]
    fn round_trips() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }
}
