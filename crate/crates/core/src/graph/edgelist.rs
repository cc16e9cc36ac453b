//! Plain-text edge lists: one `<u> <v> <t>` contact per line, `#` comments,
//! blank lines ignored.

use std::collections::HashMap;
use std::path::Path;

use super::{GraphError, RawContact, TemporalGraph};

/// Parses an edge-list document. Node order is first-appearance order.
pub fn parse_graph(text: &str) -> Result<TemporalGraph, GraphError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut raw = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let body = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 3 {
            return Err(GraphError::Syntax {
                line: lineno,
                message: format!("expected `<u> <v> <t>`, found {} fields", tokens.len()),
            });
        }
        let label = tokens[2].parse::<u64>().map_err(|_| GraphError::Syntax {
            line: lineno,
            message: format!("label `{}` is not a non-negative integer", tokens[2]),
        })?;
        let mut intern = |s: &str| -> usize {
            *index.entry(s.to_string()).or_insert_with(|| {
                names.push(s.to_string());
                names.len() - 1
            })
        };
        let u = intern(tokens[0]);
        let v = intern(tokens[1]);
        raw.push(RawContact {
            u,
            v,
            label,
            line: Some(lineno),
        });
    }
    TemporalGraph::from_raw(names, raw)
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Graph {
        path: String,
        #[source]
        source: GraphError,
    },
}

/// Reads and parses an edge-list file.
pub fn read_graph_file(path: impl AsRef<Path>) -> Result<TemporalGraph, ReadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text).map_err(|source| ReadError::Graph {
        path: path.display().to_string(),
        source,
    })
}

/// Serializes contacts sorted by label (ties in edge order), one per line.
pub fn write_edge_list(g: &TemporalGraph) -> String {
    let mut out = String::new();
    for &e in g.edges_by_label() {
        let c = g.contact(e);
        out.push_str(g.name(c.u));
        out.push(' ');
        out.push_str(g.name(c.v));
        out.push(' ');
        out.push_str(&c.label.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2: &str = "\
# recursively 1-hop dismountable K5
a b 0
a c 3
a d 2
a e 9
b c 4
b d 6
b e 1
c d 5
c e 7
d e 8
";

    #[test]
    fn parses_k5_document() {
        let g = parse_graph(FIG2).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.min_label(), Some(0));
        assert_eq!(g.max_label(), Some(9));
        assert_eq!(g.names(), &["a", "b", "c", "d", "e"]);
    }

    #[test]
    fn single_line_is_k2() {
        let g = parse_graph("a b 5").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.label(super::super::EdgeId(0)), 5);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_graph("a b 1\n\n a c\n").unwrap_err();
        assert!(matches!(err, GraphError::Syntax { line: 3, .. }));
        let err = parse_graph("a b -1").unwrap_err();
        assert!(matches!(err, GraphError::Syntax { line: 1, .. }));
    }

    #[test]
    fn validation_errors_name_both_lines() {
        let err = parse_graph("a b 1\na c 1\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("a-b:1 (line 1)"), "{msg}");
        assert!(msg.contains("a-c:1 (line 2)"), "{msg}");
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let g = parse_graph("# header\n\na b 3 # trailing\n   \n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn writes_sorted_by_label_and_reparses() {
        let g = parse_graph(FIG2).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("a b 0\nb e 1\na d 2\n"));
        let h = parse_graph(&text).unwrap();
        assert_eq!(write_edge_list(&h), text);
    }
}
