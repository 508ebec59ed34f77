//! Plain-text edge lists.
//!
//! One edge per line as two labels separated by whitespace and/or commas.
//! Lines starting with `#` and blank lines are skipped; `v <label>`
//! declares a vertex that may have no edges.

use std::fmt::Write as _;

use netvuln_core::{Error as CoreError, Graph, GraphBuilder};

use crate::error::{CliError, ParseErrorKind};

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut builder = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let fail = |kind| CliError::Parse { line: line_no, kind };
        match tokens.as_slice() {
            ["v", label] => {
                builder.vertex(label);
            }
            [a, b] => {
                if a == b {
                    return Err(fail(ParseErrorKind::SelfLoop((*a).to_string())));
                }
                builder.edge(a, b).map_err(|e| match e {
                    CoreError::SelfLoop { label } => fail(ParseErrorKind::SelfLoop(label)),
                    other => CliError::Core(other),
                })?;
            }
            _ => return Err(fail(ParseErrorKind::Malformed(line.to_string()))),
        }
    }
    builder.build().map_err(|_| CliError::EmptyInput)
}

/// Serializes `g` in the format [`parse_edge_list`] reads. Vertices without
/// edges are written as `v` directives.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "v {}", g.label(v));
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(a), g.label(b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitespace_path() {
        let g = parse_edge_list("a b\nb c\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn comma_and_comment() {
        let g = parse_edge_list("# comment\na,b\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        let g = parse_edge_list("  x ,\ty  \n\n#z w\n").unwrap();
        assert_eq!(g.labels(), ["x", "y"]);
    }

    #[test]
    fn self_loop_reports_line() {
        match parse_edge_list("a a\n").unwrap_err() {
            CliError::Parse { line: 1, kind: ParseErrorKind::SelfLoop(l) } => assert_eq!(l, "a"),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("a b\n\nc c\n").unwrap_err() {
            CliError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_lines() {
        for text in ["a\n", "a b c\n", "a b\nv\n", ",\n"] {
            assert!(matches!(parse_edge_list(text), Err(CliError::Parse { .. })), "{text:?}");
        }
    }

    #[test]
    fn vertex_directive() {
        let g = parse_edge_list("v lone\na b\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degree(0), 0);
        assert_eq!(write_edge_list(&g), "v lone\na b\n");
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse_edge_list(""), Err(CliError::EmptyInput)));
        assert!(matches!(parse_edge_list("# only\n\n"), Err(CliError::EmptyInput)));
    }
}
