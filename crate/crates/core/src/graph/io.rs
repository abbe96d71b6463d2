//! Plain-text graph format: optional `# label` comment lines, a `n m` header,
//! then one `u v` line per edge with 0 <= u < v < n.

use super::Graph;
use crate::error::{Error, Result};

/// Parses the text format. The first `#` comment line, if any, becomes the
/// graph label (leading `#` and whitespace stripped). Blank lines are
/// ignored. Errors carry the 1-based line number.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut label: Option<String> = None;
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if label.is_none() {
                let comment = comment.trim();
                if !comment.is_empty() {
                    label = Some(comment.to_string());
                }
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (a, b) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected two integers, got {line:?}"),
                })
            }
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid integer {s:?}"),
            })
        };
        let (a, b) = (parse(a)?, parse(b)?);
        match header {
            None => header = Some((a, b, lineno)),
            Some((n, m, _)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                if a >= b {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("edge must satisfy u < v, got {a} {b}"),
                    });
                }
                if b >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex {b} out of range for n = {n}"),
                    });
                }
                edges.push((a, b));
            }
        }
    }

    let (n, m, header_line) = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing `n m` header line".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("declared {m} edges but found {}", edges.len()),
        });
    }
    let mut g = Graph::new(n, &edges)?;
    g.label = label;
    Ok(g)
}

/// Writes the text format: label comment (if any), `n m` header, then edges
/// as `u v` with u < v in lexicographic order. Newline-terminated.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(label) = &g.label {
        out.push_str("# ");
        out.push_str(label);
        out.push('\n');
    }
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family, GeneratorSpec};

    #[test]
    fn round_trip_petersen_complement_style() {
        let g = generate(&GeneratorSpec::new(Family::Johnson, 5, 2)).unwrap();
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.label, g.label);
    }

    #[test]
    fn parses_label_blanks_and_extra_comments() {
        let text = "# my graph\n\n# not the label\n3 2\n0 1\n\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.label.as_deref(), Some("my graph"));
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn no_label_is_none() {
        let g = parse_graph("2 1\n0 1\n").unwrap();
        assert!(g.label.is_none());
    }

    #[test]
    fn rejects_malformed_lines_with_line_numbers() {
        let err = parse_graph("2 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_graph("2 1\nx 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_graph("3 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_graph("3 1\n0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn rejects_edge_count_mismatch() {
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");

        let err = parse_graph("3 1\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn rejects_empty_input() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("# only a comment\n").is_err());
    }

    #[test]
    fn output_is_newline_terminated_and_sorted() {
        let g = parse_graph("4 3\n2 3\n0 3\n0 1\n").unwrap();
        assert_eq!(write_graph(&g), "4 3\n0 1\n0 3\n2 3\n");
    }
}
