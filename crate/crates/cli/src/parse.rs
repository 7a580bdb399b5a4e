//! Signed edge-list text format and the JSON graph shape.
//!
//! Text format: optional '#' comment lines, then a header "n <count>", then
//! one edge per line as "u v s" with s one of +, -, +1, -1, 1.

use estrada_core::SignedGraph;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// JSON-facing graph shape; `edges` entries are [u, v, sign].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDto {
    pub n: usize,
    pub edges: Vec<(usize, usize, i8)>,
}

impl GraphDto {
    pub fn from_graph(g: &SignedGraph) -> Self {
        GraphDto { n: g.n(), edges: g.edges().to_vec() }
    }

    pub fn to_graph(&self) -> Result<SignedGraph, CliError> {
        Ok(SignedGraph::from_edge_list(self.n, &self.edges)?)
    }
}

fn parse_sign(token: &str) -> Option<i8> {
    match token {
        "+" | "+1" | "1" => Some(1),
        "-" | "-1" => Some(-1),
        _ => None,
    }
}

/// Parses the edge-list text format; errors carry 1-based line numbers.
pub fn parse_signed_edge_list(text: &str) -> Result<SignedGraph, CliError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, i8)> = Vec::new();
    let mut seen_lines: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!("expected header \"n <count>\", got \"{line}\""),
                    });
                }
                let count = fields[1].parse::<usize>().map_err(|_| CliError::Parse {
                    line: line_no,
                    message: format!("vertex count \"{}\" is not a number", fields[1]),
                })?;
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 3 {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!("expected \"u v s\", got \"{line}\""),
                    });
                }
                let parse_vertex = |tok: &str| {
                    tok.parse::<usize>().map_err(|_| CliError::Parse {
                        line: line_no,
                        message: format!("vertex \"{tok}\" is not a number"),
                    })
                };
                let u = parse_vertex(fields[0])?;
                let v = parse_vertex(fields[1])?;
                let s = parse_sign(fields[2]).ok_or_else(|| CliError::Parse {
                    line: line_no,
                    message: format!("sign \"{}\" is not one of + - +1 -1 1", fields[2]),
                })?;
                if u >= count || v >= count {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!("vertex {} out of range for n = {count}", u.max(v)),
                    });
                }
                if u == v {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!("self-loop at vertex {u}"),
                    });
                }
                let key = (u.min(v), u.max(v));
                if let Some(&(_, _, first)) =
                    seen_lines.iter().find(|&&(a, b, _)| (a, b) == key)
                {
                    return Err(CliError::Parse {
                        line: line_no,
                        message: format!(
                            "duplicate edge {{{}, {}}} (first listed at line {first})",
                            key.0, key.1
                        ),
                    });
                }
                seen_lines.push((key.0, key.1, line_no));
                edges.push((u, v, s));
            }
        }
    }

    match n {
        None => Err(CliError::Parse { line: text.lines().count().max(1), message: "missing \"n <count>\" header".into() }),
        Some(count) => Ok(SignedGraph::from_edge_list(count, &edges)?),
    }
}

/// Renders a graph back into the edge-list text format, optionally with a
/// leading comment line.
pub fn to_edge_list(g: &SignedGraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("n {}\n", g.n()));
    for &(u, v, s) in g.edges() {
        out.push_str(&format!("{u} {v} {}\n", if s > 0 { "+" } else { "-" }));
    }
    out
}
