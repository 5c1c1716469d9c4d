//! Plain-text instance files.
//!
//! ```text
//! # comment
//! hgr <q> <vertex_count>
//! e <label> <v1> ... <vq> w <weight>
//! ```
//!
//! Vertices are 1-based in files and 0-based in memory. Everything after a
//! `#` is ignored, as are blank lines.

use std::fmt::Write as _;

use hyperspan_core::{Error as CoreError, Hypergraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("missing `hgr <q> <vertex_count>` header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("{0}")]
    Syntax(String),
    #[error("vertex ids are 1-based, got 0")]
    ZeroVertex,
    #[error(transparent)]
    Invalid(#[from] CoreError),
}

struct EdgeRecord {
    line: usize,
    label: String,
    vertices: Vec<usize>,
    weight: f64,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

/// Parses an instance file into a labelled hypergraph.
pub fn parse_instance(text: &str) -> Result<Hypergraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut records = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.first() {
            None => continue,
            Some(&"hgr") => {
                if header.is_some() {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::DuplicateHeader,
                    });
                }
                if tokens.len() != 3 {
                    return Err(syntax(line, "expected `hgr <q> <vertex_count>`"));
                }
                let q = number(line, tokens[1], "q")?;
                let n = number(line, tokens[2], "vertex count")?;
                if q < 2 {
                    return Err(ParseError {
                        line,
                        kind: CoreError::InvalidUniformity(q).into(),
                    });
                }
                header = Some((q, n, line));
            }
            Some(&"e") => {
                let Some((q, _, _)) = header else {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::MissingHeader,
                    });
                };
                if tokens.len() < 4 || tokens[tokens.len() - 2] != "w" {
                    return Err(syntax(
                        line,
                        "expected `e <label> <v1> ... <vq> w <weight>`",
                    ));
                }
                let label = tokens[1].to_string();
                let vertex_tokens = &tokens[2..tokens.len() - 2];
                let mut vertices = Vec::with_capacity(vertex_tokens.len());
                for t in vertex_tokens {
                    let v: usize = number(line, t, "vertex")?;
                    if v == 0 {
                        return Err(ParseError {
                            line,
                            kind: ParseErrorKind::ZeroVertex,
                        });
                    }
                    vertices.push(v - 1);
                }
                if vertices.len() != q {
                    let mut distinct = vertices.clone();
                    distinct.sort_unstable();
                    distinct.dedup();
                    return Err(ParseError {
                        line,
                        kind: CoreError::NonUniformEdge {
                            edge: hyperspan_core::EdgeId(records.len()),
                            listed: vertices.len(),
                            distinct: distinct.len(),
                            q,
                        }
                        .into(),
                    });
                }
                let weight = number(line, tokens[tokens.len() - 1], "weight")?;
                records.push(EdgeRecord {
                    line,
                    label,
                    vertices,
                    weight,
                });
            }
            Some(other) => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let Some((q, n, header_line)) = header else {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::MissingHeader,
        });
    };
    let line_of = |e: hyperspan_core::EdgeId| records.get(e.0).map_or(header_line, |r| r.line);
    let edges = records.iter().map(|r| r.vertices.clone()).collect();
    let weights = records.iter().map(|r| r.weight).collect();
    let labels = records.iter().map(|r| r.label.clone()).collect();
    let h = Hypergraph::new(q, n, edges, weights).map_err(|err| {
        let line = match &err {
            CoreError::NonUniformEdge { edge, .. }
            | CoreError::VertexOutOfRange { edge, .. }
            | CoreError::NegativeWeight { edge, .. }
            | CoreError::NonFiniteWeight { edge } => line_of(*edge),
            _ => header_line,
        };
        ParseError {
            line,
            kind: err.into(),
        }
    })?;
    h.with_labels(labels).map_err(|err| {
        let line = match &err {
            CoreError::DuplicateLabel(l) => records
                .iter()
                .filter(|r| &r.label == l)
                .nth(1)
                .map_or(header_line, |r| r.line),
            _ => header_line,
        };
        ParseError {
            line,
            kind: err.into(),
        }
    })
}

/// Canonical text of `h`. Unlabelled edges are written as `e<index+1>`.
pub fn write_instance(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "hgr {} {}", h.q(), h.vertex_count()).unwrap();
    for e in h.edge_ids() {
        let label = match h.label(e) {
            Some(l) => l.to_string(),
            None => format!("e{}", e.0 + 1),
        };
        write!(out, "e {label}").unwrap();
        for v in h.vertices(e) {
            write!(out, " {}", v.0 + 1).unwrap();
        }
        writeln!(out, " w {}", format_weight(h.weight(e))).unwrap();
    }
    out
}

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros dropped,
/// exponent form outside `1e-4 <= |x| < 1e17`. Round-trips every `f64`.
pub fn format_weight(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperspan_core::{EdgeId, VertexId};

    const WORKED: &str = "hgr 3 5\ne x 1 2 3 w 1\ne y 3 4 5 w 2\ne z 1 2 4 w 3\ne u 1 4 5 w 4\n";

    #[test]
    fn parses_worked_instance() {
        let h = parse_instance(WORKED).unwrap();
        assert_eq!(h.q(), 3);
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.find_label("u"), Some(EdgeId(3)));
        assert_eq!(
            h.vertices(EdgeId(3)),
            &[VertexId(0), VertexId(3), VertexId(4)]
        );
        assert_eq!(h.weight(EdgeId(2)), 3.0);
        assert_eq!(write_instance(&h), WORKED);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a 2-graph\n\nhgr 2 3   # header\ne a 1 2 w 1 # edge\n";
        let h = parse_instance(text).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(write_instance(&h), "hgr 2 3\ne a 1 2 w 1\n");
    }

    #[test]
    fn error_lines() {
        let err = parse_instance("hgr 3 4\ne a 1 1 2 w 1").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            ParseErrorKind::Invalid(CoreError::NonUniformEdge { .. })
        ));
        let err = parse_instance("hgr 3 4\ne a 1 2 3 w 1\ne b 1 2 9 w 1").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(
            err.kind,
            ParseErrorKind::Invalid(CoreError::VertexOutOfRange { .. })
        ));
        let err = parse_instance("hgr 2 4\ne a 1 2 w -1").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_instance("hgr 2 4\n\ne a 1 2 w 1\ne a 2 3 w 1").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(matches!(
            err.kind,
            ParseErrorKind::Invalid(CoreError::DuplicateLabel(_))
        ));
        let err = parse_instance("e a 1 2 w 1").unwrap_err();
        assert_eq!((err.line, err.kind), (1, ParseErrorKind::MissingHeader));
        assert_eq!(
            parse_instance("").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        );
        assert_eq!(
            parse_instance("hgr 2 4\ne a 0 2 w 1").unwrap_err().kind,
            ParseErrorKind::ZeroVertex
        );
        assert!(parse_instance("hgr 2 4\ne a 1 2 x 1").is_err());
        assert!(parse_instance("hgr 2 4\ne a 1 2 w abc").is_err());
        assert!(parse_instance("hgr 2 4\nf a").is_err());
        assert!(parse_instance("hgr 2 4\nhgr 2 4").is_err());
        assert!(parse_instance("hgr 1 4").is_err());
    }

    #[test]
    fn empty_edge_list() {
        let h = parse_instance("hgr 3 4\n").unwrap();
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn weight_formatting() {
        assert_eq!(format_weight(6.0), "6");
        assert_eq!(format_weight(0.0), "0");
        assert_eq!(format_weight(2.5), "2.5");
        assert_eq!(format_weight(0.1), "0.10000000000000001");
        assert_eq!(format_weight(1e20), "1e+20");
        assert_eq!(format_weight(1.5e-7), "1.4999999999999999e-07");
        assert_eq!(format_weight(123456.0), "123456");
        assert_eq!(format_weight(0.0001), "0.0001");
        for x in [
            0.1,
            1.0 / 3.0,
            1e-300,
            9.999999999999999e16,
            12345.678,
            f64::MAX,
        ] {
            assert_eq!(format_weight(x).parse::<f64>().unwrap(), x);
        }
    }
}
