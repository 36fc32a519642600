//! Polygon file formats.
//!
//! Two notations are accepted, detected by the first non-blank character:
//!
//! * plain text — one vertex per line, two integers separated by
//!   whitespace; `#` starts a comment that runs to the end of the line;
//! * JSON — a single top-level array of two-element integer arrays.
//!
//! Parsers reject non-integer coordinates, malformed rows, trailing
//! garbage, and lists with fewer than three vertices. Parsing produces a
//! raw vertex list; polygon validation is a separate step.

use crate::lattice::LatticePoint;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {0}: expected two integers separated by whitespace")]
    WrongArity(usize),
    #[error("line {0}: '{1}' is not an integer")]
    BadInteger(usize, String),
    #[error("a polygon file needs at least 3 vertices, found {0}")]
    TooFewVertices(usize),
    #[error("invalid polygon array: {0}")]
    Json(String),
}

/// Parses either accepted notation into a vertex list.
pub fn parse_polygon_str(input: &str) -> Result<Vec<LatticePoint>, ParseError> {
    if input.trim_start().starts_with('[') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn parse_text(input: &str) -> Result<Vec<LatticePoint>, ParseError> {
    let mut vertices = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::WrongArity(line_no));
        }
        let mut coords = [0i64; 2];
        for (slot, token) in coords.iter_mut().zip(&tokens) {
            *slot = token
                .parse()
                .map_err(|_| ParseError::BadInteger(line_no, token.to_string()))?;
        }
        vertices.push(LatticePoint::new(coords[0], coords[1]));
    }
    if vertices.len() < 3 {
        return Err(ParseError::TooFewVertices(vertices.len()));
    }
    Ok(vertices)
}

fn parse_json(input: &str) -> Result<Vec<LatticePoint>, ParseError> {
    let value: Value = serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
    let rows = value
        .as_array()
        .ok_or_else(|| ParseError::Json("top-level value must be an array".into()))?;
    let mut vertices = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let pair = row
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| ParseError::Json(format!("entry {i} must be a two-element array")))?;
        let x = pair[0].as_i64().ok_or_else(|| {
            ParseError::Json(format!("entry {i}: '{}' is not an integer", pair[0]))
        })?;
        let y = pair[1].as_i64().ok_or_else(|| {
            ParseError::Json(format!("entry {i}: '{}' is not an integer", pair[1]))
        })?;
        vertices.push(LatticePoint::new(x, y));
    }
    if vertices.len() < 3 {
        return Err(ParseError::TooFewVertices(vertices.len()));
    }
    Ok(vertices)
}

/// Plain-text rendering; re-parses to the same vertex list.
pub fn emit_text(vertices: &[LatticePoint]) -> String {
    let mut out = String::new();
    for v in vertices {
        out.push_str(&format!("{} {}\n", v.x, v.y));
    }
    out
}

/// JSON rendering; re-parses to the same vertex list.
pub fn emit_json(vertices: &[LatticePoint]) -> String {
    Value::Array(
        vertices
            .iter()
            .map(|v| Value::Array(vec![v.x.into(), v.y.into()]))
            .collect(),
    )
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn text_roundtrip_with_comments() {
        let input = "# unit square\n0 0\n1 0   # bottom right\n\n1 1\n0 1\n";
        let parsed = parse_polygon_str(input).unwrap();
        assert_eq!(parsed, vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]);
        assert_eq!(parse_polygon_str(&emit_text(&parsed)).unwrap(), parsed);
    }

    #[test]
    fn json_roundtrip() {
        let parsed = parse_polygon_str("[[0,0],[4,0],[0,4]]").unwrap();
        assert_eq!(parsed, vec![pt(0, 0), pt(4, 0), pt(0, 4)]);
        assert_eq!(parse_polygon_str(&emit_json(&parsed)).unwrap(), parsed);
    }

    #[test]
    fn rejects_non_integers() {
        assert_eq!(
            parse_polygon_str("0 0\n0.5 1\n1 1"),
            Err(ParseError::BadInteger(2, "0.5".into()))
        );
        assert!(matches!(
            parse_polygon_str("[[0,0],[0.5,1],[1,1]]"),
            Err(ParseError::Json(_))
        ));
        assert_eq!(
            parse_polygon_str("0 0\nnope 1\n1 1"),
            Err(ParseError::BadInteger(2, "nope".into()))
        );
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert_eq!(
            parse_polygon_str("0 0\n1 0 7\n1 1"),
            Err(ParseError::WrongArity(2))
        );
        assert!(matches!(
            parse_polygon_str("[[0,0],[1,0],[1,1]] extra"),
            Err(ParseError::Json(_))
        ));
    }

    #[test]
    fn rejects_short_lists() {
        assert_eq!(
            parse_polygon_str("0 0\n1 0\n"),
            Err(ParseError::TooFewVertices(2))
        );
        assert_eq!(
            parse_polygon_str("[[0,0],[1,0]]"),
            Err(ParseError::TooFewVertices(2))
        );
        assert_eq!(parse_polygon_str(""), Err(ParseError::TooFewVertices(0)));
    }

    #[test]
    fn rejects_malformed_json_rows() {
        assert!(matches!(
            parse_polygon_str("[[0,0],[1],[1,1]]"),
            Err(ParseError::Json(_))
        ));
        assert!(matches!(
            parse_polygon_str("[0,0,1,0,1,1]"),
            Err(ParseError::Json(_))
        ));
    }
}
