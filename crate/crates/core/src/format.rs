//! Reading and writing hypergraphs.
//!
//! Text format:
//! ```text
//! n r
//! v1 v2 ... vr     # one edge per line, 1-indexed, strictly increasing
//! ```
//! `#` starts a comment anywhere on a line; blank lines are ignored.
//!
//! JSON format: `{"n": int, "r": int, "edges": [[int, ...], ...]}` with the
//! edges colex-sorted and each edge ascending.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::error::Error;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("missing `n r` header line")]
    MissingHeader,

    #[error(transparent)]
    Invalid(#[from] Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Render the text format; edges come out colex-sorted.
pub fn write_text(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.uniformity());
    for edge in h.edges() {
        let verts: Vec<String> = edge.vertices().map(|v| v.to_string()).collect();
        out.push_str(&verts.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the text format. Vertices within an edge line must be strictly
/// increasing, as the format specifies.
pub fn parse_text(input: &str) -> Result<Hypergraph, FormatError> {
    let mut header: Option<(u32, u32)> = None;
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = parse_numbers(line, line_no)?;
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(FormatError::Syntax {
                        line: line_no,
                        msg: format!("header must be `n r`, got {} numbers", nums.len()),
                    });
                }
                header = Some((nums[0], nums[1]));
            }
            Some((_, r)) => {
                if nums.len() != r as usize {
                    return Err(FormatError::Syntax {
                        line: line_no,
                        msg: format!("edge has {} vertices, expected {}", nums.len(), r),
                    });
                }
                if nums.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(FormatError::Syntax {
                        line: line_no,
                        msg: "edge vertices must be strictly increasing".into(),
                    });
                }
                edges.push(nums);
            }
        }
    }
    let (n, r) = header.ok_or(FormatError::MissingHeader)?;
    Ok(Hypergraph::new(n, r, &edges)?)
}

fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<u32>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| FormatError::Syntax {
                line: line_no,
                msg: format!("not a vertex number: `{tok}`"),
            })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct Wire {
    n: u32,
    r: u32,
    edges: Vec<Vec<u32>>,
}

impl From<&Hypergraph> for Wire {
    fn from(h: &Hypergraph) -> Wire {
        Wire {
            n: h.vertex_count(),
            r: h.uniformity(),
            edges: h.edges().map(|e| e.to_vec()).collect(),
        }
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Wire::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        Hypergraph::new(wire.n, wire.r, &wire.edges).map_err(D::Error::custom)
    }
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("hypergraph serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<Hypergraph, FormatError> {
    Ok(serde_json::from_str(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let h = Hypergraph::new(5, 3, &[vec![1, 2, 3], vec![2, 4, 5], vec![1, 2, 4]]).unwrap();
        let txt = write_text(&h);
        let back = parse_text(&txt).unwrap();
        assert_eq!(h, back);
    }

    #[test]
    fn parses_comments_and_blanks() {
        let txt = "# hypergraph\n5 3   # header\n\n1 2 3\n2 4 5  # an edge\n";
        let h = parse_text(txt).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_text("  \n# x\n"),
            Err(FormatError::MissingHeader)
        ));
        assert!(matches!(
            parse_text("5 3\n1 2\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_text("5 3\n3 2 1\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_text("5 3\n1 2 9\n"),
            Err(FormatError::Invalid(Error::VertexOutOfRange { .. }))
        ));
        assert!(matches!(
            parse_text("5 3\n1 2 x\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn round_trip_json() {
        let h = Hypergraph::new(6, 3, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let js = to_json(&h);
        assert_eq!(js, r#"{"n":6,"r":3,"edges":[[1,2,3],[4,5,6]]}"#);
        assert_eq!(from_json(&js).unwrap(), h);
        assert!(from_json(r#"{"n":3,"r":3,"edges":[[1,2,9]]}"#).is_err());
    }
}
