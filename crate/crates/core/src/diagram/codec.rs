//! Versioned JSON serialization.
//!
//! Schema (version 1): `{"version":1, "kind":"arrow_diagram"|"four_tangle",
//! "opposite":[int], "vertices":[...], "boundary":[int], "outer_mark":int}`
//! with dart ids 0-based and dense; `outer_mark` is -1 only for the empty
//! diagram.

use super::{ArrowDiagram, Vertex, VertexKind};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported version {0}, expected 1")]
    UnsupportedVersion(i64),
    #[error("unknown diagram kind {0:?}")]
    UnknownKind(String),
    #[error("kind {kind:?} does not match boundary length {boundary}")]
    KindMismatch { kind: String, boundary: usize },
    #[error("dart index {dart} out of range (dart count {count}) in {field}")]
    DartOutOfRange { field: &'static str, dart: i64, count: usize },
    #[error("invalid map: {0}")]
    Invalid(String),
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    version: i64,
    kind: String,
    opposite: Vec<i64>,
    vertices: Vec<VertexJson>,
    boundary: Vec<i64>,
    outer_mark: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum VertexJson {
    Crossing { rot: [i64; 4], over: [i64; 2] },
    Arrow { rot: [i64; 2], head: i64 },
    Marker { rot: [i64; 2] },
}

pub fn to_json(d: &ArrowDiagram) -> String {
    let vertices = d
        .vertices()
        .iter()
        .map(|v| match &v.kind {
            VertexKind::Crossing { over } => VertexJson::Crossing {
                rot: [v.rot[0] as i64, v.rot[1] as i64, v.rot[2] as i64, v.rot[3] as i64],
                over: [over[0] as i64, over[1] as i64],
            },
            VertexKind::Arrow { head } => {
                VertexJson::Arrow { rot: [v.rot[0] as i64, v.rot[1] as i64], head: *head as i64 }
            }
            VertexKind::Marker => VertexJson::Marker { rot: [v.rot[0] as i64, v.rot[1] as i64] },
        })
        .collect();
    let doc = DiagramJson {
        version: 1,
        kind: if d.is_tangle() { "four_tangle" } else { "arrow_diagram" }.to_string(),
        opposite: d.opposite_table().iter().map(|&x| x as i64).collect(),
        vertices,
        boundary: d.boundary().iter().map(|&x| x as i64).collect(),
        outer_mark: d.outer_mark().map_or(-1, |m| m as i64),
    };
    serde_json::to_string(&doc).expect("serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<ArrowDiagram, CodecError> {
    let doc: DiagramJson = serde_json::from_str(text)?;
    if doc.version != 1 {
        return Err(CodecError::UnsupportedVersion(doc.version));
    }
    match doc.kind.as_str() {
        "arrow_diagram" | "four_tangle" => {}
        other => return Err(CodecError::UnknownKind(other.to_string())),
    }
    let n = doc.opposite.len();
    let dart = |field: &'static str, x: i64| -> Result<usize, CodecError> {
        if x < 0 || x as usize >= n {
            Err(CodecError::DartOutOfRange { field, dart: x, count: n })
        } else {
            Ok(x as usize)
        }
    };
    let mut opposite = Vec::with_capacity(n);
    for &x in &doc.opposite {
        opposite.push(dart("opposite", x)?);
    }
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for v in &doc.vertices {
        vertices.push(match v {
            VertexJson::Crossing { rot, over } => Vertex {
                kind: VertexKind::Crossing {
                    over: {
                        let a = dart("over", over[0])?;
                        let b = dart("over", over[1])?;
                        [a.min(b), a.max(b)]
                    },
                },
                rot: rot.iter().map(|&x| dart("rot", x)).collect::<Result<_, _>>()?,
            },
            VertexJson::Arrow { rot, head } => Vertex {
                kind: VertexKind::Arrow { head: dart("head", *head)? },
                rot: rot.iter().map(|&x| dart("rot", x)).collect::<Result<_, _>>()?,
            },
            VertexJson::Marker { rot } => Vertex {
                kind: VertexKind::Marker,
                rot: rot.iter().map(|&x| dart("rot", x)).collect::<Result<_, _>>()?,
            },
        });
    }
    let boundary = doc.boundary.iter().map(|&x| dart("boundary", x)).collect::<Result<Vec<_>, _>>()?;
    let expect_tangle = doc.kind == "four_tangle";
    if expect_tangle != !boundary.is_empty() {
        return Err(CodecError::KindMismatch { kind: doc.kind, boundary: boundary.len() });
    }
    let outer_mark = if doc.outer_mark < 0 {
        if n > 0 {
            return Err(CodecError::Invalid("outer_mark -1 on a nonempty diagram".to_string()));
        }
        None
    } else {
        Some(dart("outer_mark", doc.outer_mark)?)
    };
    let d = ArrowDiagram::from_parts(opposite, vertices, boundary, outer_mark);
    let report = d.validate();
    if !report.passed() {
        return Err(CodecError::Invalid(report.to_string()));
    }
    Ok(d)
}
