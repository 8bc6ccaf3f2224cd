//! The `.shd` diagram file format (UTF-8 JSON).
//!
//! ```json
//! {
//!   "name": "rp3",
//!   "alpha": [["q1", "q2"]],
//!   "beta": [["q1", "q2"]],
//!   "regions": [
//!     {"id": "R1", "outer": false, "boundary": [
//!       {"curve": "a1", "from": "q2", "to": "q1", "orient": 1},
//!       {"suture": 0},
//!       {"curve": "b1", "closed": true, "orient": -1}
//!     ]}
//!   ]
//! }
//! ```
//!
//! Keys are emitted in the order shown, with two-space indentation, so a
//! file written by [`serialize`] round-trips byte for byte. Within a region
//! the boundary cycles are listed one after another; a run of arc sides
//! continues while each arc starts where the previous one ended and the curve
//! kind alternates, so two arc cycles of one region must not chain into each
//! other (separate them with a suture or closed side if they would).

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::{Orient, RawDiagram, RawRegion, RawSide, SuturedDiagram};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("reference error in region {region:?}: unknown {kind} id {id:?}")]
    Reference { region: String, kind: &'static str, id: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileDiagram {
    name: String,
    alpha: Vec<Vec<String>>,
    beta: Vec<Vec<String>>,
    regions: Vec<FileRegion>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRegion {
    id: String,
    outer: bool,
    boundary: Vec<FileSide>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FileSide {
    Arc(FileArc),
    Closed(FileClosed),
    Suture(FileSuture),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileArc {
    curve: String,
    from: String,
    to: String,
    orient: Orient,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileClosed {
    curve: String,
    closed: True,
    orient: Orient,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSuture {
    suture: usize,
}

/// The literal `true`.
struct True;

impl Serialize for True {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_bool(true)
    }
}

impl<'de> Deserialize<'de> for True {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        if bool::deserialize(d)? {
            Ok(True)
        } else {
            Err(de::Error::custom("\"closed\" must be true"))
        }
    }
}

impl Serialize for Orient {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

impl<'de> Deserialize<'de> for Orient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Orient::Forward),
            -1 => Ok(Orient::Backward),
            other => Err(de::Error::custom(format!("orient must be 1 or -1, got {other}"))),
        }
    }
}

/// Parse the contents of a `.shd` file.
///
/// Structural problems (imbalance, inconsistent gluing, ...) are not parse
/// errors; they are reported by [`super::validate`].
pub fn parse_diagram(text: &str) -> Result<SuturedDiagram, ParseError> {
    let file: FileDiagram = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let raw = RawDiagram {
        name: file.name,
        alpha: file.alpha,
        beta: file.beta,
        regions: file
            .regions
            .into_iter()
            .map(|r| RawRegion {
                id: r.id,
                outer: r.outer,
                sides: r
                    .boundary
                    .into_iter()
                    .map(|s| match s {
                        FileSide::Arc(a) => RawSide::Arc { curve: a.curve, from: a.from, to: a.to, orient: a.orient },
                        FileSide::Closed(c) => RawSide::Closed { curve: c.curve, orient: c.orient },
                        FileSide::Suture(s) => RawSide::Suture(s.suture),
                    })
                    .collect(),
            })
            .collect(),
    };
    SuturedDiagram::link(raw)
}

/// Render a diagram in the `.shd` format (with a trailing newline).
pub fn serialize(d: &SuturedDiagram) -> String {
    let raw = d.to_raw();
    let file = FileDiagram {
        name: raw.name,
        alpha: raw.alpha,
        beta: raw.beta,
        regions: raw
            .regions
            .into_iter()
            .map(|r| FileRegion {
                id: r.id,
                outer: r.outer,
                boundary: r
                    .sides
                    .into_iter()
                    .map(|s| match s {
                        RawSide::Arc { curve, from, to, orient } => FileSide::Arc(FileArc { curve, from, to, orient }),
                        RawSide::Closed { curve, orient } => FileSide::Closed(FileClosed { curve, closed: True, orient }),
                        RawSide::Suture(c) => FileSide::Suture(FileSuture { suture: c }),
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("diagram serializes");
    out.push('\n');
    out
}
