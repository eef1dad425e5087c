//! Human-writable drawing descriptions and their JSON file format.
//!
//! A `DrawingSpec` is a graph plus, per edge, the ordered list of crossings
//! from source to target, plus the rotation (cyclic edge order) at each
//! vertex, plus a designated outer dart. The crossing sign convention is
//! fixed: a record `(f, +1)` on edge `e` means that at the crossing dummy the
//! rotation reads `(e-in, f-in, e-out, f-out)`; informally, `f` passes from
//! the left of `e` to its right with both edges oriented source to target.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SpecError;
use crate::graph::{Edge, EdgeId, Graph, VertexId};

/// One crossing on an edge's ordered crossing list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingRecord {
    pub other: EdgeId,
    pub sign: Sign,
}

/// Orientation of a crossing, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i8::deserialize(d)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(D::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

/// Traversal direction of a dart along its segment, relative to the edge's
/// source-to-target orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DartDir {
    Forward,
    Backward,
}

/// Address of a dart: an edge, a segment index along it (0-based from the
/// source), and a traversal direction. The face on the dart's left is meant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DartAddress {
    pub edge: EdgeId,
    pub segment: usize,
    pub dir: DartDir,
}

/// A combinatorial description of a drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawingSpec {
    pub graph: Graph,
    /// Ordered crossing list per edge, from source to target. Edges without
    /// crossings may be omitted.
    pub crossings: BTreeMap<EdgeId, Vec<CrossingRecord>>,
    /// Cyclic counterclockwise list of incident edges per vertex.
    pub rotations: BTreeMap<VertexId, Vec<EdgeId>>,
    /// Dart whose left face is the outer face.
    pub outer: DartAddress,
}

/// Raw file form. Ids may be JSON integers; they are canonicalized to strings.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    vertices: Vec<serde_json::Value>,
    edges: Vec<EdgeFile>,
    crossings: BTreeMap<String, Vec<CrossFile>>,
    rotations: BTreeMap<String, Vec<serde_json::Value>>,
    outer: OuterFile,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    id: serde_json::Value,
    source: serde_json::Value,
    target: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossFile {
    other: serde_json::Value,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OuterFile {
    edge: serde_json::Value,
    segment: usize,
    dir: DartDir,
}

fn id_of(v: &serde_json::Value) -> Result<String, SpecError> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(SpecError::InconsistentSpec(format!("id must be string or integer, got {other}"))),
    }
}

impl DrawingSpec {
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let raw: SpecFile = serde_json::from_str(text)
            .map_err(|e| SpecError::InconsistentSpec(format!("json: {e}")))?;
        let vertices = raw.vertices.iter().map(id_of).collect::<Result<Vec<_>, _>>()?;
        let edges = raw
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    id: id_of(&e.id)?,
                    source: id_of(&e.source)?,
                    target: id_of(&e.target)?,
                })
            })
            .collect::<Result<Vec<_>, SpecError>>()?;
        let graph = Graph { vertices, edges };
        let mut crossings = BTreeMap::new();
        for (k, list) in &raw.crossings {
            let recs = list
                .iter()
                .map(|c| Ok(CrossingRecord { other: id_of(&c.other)?, sign: c.sign }))
                .collect::<Result<Vec<_>, SpecError>>()?;
            crossings.insert(k.clone(), recs);
        }
        let mut rotations = BTreeMap::new();
        for (k, list) in &raw.rotations {
            rotations.insert(k.clone(), list.iter().map(id_of).collect::<Result<Vec<_>, _>>()?);
        }
        let outer = DartAddress { edge: id_of(&raw.outer.edge)?, segment: raw.outer.segment, dir: raw.outer.dir };
        let spec = DrawingSpec { graph, crossings, rotations, outer };
        spec.check_structure()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        let file = SpecFile {
            vertices: self.graph.vertices.iter().map(|v| serde_json::Value::String(v.clone())).collect(),
            edges: self
                .graph
                .edges
                .iter()
                .map(|e| EdgeFile {
                    id: serde_json::Value::String(e.id.clone()),
                    source: serde_json::Value::String(e.source.clone()),
                    target: serde_json::Value::String(e.target.clone()),
                })
                .collect(),
            crossings: self
                .crossings
                .iter()
                .filter(|(_, v)| !v.is_empty())
                .map(|(k, v)| {
                    (
                        k.clone(),
                        v.iter()
                            .map(|c| CrossFile { other: serde_json::Value::String(c.other.clone()), sign: c.sign })
                            .collect(),
                    )
                })
                .collect(),
            rotations: self
                .rotations
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().map(|e| serde_json::Value::String(e.clone())).collect()))
                .collect(),
            outer: OuterFile {
                edge: serde_json::Value::String(self.outer.edge.clone()),
                segment: self.outer.segment,
                dir: self.outer.dir,
            },
        };
        serde_json::to_string_pretty(&file).expect("spec serialization cannot fail")
    }

    /// Ordered crossing list of `e`, empty if absent.
    pub fn crossings_of(&self, e: &str) -> &[CrossingRecord] {
        self.crossings.get(e).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Field-level checks: ids resolve, mirror consistency, simplicity,
    /// rotations match incidences, outer dart resolves.
    pub fn check_structure(&self) -> Result<(), SpecError> {
        self.graph.check()?;
        for (e, list) in &self.crossings {
            let Some(_) = self.graph.edge(e) else {
                return Err(SpecError::InconsistentSpec(format!("crossing list for unknown edge {e}")));
            };
            let mut seen = BTreeSet::new();
            for rec in list {
                if rec.other == *e {
                    return Err(SpecError::SimplicityViolation(format!("edge {e} crosses itself")));
                }
                if self.graph.edge(&rec.other).is_none() {
                    return Err(SpecError::InconsistentSpec(format!(
                        "edge {e} lists crossing with unknown edge {}",
                        rec.other
                    )));
                }
                if !seen.insert(rec.other.clone()) {
                    return Err(SpecError::SimplicityViolation(format!(
                        "edges {e} and {} cross more than once",
                        rec.other
                    )));
                }
                if self.graph.adjacent_edges(e, &rec.other) {
                    return Err(SpecError::SimplicityViolation(format!(
                        "adjacent edges {e} and {} cross",
                        rec.other
                    )));
                }
                // Mirror record with opposite sign must exist exactly once.
                let mirror: Vec<_> = self.crossings_of(&rec.other).iter().filter(|r| r.other == *e).collect();
                if mirror.len() != 1 || mirror[0].sign != rec.sign.flip() {
                    return Err(SpecError::InconsistentSpec(format!(
                        "mirror record of crossing {e}/{} missing or sign-inconsistent",
                        rec.other
                    )));
                }
            }
        }
        for v in &self.graph.vertices {
            let incident: BTreeSet<EdgeId> =
                self.graph.incident_edges(v).iter().map(|e| e.id.clone()).collect();
            let rot = self.rotations.get(v).cloned().unwrap_or_default();
            let rotset: BTreeSet<EdgeId> = rot.iter().cloned().collect();
            if rot.len() != rotset.len() || rotset != incident {
                return Err(SpecError::InconsistentSpec(format!(
                    "rotation at {v} does not list its incident edges exactly once"
                )));
            }
        }
        for v in self.rotations.keys() {
            if !self.graph.has_vertex(v) {
                return Err(SpecError::InconsistentSpec(format!("rotation for unknown vertex {v}")));
            }
        }
        let Some(oe) = self.graph.edge(&self.outer.edge) else {
            return Err(SpecError::InconsistentSpec(format!("outer dart on unknown edge {}", self.outer.edge)));
        };
        let nsegs = self.crossings_of(&oe.id).len() + 1;
        if self.outer.segment >= nsegs {
            return Err(SpecError::InconsistentSpec(format!(
                "outer dart segment {} out of range for edge {}",
                self.outer.segment, self.outer.edge
            )));
        }
        Ok(())
    }
}
