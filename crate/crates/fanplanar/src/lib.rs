//! Combinatorial toolkit for fan-planar graph drawings.
//!
//! Drawings are stored as sphere maps: a graph, per-edge ordered crossing
//! lists with signs, a rotation system, and a designated outer dart. On top
//! of that representation the crate classifies crossing triples into the
//! forbidden patterns (I), (II), (III), computes the fan-planarity class
//! ladder, finds and flips hearts, builds the witness constructions, audits
//! edge-density bounds, and exhaustively enumerates small drawings as an
//! oracle.

pub mod cells;
pub mod error;
pub mod faces;
pub mod graph;
pub mod map;
pub mod patterns;
pub mod spec;

pub use cells::{subarrangement_cells, CellPartition, CellSide};
pub use faces::{trace_faces, validate_drawing, FaceSet, ValidationReport, Violation};
pub use graph::{Edge, EdgeId, Graph, VertexId};
pub use map::Planarization;
pub use patterns::{
    classify_drawing, classify_triple, detect_valve_doublecrosser, find_heart, heart_context,
    scan_patterns, DrawingClass, Heart, HeartContext, HeartKind, PatternClass, PatternReport,
};
pub use spec::{CrossingRecord, DartAddress, DartDir, DrawingSpec, Sign};
