//! Face tracing and drawing validation.

use serde::Serialize;

use crate::map::{Dart, Node, Planarization};

/// The faces of a planarization as dart cycles.
#[derive(Debug, Clone)]
pub struct FaceSet {
    /// Dart cycles; each dart appears in exactly one cycle.
    pub faces: Vec<Vec<Dart>>,
    /// Face index per dart.
    pub face_of: Vec<usize>,
    /// Face containing the outer dart.
    pub outer_face: usize,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Trace all faces: repeatedly follow `face_next` from an unvisited dart.
/// Cycles are enumerated in order of their smallest dart, each cycle starting
/// at its smallest dart, so output is deterministic.
pub fn trace_faces(p: &Planarization) -> FaceSet {
    let nd = p.dart_count();
    let mut face_of = vec![usize::MAX; nd];
    let mut faces = Vec::new();
    for start in 0..nd {
        if face_of[start] != usize::MAX {
            continue;
        }
        let ix = faces.len();
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = ix;
            cycle.push(d);
            d = p.face_next(d);
            if d == start {
                break;
            }
        }
        faces.push(cycle);
    }
    let outer_face = if nd == 0 { 0 } else { face_of[p.outer_dart()] };
    FaceSet { faces, face_of, outer_face }
}

/// A single admissibility violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    SimplicityViolation { detail: String },
    DummyNonAlternation { detail: String },
    /// Face tracing does not satisfy V - E + F = 2 on some component, so the
    /// rotation data is not realizable in the plane.
    GenusFailure { component: usize, vertices: usize, segments: usize, faces: usize },
}

/// Outcome of `validate_drawing`. Empty report means the drawing is
/// admissible for all other operations.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check simplicity, dummy alternation and plane realizability (per-component
/// Euler counts; components share the outer face by convention).
pub fn validate_drawing(p: &Planarization) -> ValidationReport {
    let mut violations = Vec::new();

    for n in 0..p.node_count() {
        if let Node::Dummy { edges, .. } = p.node(n) {
            let rot = p.rotation(n);
            if rot.len() != 4 {
                violations.push(Violation::DummyNonAlternation {
                    detail: format!("dummy node {n} has degree {}", rot.len()),
                });
                continue;
            }
            let owner = |d: Dart| p.seg(d / 2).edge;
            let es: Vec<usize> = rot.iter().map(|&d| owner(d)).collect();
            let alternates = es[0] == es[2] && es[1] == es[3] && es[0] != es[1];
            let involved = es[0] == edges.0 && es[1] == edges.1 || es[0] == edges.1 && es[1] == edges.0;
            if !alternates || !involved {
                violations.push(Violation::DummyNonAlternation {
                    detail: format!("dummy node {n} rotation does not alternate its two edges"),
                });
            }
        }
    }

    // Simplicity is enforced structurally at build time; re-check the chains
    // anyway so hand-built planarizations cannot bypass it.
    for ei in 0..p.graph.edges.len() {
        let recs = p.crossing_records(ei);
        let mut seen = std::collections::BTreeSet::new();
        for r in &recs {
            if !seen.insert(r.other.clone()) {
                violations.push(Violation::SimplicityViolation {
                    detail: format!("edges {} and {} cross more than once", p.edge_id(ei), r.other),
                });
            }
            if p.graph.adjacent_edges(p.edge_id(ei), &r.other) {
                violations.push(Violation::SimplicityViolation {
                    detail: format!("adjacent edges {} and {} cross", p.edge_id(ei), r.other),
                });
            }
        }
    }

    let faces = trace_faces(p);
    let comp = p.components();
    let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
    let mut verts = vec![0usize; ncomp];
    for n in 0..p.node_count() {
        verts[comp[n]] += 1;
    }
    let mut segs = vec![0usize; ncomp];
    for s in 0..p.seg_count() {
        segs[comp[p.seg(s).from]] += 1;
    }
    let mut fcount = vec![0usize; ncomp];
    for cycle in &faces.faces {
        fcount[comp[p.origin(cycle[0])]] += 1;
    }
    for c in 0..ncomp {
        if segs[c] == 0 {
            // Isolated vertex: trivially realizable, floats in the outer face.
            continue;
        }
        if verts[c] + fcount[c] != segs[c] + 2 {
            violations.push(Violation::GenusFailure {
                component: c,
                vertices: verts[c],
                segments: segs[c],
                faces: fcount[c],
            });
        }
    }

    ValidationReport { violations }
}
