//! Bounded/unbounded cell test for the sub-arrangement of an edge and two
//! edges crossing it.
//!
//! The drawing restricted to three such edges splits the sphere into exactly
//! two regions. Every face of the full planarization belongs to one region;
//! the region holding the outer face is the unbounded cell. The test merges
//! faces of the full planarization across every segment that does not belong
//! to the three edges.

use std::collections::BTreeSet;

use crate::error::PatternError;
use crate::faces::{trace_faces, FaceSet};
use crate::map::{Dart, Planarization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellSide {
    Bounded,
    Unbounded,
}

/// Partition of the planarization's faces into the two cells of a
/// sub-arrangement, with the cell membership of the probed edge's endpoints.
#[derive(Debug, Clone)]
pub struct CellPartition {
    pub bounded: BTreeSet<usize>,
    pub unbounded: BTreeSet<usize>,
    /// Cells of the probed edge's source and target.
    pub endpoint_cells: [CellSide; 2],
}

impl CellPartition {
    pub fn side_of_face(&self, face: usize) -> CellSide {
        if self.bounded.contains(&face) {
            CellSide::Bounded
        } else {
            CellSide::Unbounded
        }
    }
    pub fn bounded_endpoints(&self) -> usize {
        self.endpoint_cells.iter().filter(|c| **c == CellSide::Bounded).count()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Smallest dart whose origin lies in component `c`; used to pin which face
/// of a floating component opens toward the shared outer face.
fn canonical_dart_of_component(p: &Planarization, comp: &[usize], c: usize) -> Option<Dart> {
    (0..p.dart_count()).find(|&d| comp[p.origin(d)] == c)
}

/// Compute the two cells of the sub-arrangement `{e, f, g}`.
///
/// Preconditions: `f` and `g` share exactly one endpoint, both cross `e`
/// exactly once, and `e` is adjacent to neither.
pub fn subarrangement_cells(
    p: &Planarization,
    e: &str,
    f: &str,
    g: &str,
) -> Result<CellPartition, PatternError> {
    let faces = trace_faces(p);
    subarrangement_cells_with(p, &faces, e, f, g)
}

/// Same as [`subarrangement_cells`] but reusing an already-traced `FaceSet`.
pub fn subarrangement_cells_with(
    p: &Planarization,
    faces: &FaceSet,
    e: &str,
    f: &str,
    g: &str,
) -> Result<CellPartition, PatternError> {
    let ei = p.edge_index(e).ok_or_else(|| PatternError::UnknownEdge(e.to_string()))?;
    let fi = p.edge_index(f).ok_or_else(|| PatternError::UnknownEdge(f.to_string()))?;
    let gi = p.edge_index(g).ok_or_else(|| PatternError::UnknownEdge(g.to_string()))?;
    if ei == fi || ei == gi || fi == gi {
        return Err(PatternError::PreconditionViolated("edges must be distinct".into()));
    }
    if p.graph.shared_endpoint(f, g).is_none() {
        return Err(PatternError::PreconditionViolated(format!(
            "edges {f} and {g} must share exactly one endpoint"
        )));
    }
    for x in [f, g] {
        if p.crossing_node(e, x).is_none() {
            return Err(PatternError::NotCrossing { e: e.to_string(), f: x.to_string() });
        }
    }
    if p.graph.adjacent_edges(e, f) || p.graph.adjacent_edges(e, g) {
        return Err(PatternError::PreconditionViolated(format!(
            "edge {e} must not be adjacent to {f} or {g}"
        )));
    }

    let keep = [ei, fi, gi];
    let mut uf = UnionFind::new(faces.len());
    for s in 0..p.seg_count() {
        if !keep.contains(&p.seg(s).edge) {
            uf.union(faces.face_of[2 * s], faces.face_of[2 * s + 1]);
        }
    }
    // Floating components open toward the shared outer face.
    let comp = p.components();
    let root_comp = comp[p.origin(p.outer_dart())];
    let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..ncomp {
        if c != root_comp {
            if let Some(d) = canonical_dart_of_component(p, &comp, c) {
                uf.union(faces.face_of[d], faces.outer_face);
            }
        }
    }

    let mut classes = BTreeSet::new();
    for fix in 0..faces.len() {
        classes.insert(uf.find(fix));
    }
    if classes.len() != 2 {
        return Err(PatternError::PreconditionViolated(format!(
            "sub-arrangement of {e},{f},{g} produced {} cells instead of 2",
            classes.len()
        )));
    }
    let outer_class = uf.find(faces.outer_face);

    let mut bounded = BTreeSet::new();
    let mut unbounded = BTreeSet::new();
    for fix in 0..faces.len() {
        if uf.find(fix) == outer_class {
            unbounded.insert(fix);
        } else {
            bounded.insert(fix);
        }
    }

    let edge = p.graph.edge(e).unwrap().clone();
    let mut endpoint_cells = [CellSide::Unbounded; 2];
    for (k, v) in [&edge.source, &edge.target].into_iter().enumerate() {
        let n = p.node_of_vertex(v).unwrap();
        let mut sides = BTreeSet::new();
        for &d in p.rotation(n) {
            sides.insert(uf.find(faces.face_of[d]));
        }
        if sides.len() != 1 {
            return Err(PatternError::PreconditionViolated(format!(
                "endpoint {v} of {e} is not strictly inside one cell"
            )));
        }
        let class = sides.into_iter().next().unwrap();
        endpoint_cells[k] = if class == outer_class { CellSide::Unbounded } else { CellSide::Bounded };
    }

    Ok(CellPartition { bounded, unbounded, endpoint_cells })
}
