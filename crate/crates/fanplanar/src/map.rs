//! The planarization: a sphere map with real vertices, crossing dummies,
//! segments and darts, plus a designated outer dart.
//!
//! Segments are the subdivision pieces of edges; each segment carries two
//! darts, `2*seg` traversing it along the edge's source-to-target orientation
//! and `2*seg+1` against it. Rotations list outgoing darts per node. The face
//! to the left of a dart is the one traced through it.

use std::collections::BTreeMap;

use crate::error::SpecError;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::spec::{CrossingRecord, DartAddress, DartDir, DrawingSpec, Sign};

pub type NodeIx = usize;
pub type SegIx = usize;
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Real(VertexId),
    /// Crossing of `edges.0` (at its `positions.0`-th crossing) with
    /// `edges.1` (at its `positions.1`-th crossing); `edges.0 < edges.1`
    /// by edge index.
    Dummy { edges: (usize, usize), positions: (usize, usize) },
}

#[derive(Debug, Clone)]
pub struct Seg {
    pub edge: usize,
    pub pos: usize,
    pub from: NodeIx,
    pub to: NodeIx,
}

#[derive(Debug, Clone)]
pub struct Planarization {
    pub graph: Graph,
    nodes: Vec<Node>,
    node_of_vertex: BTreeMap<VertexId, NodeIx>,
    edge_ix: BTreeMap<EdgeId, usize>,
    /// Per edge: dummy nodes in crossing order from source to target.
    chains: Vec<Vec<NodeIx>>,
    /// Per edge: segment indices, `chains[e].len() + 1` of them.
    edge_segs: Vec<Vec<SegIx>>,
    segs: Vec<Seg>,
    rotations: Vec<Vec<Dart>>,
    rot_pos: Vec<(NodeIx, usize)>,
    outer_dart: Dart,
}

impl Planarization {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
    pub fn seg_count(&self) -> usize {
        self.segs.len()
    }
    pub fn dart_count(&self) -> usize {
        2 * self.segs.len()
    }
    pub fn node(&self, n: NodeIx) -> &Node {
        &self.nodes[n]
    }
    pub fn seg(&self, s: SegIx) -> &Seg {
        &self.segs[s]
    }
    pub fn outer_dart(&self) -> Dart {
        self.outer_dart
    }
    pub fn rotation(&self, n: NodeIx) -> &[Dart] {
        &self.rotations[n]
    }
    pub fn edge_index(&self, e: &str) -> Option<usize> {
        self.edge_ix.get(e).copied()
    }
    pub fn edge_id(&self, ix: usize) -> &EdgeId {
        &self.graph.edges[ix].id
    }
    pub fn node_of_vertex(&self, v: &str) -> Option<NodeIx> {
        self.node_of_vertex.get(v).copied()
    }
    /// Dummy nodes along edge `ix`, in order from its source.
    pub fn chain(&self, ix: usize) -> &[NodeIx] {
        &self.chains[ix]
    }
    /// Segments of edge `ix`, in order from its source.
    pub fn segs_of(&self, ix: usize) -> &[SegIx] {
        &self.edge_segs[ix]
    }

    pub fn twin(d: Dart) -> Dart {
        d ^ 1
    }
    pub fn seg_of_dart(d: Dart) -> SegIx {
        d / 2
    }
    pub fn is_forward(d: Dart) -> bool {
        d % 2 == 0
    }
    pub fn origin(&self, d: Dart) -> NodeIx {
        let s = &self.segs[d / 2];
        if Self::is_forward(d) {
            s.from
        } else {
            s.to
        }
    }
    pub fn head(&self, d: Dart) -> NodeIx {
        self.origin(Self::twin(d))
    }
    pub fn rot_next(&self, d: Dart) -> Dart {
        let (n, i) = self.rot_pos[d];
        let rot = &self.rotations[n];
        rot[(i + 1) % rot.len()]
    }
    pub fn rot_prev(&self, d: Dart) -> Dart {
        let (n, i) = self.rot_pos[d];
        let rot = &self.rotations[n];
        rot[(i + rot.len() - 1) % rot.len()]
    }
    /// Next dart along the face on the left: rotation successor of the
    /// reversed dart.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_next(Self::twin(d))
    }

    pub fn dart_address(&self, d: Dart) -> DartAddress {
        let s = &self.segs[d / 2];
        DartAddress {
            edge: self.graph.edges[s.edge].id.clone(),
            segment: s.pos,
            dir: if Self::is_forward(d) { DartDir::Forward } else { DartDir::Backward },
        }
    }

    pub fn dart_at(&self, addr: &DartAddress) -> Option<Dart> {
        let e = self.edge_index(&addr.edge)?;
        let seg = *self.edge_segs[e].get(addr.segment)?;
        Some(match addr.dir {
            DartDir::Forward => 2 * seg,
            DartDir::Backward => 2 * seg + 1,
        })
    }

    /// Vertex id of a real node.
    pub fn vertex_of_node(&self, n: NodeIx) -> Option<&VertexId> {
        match &self.nodes[n] {
            Node::Real(v) => Some(v),
            Node::Dummy { .. } => None,
        }
    }

    /// The dummy where edges `a` and `b` cross, if they do.
    pub fn crossing_node(&self, a: &str, b: &str) -> Option<NodeIx> {
        let ia = self.edge_index(a)?;
        let ib = self.edge_index(b)?;
        self.chains[ia].iter().copied().find(|&n| match &self.nodes[n] {
            Node::Dummy { edges, .. } => edges.0 == ib || edges.1 == ib,
            _ => false,
        })
    }

    /// Build a planarization realizing exactly the crossings, orders, signs
    /// and rotations of `spec`.
    pub fn build(spec: &DrawingSpec) -> Result<Planarization, SpecError> {
        spec.check_structure()?;
        let graph = spec.graph.clone();
        let mut nodes: Vec<Node> = Vec::new();
        let mut node_of_vertex = BTreeMap::new();
        for v in &graph.vertices {
            node_of_vertex.insert(v.clone(), nodes.len());
            nodes.push(Node::Real(v.clone()));
        }
        let edge_ix: BTreeMap<EdgeId, usize> =
            graph.edges.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();

        // Dummy nodes, keyed by unordered edge-index pair.
        let mut dummy_of_pair: BTreeMap<(usize, usize), NodeIx> = BTreeMap::new();
        let mut chains: Vec<Vec<NodeIx>> = vec![Vec::new(); graph.edges.len()];
        for (ei, e) in graph.edges.iter().enumerate() {
            for (pos, rec) in spec.crossings_of(&e.id).iter().enumerate() {
                let fi = edge_ix[&rec.other];
                let key = (ei.min(fi), ei.max(fi));
                let n = *dummy_of_pair.entry(key).or_insert_with(|| {
                    nodes.push(Node::Dummy { edges: key, positions: (0, 0) });
                    nodes.len() - 1
                });
                if let Node::Dummy { edges, positions } = &mut nodes[n] {
                    if edges.0 == ei {
                        positions.0 = pos;
                    } else {
                        positions.1 = pos;
                    }
                }
                chains[ei].push(n);
            }
        }

        // Segments.
        let mut segs: Vec<Seg> = Vec::new();
        let mut edge_segs: Vec<Vec<SegIx>> = vec![Vec::new(); graph.edges.len()];
        for (ei, e) in graph.edges.iter().enumerate() {
            let mut stations = vec![node_of_vertex[&e.source]];
            stations.extend(chains[ei].iter().copied());
            stations.push(node_of_vertex[&e.target]);
            for (pos, w) in stations.windows(2).enumerate() {
                edge_segs[ei].push(segs.len());
                segs.push(Seg { edge: ei, pos, from: w[0], to: w[1] });
            }
        }

        // Rotations at real vertices.
        let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); nodes.len()];
        for (v, order) in &spec.rotations {
            let n = node_of_vertex[v];
            for eid in order {
                let ei = edge_ix[eid];
                let e = &graph.edges[ei];
                let d = if e.source == *v {
                    2 * edge_segs[ei][0]
                } else {
                    2 * *edge_segs[ei].last().unwrap() + 1
                };
                rotations[n].push(d);
            }
        }
        // Rotations at dummies, from the sign convention.
        for (&(a, b), &n) in &dummy_of_pair {
            let (pa, pb) = match &nodes[n] {
                Node::Dummy { positions, .. } => *positions,
                _ => unreachable!(),
            };
            let sign = spec.crossings_of(&graph.edges[a].id)[pa].sign;
            let a_in = 2 * edge_segs[a][pa] + 1;
            let a_out = 2 * edge_segs[a][pa + 1];
            let b_in = 2 * edge_segs[b][pb] + 1;
            let b_out = 2 * edge_segs[b][pb + 1];
            rotations[n] = match sign {
                Sign::Plus => vec![a_in, b_in, a_out, b_out],
                Sign::Minus => vec![a_in, b_out, a_out, b_in],
            };
        }

        let mut rot_pos = vec![(usize::MAX, usize::MAX); 2 * segs.len()];
        for (n, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                rot_pos[d] = (n, i);
            }
        }
        debug_assert!(rot_pos.iter().all(|&(n, _)| n != usize::MAX));

        let mut p = Planarization {
            graph,
            nodes,
            node_of_vertex,
            edge_ix,
            chains,
            edge_segs,
            segs,
            rotations,
            rot_pos,
            outer_dart: 0,
        };
        p.outer_dart = p
            .dart_at(&spec.outer)
            .ok_or_else(|| SpecError::InconsistentSpec("outer dart does not resolve".into()))?;
        Ok(p)
    }

    /// Ordered crossing records of edge `e` from its source, with signs
    /// recovered from the dummy rotations.
    pub fn crossing_sequence(&self, e: &str) -> Result<Vec<CrossingRecord>, crate::error::PatternError> {
        let ei = self
            .edge_index(e)
            .ok_or_else(|| crate::error::PatternError::UnknownEdge(e.to_string()))?;
        Ok(self.crossing_records(ei))
    }

    pub(crate) fn crossing_records(&self, ei: usize) -> Vec<CrossingRecord> {
        self.chains[ei]
            .iter()
            .enumerate()
            .map(|(pos, &n)| {
                let (other, sign) = self.record_at_dummy(ei, pos, n);
                CrossingRecord { other: self.graph.edges[other].id.clone(), sign }
            })
            .collect()
    }

    fn record_at_dummy(&self, ei: usize, pos: usize, n: NodeIx) -> (usize, Sign) {
        let Node::Dummy { edges, positions } = &self.nodes[n] else { unreachable!() };
        let (fi, fpos) = if edges.0 == ei { (edges.1, positions.1) } else { (edges.0, positions.0) };
        let e_in = 2 * self.edge_segs[ei][pos] + 1;
        let f_in = 2 * self.edge_segs[fi][fpos] + 1;
        // Rotation (e_in, f_in, e_out, f_out) encodes sign +1 for e.
        let sign = if self.rot_next(e_in) == f_in { Sign::Plus } else { Sign::Minus };
        (fi, sign)
    }

    /// Re-extract a drawing description. Rotations are normalized to start at
    /// the lexicographically smallest incident edge id.
    pub fn to_spec(&self) -> DrawingSpec {
        let mut crossings = BTreeMap::new();
        for (ei, e) in self.graph.edges.iter().enumerate() {
            let recs = self.crossing_records(ei);
            if !recs.is_empty() {
                crossings.insert(e.id.clone(), recs);
            }
        }
        let mut rotations = BTreeMap::new();
        for v in &self.graph.vertices {
            let n = self.node_of_vertex[v];
            let edge_order: Vec<EdgeId> = self.rotations[n]
                .iter()
                .map(|&d| self.graph.edges[self.segs[d / 2].edge].id.clone())
                .collect();
            rotations.insert(v.clone(), normalize_cycle(edge_order));
        }
        DrawingSpec {
            graph: self.graph.clone(),
            crossings,
            rotations,
            outer: self.dart_address(self.outer_dart),
        }
    }

    /// Component index per node, connected via segments. Isolated vertices
    /// form their own components.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.nodes.len()];
        let mut next = 0;
        for start in 0..self.nodes.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut stack = vec![start];
            while let Some(n) = stack.pop() {
                for &d in &self.rotations[n] {
                    let m = self.head(d);
                    if comp[m] == usize::MAX {
                        comp[m] = next;
                        stack.push(m);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

/// Rotate a cyclic list so its smallest element comes first.
pub fn normalize_cycle<T: Ord + Clone>(items: Vec<T>) -> Vec<T> {
    if items.is_empty() {
        return items;
    }
    let min_pos = items
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .unwrap();
    let mut out = Vec::with_capacity(items.len());
    out.extend_from_slice(&items[min_pos..]);
    out.extend_from_slice(&items[..min_pos]);
    out
}
