//! Abstract simple graphs with string ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::SpecError;

/// Vertex identifier. String form is canonical; integer ids in input files are
/// converted to their decimal string.
pub type VertexId = String;
/// Edge identifier.
pub type EdgeId = String;

/// An undirected simple graph. Edges carry a source/target orientation which
/// is used to anchor crossing orders and signs, not to direct the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub source: VertexId,
    pub target: VertexId,
}

impl Graph {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self, SpecError> {
        let g = Graph { vertices, edges };
        g.check()?;
        Ok(g)
    }

    /// Structural invariants: unique ids, endpoints resolve, no loops, no
    /// parallel edges.
    pub fn check(&self) -> Result<(), SpecError> {
        let mut vset = BTreeSet::new();
        for v in &self.vertices {
            if !vset.insert(v.clone()) {
                return Err(SpecError::InconsistentSpec(format!("duplicate vertex id {v}")));
            }
        }
        let mut eset = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            if !eset.insert(e.id.clone()) {
                return Err(SpecError::InconsistentSpec(format!("duplicate edge id {}", e.id)));
            }
            if !vset.contains(&e.source) || !vset.contains(&e.target) {
                return Err(SpecError::InconsistentSpec(format!(
                    "edge {} has dangling endpoint",
                    e.id
                )));
            }
            if e.source == e.target {
                return Err(SpecError::InconsistentSpec(format!("edge {} is a self-loop", e.id)));
            }
            let key = if e.source < e.target {
                (e.source.clone(), e.target.clone())
            } else {
                (e.target.clone(), e.source.clone())
            };
            if !pairs.insert(key) {
                return Err(SpecError::InconsistentSpec(format!(
                    "edge {} duplicates an existing vertex pair",
                    e.id
                )));
            }
        }
        Ok(())
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| x == v)
    }

    /// Edges incident to `v`, in declaration order.
    pub fn incident_edges(&self, v: &str) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.source == v || e.target == v).collect()
    }

    /// The endpoint shared by two edges, if there is exactly one.
    pub fn shared_endpoint(&self, a: &str, b: &str) -> Option<VertexId> {
        let ea = self.edge(a)?;
        let eb = self.edge(b)?;
        let sa: BTreeSet<&VertexId> = [&ea.source, &ea.target].into_iter().collect();
        let sb: BTreeSet<&VertexId> = [&eb.source, &eb.target].into_iter().collect();
        let mut inter = sa.intersection(&sb);
        match (inter.next(), inter.next()) {
            (Some(v), None) => Some((*v).clone()),
            _ => None,
        }
    }

    /// True if the two edges share at least one endpoint.
    pub fn adjacent_edges(&self, a: &str, b: &str) -> bool {
        self.shared_endpoint(a, b).is_some()
    }

    /// Two-colorability of the underlying graph.
    pub fn is_bipartite(&self) -> bool {
        let mut color: BTreeMap<&str, bool> = BTreeMap::new();
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(&e.source).or_default().push(&e.target);
            adj.entry(&e.target).or_default().push(&e.source);
        }
        for v in &self.vertices {
            if color.contains_key(v.as_str()) {
                continue;
            }
            color.insert(v, false);
            let mut queue = VecDeque::from([v.as_str()]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u];
                for w in adj.get(u).cloned().unwrap_or_default() {
                    match color.get(w) {
                        None => {
                            color.insert(w, !cu);
                            queue.push_back(w);
                        }
                        Some(cw) if *cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}
