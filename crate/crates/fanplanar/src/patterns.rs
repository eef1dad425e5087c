//! Crossing-pattern classification, the fan-planarity class ladder, hearts
//! and their valve structure.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cells::{subarrangement_cells_with, CellSide};
use crate::error::PatternError;
use crate::faces::{trace_faces, FaceSet};
use crate::graph::{EdgeId, VertexId};
use crate::map::{NodeIx, Planarization};

/// Classification of a triple `(e; f, g)` where `f` and `g` cross `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternClass {
    /// Legal fan crossing: `f`, `g` adjacent, both endpoints of `e` in the
    /// unbounded cell.
    Fan,
    /// `f` and `g` are non-adjacent.
    PatternI,
    /// Exactly one endpoint of `e` lies in the bounded cell.
    PatternII,
    /// Both endpoints of `e` lie in the bounded cell.
    PatternIII,
}

/// Verdict ladder for a whole drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DrawingClass {
    General,
    AdjacencyCrossing,
    WeaklyFanPlanar,
    StronglyFanPlanar,
}

/// One classified triple; `f` crosses `e` before `g` does, counting from
/// `e`'s source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub e: EdgeId,
    pub f: EdgeId,
    pub g: EdgeId,
}

/// Full pattern scan of a drawing.
#[derive(Debug, Clone, Serialize)]
pub struct PatternReport {
    pub fan: Vec<Triple>,
    pub pattern_i: Vec<Triple>,
    pub pattern_ii: Vec<Triple>,
    pub pattern_iii: Vec<Triple>,
    /// Per crossed edge, the vertices shared by all of its crossers.
    pub anchors: BTreeMap<EdgeId, Vec<VertexId>>,
}

impl PatternReport {
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (self.fan.len(), self.pattern_i.len(), self.pattern_ii.len(), self.pattern_iii.len())
    }
    pub fn class(&self) -> DrawingClass {
        if !self.pattern_i.is_empty() {
            DrawingClass::General
        } else if !self.pattern_ii.is_empty() {
            DrawingClass::AdjacencyCrossing
        } else if !self.pattern_iii.is_empty() {
            DrawingClass::WeaklyFanPlanar
        } else {
            DrawingClass::StronglyFanPlanar
        }
    }
}

/// Classify one triple. `f` and `g` must be distinct edges crossing `e`.
pub fn classify_triple(
    p: &Planarization,
    e: &str,
    f: &str,
    g: &str,
) -> Result<PatternClass, PatternError> {
    let faces = trace_faces(p);
    classify_triple_with(p, &faces, e, f, g)
}

pub fn classify_triple_with(
    p: &Planarization,
    faces: &FaceSet,
    e: &str,
    f: &str,
    g: &str,
) -> Result<PatternClass, PatternError> {
    if f == g {
        return Err(PatternError::PreconditionViolated("f and g must differ".into()));
    }
    for x in [f, g] {
        if p.edge_index(x).is_none() {
            return Err(PatternError::UnknownEdge(x.to_string()));
        }
        if p.crossing_node(e, x).is_none() {
            return Err(PatternError::NotCrossing { e: e.to_string(), f: x.to_string() });
        }
    }
    if !p.graph.adjacent_edges(f, g) {
        return Ok(PatternClass::PatternI);
    }
    let cells = subarrangement_cells_with(p, faces, e, f, g)?;
    Ok(match cells.bounded_endpoints() {
        0 => PatternClass::Fan,
        1 => PatternClass::PatternII,
        2 => PatternClass::PatternIII,
        _ => unreachable!(),
    })
}

/// Classify every triple `(e; f, g)` with `f`, `g` crossing `e`. Triples are
/// emitted in edge-id order, then by crossing order along `e`.
pub fn scan_patterns(p: &Planarization) -> Result<PatternReport, PatternError> {
    let faces = trace_faces(p);
    let mut report = PatternReport {
        fan: Vec::new(),
        pattern_i: Vec::new(),
        pattern_ii: Vec::new(),
        pattern_iii: Vec::new(),
        anchors: BTreeMap::new(),
    };
    let mut edge_ids: Vec<&EdgeId> = p.graph.edges.iter().map(|e| &e.id).collect();
    edge_ids.sort();
    for e in edge_ids {
        let crossers: Vec<EdgeId> = p
            .crossing_sequence(e)
            .expect("edge exists")
            .into_iter()
            .map(|r| r.other)
            .collect();
        if !crossers.is_empty() {
            let edge = p.graph.edge(e).unwrap();
            let mut common: BTreeSet<VertexId> = BTreeSet::new();
            for (i, c) in crossers.iter().enumerate() {
                let ce = p.graph.edge(c).unwrap();
                let ends: BTreeSet<VertexId> = [ce.source.clone(), ce.target.clone()].into();
                if i == 0 {
                    common = ends;
                } else {
                    common = common.intersection(&ends).cloned().collect();
                }
            }
            report.anchors.insert(edge.id.clone(), common.into_iter().collect());
        }
        for i in 0..crossers.len() {
            for j in i + 1..crossers.len() {
                let class = classify_triple_with(p, &faces, e, &crossers[i], &crossers[j])?;
                let t = Triple { e: e.clone(), f: crossers[i].clone(), g: crossers[j].clone() };
                match class {
                    PatternClass::Fan => report.fan.push(t),
                    PatternClass::PatternI => report.pattern_i.push(t),
                    PatternClass::PatternII => report.pattern_ii.push(t),
                    PatternClass::PatternIII => report.pattern_iii.push(t),
                }
            }
        }
    }
    Ok(report)
}

/// Ladder verdict for the drawing.
pub fn classify_drawing(p: &Planarization) -> Result<DrawingClass, PatternError> {
    Ok(scan_patterns(p)?.class())
}

/// A Pattern (III) triple whose middle segment of `e` (between the two
/// crossings) is crossing-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Heart {
    pub e: EdgeId,
    pub e_left: EdgeId,
    pub e_right: EdgeId,
    /// Shared endpoint of the two valve-defining edges.
    pub u: VertexId,
    /// Endpoint of `e` from which the crossing with `e_left` comes first.
    pub w: VertexId,
    pub w_prime: VertexId,
    /// Dummy node of the crossing `e` with `e_left`.
    pub x_left: NodeIx,
    /// Dummy node of the crossing `e` with `e_right`.
    pub x_right: NodeIx,
}

/// Crossing order of `e` as seen from endpoint `w` (which may be either its
/// source or target).
fn crossers_from(p: &Planarization, e: &str, w: &str) -> Result<Vec<EdgeId>, PatternError> {
    let edge = p
        .graph
        .edge(e)
        .ok_or_else(|| PatternError::UnknownEdge(e.to_string()))?;
    let mut list: Vec<EdgeId> = p.crossing_sequence(e)?.into_iter().map(|r| r.other).collect();
    if edge.target == w {
        list.reverse();
    } else if edge.source != w {
        return Err(PatternError::PreconditionViolated(format!("{w} is not an endpoint of {e}")));
    }
    Ok(list)
}

/// Re-verify all structural invariants of a heart.
pub fn verify_heart(p: &Planarization, h: &Heart) -> Result<(), PatternError> {
    let edge = p
        .graph
        .edge(&h.e)
        .ok_or_else(|| PatternError::UnknownEdge(h.e.clone()))?;
    if !(edge.source == h.w && edge.target == h.w_prime
        || edge.source == h.w_prime && edge.target == h.w)
    {
        return Err(PatternError::InvalidHeart(format!("w/w' are not the endpoints of {}", h.e)));
    }
    match p.graph.shared_endpoint(&h.e_left, &h.e_right) {
        Some(u) if u == h.u => {}
        _ => {
            return Err(PatternError::InvalidHeart(format!(
                "{} and {} do not share endpoint {}",
                h.e_left, h.e_right, h.u
            )))
        }
    }
    let order = crossers_from(p, &h.e, &h.w)?;
    let pos_l = order.iter().position(|x| *x == h.e_left);
    let pos_r = order.iter().position(|x| *x == h.e_right);
    match (pos_l, pos_r) {
        (Some(a), Some(b)) if b == a + 1 => {}
        (Some(_), Some(_)) => {
            return Err(PatternError::InvalidHeart(
                "middle segment of e carries another crossing".into(),
            ))
        }
        _ => {
            return Err(PatternError::InvalidHeart("valve edges do not cross e".into()));
        }
    }
    if p.crossing_node(&h.e, &h.e_left) != Some(h.x_left)
        || p.crossing_node(&h.e, &h.e_right) != Some(h.x_right)
    {
        return Err(PatternError::InvalidHeart("crossing dummies do not match".into()));
    }
    let class = classify_triple(p, &h.e, &h.e_left, &h.e_right)?;
    if class != PatternClass::PatternIII {
        return Err(PatternError::InvalidHeart(format!(
            "triple classifies as {class:?}, not Pattern (III)"
        )));
    }
    Ok(())
}

/// Find a heart per the constructive argument: scan edges in ascending id
/// order; along each edge, scan consecutive crosser pairs from the source;
/// return the first pair forming Pattern (III).
///
/// Requires a drawing without Patterns (I) and (II). Returns `None` exactly
/// when the drawing has no Pattern (III).
pub fn find_heart(p: &Planarization) -> Result<Option<Heart>, PatternError> {
    let report = scan_patterns(p)?;
    if !report.pattern_i.is_empty() || !report.pattern_ii.is_empty() {
        return Err(PatternError::PreconditionViolated(
            "drawing contains Pattern (I) or (II)".into(),
        ));
    }
    if report.pattern_iii.is_empty() {
        return Ok(None);
    }
    let faces = trace_faces(p);
    let mut edge_ids: Vec<&EdgeId> = p.graph.edges.iter().map(|e| &e.id).collect();
    edge_ids.sort();
    for e in edge_ids {
        let edge = p.graph.edge(e).unwrap();
        let crossers: Vec<EdgeId> =
            p.crossing_sequence(e).unwrap().into_iter().map(|r| r.other).collect();
        for pair in crossers.windows(2) {
            let class = classify_triple_with(p, &faces, e, &pair[0], &pair[1])?;
            if class == PatternClass::PatternIII {
                let u = p.graph.shared_endpoint(&pair[0], &pair[1]).expect("III implies adjacency");
                let heart = Heart {
                    e: e.clone(),
                    e_left: pair[0].clone(),
                    e_right: pair[1].clone(),
                    u,
                    w: edge.source.clone(),
                    w_prime: edge.target.clone(),
                    x_left: p.crossing_node(e, &pair[0]).unwrap(),
                    x_right: p.crossing_node(e, &pair[1]).unwrap(),
                };
                return Ok(Some(heart));
            }
        }
    }
    // A drawing without (I)/(II) but with a (III) always has a consecutive
    // pair forming (III) along the same edge.
    Err(PatternError::PreconditionViolated(
        "Pattern (III) present but no consecutive crosser pair forms one".into(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HeartKind {
    Single,
    Double,
}

/// Valve and cross-valve structure of a heart.
#[derive(Debug, Clone, Serialize)]
pub struct HeartContext {
    /// Left valve, ordered by crossing position along `e` from `w`;
    /// its last element is `e_left`.
    pub left_valve: Vec<EdgeId>,
    /// Right valve, same order; its first element is `e_right`.
    pub right_valve: Vec<EdgeId>,
    /// Edges crossing both valve-defining edges that do not form (III) with
    /// `e_right` and `e`, ordered along `e_left` from `u`. Contains `e`.
    pub top: Vec<EdgeId>,
    /// The remaining double-crossers, same order.
    pub bottom: Vec<EdgeId>,
    pub kind: HeartKind,
    /// The partner heart `(e_right; e, e')` of a double heart, when its
    /// structural invariants re-verify.
    pub partner: Option<Heart>,
}

/// Edges other than `e` crossing both valve-defining edges, sorted by id.
pub fn detect_valve_doublecrosser(
    p: &Planarization,
    h: &Heart,
) -> Result<Vec<EdgeId>, PatternError> {
    verify_heart(p, h)?;
    Ok(double_crossers(p, h))
}

fn double_crossers(p: &Planarization, h: &Heart) -> Vec<EdgeId> {
    let left: BTreeSet<EdgeId> =
        p.crossing_sequence(&h.e_left).unwrap().into_iter().map(|r| r.other).collect();
    let right: BTreeSet<EdgeId> =
        p.crossing_sequence(&h.e_right).unwrap().into_iter().map(|r| r.other).collect();
    left.intersection(&right).filter(|x| **x != h.e).cloned().collect()
}

/// Analyze a heart into its valves and the Single/Double dichotomy.
pub fn heart_context(p: &Planarization, h: &Heart) -> Result<HeartContext, PatternError> {
    verify_heart(p, h)?;
    let faces = trace_faces(p);

    let crossers = crossers_from(p, &h.e, &h.w)?;
    for c in &crossers {
        let ce = p.graph.edge(c).unwrap();
        if ce.source != h.u && ce.target != h.u {
            return Err(PatternError::InvalidHeart(format!(
                "crosser {c} of {} is not incident to the anchor {}",
                h.e, h.u
            )));
        }
    }
    let mut left_valve = Vec::new();
    let mut right_valve = Vec::new();
    for c in &crossers {
        let in_left = if *c == h.e_right {
            false
        } else if *c == h.e_left {
            true
        } else {
            classify_triple_with(p, &faces, &h.e, c, &h.e_right)? == PatternClass::PatternIII
        };
        if in_left {
            if !right_valve.is_empty() {
                return Err(PatternError::InvalidHeart(
                    "left-valve member crosses e after a right-valve member".into(),
                ));
            }
            left_valve.push(c.clone());
        } else {
            right_valve.push(c.clone());
        }
    }
    if left_valve.last() != Some(&h.e_left) || right_valve.first() != Some(&h.e_right) {
        return Err(PatternError::InvalidHeart(
            "heart edges are not the inner pair of the valve split".into(),
        ));
    }

    // Double-crossers ordered by their crossing position along e_left from u.
    let left_order = crossers_from(p, &h.e_left, &h.u)?;
    let dc = double_crossers(p, h);
    let mut ordered_dc: Vec<EdgeId> =
        left_order.into_iter().filter(|x| dc.contains(x)).collect();
    debug_assert_eq!(ordered_dc.len(), dc.len());

    // Every double-crosser must share an endpoint of e (the paper pins them
    // to one endpoint; either endpoint satisfies the invariant we can check).
    for d in &ordered_dc {
        let de = p.graph.edge(d).unwrap();
        let ok = [&de.source, &de.target]
            .into_iter()
            .any(|v| *v == h.w || *v == h.w_prime);
        if !ok {
            return Err(PatternError::InvalidHeart(format!(
                "double-crosser {d} is not incident to an endpoint of {}",
                h.e
            )));
        }
    }

    let mut top = vec![h.e.clone()];
    let mut bottom = Vec::new();
    for d in ordered_dc.drain(..) {
        let class = classify_triple_with(p, &faces, &h.e_right, &h.e, &d)?;
        if class == PatternClass::PatternIII {
            bottom.push(d);
        } else {
            top.push(d);
        }
    }

    let kind = if bottom.is_empty() { HeartKind::Single } else { HeartKind::Double };
    let partner = if let Some(e_prime) = bottom.last().cloned() {
        build_partner_heart(p, h, &e_prime)
    } else {
        None
    };

    Ok(HeartContext { left_valve, right_valve, top, bottom, kind, partner })
}

/// Try to realize `(e_right; e, e')` as a heart; `None` if its invariants do
/// not hold in this drawing.
fn build_partner_heart(p: &Planarization, h: &Heart, e_prime: &str) -> Option<Heart> {
    let er = p.graph.edge(&h.e_right)?;
    let u_partner = p.graph.shared_endpoint(&h.e, e_prime)?;
    for (w, wp) in [(&er.source, &er.target), (&er.target, &er.source)] {
        let order = crossers_from(p, &h.e_right, w).ok()?;
        let pos_e = order.iter().position(|x| *x == h.e);
        let pos_p = order.iter().position(|x| x == e_prime);
        if let (Some(a), Some(b)) = (pos_e, pos_p) {
            if b == a + 1 {
                let cand = Heart {
                    e: h.e_right.clone(),
                    e_left: h.e.clone(),
                    e_right: e_prime.to_string(),
                    u: u_partner.clone(),
                    w: w.clone(),
                    w_prime: wp.clone(),
                    x_left: p.crossing_node(&h.e_right, &h.e)?,
                    x_right: p.crossing_node(&h.e_right, e_prime)?,
                };
                if verify_heart(p, &cand).is_ok() {
                    return Some(cand);
                }
            }
        }
    }
    None
}
