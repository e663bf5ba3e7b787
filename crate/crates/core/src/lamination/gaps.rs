use serde::{Deserialize, Serialize};

use super::Lamination;
use crate::circle::{Chord, CirclePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcStatus {
    /// Adjacent boundary chords meet at a point.
    Degenerate,
    /// An open circle arc that deeper leaves may subdivide.
    Frontier,
}

/// A counterclockwise boundary arc of a face, from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapArc {
    pub start: CirclePoint,
    pub end: CirclePoint,
    pub status: ArcStatus,
}

/// A face of the disk cut along the leaves. The boundary alternates between
/// `chords[i]` and `arcs[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    pub chords: Vec<Chord>,
    pub arcs: Vec<GapArc>,
}

impl Gap {
    pub fn frontier_arcs(&self) -> impl Iterator<Item = &GapArc> {
        self.arcs.iter().filter(|a| a.status == ArcStatus::Frontier)
    }

    pub fn is_ideal_polygon(&self) -> bool {
        self.arcs.iter().all(|a| a.status == ArcStatus::Degenerate)
    }

    pub fn is_lune(&self) -> bool {
        self.chords.len() == 1 && self.arcs.len() == 1 && self.arcs[0].status == ArcStatus::Frontier
    }
}

fn arc(start: &CirclePoint, end: &CirclePoint) -> GapArc {
    let status = if start == end { ArcStatus::Degenerate } else { ArcStatus::Frontier };
    GapArc { start: start.clone(), end: end.clone(), status }
}

/// Faces of the subdivision: one for the inner side of each leaf (bounded by
/// the leaf and its maximal nested leaves) and one outer face containing the
/// cut point of the linear order.
pub fn gaps(lam: &Lamination) -> Vec<Gap> {
    let leaves = lam.leaves();
    let mut order: Vec<usize> = (0..leaves.len()).collect();
    // outer chords before the chords they enclose
    order.sort_by(|&i, &j| leaves[i].lo().cmp(leaves[j].lo()).then_with(|| leaves[j].hi().cmp(leaves[i].hi())));
    let mut children: Vec<Vec<usize>> = vec![vec![]; leaves.len()];
    let mut roots = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for &i in &order {
        while let Some(&t) = stack.last() {
            if leaves[t].encloses(&leaves[i]) {
                break;
            }
            stack.pop();
        }
        match stack.last() {
            Some(&t) => children[t].push(i),
            None => roots.push(i),
        }
        stack.push(i);
    }
    let mut out = Vec::with_capacity(leaves.len() + 1);
    for (i, c) in leaves.iter().enumerate() {
        let mut chords = vec![c.clone()];
        let mut arcs = Vec::new();
        let mut at = c.lo();
        for &k in &children[i] {
            arcs.push(arc(at, leaves[k].lo()));
            chords.push(leaves[k].clone());
            at = leaves[k].hi();
        }
        arcs.push(arc(at, c.hi()));
        out.push(Gap { chords, arcs });
    }
    // the outer face
    let mut chords = Vec::new();
    let mut arcs = Vec::new();
    for (n, &k) in roots.iter().enumerate() {
        chords.push(leaves[k].clone());
        let next = &leaves[roots[(n + 1) % roots.len()]];
        arcs.push(arc(leaves[k].hi(), next.lo()));
    }
    out.push(Gap { chords, arcs });
    out
}

/// Finite-depth stand-in for very-fullness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeryFullStats {
    pub faces: usize,
    pub max_chords_per_face: usize,
    pub frontier_lunes: usize,
    pub ideal_polygons: usize,
}

pub fn very_full_stats(faces: &[Gap]) -> VeryFullStats {
    VeryFullStats {
        faces: faces.len(),
        max_chords_per_face: faces.iter().map(|g| g.chords.len()).max().unwrap_or(0),
        frontier_lunes: faces.iter().filter(|g| g.is_lune()).count(),
        ideal_polygons: faces.iter().filter(|g| g.is_ideal_polygon() && !g.chords.is_empty()).count(),
    }
}
