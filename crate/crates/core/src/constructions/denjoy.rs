use num_traits::{One, Zero};

use crate::certificate::Witness;
use crate::circle::{linked, BlownPoint, Chord, CirclePoint, Linkage, Model, TreeEnd};
use crate::error::{Error, Result};
use crate::lamination::{gaps, Gap, Lamination};
use crate::maps::{BlownCircle, BlowupRotation, CircleMap};
use crate::scalar::{Qs, Rational};

/// The Denjoy blow-up of an irrational rotation with its boundary leaves.
#[derive(Clone, Debug)]
pub struct DenjoyScenario {
    pub circle: BlownCircle,
    /// The lifted rotation, `I_j -> I_{j+1}`.
    pub map: CircleMap,
    /// The chords `∂I_j` for `|j| <= J`.
    pub lamination: Lamination,
    /// The complementary face bounded by every `∂I_j`.
    pub central_gap: Gap,
    /// Orbit index `j` of each side of the central gap, in counterclockwise
    /// order.
    pub side_indices: Vec<i64>,
}

/// The chord joining the two ends of `I_j`.
pub fn interval_boundary(circle: &BlownCircle, j: i64) -> Result<Chord> {
    Chord::new(circle.interval_point(j, Rational::zero())?, circle.interval_point(j, Rational::one())?)
}

/// Blows up the orbit of `base` under rotation by `alpha`, tracking the
/// intervals `I_j` with `|j| <= truncation`.
///
/// Interval lengths (`2^-|j|` in the classical construction) play no role in
/// the combinatorics and are not modelled.
pub fn denjoy(alpha: Qs, base: Qs, truncation: u32) -> Result<DenjoyScenario> {
    let circle = BlownCircle::new(alpha, base, truncation)?;
    let t = truncation as i64;
    let mut chords = Vec::new();
    let mut origins = Vec::new();
    for j in -t..=t {
        chords.push(interval_boundary(&circle, j)?);
        origins.push(format!("I[{j}]"));
    }
    let lamination = Lamination::with_origins(
        Model::BlownUp,
        chords.into_iter().zip(origins).collect(),
        Some(truncation),
        format!("boundaries of the blown intervals I[j], |j| <= {truncation}"),
    )?
    .expect_unlinked()?;
    let m = lamination.len();
    let central_gap = gaps(&lamination)
        .into_iter()
        .find(|g| g.chords.len() == m)
        .ok_or_else(|| Error::Invalid("no face meets every blown interval".into()))?;
    let side_indices = central_gap
        .chords
        .iter()
        .map(|c| match c.lo() {
            CirclePoint::BlownUp(BlownPoint::Interval { index, .. }) => Ok(*index),
            _ => Err(Error::Invalid("boundary chord off the blown intervals".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    let map = CircleMap::BlowupRotation(BlowupRotation::new(circle.clone()));
    Ok(DenjoyScenario { circle, map, lamination, central_gap, side_indices })
}

/// The copies of the central gap reached by reflecting across sides, drawn
/// on the boundary of the dual tree.
///
/// Side `k` of the root copy is the tree arc `[k]`. Reflecting a copy across
/// a free side `s` produces a copy whose `m - 1` new sides are the arcs
/// `s ++ [i]` nested inside `s`. Depth `d` reflects every free side `d`
/// times over, so the leaves are all addresses of length at most `d + 1`.
#[derive(Clone, Debug)]
pub struct Tessellation {
    pub lamination: Lamination,
    pub sides: u32,
    pub depth: u32,
}

/// `m (1 + (m - 1) + ... + (m - 1)^d)`.
pub fn tessellation_leaf_count(sides: u64, depth: u32) -> u64 {
    let mut total = 0;
    let mut layer = sides;
    for _ in 0..=depth {
        total += layer;
        layer *= sides.saturating_sub(1);
    }
    total
}

fn tree_chord(path: Vec<u32>) -> Result<Chord> {
    Chord::new(CirclePoint::tree(path.clone(), TreeEnd::Start), CirclePoint::tree(path, TreeEnd::End))
}

fn address_label(side_indices: &[i64], path: &[u32]) -> String {
    let mut s = format!("I[{}]", side_indices[path[0] as usize]);
    for k in &path[1..] {
        s.push_str(&format!(".{k}"));
    }
    s
}

/// Reflects the central gap out to `depth`, or only across the root side
/// whose orbit index is `only_side` when given.
pub fn denjoy_tessellation(s: &DenjoyScenario, depth: u32, only_side: Option<i64>) -> Result<Tessellation> {
    let m = s.side_indices.len() as u32;
    if m < 2 {
        return Err(Error::Invalid("the central gap needs at least two sides".into()));
    }
    let root_branch = match only_side {
        Some(j) => Some(
            s.side_indices
                .iter()
                .position(|&i| i == j)
                .ok_or_else(|| Error::Invalid(format!("I[{j}] is not a side of the central gap")))? as u32,
        ),
        None => None,
    };
    let mut chords = Vec::new();
    let mut layer: Vec<Vec<u32>> = (0..m).map(|k| vec![k]).collect();
    for level in 0..=depth {
        for p in &layer {
            chords.push((tree_chord(p.clone())?, address_label(&s.side_indices, p)));
        }
        if level == depth {
            break;
        }
        layer = layer
            .iter()
            .filter(|p| root_branch.is_none_or(|r| p[0] == r))
            .flat_map(|p| {
                (0..m - 1).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    let lamination = Lamination::with_origins(
        Model::TreeBoundary,
        chords,
        Some(depth),
        format!("reflections of the central gap to depth {depth}"),
    )?
    .expect_unlinked()?;
    Ok(Tessellation { lamination, sides: m, depth })
}

fn address_len(c: &Chord) -> usize {
    match c.lo() {
        CirclePoint::Tree(t) => t.path.len(),
        _ => 0,
    }
}

/// Every leaf above the deepest level has endpoints of the next level
/// strictly between its own endpoints.
pub fn density_in_order(t: &Tessellation) -> bool {
    let max = t.lamination.leaves().iter().map(address_len).max().unwrap_or(0);
    let mut by_level: Vec<Vec<&CirclePoint>> = vec![Vec::new(); max + 2];
    for c in t.lamination.leaves() {
        by_level[address_len(c)].extend(c.endpoints());
    }
    for v in &mut by_level {
        v.sort();
    }
    t.lamination.leaves().iter().filter(|c| address_len(c) < max).all(|c| {
        let next = &by_level[address_len(c) + 1];
        let i = next.partition_point(|p| *p <= c.lo());
        i < next.len() && next[i] < c.hi()
    })
}

/// Precomputed rotation amounts `n alpha mod 1` for `n = 1..=n_max`.
#[derive(Clone, Debug)]
pub struct RotationLinkingSearch {
    alpha: Qs,
    thetas: Vec<Qs>,
    distance: Vec<f64>,
}

impl RotationLinkingSearch {
    pub fn new(alpha: Qs, n_max: u64) -> Result<Self> {
        if alpha.is_rational() {
            return Err(Error::RationalAngle);
        }
        let alpha = alpha.fract();
        let mut thetas = Vec::with_capacity(n_max as usize);
        let mut t = Qs::zero();
        for _ in 0..n_max {
            t = t.try_add(&alpha)?.fract();
            thetas.push(t.clone());
        }
        let distance = thetas.iter().map(|t| t.to_f64().min(1.0 - t.to_f64())).collect();
        Ok(Self { alpha, thetas, distance })
    }

    /// Least `n` with `R^n(chord)` crossing `chord`.
    ///
    /// A chord of arc length `L` crosses its rotation by `theta` exactly when
    /// `theta` is within `min(L, 1 - L)` of an integer. That test screens in
    /// floating point; every candidate near the threshold is settled by the
    /// exact linking predicate.
    pub fn witness(&self, chord: &Chord) -> Result<Option<Witness>> {
        let (CirclePoint::Angle(a), CirclePoint::Angle(b)) = (chord.lo(), chord.hi()) else {
            return Err(Error::ModelMismatch { expected: Model::Angle, found: chord.model() });
        };
        let len = b.try_sub(a)?.to_f64();
        let reach = len.min(1.0 - len);
        const SLACK: f64 = 1e-9;
        for (i, d) in self.distance.iter().enumerate() {
            if *d > reach + SLACK {
                continue;
            }
            let t = &self.thetas[i];
            let image = Chord::new(CirclePoint::angle(a.try_add(t)?), CirclePoint::angle(b.try_add(t)?))?;
            if linked(chord, &image)? == Linkage::Linked {
                return Ok(Some(Witness::RotationLinking {
                    chord: chord.clone(),
                    alpha: self.alpha.clone(),
                    n: i as u64 + 1,
                    image,
                }));
            }
        }
        Ok(None)
    }
}

/// Least `n <= n_max` with `R^n(chord)` crossing `chord`, as a witness.
pub fn rotation_linking_witness(alpha: &Qs, chord: &Chord, n_max: u64) -> Result<Option<Witness>> {
    RotationLinkingSearch::new(alpha.clone(), n_max)?.witness(chord)
}
