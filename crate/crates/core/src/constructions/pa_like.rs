use serde_json::json;

use crate::certificate::Certificate;
use crate::circle::{circle_distance, Chord, CirclePoint, Model};
use crate::error::{Error, Result};
use crate::group::GroupAction;
use crate::lamination::{materialize, Lamination, Materialized, Recipe};
use crate::maps::{CircleMap, PiecewiseAffine};
use crate::scalar::Qs;

/// A piecewise-affine circle map with finitely many fixed points that
/// alternate between attracting and repelling, together with the ideal
/// polygons spanned by each kind.
#[derive(Clone, Debug)]
pub struct PaLikeMap {
    pub points: Vec<Qs>,
    pub attracting: Vec<bool>,
    pub map: CircleMap,
    pub attracting_polygon: Lamination,
    pub repelling_polygon: Lamination,
}

/// Consecutive sides of the ideal polygon on sorted vertices; two vertices
/// give a single chord.
pub fn polygon(vertices: &[Qs]) -> Result<Vec<Chord>> {
    let pt = |x: &Qs| CirclePoint::angle(x.clone());
    match vertices.len() {
        0 | 1 => Err(Error::Invalid("a polygon needs two vertices".into())),
        2 => Ok(vec![Chord::new(pt(&vertices[0]), pt(&vertices[1]))?]),
        n => (0..n).map(|i| Chord::new(pt(&vertices[i]), pt(&vertices[(i + 1) % n]))).collect(),
    }
}

/// Builds the map fixing exactly `points` (strictly increasing in `[0, 1)`).
///
/// Each complementary arc gets one extra knot at its midpoint, pushed halfway
/// towards the attracting end, so the map is affine with slope `1/2` next to
/// attracting points and slope `2` next to repelling ones.
pub fn pa_like_map(points: Vec<Qs>, attracting: Vec<bool>) -> Result<PaLikeMap> {
    let n = points.len();
    if n != attracting.len() {
        return Err(Error::Invalid("one attracting flag per fixed point".into()));
    }
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Invalid(format!("need an even number of at least 4 fixed points, got {n}")));
    }
    let (zero, one) = (Qs::zero(), Qs::one());
    if points.iter().any(|x| x < &zero || x >= &one) {
        return Err(Error::Invalid("fixed points must lie in [0, 1)".into()));
    }
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invalid("fixed points must increase strictly".into()));
    }
    if (0..n).any(|i| attracting[i] == attracting[(i + 1) % n]) {
        return Err(Error::NonAlternating);
    }
    let half = Qs::ratio(1, 2);
    let mut knots = Vec::with_capacity(2 * n);
    for i in 0..n {
        let x = &points[i];
        let next = if i + 1 < n { points[i + 1].clone() } else { points[0].try_add(&one)? };
        knots.push((x.clone(), x.clone()));
        let m = x.try_add(&next)?.try_mul(&half)?;
        let fm = if attracting[i] { x.try_add(&m)? } else { m.try_add(&next)? }.try_mul(&half)?;
        if m >= one {
            knots.push((m.try_sub(&one)?, fm.try_sub(&one)?));
        } else {
            knots.push((m, fm));
        }
    }
    knots.sort_by(|a, b| a.0.cmp(&b.0));
    let map = CircleMap::PiecewiseAffine(PiecewiseAffine::new(knots)?);
    let pick = |want: bool| -> Vec<Qs> { (0..n).filter(|&i| attracting[i] == want).map(|i| points[i].clone()).collect() };
    let attracting_polygon =
        Lamination::new(Model::Angle, polygon(&pick(true))?, "attracting polygon")?.expect_unlinked()?;
    let repelling_polygon =
        Lamination::new(Model::Angle, polygon(&pick(false))?, "repelling polygon")?.expect_unlinked()?;
    Ok(PaLikeMap { points, attracting, map, attracting_polygon, repelling_polygon })
}

/// `n` equally spaced fixed points starting at 0, even positions attracting.
pub fn regular_pa_like(n: usize) -> Result<PaLikeMap> {
    let points = (0..n).map(|i| Qs::ratio(i as i64, n as i64)).collect();
    pa_like_map(points, (0..n).map(|i| i % 2 == 0).collect())
}

/// Hausdorff-style distance between chords on the angle circle: the better
/// of the two endpoint matchings, each scored by its worse endpoint.
pub fn chord_distance(c: &Chord, d: &Chord) -> Result<Qs> {
    let val = |p: &CirclePoint| match p {
        CirclePoint::Angle(x) => Ok(x.clone()),
        other => Err(Error::ModelMismatch { expected: Model::Angle, found: other.model() }),
    };
    let (a, b, x, y) = (val(c.lo())?, val(c.hi())?, val(d.lo())?, val(d.hi())?);
    let straight = circle_distance(&a, &x).max(circle_distance(&b, &y));
    let crossed = circle_distance(&a, &y).max(circle_distance(&b, &x));
    Ok(straight.min(crossed))
}

/// `chord, g(chord), ..., g^n(chord)`.
pub fn chord_orbit(g: &CircleMap, chord: &Chord, n: usize) -> Result<Vec<Chord>> {
    let mut out = vec![chord.clone()];
    for _ in 0..n {
        let c = out.last().expect("non-empty");
        out.push(Chord::new(g.apply(c.lo())?, g.apply(c.hi())?)?);
    }
    Ok(out)
}

/// Searches the orbit of `seed` under the cyclic group generated by the map
/// for a crossing. A crossing refutes the seed as a leaf of an invariant
/// lamination; otherwise the answer is unknown at this depth.
pub fn strict_col2_probe(pa: &PaLikeMap, seed: &Chord, depth: u32) -> Result<Certificate> {
    let action = GroupAction::new(vec![("g".into(), pa.map.clone())], true)?;
    let m = materialize(&Recipe { seeds: vec![seed.clone()], action: Some(action), depth })?;
    Ok(match m {
        Materialized::Linked(w) => Certificate::refuted(w, json!({ "seed": seed.to_string(), "depth": depth })),
        Materialized::Lamination(l) => Certificate::unknown(depth, json!({ "seed": seed.to_string(), "leaves": l.len() })),
    })
}
