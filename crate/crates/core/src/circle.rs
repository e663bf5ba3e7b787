//! Circle models, cyclic order, chords and the linking predicate.
//!
//! Each model carries its own exact coordinates. Within a model the points
//! are totally ordered by a *linear key* that cuts the circle at one place;
//! cyclic order and linking are derived from that key alone.
//!
//! | model | linear key | cut |
//! |---|---|---|
//! | `ProjectiveLine` | `inf` first, then reals increasing | at `inf` |
//! | `Angle` | value in `[0, 1)` | at `0` |
//! | `BlownUp` | collapsed position, then position inside a blown interval | at `0` |
//! | `TreeBoundary` | nested-arc address | before the first root arc |

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Qs, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    ProjectiveLine,
    Angle,
    BlownUp,
    TreeBoundary,
}

/// A point of `R ∪ {inf}`. The derived order puts `Infinity` first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjectivePoint {
    Infinity,
    Finite(Qs),
}

/// A point of the Denjoy blown-up circle.
///
/// `Interval` points sit inside the blown interval `I_index`; `anchor` is the
/// collapsed position `p + index * alpha mod 1` of that interval and `inner`
/// the affine position inside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlownPoint {
    Base(Qs),
    Interval { index: i64, inner: Rational, anchor: Qs },
}

impl BlownPoint {
    pub fn collapsed(&self) -> &Qs {
        match self {
            BlownPoint::Base(x) => x,
            BlownPoint::Interval { anchor, .. } => anchor,
        }
    }
}

impl Ord for BlownPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.collapsed().cmp(other.collapsed()).then_with(|| match (self, other) {
            (
                BlownPoint::Interval { index: i, inner: s, .. },
                BlownPoint::Interval { index: j, inner: t, .. },
            ) => i.cmp(j).then_with(|| s.cmp(t)),
            // a base point never shares its collapsed position with an interval
            (BlownPoint::Base(_), BlownPoint::Interval { .. }) => Ordering::Less,
            (BlownPoint::Interval { .. }, BlownPoint::Base(_)) => Ordering::Greater,
            (BlownPoint::Base(_), BlownPoint::Base(_)) => Ordering::Equal,
        })
    }
}

impl PartialOrd for BlownPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeEnd {
    Start,
    End,
}

/// An endpoint of a side in the tessellation tree.
///
/// `path` addresses a nested arc: the first entry picks a root arc, each
/// further entry a child arc inside its parent. `end` selects the starting or
/// the ending point of that arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreePoint {
    pub path: Vec<u32>,
    pub end: TreeEnd,
}

impl Ord for TreePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.path.iter().zip(&other.path) {
            if a != b {
                return a.cmp(b);
            }
        }
        match self.path.len().cmp(&other.path.len()) {
            Ordering::Equal => self.end.cmp(&other.end),
            // the shorter arc encloses the longer one
            Ordering::Less => match self.end {
                TreeEnd::Start => Ordering::Less,
                TreeEnd::End => Ordering::Greater,
            },
            Ordering::Greater => match other.end {
                TreeEnd::Start => Ordering::Greater,
                TreeEnd::End => Ordering::Less,
            },
        }
    }
}

impl PartialOrd for TreePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CirclePoint {
    Projective(ProjectivePoint),
    Angle(Qs),
    BlownUp(BlownPoint),
    Tree(TreePoint),
}

impl CirclePoint {
    pub fn real(x: Qs) -> Self {
        CirclePoint::Projective(ProjectivePoint::Finite(x))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::real(Qs::ratio(n, d))
    }

    pub fn infinity() -> Self {
        CirclePoint::Projective(ProjectivePoint::Infinity)
    }

    /// An angle point, reduced mod 1.
    pub fn angle(x: Qs) -> Self {
        CirclePoint::Angle(x.fract())
    }

    pub fn angle_ratio(n: i64, d: i64) -> Self {
        Self::angle(Qs::ratio(n, d))
    }

    pub fn tree(path: Vec<u32>, end: TreeEnd) -> Self {
        CirclePoint::Tree(TreePoint { path, end })
    }

    pub fn model(&self) -> Model {
        match self {
            CirclePoint::Projective(_) => Model::ProjectiveLine,
            CirclePoint::Angle(_) => Model::Angle,
            CirclePoint::BlownUp(_) => Model::BlownUp,
            CirclePoint::Tree(_) => Model::TreeBoundary,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CirclePoint::Projective(ProjectivePoint::Infinity))
    }

    /// The finite real coordinate of a projective point, or the angle value.
    pub fn chart(&self) -> Option<&Qs> {
        match self {
            CirclePoint::Projective(ProjectivePoint::Finite(x)) => Some(x),
            CirclePoint::Angle(x) => Some(x),
            _ => None,
        }
    }

    /// A coordinate in `[0, 1)` compatible with cyclic order.
    ///
    /// Projective points use the rational homeomorphism
    /// `x -> 1/2 + x / (2 (1 + |x|))`, `inf -> 0`; angle points are their own
    /// coordinate. Other models have no exact metric chart.
    pub fn circle_coordinate(&self) -> Option<Qs> {
        match self {
            CirclePoint::Projective(ProjectivePoint::Infinity) => Some(Qs::zero()),
            CirclePoint::Projective(ProjectivePoint::Finite(x)) => {
                let half = Qs::ratio(1, 2);
                let den = (Qs::one() + x.abs()) * Qs::integer(2);
                Some(half + x.try_div(&den).expect("same field"))
            }
            CirclePoint::Angle(x) => Some(x.clone()),
            _ => None,
        }
    }

    /// Inverse of [`CirclePoint::circle_coordinate`].
    pub fn from_circle_coordinate(model: Model, u: &Qs) -> Result<Self> {
        let u = u.fract();
        match model {
            Model::Angle => Ok(CirclePoint::Angle(u)),
            Model::ProjectiveLine => {
                if u.is_zero() {
                    return Ok(Self::infinity());
                }
                let v = &u * &Qs::integer(2) - Qs::one();
                let x = if v >= Qs::zero() {
                    v.try_div(&(Qs::one() - &v))?
                } else {
                    v.try_div(&(Qs::one() + &v))?
                };
                Ok(Self::real(x))
            }
            m => Err(Error::Invalid(format!("no circle chart for {m:?}"))),
        }
    }

    fn same_model(&self, other: &Self) -> Result<()> {
        if self.model() == other.model() {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                expected: self.model(),
                found: other.model(),
            })
        }
    }
}

impl Ord for CirclePoint {
    /// Linear key within a model; models are ordered by their declaration
    /// order so mixed collections still sort deterministically.
    fn cmp(&self, other: &Self) -> Ordering {
        use CirclePoint::*;
        match (self, other) {
            (Projective(a), Projective(b)) => a.cmp(b),
            (Angle(a), Angle(b)) => a.cmp(b),
            (BlownUp(a), BlownUp(b)) => a.cmp(b),
            (Tree(a), Tree(b)) => a.cmp(b),
            _ => self.model().cmp(&other.model()),
        }
    }
}

impl PartialOrd for CirclePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Projective(ProjectivePoint::Infinity) => write!(f, "inf"),
            CirclePoint::Projective(ProjectivePoint::Finite(x)) => write!(f, "{x}"),
            CirclePoint::Angle(x) => write!(f, "{x} (mod 1)"),
            CirclePoint::BlownUp(BlownPoint::Base(x)) => write!(f, "base {x}"),
            CirclePoint::BlownUp(BlownPoint::Interval { index, inner, .. }) => {
                write!(f, "I[{index}]@{inner}")
            }
            CirclePoint::Tree(t) => {
                let path: Vec<String> = t.path.iter().map(u32::to_string).collect();
                write!(f, "{}:{:?}", path.join("."), t.end)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Positive,
    Negative,
    Degenerate,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
            Orientation::Degenerate => Orientation::Degenerate,
        }
    }
}

/// Orientation of the triple `(a, b, c)`: `Positive` iff counterclockwise.
pub fn cyclic_order(a: &CirclePoint, b: &CirclePoint, c: &CirclePoint) -> Result<Orientation> {
    a.same_model(b)?;
    a.same_model(c)?;
    if a == b || b == c || a == c {
        return Ok(Orientation::Degenerate);
    }
    // a cyclically increasing triple has exactly two ascents
    let ascents = [a < b, b < c, c < a].iter().filter(|&&x| x).count();
    Ok(if ascents == 2 {
        Orientation::Positive
    } else {
        Orientation::Negative
    })
}

/// An unordered pair of distinct points. Stored with `lo < hi` in the linear
/// key, so `(a, b)` and `(b, a)` build equal values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    lo: CirclePoint,
    hi: CirclePoint,
}

impl Chord {
    pub fn new(a: CirclePoint, b: CirclePoint) -> Result<Self> {
        a.same_model(&b)?;
        match a.cmp(&b) {
            Ordering::Equal => Err(Error::DegenerateChord),
            Ordering::Less => Ok(Chord { lo: a, hi: b }),
            Ordering::Greater => Ok(Chord { lo: b, hi: a }),
        }
    }

    pub fn lo(&self) -> &CirclePoint {
        &self.lo
    }

    pub fn hi(&self) -> &CirclePoint {
        &self.hi
    }

    pub fn endpoints(&self) -> [&CirclePoint; 2] {
        [&self.lo, &self.hi]
    }

    pub fn model(&self) -> Model {
        self.lo.model()
    }

    pub fn has_endpoint(&self, p: &CirclePoint) -> bool {
        &self.lo == p || &self.hi == p
    }

    /// Whether `p` lies strictly inside the arc `(lo, hi)` of the linear key
    /// (the side of the chord away from the cut).
    pub fn inner_contains(&self, p: &CirclePoint) -> bool {
        &self.lo < p && p < &self.hi
    }

    /// Whether `other` lies in the closed inner arc of `self`.
    pub fn encloses(&self, other: &Chord) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// The endpoint other than `p`.
    pub fn other_end(&self, p: &CirclePoint) -> Option<&CirclePoint> {
        if &self.lo == p {
            Some(&self.hi)
        } else if &self.hi == p {
            Some(&self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Linkage {
    Linked,
    Unlinked,
    SharedEndpoint,
    Identical,
}

/// Decides whether two chords cross, purely from cyclic order.
pub fn linked(c1: &Chord, c2: &Chord) -> Result<Linkage> {
    c1.lo.same_model(&c2.lo)?;
    if c1 == c2 {
        return Ok(Linkage::Identical);
    }
    if c1.has_endpoint(&c2.lo) || c1.has_endpoint(&c2.hi) {
        return Ok(Linkage::SharedEndpoint);
    }
    Ok(if c1.inner_contains(&c2.lo) != c1.inner_contains(&c2.hi) {
        Linkage::Linked
    } else {
        Linkage::Unlinked
    })
}

/// A closed arc running counterclockwise from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub start: CirclePoint,
    pub end: CirclePoint,
}

impl Arc {
    pub fn new(start: CirclePoint, end: CirclePoint) -> Result<Self> {
        start.same_model(&end)?;
        if start == end {
            return Err(Error::Invalid("degenerate arc".into()));
        }
        Ok(Arc { start, end })
    }

    pub fn contains(&self, p: &CirclePoint) -> bool {
        p == &self.start || p == &self.end || self.open_contains(p)
    }

    pub fn open_contains(&self, p: &CirclePoint) -> bool {
        matches!(cyclic_order(&self.start, p, &self.end), Ok(Orientation::Positive))
    }

    pub fn intersects(&self, other: &Arc) -> bool {
        self.contains(&other.start) || other.contains(&self.start)
    }
}

/// A rational strictly between two ordered values `a < b`.
pub fn rational_between(a: &Qs, b: &Qs) -> Qs {
    debug_assert!(a < b);
    if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
        return Qs::from_rational((x + y) / Rational::from_integer(2.into()));
    }
    let mut bits = 8;
    loop {
        let (_, ahi) = a.enclose(bits);
        let (blo, _) = b.enclose(bits);
        if ahi < blo {
            return Qs::from_rational((ahi + blo) / Rational::from_integer(2.into()));
        }
        bits *= 2;
    }
}

/// A point strictly inside the open counterclockwise arc from `a` to `b`.
/// Rational whenever possible so it combines with maps over any field.
pub fn sample_between(a: &CirclePoint, b: &CirclePoint) -> Result<CirclePoint> {
    a.same_model(b)?;
    if a == b {
        return Err(Error::Invalid("empty arc".into()));
    }
    let one = Qs::one();
    match (a, b) {
        (CirclePoint::Projective(pa), CirclePoint::Projective(pb)) => Ok(match (pa, pb) {
            (ProjectivePoint::Infinity, ProjectivePoint::Finite(y)) => {
                CirclePoint::real(Qs::from_rational(y.floor().into()) - one)
            }
            (ProjectivePoint::Finite(x), ProjectivePoint::Infinity) => {
                CirclePoint::real(Qs::from_rational(x.floor().into()) + one)
            }
            (ProjectivePoint::Finite(x), ProjectivePoint::Finite(y)) => {
                if x < y {
                    CirclePoint::real(rational_between(x, y))
                } else {
                    CirclePoint::real(Qs::from_rational(x.floor().into()) + one)
                }
            }
            _ => unreachable!("distinct points"),
        }),
        (CirclePoint::Angle(x), CirclePoint::Angle(y)) => {
            let y = if x < y { y.clone() } else { y + &one };
            Ok(CirclePoint::angle(rational_between(x, &y)))
        }
        _ => Err(Error::Invalid(format!("no sampling in {:?}", a.model()))),
    }
}

/// Circle distance between two coordinates in `[0, 1)`.
pub fn circle_distance(u: &Qs, v: &Qs) -> Qs {
    let d = (u - v).abs();
    let e = Qs::one() - &d;
    if d <= e {
        d
    } else {
        e
    }
}
