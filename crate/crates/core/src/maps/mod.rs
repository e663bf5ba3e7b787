//! Exact self-maps of the circle models.

mod blowup;
mod moebius;
mod piecewise;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::circle::{cyclic_order, sample_between, CirclePoint, Model, Orientation, ProjectivePoint, TreePoint};
use crate::error::{Error, Result};
use crate::scalar::{Qs, Rational};

pub use blowup::{BlownCircle, BlowupRotation};
pub use moebius::{MoebiusClass, MoebiusMap};
pub use piecewise::PiecewiseAffine;

/// The orientation-reversing involution of the angle circle fixing `a` and
/// `b` and exchanging the arcs `[a, b]` and `[b, a]` affinely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcAffineInvolution {
    a: Qs,
    b: Qs,
}

impl ArcAffineInvolution {
    pub fn new(a: Qs, b: Qs) -> Result<Self> {
        let (a, b) = (a.fract(), b.fract());
        a.joint_radicand(&b)?;
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { a, b }),
            std::cmp::Ordering::Greater => Ok(Self { a: b, b: a }),
            std::cmp::Ordering::Equal => Err(Error::DegenerateChord),
        }
    }

    pub fn endpoints(&self) -> (&Qs, &Qs) {
        (&self.a, &self.b)
    }

    pub fn apply(&self, x: &Qs) -> Result<Qs> {
        let l1 = self.b.try_sub(&self.a)?;
        let l2 = Qs::one().try_sub(&l1)?;
        if &self.a <= x && x <= &self.b {
            let s = x.try_sub(&self.a)?.try_div(&l1)?;
            Ok(self.a.try_add(&Qs::one())?.try_sub(&s.try_mul(&l2)?)?.fract())
        } else {
            let u = x.try_sub(&self.b)?.fract().try_div(&l2)?;
            self.b.try_sub(&u.try_mul(&l1)?)
        }
    }
}

/// Cyclic relabelling of the root arcs of a tessellation address.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeShift {
    pub sides: u32,
    pub shift: i64,
}

impl TreeShift {
    pub fn apply(&self, p: &TreePoint) -> TreePoint {
        let mut path = p.path.clone();
        if let Some(root) = path.first_mut() {
            *root = (*root as i64 + self.shift).rem_euclid(self.sides as i64) as u32;
        }
        TreePoint { path, end: p.end }
    }

    fn normalized(&self) -> i64 {
        self.shift.rem_euclid(self.sides as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CircleMap {
    Moebius(MoebiusMap),
    PiecewiseAffine(PiecewiseAffine),
    BlowupRotation(BlowupRotation),
    ArcAffineInvolution(ArcAffineInvolution),
    TreeAutomorphism(TreeShift),
    /// `maps[0] ∘ maps[1] ∘ ...`; never empty.
    Composite(Vec<CircleMap>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideBehavior {
    Attracting,
    Repelling,
}

/// A fixed point with the dynamics on either side. `left` is the side just
/// before the point in counterclockwise order, `right` the side just after.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPointRecord {
    pub point: CirclePoint,
    pub left: SideBehavior,
    pub right: SideBehavior,
}

impl FixedPointRecord {
    pub fn is_attracting(&self) -> bool {
        self.left == SideBehavior::Attracting && self.right == SideBehavior::Attracting
    }

    pub fn is_repelling(&self) -> bool {
        self.left == SideBehavior::Repelling && self.right == SideBehavior::Repelling
    }

    pub fn is_two_sided(&self) -> bool {
        self.left == self.right
    }
}

/// A closed rational interval certified to contain a rotation number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RotationInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Whether some integer translate of `x` lies in the interval, i.e.
    /// containment on `R/Z`.
    pub fn contains(&self, x: &Qs) -> bool {
        let x = x.fract();
        let lo = Qs::from_rational(self.lo.clone());
        let hi = Qs::from_rational(self.hi.clone());
        (lo <= x && x <= hi) || (lo <= &x + &Qs::one() && &x + &Qs::one() <= hi)
    }
}

impl fmt::Display for RotationInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl CircleMap {
    pub fn moebius(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Ok(CircleMap::Moebius(MoebiusMap::from_ints(a, b, c, d)?))
    }

    pub fn rotation(alpha: Qs) -> Self {
        CircleMap::PiecewiseAffine(PiecewiseAffine::rotation(alpha))
    }

    pub fn model(&self) -> Model {
        match self {
            CircleMap::Moebius(_) => Model::ProjectiveLine,
            CircleMap::PiecewiseAffine(_) | CircleMap::ArcAffineInvolution(_) => Model::Angle,
            CircleMap::BlowupRotation(_) => Model::BlownUp,
            CircleMap::TreeAutomorphism(_) => Model::TreeBoundary,
            CircleMap::Composite(v) => v[0].model(),
        }
    }

    pub fn apply(&self, p: &CirclePoint) -> Result<CirclePoint> {
        use CirclePoint as P;
        match (self, p) {
            (CircleMap::Moebius(m), P::Projective(q)) => Ok(P::Projective(m.apply(q)?)),
            (CircleMap::PiecewiseAffine(f), P::Angle(x)) => Ok(P::Angle(f.apply(x)?)),
            (CircleMap::BlowupRotation(r), P::BlownUp(x)) => Ok(P::BlownUp(r.apply(x)?)),
            (CircleMap::ArcAffineInvolution(r), P::Angle(x)) => Ok(P::Angle(r.apply(x)?)),
            (CircleMap::TreeAutomorphism(t), P::Tree(x)) => Ok(P::Tree(t.apply(x))),
            (CircleMap::Composite(v), _) => v.iter().rev().try_fold(p.clone(), |q, m| m.apply(&q)),
            _ => Err(Error::ModelMismatch { expected: self.model(), found: p.model() }),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            CircleMap::Moebius(m) => CircleMap::Moebius(m.inverse()),
            CircleMap::PiecewiseAffine(f) => CircleMap::PiecewiseAffine(f.inverse()),
            CircleMap::BlowupRotation(r) => CircleMap::BlowupRotation(r.power(-1)),
            CircleMap::ArcAffineInvolution(_) => self.clone(),
            CircleMap::TreeAutomorphism(t) => CircleMap::TreeAutomorphism(TreeShift { sides: t.sides, shift: -t.shift }),
            CircleMap::Composite(v) => CircleMap::Composite(v.iter().rev().map(CircleMap::inverse).collect()),
        }
    }

    /// `self ∘ other`. Same-variant pairs stay in closed form when possible.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.model() != other.model() {
            return Err(Error::ModelMismatch { expected: self.model(), found: other.model() });
        }
        let closed = match (self, other) {
            (CircleMap::Moebius(f), CircleMap::Moebius(g)) => f.compose(g).ok().map(CircleMap::Moebius),
            (CircleMap::PiecewiseAffine(f), CircleMap::PiecewiseAffine(g)) => {
                f.compose(g).ok().map(CircleMap::PiecewiseAffine)
            }
            (CircleMap::BlowupRotation(f), CircleMap::BlowupRotation(g)) => {
                f.compose(g).ok().map(CircleMap::BlowupRotation)
            }
            (CircleMap::TreeAutomorphism(f), CircleMap::TreeAutomorphism(g)) if f.sides == g.sides => {
                Some(CircleMap::TreeAutomorphism(TreeShift { sides: f.sides, shift: f.normalized() + g.normalized() }))
            }
            _ => None,
        };
        if let Some(m) = closed {
            return Ok(m);
        }
        let mut parts = Vec::new();
        for m in [self, other] {
            match m {
                CircleMap::Composite(v) => parts.extend(v.iter().cloned()),
                m => parts.push(m.clone()),
            }
        }
        Ok(CircleMap::Composite(parts))
    }

    pub fn power(&self, k: i64) -> Result<Self> {
        match self {
            CircleMap::BlowupRotation(r) => return Ok(CircleMap::BlowupRotation(r.power(k))),
            CircleMap::TreeAutomorphism(t) => {
                return Ok(CircleMap::TreeAutomorphism(TreeShift { sides: t.sides, shift: t.shift * k }))
            }
            _ => {}
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        if k == 0 {
            return self.compose(&self.inverse());
        }
        let mut acc = base.clone();
        for _ in 1..k.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        match self {
            CircleMap::Moebius(m) => m.is_identity(),
            CircleMap::PiecewiseAffine(f) => f.is_identity(),
            CircleMap::BlowupRotation(r) => r.steps == 0,
            CircleMap::ArcAffineInvolution(_) => false,
            CircleMap::TreeAutomorphism(t) => t.normalized() == 0,
            CircleMap::Composite(v) => v.iter().all(CircleMap::is_identity),
        }
    }

    pub fn is_orientation_preserving(&self) -> bool {
        match self {
            CircleMap::Moebius(m) => m.is_orientation_preserving(),
            CircleMap::ArcAffineInvolution(_) => false,
            CircleMap::Composite(v) => v.iter().filter(|m| !m.is_orientation_preserving()).count() % 2 == 0,
            _ => true,
        }
    }

    /// Exact equality of maps where it is decidable.
    pub fn same_map(&self, other: &Self) -> Option<bool> {
        match (self, other) {
            (CircleMap::Moebius(f), CircleMap::Moebius(g)) => Some(f == g),
            (CircleMap::PiecewiseAffine(f), CircleMap::PiecewiseAffine(g)) => f.same_map(g).ok(),
            (CircleMap::BlowupRotation(f), CircleMap::BlowupRotation(g)) => Some(f == g),
            (CircleMap::ArcAffineInvolution(f), CircleMap::ArcAffineInvolution(g)) => Some(f == g),
            (CircleMap::TreeAutomorphism(f), CircleMap::TreeAutomorphism(g)) => {
                Some(f.sides == g.sides && f.normalized() == g.normalized())
            }
            _ => None,
        }
    }

    /// A point used to anchor orbit counting.
    pub fn reference_point(&self) -> Result<CirclePoint> {
        match self {
            CircleMap::Moebius(_) => Ok(CirclePoint::infinity()),
            CircleMap::PiecewiseAffine(_) | CircleMap::ArcAffineInvolution(_) => Ok(CirclePoint::Angle(Qs::zero())),
            CircleMap::BlowupRotation(r) => Ok(r.reference_point()),
            CircleMap::TreeAutomorphism(_) => Ok(CirclePoint::tree(vec![0], crate::circle::TreeEnd::Start)),
            CircleMap::Composite(v) => v
                .iter()
                .find_map(|m| m.reference_point().ok())
                .ok_or_else(|| Error::UnsupportedMap("no reference point".into())),
        }
    }

    /// Every fixed point with its side behavior, in linear-key order.
    pub fn fixed_points(&self) -> Result<Vec<FixedPointRecord>> {
        if !self.is_orientation_preserving() {
            return Err(Error::NotOrientationPreserving);
        }
        if self.is_identity() {
            return Err(Error::AllFixed);
        }
        let pts: Vec<CirclePoint> = match self {
            CircleMap::Moebius(m) => m.fixed_points()?.into_iter().map(CirclePoint::Projective).collect(),
            CircleMap::PiecewiseAffine(f) => f.fixed_points()?.into_iter().map(CirclePoint::Angle).collect(),
            // a nontrivial power of an irrational rotation, or a root relabelling
            CircleMap::BlowupRotation(_) | CircleMap::TreeAutomorphism(_) => vec![],
            CircleMap::ArcAffineInvolution(_) => unreachable!("orientation reversing"),
            CircleMap::Composite(_) => {
                return Err(Error::UnsupportedMap("fixed points of a mixed composite".into()))
            }
        };
        side_behaviors(self, pts)
    }

    /// Certified rotation number from `3 * iterations` orbit steps of the
    /// reference point; the interval has width exactly `1 / iterations`.
    pub fn rotation_number(&self, iterations: u32) -> Result<RotationInterval> {
        if !self.is_orientation_preserving() {
            return Err(Error::NotOrientationPreserving);
        }
        if iterations == 0 {
            return Err(Error::Invalid("iterations must be positive".into()));
        }
        let c = self.reference_point()?;
        // relative order on the circle cut at c
        let rel = |z: &CirclePoint| (z < &c, z.clone());
        let fc = rel(&self.apply(&c)?);
        let n = 3 * iterations as i64;
        let mut x = c.clone();
        let mut wraps: i64 = 0;
        for _ in 0..n {
            x = self.apply(&x)?;
            if rel(&x) < fc {
                wraps += 1;
            }
        }
        // the lift of the n-th iterate lies in [W, W + 1) and differs from
        // n * rho by less than 1
        let den = Rational::from_integer(n.into());
        Ok(RotationInterval {
            lo: Rational::from_integer((wraps - 1).into()).max(Rational::zero()) / &den,
            hi: (Rational::from_integer((wraps + 2).into()) / &den).min(Rational::from_integer(1.into())),
        })
    }
}

fn sample_off(p: &CirclePoint) -> Result<CirclePoint> {
    Ok(match p {
        CirclePoint::Projective(ProjectivePoint::Infinity) => CirclePoint::rational(0, 1),
        CirclePoint::Projective(ProjectivePoint::Finite(x)) => CirclePoint::real(Qs::from_rational(x.floor().into()) + Qs::one()),
        CirclePoint::Angle(x) if x < &Qs::ratio(1, 2) => CirclePoint::angle_ratio(3, 4),
        CirclePoint::Angle(_) => CirclePoint::angle_ratio(1, 4),
        _ => return Err(Error::Invalid(format!("no sampling in {:?}", p.model()))),
    })
}

fn side_behaviors(m: &CircleMap, pts: Vec<CirclePoint>) -> Result<Vec<FixedPointRecord>> {
    let n = pts.len();
    let mut right = Vec::with_capacity(n);
    let mut next_left = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (&pts[i], &pts[(i + 1) % n]);
        let s = if n == 1 { sample_off(a)? } else { sample_between(a, b)? };
        let fs = m.apply(&s)?;
        match cyclic_order(a, &s, &fs)? {
            Orientation::Positive => {
                right.push(SideBehavior::Repelling);
                next_left.push(SideBehavior::Attracting);
            }
            Orientation::Negative => {
                right.push(SideBehavior::Attracting);
                next_left.push(SideBehavior::Repelling);
            }
            Orientation::Degenerate => return Err(Error::NonIsolatedFixedPoints),
        }
    }
    Ok(pts
        .into_iter()
        .enumerate()
        .map(|(i, point)| FixedPointRecord { point, left: next_left[(i + n - 1) % n], right: right[i] })
        .collect())
}

impl fmt::Display for CircleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleMap::Moebius(m) => write!(f, "moebius {m}"),
            CircleMap::PiecewiseAffine(p) => write!(f, "piecewise-affine with {} knots", p.knots().len()),
            CircleMap::BlowupRotation(r) => write!(f, "blow-up rotation^{} by {}", r.steps, r.circle.alpha()),
            CircleMap::ArcAffineInvolution(r) => write!(f, "involution fixing {} and {}", r.a, r.b),
            CircleMap::TreeAutomorphism(t) => write!(f, "root shift {} mod {}", t.shift, t.sides),
            CircleMap::Composite(v) => write!(f, "composite of {}", v.len()),
        }
    }
}
