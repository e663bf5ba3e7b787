use num_traits::Zero;

use crate::circle::{BlownPoint, CirclePoint};
use crate::error::{Error, Result};
use crate::scalar::{Qs, Rational};

/// The blown-up circle: the orbit `p + j alpha` (for every integer `j`)
/// replaced by intervals `I_j`, of which `|j| <= truncation` are tracked
/// explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlownCircle {
    alpha: Qs,
    base: Qs,
    truncation: u32,
}

impl BlownCircle {
    pub fn new(alpha: Qs, base: Qs, truncation: u32) -> Result<Self> {
        if alpha.is_rational() {
            return Err(Error::RationalAngle);
        }
        alpha.joint_radicand(&base)?;
        Ok(Self { alpha: alpha.fract(), base: base.fract(), truncation })
    }

    pub fn alpha(&self) -> &Qs {
        &self.alpha
    }

    pub fn base(&self) -> &Qs {
        &self.base
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Collapsed position `p + j alpha mod 1` of `I_j`.
    pub fn anchor(&self, j: i64) -> Qs {
        (&self.base + &(&self.alpha * &Qs::integer(j))).fract()
    }

    /// The point at affine position `t` in `[0, 1]` of `I_j`.
    pub fn interval_point(&self, j: i64, t: Rational) -> Result<CirclePoint> {
        if t < Rational::zero() || t > Rational::from_integer(1.into()) {
            return Err(Error::Invalid(format!("interval position {t} outside [0, 1]")));
        }
        Ok(CirclePoint::BlownUp(BlownPoint::Interval { index: j, inner: t, anchor: self.anchor(j) }))
    }

    /// The orbit index of `x` if `x = p + j alpha mod 1`.
    pub fn orbit_index(&self, x: &Qs) -> Option<i64> {
        let d = x.try_sub(&self.base).ok()?;
        if d.radicand() != self.alpha.radicand() && !d.is_rational() {
            return None;
        }
        let j = d.surd_coefficient() / self.alpha.surd_coefficient();
        if !j.is_integer() {
            return None;
        }
        let j: i64 = j.to_integer().try_into().ok()?;
        let rest = d.try_sub(&(&self.alpha * &Qs::integer(j))).ok()?;
        (rest.is_rational() && rest.rational_part().is_integer()).then_some(j)
    }

    /// A point away from the blown orbit.
    pub fn base_point(&self, x: Qs) -> Result<CirclePoint> {
        let x = x.fract();
        if let Some(j) = self.orbit_index(&x) {
            return Err(Error::Invalid(format!("{x} is the collapsed interval I[{j}]")));
        }
        Ok(CirclePoint::BlownUp(BlownPoint::Base(x)))
    }

    /// The semi-conjugacy collapsing each interval to its anchor.
    pub fn collapse(&self, p: &CirclePoint) -> Result<CirclePoint> {
        match p {
            CirclePoint::BlownUp(b) => Ok(CirclePoint::Angle(b.collapsed().clone())),
            other => Err(Error::ModelMismatch { expected: crate::circle::Model::BlownUp, found: other.model() }),
        }
    }
}

/// `R^steps` on the blown-up circle: `I_j -> I_{j + steps}` affinely and
/// `x -> x + steps * alpha` elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlowupRotation {
    pub circle: BlownCircle,
    pub steps: i64,
}

impl BlowupRotation {
    pub fn new(circle: BlownCircle) -> Self {
        Self { circle, steps: 1 }
    }

    pub fn apply(&self, p: &BlownPoint) -> Result<BlownPoint> {
        let shift = &self.circle.alpha * &Qs::integer(self.steps);
        Ok(match p {
            BlownPoint::Base(x) => BlownPoint::Base(x.try_add(&shift)?.fract()),
            BlownPoint::Interval { index, inner, anchor } => BlownPoint::Interval {
                index: index + self.steps,
                inner: inner.clone(),
                anchor: anchor.try_add(&shift)?.fract(),
            },
        })
    }

    pub fn power(&self, k: i64) -> Self {
        Self { circle: self.circle.clone(), steps: self.steps * k }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.circle != other.circle {
            return Err(Error::UnsupportedMap("blow-up rotations of different circles".into()));
        }
        Ok(Self { circle: self.circle.clone(), steps: self.steps + other.steps })
    }

    /// Reference point for rotation counting: the left end of `I_0`.
    pub fn reference_point(&self) -> CirclePoint {
        self.circle.interval_point(0, Rational::zero()).expect("in range")
    }
}
