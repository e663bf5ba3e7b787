use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::circle::ProjectivePoint;
use crate::error::{Error, Result};
use crate::scalar::{Qs, Rational};

/// A projective map `x -> (a x + b) / (c x + d)` with entries in one real
/// quadratic field.
///
/// Matrices are stored scale-canonically: rational matrices as primitive
/// integer matrices whose first nonzero entry is positive, others divided by
/// their first nonzero entry. Structural equality is projective equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoebiusMap {
    m: [Qs; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoebiusClass {
    Identity,
    Elliptic,
    Parabolic { fixed: ProjectivePoint },
    Hyperbolic { attracting: ProjectivePoint, repelling: ProjectivePoint },
}

fn canonical(m: [Qs; 4]) -> [Qs; 4] {
    if m.iter().all(Qs::is_rational) {
        let rs: Vec<&Rational> = m.iter().map(|q| q.as_rational().unwrap()).collect();
        let lcm = rs.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
        let ints: Vec<BigInt> = rs.iter().map(|r| (*r * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            g = -g;
        }
        let mut out = ints.into_iter().map(|x| Qs::from_rational(Rational::from_integer(x / &g)));
        return std::array::from_fn(|_| out.next().unwrap());
    }
    let lead = m.iter().find(|x| !x.is_zero()).expect("nonzero matrix").clone();
    m.map(|x| x.try_div(&lead).expect("single field"))
}

impl MoebiusMap {
    pub fn new(a: Qs, b: Qs, c: Qs, d: Qs) -> Result<Self> {
        a.joint_radicand(&b)?;
        a.joint_radicand(&c)?;
        a.joint_radicand(&d)?;
        b.joint_radicand(&c)?;
        b.joint_radicand(&d)?;
        c.joint_radicand(&d)?;
        let det = a.try_mul(&d)?.try_sub(&b.try_mul(&c)?)?;
        if det.is_zero() {
            return Err(Error::Invalid("singular Moebius matrix".into()));
        }
        Ok(Self { m: canonical([a, b, c, d]) })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1).unwrap()
    }

    pub fn entries(&self) -> &[Qs; 4] {
        &self.m
    }

    pub fn det(&self) -> Qs {
        let [a, b, c, d] = &self.m;
        a * d - b * c
    }

    pub fn trace(&self) -> Qs {
        &self.m[0] + &self.m[3]
    }

    pub fn is_orientation_preserving(&self) -> bool {
        self.det() > Qs::zero()
    }

    pub fn is_identity(&self) -> bool {
        let [a, b, c, d] = &self.m;
        b.is_zero() && c.is_zero() && a == d
    }

    pub fn apply(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        let [a, b, c, d] = &self.m;
        let (num, den) = match p {
            ProjectivePoint::Infinity => (a.clone(), c.clone()),
            ProjectivePoint::Finite(x) => (a.try_mul(x)?.try_add(b)?, c.try_mul(x)?.try_add(d)?),
        };
        if den.is_zero() {
            Ok(ProjectivePoint::Infinity)
        } else {
            Ok(ProjectivePoint::Finite(num.try_div(&den)?))
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        Self::new(
            a.try_mul(e)?.try_add(&b.try_mul(g)?)?,
            a.try_mul(f)?.try_add(&b.try_mul(h)?)?,
            c.try_mul(e)?.try_add(&d.try_mul(g)?)?,
            c.try_mul(f)?.try_add(&d.try_mul(h)?)?,
        )
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = &self.m;
        Self::new(d.clone(), -b, -c, a.clone()).expect("invertible")
    }

    /// `self ∘ other ∘ self^-1`.
    pub fn conjugate(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.compose(&self.inverse())
    }

    /// The fixed points in increasing linear order (infinity first).
    pub fn fixed_points(&self) -> Result<Vec<ProjectivePoint>> {
        if self.is_identity() {
            return Err(Error::AllFixed);
        }
        let [a, b, c, d] = &self.m;
        if c.is_zero() {
            // infinity is fixed; a finite fixed point solves (a - d) x = -b
            let amd = a - d;
            return Ok(if amd.is_zero() {
                vec![ProjectivePoint::Infinity]
            } else {
                vec![ProjectivePoint::Infinity, ProjectivePoint::Finite(b.try_div(&(d - a))?)]
            });
        }
        // c x^2 + (d - a) x - b = 0
        let amd = a - d;
        let disc = &amd * &amd + Qs::integer(4) * b * c;
        let two_c = Qs::integer(2) * c;
        let mut pts = match disc.signum() {
            std::cmp::Ordering::Less => vec![],
            std::cmp::Ordering::Equal => vec![amd.try_div(&two_c)?],
            std::cmp::Ordering::Greater => {
                let root = disc.sqrt()?;
                vec![
                    amd.try_add(&root)?.try_div(&two_c)?,
                    amd.try_sub(&root)?.try_div(&two_c)?,
                ]
            }
        };
        pts.sort();
        Ok(pts.into_iter().map(ProjectivePoint::Finite).collect())
    }

    /// Trace classification of an orientation-preserving map, with the
    /// attracting fixed point of a hyperbolic map found by exact one-sided
    /// displacement.
    pub fn classify(&self) -> Result<MoebiusClass> {
        if !self.is_orientation_preserving() {
            return Err(Error::NotOrientationPreserving);
        }
        if self.is_identity() {
            return Ok(MoebiusClass::Identity);
        }
        let tr = self.trace();
        let lhs = &tr * &tr;
        let rhs = Qs::integer(4) * self.det();
        Ok(match lhs.cmp(&rhs) {
            std::cmp::Ordering::Less => MoebiusClass::Elliptic,
            std::cmp::Ordering::Equal => MoebiusClass::Parabolic {
                fixed: self.fixed_points()?.remove(0),
            },
            std::cmp::Ordering::Greater => {
                let recs = super::CircleMap::Moebius(self.clone()).fixed_points()?;
                let attracting = recs.iter().find(|r| r.is_attracting()).expect("hyperbolic");
                let repelling = recs.iter().find(|r| r.is_repelling()).expect("hyperbolic");
                let proj = |p: &crate::circle::CirclePoint| match p {
                    crate::circle::CirclePoint::Projective(q) => q.clone(),
                    _ => unreachable!(),
                };
                MoebiusClass::Hyperbolic {
                    attracting: proj(&attracting.point),
                    repelling: proj(&repelling.point),
                }
            }
        })
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}
