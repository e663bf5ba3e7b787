use crate::error::{Error, Result};
use crate::scalar::Qs;

/// A piecewise-affine orientation-preserving homeomorphism of `R/Z`, given by
/// a lift through the knots `(x_i, X_i)`.
///
/// `x_i` are strictly increasing in `[0, 1)`, `X_i` strictly increasing with
/// `X_0` in `[0, 1)` and `X_last < X_0 + 1`; between knots (and across the
/// wrap, to `(x_0 + 1, X_0 + 1)`) the lift is affine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiecewiseAffine {
    knots: Vec<(Qs, Qs)>,
}

impl PiecewiseAffine {
    pub fn new(knots: Vec<(Qs, Qs)>) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::Invalid("piecewise-affine map needs a knot".into()));
        }
        let (zero, one) = (Qs::zero(), Qs::one());
        for (x, _) in &knots {
            if x < &zero || x >= &one {
                return Err(Error::Invalid(format!("knot {x} outside [0, 1)")));
            }
        }
        for w in knots.windows(2) {
            if w[0].0 >= w[1].0 || w[0].1.try_sub(&w[1].1)? >= zero {
                return Err(Error::Invalid("knots must increase strictly".into()));
            }
        }
        let first = &knots[0].1;
        let last = &knots[knots.len() - 1].1;
        if last.try_sub(first)? >= one {
            return Err(Error::Invalid("lift must advance by less than 1 per turn".into()));
        }
        // normalize the lift so that X_0 lies in [0, 1)
        let w = Qs::from_rational(knots[0].1.floor().into());
        let knots = knots.into_iter().map(|(x, y)| (x, y - &w)).collect();
        Ok(Self { knots })
    }

    /// Rigid rotation by `alpha`.
    pub fn rotation(alpha: Qs) -> Self {
        Self { knots: vec![(Qs::zero(), alpha.fract())] }
    }

    pub fn identity() -> Self {
        Self::rotation(Qs::zero())
    }

    pub fn knots(&self) -> &[(Qs, Qs)] {
        &self.knots
    }

    fn knot(&self, i: usize) -> (Qs, Qs) {
        let n = self.knots.len();
        let (x, y) = &self.knots[i % n];
        let w = Qs::integer((i / n) as i64);
        (x + &w, y + &w)
    }

    /// The lift evaluated at any real `x`.
    pub fn lift(&self, x: &Qs) -> Result<Qs> {
        let n = x.floor();
        let shift = Qs::from_rational(n.clone().into());
        let r = x.try_sub(&shift)?;
        let k = self.knots.len();
        // segment i runs from knot i to knot i + 1
        let (lo, hi) = if r < self.knots[0].0 {
            let (a, b) = self.knot(k - 1);
            ((&a - &Qs::one(), &b - &Qs::one()), self.knot(k))
        } else {
            let i = self.knots.iter().rposition(|(xi, _)| xi <= &r).expect("r >= x_0");
            (self.knot(i), self.knot(i + 1))
        };
        let slope = hi.1.try_sub(&lo.1)?.try_div(&hi.0.try_sub(&lo.0)?)?;
        lo.1.try_add(&r.try_sub(&lo.0)?.try_mul(&slope)?)?.try_add(&shift)
    }

    pub fn apply(&self, x: &Qs) -> Result<Qs> {
        Ok(self.lift(x)?.fract())
    }

    pub fn is_identity(&self) -> bool {
        self.knots.iter().all(|(x, y)| x == y)
    }

    pub fn inverse(&self) -> Self {
        let mut knots: Vec<(Qs, Qs)> = self
            .knots
            .iter()
            .map(|(x, y)| {
                let w = Qs::from_rational(y.floor().into());
                (y - &w, x - &w)
            })
            .collect();
        knots.sort();
        Self::new(knots).expect("inverse of a homeomorphism")
    }

    /// `self ∘ other`, with collinear knots merged.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let inv = other.inverse();
        let mut xs: Vec<Qs> = other.knots.iter().map(|(x, _)| x.clone()).collect();
        for (x, _) in &self.knots {
            xs.push(inv.apply(x)?);
        }
        xs.sort();
        xs.dedup();
        let mut knots = Vec::with_capacity(xs.len());
        for x in xs {
            let y = self.lift(&other.lift(&x)?)?;
            knots.push((x, y));
        }
        Self::new(knots)?.simplified()
    }

    /// Drops knots where the lift has no corner.
    pub fn simplified(self) -> Result<Self> {
        let k = self.knots.len();
        if k == 1 {
            return Ok(self);
        }
        let slope = |a: &(Qs, Qs), b: &(Qs, Qs)| -> Result<Qs> { b.1.try_sub(&a.1)?.try_div(&b.0.try_sub(&a.0)?) };
        let mut keep = Vec::new();
        for i in 0..k {
            let prev = if i == 0 {
                let (a, b) = self.knot(k - 1);
                (a - Qs::one(), b - Qs::one())
            } else {
                self.knot(i - 1)
            };
            let cur = self.knot(i);
            let next = self.knot(i + 1);
            if slope(&prev, &cur)? != slope(&cur, &next)? {
                keep.push(self.knots[i].clone());
            }
        }
        if keep.is_empty() {
            // affine with slope 1: a rotation
            let (x, y) = &self.knots[0];
            return Ok(Self::rotation(y.try_sub(x)?));
        }
        Self::new(keep)
    }

    pub fn power(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..k.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Exact equality as maps of the circle.
    pub fn same_map(&self, other: &Self) -> Result<bool> {
        for (x, _) in self.knots.iter().chain(&other.knots) {
            let (a, b) = (self.lift(x)?, other.lift(x)?);
            let d = a.try_sub(&b)?;
            if d.fract() != Qs::zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All fixed points in `[0, 1)`, increasing.
    pub fn fixed_points(&self) -> Result<Vec<Qs>> {
        if self.is_identity() {
            return Err(Error::AllFixed);
        }
        let k = self.knots.len();
        let mut out = Vec::new();
        for i in 0..k {
            let (x0, y0) = self.knot(i);
            let (x1, y1) = self.knot(i + 1);
            let d0 = y0.try_sub(&x0)?;
            let d1 = y1.try_sub(&x1)?;
            if d0 == d1 {
                if d0.fract().is_zero() {
                    return Err(Error::NonIsolatedFixedPoints);
                }
                continue;
            }
            // displacement is affine on the segment; look for integer values
            let (lo, hi) = if d0 < d1 { (&d0, &d1) } else { (&d1, &d0) };
            let mut n = lo.floor();
            if Qs::from_rational(n.clone().into()) < *lo {
                n += 1;
            }
            while Qs::from_rational(n.clone().into()) <= *hi {
                let target = Qs::from_rational(n.clone().into());
                let t = target.try_sub(&d0)?.try_div(&d1.try_sub(&d0)?)?;
                let x = x0.try_add(&t.try_mul(&x1.try_sub(&x0)?)?)?;
                // right endpoint belongs to the next segment
                if x < x1 {
                    out.push(x.fract());
                }
                n += 1;
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}
