use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::circle::{Chord, CirclePoint, Model};
use crate::error::{Error, Result};
use crate::lamination::Lamination;
use crate::scalar::{Qs, Rational};

fn frac(p: i64, q: i64) -> CirclePoint {
    CirclePoint::real(Qs::ratio(p, q))
}

/// Farey edges with denominators at most `qmax` and both endpoints in the
/// real window `[lo, hi]`, together with the edges `(n, inf)` for integers
/// `n` in the window.
pub fn farey(qmax: u32, lo: &Rational, hi: &Rational) -> Result<Lamination> {
    if qmax == 0 {
        return Err(Error::Invalid("denominator bound must be at least 1".into()));
    }
    if lo > hi {
        return Err(Error::Invalid("empty Farey window".into()));
    }
    let q = qmax as i64;
    let to_i64 = |b: BigInt| -> Result<i64> { i64::try_from(b).map_err(|_| Error::Invalid("window too large".into())) };
    let first = to_i64(lo.floor().to_integer())?;
    let last = to_i64(hi.ceil().to_integer())?;
    let inside = |p: i64, d: i64| {
        let x = Rational::new(p.into(), d.into());
        lo <= &x && &x <= hi
    };
    let mut chords = Vec::new();
    for n in first..=last {
        if inside(n, 1) {
            chords.push(Chord::new(frac(n, 1), CirclePoint::infinity())?);
        }
    }
    for n in first..last {
        // Stern-Brocot subdivision of [n, n + 1]
        let mut stack = vec![(n, 1i64, n + 1, 1i64)];
        while let Some((a, b, c, d)) = stack.pop() {
            if inside(a, b) && inside(c, d) {
                chords.push(Chord::new(frac(a, b), frac(c, d))?);
            }
            if b + d <= q {
                stack.push((a, b, a + c, b + d));
                stack.push((a + c, b + d, c, d));
            }
        }
    }
    let note = format!("Farey edges with denominators <= {qmax} in [{lo}, {hi}]");
    let mut lam = Lamination::new(Model::ProjectiveLine, chords, note)?.expect_unlinked()?;
    lam.set_depth(qmax);
    Ok(lam)
}

/// `(p, q)` with `x = p / q` in lowest terms; infinity is `(1, 0)`.
pub fn as_fraction(p: &CirclePoint) -> Option<(BigInt, BigInt)> {
    if p.is_infinity() {
        return Some((1.into(), 0.into()));
    }
    let r = p.chart()?.as_rational()?;
    Some((r.numer().clone(), r.denom().clone()))
}

/// `|p s - q r|` for the endpoints `p/q`, `r/s` of a rational chord.
pub fn farey_determinant(c: &Chord) -> Option<BigInt> {
    let (p, q) = as_fraction(c.lo())?;
    let (r, s) = as_fraction(c.hi())?;
    Some((p * s - q * r).abs())
}

/// Largest denominator among the endpoints of the leaves.
pub fn max_denominator(lam: &Lamination) -> BigInt {
    lam.endpoints()
        .iter()
        .filter_map(as_fraction)
        .map(|(_, q)| q)
        .fold(BigInt::from(0), |a, b| a.max(b))
}

/// Whether `gcd(p, q) = 1`, as it always is for stored rationals.
pub fn lowest_terms(p: &BigInt, q: &BigInt) -> bool {
    p.gcd(q) == BigInt::from(1)
}
