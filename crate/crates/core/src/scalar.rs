//! Exact elements of real quadratic fields `Q(sqrt d)`.
//!
//! A [`QuadraticScalar`] is `rational + surd * sqrt(radicand)` with rational
//! coefficients and a square-free radicand. Values from the same field (or a
//! rational and anything) support exact field arithmetic. Values from two
//! different fields can still be *compared* exactly: `1, sqrt d, sqrt f` are
//! linearly independent over `Q`, so two such values are never equal and
//! refining rational enclosures always separates them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n / d` as a big rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticScalar {
    rational: Rational,
    surd: Rational,
    radicand: u64,
}

pub type Qs = QuadraticScalar;

/// Writes `n = k^2 * s` with `s` square-free. Fails if `s` overflows `u64`.
fn square_free_split(n: &BigUint) -> Result<(BigUint, u64)> {
    if n.is_zero() {
        return Ok((BigUint::zero(), 0));
    }
    let mut rest = n.clone();
    let mut k = BigUint::one();
    let mut s = BigUint::one();
    let mut p: u64 = 2;
    loop {
        let pb = BigUint::from(p);
        if &pb * &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        if e > 0 {
            k *= pb.pow(e / 2);
            if e % 2 == 1 {
                s *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // `rest` now has at most two prime factors, each larger than the cube root
    // of the original remainder, so it is square-free unless it is a square.
    let r = rest.sqrt();
    if &r * &r == rest {
        k *= r;
    } else {
        s *= rest;
    }
    let s = s
        .to_u64()
        .ok_or_else(|| Error::NotQuadratic(n.to_string()))?;
    Ok((k, s))
}

fn sign_of(x: &Rational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Exact sign of `a + b sqrt(d)` by sign-preserving squaring.
fn sign_parts(a: &Rational, b: &Rational, d: u64) -> Ordering {
    let sa = sign_of(a);
    let sb = if d == 0 { Ordering::Equal } else { sign_of(b) };
    match (sa, sb) {
        (x, Ordering::Equal) => x,
        (Ordering::Equal, y) => y,
        (x, y) if x == y => x,
        (Ordering::Greater, Ordering::Less) => (a * a).cmp(&(b * b * BigInt::from(d))),
        _ => (b * b * BigInt::from(d)).cmp(&(a * a)),
    }
}

impl QuadraticScalar {
    pub fn new(rational: Rational, surd: Rational, radicand: u64) -> Result<Self> {
        if radicand == 0 || surd.is_zero() {
            return Ok(Self::from_rational(rational));
        }
        let (k, s) = square_free_split(&BigUint::from(radicand))?;
        let surd = surd * Rational::from_integer(BigInt::from(k));
        if s == 1 {
            Ok(Self::from_rational(rational + surd))
        } else {
            Ok(Self {
                rational,
                surd,
                radicand: s,
            })
        }
    }

    /// Builds from a radicand already known to be square-free (or zero).
    fn canon(rational: Rational, surd: Rational, radicand: u64) -> Self {
        if radicand == 0 || surd.is_zero() {
            Self::from_rational(rational)
        } else {
            Self {
                rational,
                surd,
                radicand,
            }
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self {
            rational: r,
            surd: Rational::zero(),
            radicand: 0,
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// `(a + b sqrt d) / c` from small integers.
    pub fn from_ints(a: i64, b: i64, d: u64, c: i64) -> Result<Self> {
        Self::new(rat(a, c), rat(b, c), d)
    }

    /// The golden ratio `(1 + sqrt 5) / 2`.
    pub fn golden() -> Self {
        Self::from_ints(1, 1, 5, 2).expect("sqrt 5")
    }

    /// The positive square root of a non-negative rational.
    pub fn sqrt_rational(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::NotQuadratic(q.to_string()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        // sqrt(N/D) = sqrt(N*D) / D
        let prod = (q.numer() * q.denom())
            .to_biguint()
            .expect("non-negative product");
        let (k, s) = square_free_split(&prod)?;
        let coeff = Rational::new(BigInt::from(k), q.denom().clone());
        Self::new(Rational::zero(), coeff, s)
    }

    /// Square root of a field element; only succeeds when the result stays in a
    /// quadratic field, i.e. when the argument is rational.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_rational() {
            Self::sqrt_rational(&self.rational)
        } else {
            Err(Error::NotQuadratic(self.to_string()))
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_coefficient(&self) -> &Rational {
        &self.surd
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 0
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.rational.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    /// The radicand of the smallest field containing both values.
    pub fn joint_radicand(&self, other: &Self) -> Result<u64> {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::UnsupportedField(a, b)),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let d = self.joint_radicand(o)?;
        Ok(Self::canon(&self.rational + &o.rational, &self.surd + &o.surd, d))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        let d = self.joint_radicand(o)?;
        Ok(Self::canon(&self.rational - &o.rational, &self.surd - &o.surd, d))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let d = self.joint_radicand(o)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let r = &self.rational * &o.rational + &self.surd * &o.surd * dd;
        let s = &self.rational * &o.surd + &self.surd * &o.rational;
        Ok(Self::canon(r, s, d))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.rational.recip()));
        }
        let d = Rational::from_integer(BigInt::from(self.radicand));
        let norm = &self.rational * &self.rational - &self.surd * &self.surd * d;
        Ok(Self::canon(&self.rational / &norm, -&self.surd / &norm, self.radicand))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.inverse()?)
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rational: self.rational.clone(),
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Exact sign of the value.
    pub fn signum(&self) -> Ordering {
        sign_parts(&self.rational, &self.surd, self.radicand)
    }

    /// Rational enclosure `lo <= self <= hi` with width at most `2^-bits`
    /// times a small constant.
    pub fn enclose(&self, bits: u32) -> (Rational, Rational) {
        if self.is_rational() {
            return (self.rational.clone(), self.rational.clone());
        }
        let t = &self.surd * &self.surd * Rational::from_integer(BigInt::from(self.radicand));
        let prod = (t.numer() * t.denom()).to_biguint().expect("positive");
        let root = (prod << (2 * bits as usize)).sqrt();
        let scale = t.denom() << bits as usize;
        let lo = Rational::new(BigInt::from_biguint(Sign::Plus, root.clone()), scale.clone());
        let hi = Rational::new(BigInt::from_biguint(Sign::Plus, root + 1u32), scale);
        if self.surd.is_negative() {
            (&self.rational - hi, &self.rational - lo)
        } else {
            (&self.rational + lo, &self.rational + hi)
        }
    }

    /// Exact comparison. Values from different fields are separated by
    /// enclosure refinement, which always terminates because they differ.
    pub fn compare(&self, other: &Self) -> Ordering {
        if self.joint_radicand(other).is_ok() {
            return sign_parts(
                &(&self.rational - &other.rational),
                &(&self.surd - &other.surd),
                self.radicand.max(other.radicand),
            );
        }
        let mut bits = 32;
        loop {
            let (alo, ahi) = self.enclose(bits);
            let (blo, bhi) = other.enclose(bits);
            if ahi < blo {
                return Ordering::Less;
            }
            if bhi < alo {
                return Ordering::Greater;
            }
            bits *= 2;
            assert!(bits <= 1 << 20, "enclosure refinement did not separate values");
        }
    }

    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.rational.floor().to_integer();
        }
        let (lo, _) = self.enclose(64);
        let mut f = lo.floor().to_integer();
        while self.compare(&Self::from_rational(Rational::from_integer(&f + 1))) != Ordering::Less {
            f += 1;
        }
        while self.compare(&Self::from_rational(Rational::from_integer(f.clone()))) == Ordering::Less {
            f -= 1;
        }
        f
    }

    /// The representative of `self mod 1` in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let f = self.floor();
        if f.is_zero() {
            return self.clone();
        }
        Self {
            rational: &self.rational - Rational::from_integer(f),
            surd: self.surd.clone(),
            radicand: self.radicand,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclose(64);
        ((lo + hi) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl PartialOrd for QuadraticScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<i64> for QuadraticScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<Rational> for QuadraticScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Neg for QuadraticScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            rational: -self.rational,
            surd: -self.surd,
            radicand: self.radicand,
        }
    }
}

impl Neg for &QuadraticScalar {
    type Output = QuadraticScalar;
    fn neg(self) -> QuadraticScalar {
        -self.clone()
    }
}

// Operator forms panic on mixed fields; use the `try_*` methods where the
// operands may come from different fields.
macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&QuadraticScalar> for &QuadraticScalar {
            type Output = QuadraticScalar;
            fn $method(self, rhs: &QuadraticScalar) -> QuadraticScalar {
                self.$try(rhs).expect("quadratic scalar arithmetic")
            }
        }
        impl $trait<QuadraticScalar> for QuadraticScalar {
            type Output = QuadraticScalar;
            fn $method(self, rhs: QuadraticScalar) -> QuadraticScalar {
                (&self).$try(&rhs).expect("quadratic scalar arithmetic")
            }
        }
        impl $trait<&QuadraticScalar> for QuadraticScalar {
            type Output = QuadraticScalar;
            fn $method(self, rhs: &QuadraticScalar) -> QuadraticScalar {
                (&self).$try(rhs).expect("quadratic scalar arithmetic")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadraticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_rational(&self.rational));
        }
        let coeff = if self.surd.is_one() {
            String::new()
        } else if (-&self.surd).is_one() {
            "-".to_string()
        } else {
            format!("{}*", fmt_rational(&self.surd))
        };
        if self.rational.is_zero() {
            write!(f, "{coeff}sqrt({})", self.radicand)
        } else if self.surd.is_negative() {
            let pos = -&self.surd;
            let c = if pos.is_one() { String::new() } else { format!("{}*", fmt_rational(&pos)) };
            write!(f, "{} - {c}sqrt({})", fmt_rational(&self.rational), self.radicand)
        } else {
            write!(f, "{} + {coeff}sqrt({})", fmt_rational(&self.rational), self.radicand)
        }
    }
}

/// Parses `"p"`, `"p/q"`, or the display form `"a + b*sqrt(d)"`, `"sqrt(d)"`.
impl std::str::FromStr for QuadraticScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad scalar `{s}`"));
        let parse_rat = |t: &str| -> Result<Rational> {
            if t.is_empty() {
                return Err(bad());
            }
            match t.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.parse().map_err(|_| bad())?;
                    let d: BigInt = d.parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(Rational::new(n, d))
                }
                None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
            }
        };
        let Some(pos) = s.find("sqrt(") else {
            return Ok(Self::from_rational(parse_rat(&s)?));
        };
        let close = s[pos..].find(')').ok_or_else(bad)? + pos;
        if close + 1 != s.len() {
            return Err(bad());
        }
        let d: u64 = s[pos + 5..close].parse().map_err(|_| bad())?;
        let head = &s[..pos];
        let head = head.strip_suffix('*').unwrap_or(head);
        // split `head` into rational part and signed coefficient
        let split = head
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (r, c) = match split {
            Some(i) => (parse_rat(&head[..i])?, &head[i..]),
            None => (Rational::zero(), head),
        };
        let c = match c {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => parse_rat(t.strip_prefix('+').unwrap_or(t))?,
        };
        Self::new(r, c, d)
    }
}
