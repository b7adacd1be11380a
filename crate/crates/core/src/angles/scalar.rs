//! Angle values that are either exact rationals or floats.
//!
//! Arithmetic between two exact values stays exact; anything touching a
//! float becomes a float. Signs of floats are taken with a small dead zone
//! so that boundary cases computed in floating point still read as ties.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Floats closer than this to zero count as zero.
pub const FLOAT_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational64),
    Float(f64),
}

impl Scalar {
    pub fn int(n: i64) -> Scalar {
        Scalar::Exact(Rational64::from_integer(n))
    }

    pub fn ratio(p: i64, q: i64) -> Scalar {
        Scalar::Exact(Rational64::new(p, q))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match *self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => x,
        }
    }

    pub fn sign(&self) -> Ordering {
        match *self {
            Scalar::Exact(r) => r.cmp(&Rational64::zero()),
            Scalar::Float(x) if x.abs() <= FLOAT_EPS => Ordering::Equal,
            Scalar::Float(x) => x.partial_cmp(&0.0).unwrap_or(Ordering::Equal),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Comparison with the same tolerance as [`Scalar::sign`].
    pub fn cmp_tol(&self, other: &Scalar) -> Ordering {
        (*self - *other).sign()
    }

    pub fn complement(self) -> Scalar {
        Scalar::int(1) - self
    }

    pub fn abs(self) -> Scalar {
        if self.sign() == Ordering::Less {
            -self
        } else {
            self
        }
    }

    pub fn floor(&self) -> i64 {
        match *self {
            Scalar::Exact(r) => r.floor().to_integer(),
            Scalar::Float(x) => x.floor() as i64,
        }
    }

    /// Parses `p/q`, an integer or a decimal. Decimals become exact
    /// rationals when `exact` is set and floats otherwise.
    pub fn parse(s: &str, exact: bool) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("`{s}` is not a number"));
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            return Ok(Scalar::ratio(p, q));
        }
        if let Ok(n) = s.parse::<i64>() {
            return Ok(Scalar::int(n));
        }
        if exact {
            return decimal(s).ok_or_else(bad);
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        Ok(Scalar::Float(x))
    }
}

fn decimal(s: &str) -> Option<Scalar> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.')?;
    if frac.len() > 15 || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let den = 10i64.checked_pow(frac.len() as u32)?;
    let int: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    let num = int.checked_mul(den)?.checked_add(frac)?;
    Some(Scalar::ratio(if neg { -num } else { num }, den))
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        Scalar::parse(s, false)
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Scalar {
        Scalar::Float(x)
    }
}

impl From<Rational64> for Scalar {
    fn from(r: Rational64) -> Scalar {
        Scalar::Exact(r)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (a, b) => Scalar::Float(a.to_f64() $op b.to_f64()),
                }
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Mul<i64> for Scalar {
    type Output = Scalar;
    fn mul(self, k: i64) -> Scalar {
        self * Scalar::int(k)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Scalar::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(_) => s.serialize_str(&self.to_string()),
            Scalar::Float(x) => s.serialize_f64(*x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(Scalar::parse("3/10", false).unwrap(), Scalar::ratio(3, 10));
        assert_eq!(Scalar::parse("0.3", true).unwrap(), Scalar::ratio(3, 10));
        assert_eq!(Scalar::parse("2.45", true).unwrap(), Scalar::ratio(49, 20));
        assert_eq!(Scalar::parse("0.3", false).unwrap(), Scalar::Float(0.3));
        assert!(Scalar::parse("1/0", false).is_err());
        assert!(Scalar::parse("x", true).is_err());
    }

    #[test]
    fn exactness_and_ties() {
        let s = Scalar::ratio(1, 10) + Scalar::ratio(2, 10) - Scalar::ratio(3, 10);
        assert_eq!(s.sign(), Ordering::Equal);
        let f = Scalar::Float(0.1) + Scalar::Float(0.2) - Scalar::Float(0.3);
        assert_eq!(f.sign(), Ordering::Equal);
        assert!(!(Scalar::Float(0.5) + Scalar::int(1)).is_exact());
    }
}
