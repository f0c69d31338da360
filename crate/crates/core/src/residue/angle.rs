use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `"a/b"` or `"a"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim().parse::<i64>().map_err(|_| err())?, b.trim().parse::<i64>().map_err(|_| err())?),
        None => (t.parse::<i64>().map_err(|_| err())?, 1),
    };
    if den == 0 {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Always `num/den`, reduced, with a positive denominator.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Serde adapter for rationals as `"a/b"` strings.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for sequences of rationals as `"a/b"` strings.
pub mod rational_vec_string {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}

/// An element `t` of ℚ/ℤ standing for `exp(2π√−1·t)`, kept reduced in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalAngle(Rational);

impl RationalAngle {
    pub fn new(t: Rational) -> Self {
        let one = Rational::one();
        let mut v = t % one;
        if v < Rational::zero() {
            v += one;
        }
        RationalAngle(v)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(Rational::new(num, den))
    }

    pub fn zero() -> Self {
        RationalAngle(Rational::zero())
    }

    pub fn value(&self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `m · t mod 1`.
    pub fn scale(&self, m: i64) -> Self {
        Self::new(self.0 * m)
    }

    /// Multiplicative order of the root of unity `exp(2π√−1·t)`.
    pub fn order(&self) -> i64 {
        *self.0.denom()
    }

    pub fn denominator_lcm(angles: &[RationalAngle]) -> i64 {
        angles.iter().fold(1, |acc, a| acc.lcm(a.0.denom()))
    }
}

impl Add for RationalAngle {
    type Output = RationalAngle;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.0 + rhs.0)
    }
}

impl Sub for RationalAngle {
    type Output = RationalAngle;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.0 - rhs.0)
    }
}

impl Neg for RationalAngle {
    type Output = RationalAngle;
    fn neg(self) -> Self {
        Self::new(-self.0)
    }
}

impl From<Rational> for RationalAngle {
    fn from(t: Rational) -> Self {
        Self::new(t)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for RationalAngle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Self::new)
    }
}

impl Serialize for RationalAngle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalAngle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let t = parse_rational(&s).map_err(serde::de::Error::custom)?;
        let angle = Self::new(t);
        if angle.0 != t {
            return Err(serde::de::Error::custom(format!("angle {s:?} is not normalized to [0,1)")));
        }
        Ok(angle)
    }
}
