//! Signs, sign vectors and the product of the three-element left regular band.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Ordered `Minus < Zero < Plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_i32(s: i32) -> Sign {
        match s.signum() {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::Zero => 0,
        }
    }

    /// `x·y = x` if `x ≠ 0`, else `y`.
    pub fn product(self, other: Sign) -> Sign {
        if self == Sign::Zero {
            other
        } else {
            self
        }
    }

    pub fn flip(self) -> Sign {
        Sign::from_i32(-self.to_i32())
    }

    /// Ordinary multiplication of signs.
    pub fn times(self, other: Sign) -> Sign {
        Sign::from_i32(self.to_i32() * other.to_i32())
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|s| **s == Sign::Zero).count()
    }

    pub fn product(&self, other: &SignVector) -> Result<SignVector, Error> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(self.mul(other))
    }

    /// Componentwise product; panics on a length mismatch.
    pub fn mul(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.len(), other.len(), "sign vectors of different lengths");
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.product(*b))
                .collect(),
        )
    }

    pub fn drop_coordinate(&self, i: usize) -> SignVector {
        let mut v = self.0.clone();
        v.remove(i);
        SignVector(v)
    }

    pub fn negate_coordinate(&self, i: usize) -> SignVector {
        let mut v = self.0.clone();
        v[i] = v[i].flip();
        SignVector(v)
    }
}

/// Componentwise product of two sign vectors of equal length.
pub fn l21_product(u: &SignVector, v: &SignVector) -> Result<SignVector, Error> {
    u.product(v)
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' '))
            .map(|c| {
                Sign::from_char(c).ok_or_else(|| Error::Parse(format!("bad sign {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignVector)
    }
}

impl Serialize for SignVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples: `sv("0+-0")`.
pub fn sv(s: &str) -> SignVector {
    s.parse().expect("valid sign vector literal")
}
