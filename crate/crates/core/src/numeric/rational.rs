//! Rational helpers on top of `num::BigRational`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::Error;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((i, f)) = t.split_once('.') {
        if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = i.starts_with('-');
        let digits = format!("{}{}", i.trim_start_matches(['-', '+']), f);
        let mut n =
            BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        let d = num::pow(BigInt::from(10), f.len());
        return Ok(Rational::new(n, d));
    }
    let n = BigInt::from_str(t).map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Simplest rational (smallest denominator, then smallest magnitude) in the open interval `(lo, hi)`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !hi.is_positive() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    let next = &fl + Rational::one();
    if &next < hi {
        return next;
    }
    let lo_f = lo - &fl;
    let hi_f = hi - &fl;
    let y = if lo_f.is_zero() {
        (hi_f.recip()).floor() + Rational::one()
    } else {
        simplest_between(&hi_f.recip(), &lo_f.recip())
    };
    fl + y.recip()
}

/// Upper and lower rational bounds on `sqrt(r)` whose gap is at most `eps`.
pub fn sqrt_bounds(r: &Rational, eps: &Rational) -> (Rational, Rational) {
    assert!(!r.is_negative(), "square root of a negative number");
    if r.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let guess = to_f64(r).sqrt();
    let mut upper = if guess.is_finite() && guess > 0.0 {
        Rational::from_float(guess * (1.0 + 1e-9) + 1e-300).unwrap_or_else(|| r + Rational::one())
    } else {
        r + Rational::one()
    };
    if &(&upper * &upper) < r {
        upper = r + Rational::one();
    }
    loop {
        let lower = r / &upper;
        if &upper - &lower <= *eps {
            return (lower, upper);
        }
        // Newton step from above stays above the root; round up to a dyadic to keep sizes small.
        let next = (&upper + &lower) / rat(2);
        upper = round_up_dyadic(&next, 2 * bits_for(eps) + 8);
    }
}

fn bits_for(eps: &Rational) -> u32 {
    let v = to_f64(eps);
    if v <= 0.0 || !v.is_finite() {
        return 64;
    }
    (-v.log2()).ceil().max(1.0) as u32
}

fn round_up_dyadic(r: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = r * Rational::from_integer(scale.clone());
    Rational::new(scaled.ceil().to_integer(), scale)
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(r: Rational) -> Self {
        Interval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign of every element when the interval excludes zero.
    pub fn strict_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn intersects(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn sqrt(&self, eps: &Rational) -> Interval {
        let lo = if self.lo.is_positive() {
            sqrt_bounds(&self.lo, eps).0
        } else {
            Rational::zero()
        };
        let hi = sqrt_bounds(&self.hi.clone().max(Rational::zero()), eps).1;
        Interval::new(lo, hi)
    }
}
