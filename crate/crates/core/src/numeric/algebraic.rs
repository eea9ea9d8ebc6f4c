//! Real algebraic numbers as isolating intervals of square-free polynomials.

use num::{One, Zero};

use std::cmp::Ordering;
use std::fmt;

use super::poly::{count_roots, UPoly};
use super::rational::{rat, to_f64, Interval, Rational};
use crate::error::Error;

/// A real root of `poly`. Either `lo == hi` and the value is that rational, or
/// the open interval `(lo, hi)` holds exactly one root and `poly` changes sign on it.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    poly: UPoly,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraic {
    pub fn from_rational(r: Rational) -> Self {
        RealAlgebraic {
            poly: UPoly::linear_root(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    /// Builds the root of square-free `poly` isolated by `(lo, hi)`.
    /// Returns `None` if the interval does not isolate exactly one root.
    pub fn from_isolating(poly: UPoly, lo: Rational, hi: Rational) -> Option<Self> {
        let poly = poly.square_free();
        if lo == hi {
            return poly.eval(&lo).is_zero().then(|| Self::from_rational(lo));
        }
        if lo > hi {
            return None;
        }
        let seq = poly.sturm();
        let mut n = count_roots(&seq, &lo, &hi);
        if poly.eval(&hi).is_zero() {
            n -= 1;
        }
        if n != 1 || poly.eval(&lo).is_zero() {
            return None;
        }
        Some(RealAlgebraic { poly, lo, hi })
    }

    pub fn poly(&self) -> &UPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let m = (&self.lo + &self.hi) / rat(2);
        let sm = self.poly.sign_at(&m);
        if sm == 0 {
            *self = Self::from_rational(m);
            return;
        }
        if sm == self.poly.sign_at(&self.lo) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while self.width() > *width {
            self.refine();
        }
    }

    pub fn refined(&self, width: &Rational) -> Self {
        let mut c = self.clone();
        c.refine_to(width);
        c
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.refined(&Rational::new(1.into(), num::BigInt::one() << 60));
        (to_f64(&c.lo) + to_f64(&c.hi)) / 2.0
    }

    /// Exact sign of `e` evaluated at this number.
    pub fn sign_of_poly(&self, e: &UPoly) -> i32 {
        if let Some(r) = self.as_rational() {
            return e.sign_at(r);
        }
        let e = e.rem(&self.poly);
        if e.is_zero() {
            return 0;
        }
        let g = e.gcd(&self.poly);
        if !g.is_constant() && has_root_in_open(&g, &self.lo, &self.hi) {
            return 0;
        }
        let mut me = self.clone();
        loop {
            if let Some(s) = e.eval_interval(&me.interval()).strict_sign() {
                return s;
            }
            me.refine();
            if let Some(r) = me.as_rational() {
                return e.sign_at(r);
            }
        }
    }

    /// Switches to the exact representation when the root is rational.
    ///
    /// A rational root of the integer polynomial `c * poly` has a denominator dividing
    /// its leading coefficient `L`, so after refining below width `1/L` at most one
    /// candidate `k/L` remains in the interval.
    pub fn detect_rational(&mut self) {
        if self.as_rational().is_some() || self.poly.degree() == Some(1) {
            if self.poly.degree() == Some(1) && self.as_rational().is_none() {
                let r = -self.poly.coeff(0) / self.poly.coeff(1);
                *self = Self::from_rational(r);
            }
            return;
        }
        let den = self
            .poly
            .coeffs()
            .iter()
            .fold(num::BigInt::one(), |acc, c| {
                num::integer::lcm(acc, c.denom().clone())
            });
        let lead = (self.poly.lc() * Rational::from_integer(den)).to_integer();
        let lead = num::Signed::abs(&lead);
        let w = Rational::new(num::BigInt::one(), &lead + num::BigInt::one());
        self.refine_to(&w);
        if self.as_rational().is_some() {
            return;
        }
        let l = Rational::from_integer(lead.clone());
        let k = (&self.lo * &l).ceil();
        let c = k / l;
        if c > self.lo && c < self.hi && self.poly.eval(&c).is_zero() {
            *self = Self::from_rational(c);
        }
    }

    /// Same number with the defining polynomial replaced by a factor that still vanishes at it.
    pub fn with_factor(&self, f: &UPoly) -> Self {
        debug_assert_eq!(self.sign_of_poly(f), 0);
        if self.as_rational().is_some() {
            return self.clone();
        }
        RealAlgebraic {
            poly: f.square_free(),
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }
}

fn has_root_in_open(g: &UPoly, lo: &Rational, hi: &Rational) -> bool {
    if lo >= hi {
        return false;
    }
    let g = g.square_free();
    let mut n = count_roots(&g.sturm(), lo, hi);
    if g.eval(hi).is_zero() {
        n -= 1;
    }
    n > 0
}

/// Exact order of two real algebraic numbers.
pub fn compare(a: &RealAlgebraic, b: &RealAlgebraic) -> Ordering {
    if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
        return x.cmp(y);
    }
    if let Some(r) = a.as_rational() {
        return match b.sign_of_poly(&UPoly::linear_root(r)) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        };
    }
    if b.as_rational().is_some() {
        return compare(b, a).reverse();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut checked_equal = false;
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if !checked_equal {
            checked_equal = true;
            let g = a.poly.gcd(&b.poly);
            let lo = a.lo.clone().max(b.lo.clone());
            let hi = a.hi.clone().min(b.hi.clone());
            if !g.is_constant() && has_root_in_open(&g, &lo, &hi) {
                return Ordering::Equal;
            }
        }
        a.refine();
        b.refine();
        if a.as_rational().is_some() || b.as_rational().is_some() {
            return compare(&a, &b);
        }
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        compare(self, other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(
                f,
                "root of {} in ({}, {}) ~ {:.6}",
                self.poly,
                self.lo,
                self.hi,
                self.to_f64()
            ),
        }
    }
}

fn isolate_square_free(q: &UPoly) -> Vec<RealAlgebraic> {
    let mut out = Vec::new();
    if q.is_constant() {
        return out;
    }
    let seq = q.sturm();
    let b = q.root_bound();
    let mut stack = vec![(-b.clone(), b)];
    // depth-first, right half pushed first so roots come out in increasing order
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n > 1 {
            let m = (&lo + &hi) / rat(2);
            stack.push((m.clone(), hi));
            stack.push((lo, m));
            continue;
        }
        out.push(single_root(q, &seq, lo, hi));
    }
    out
}

/// The unique root of `q` in `(lo, hi]`.
fn single_root(q: &UPoly, seq: &[UPoly], mut lo: Rational, mut hi: Rational) -> RealAlgebraic {
    loop {
        if q.eval(&hi).is_zero() {
            return RealAlgebraic::from_rational(hi);
        }
        if !q.eval(&lo).is_zero() {
            let mut r = RealAlgebraic {
                poly: q.clone(),
                lo,
                hi,
            };
            r.detect_rational();
            return r;
        }
        let m = (&lo + &hi) / rat(2);
        if count_roots(seq, &lo, &m) == 1 {
            hi = m;
        } else {
            lo = m;
        }
    }
}

/// All distinct real roots of `p` in increasing order with their multiplicities.
pub fn isolate_real_roots(p: &UPoly) -> Result<Vec<(RealAlgebraic, usize)>, Error> {
    if p.is_zero() {
        return Err(Error::UndefinedRootSet);
    }
    let mut all: Vec<(RealAlgebraic, usize)> = Vec::new();
    for (f, m) in p.yun() {
        all.extend(isolate_square_free(&f).into_iter().map(|r| (r, m)));
    }
    all.sort_by(|a, b| compare(&a.0, &b.0));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::ratio;

    fn sqrt2() -> RealAlgebraic {
        RealAlgebraic::from_isolating(UPoly::from_ints(&[-2, 0, 1]), rat(1), rat(2)).unwrap()
    }

    #[test]
    fn isolates_with_multiplicity() {
        let r = isolate_real_roots(&UPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].0.as_rational(), Some(&rat(-1)));
        assert_eq!(r[1].1, 1);
        assert!(isolate_real_roots(&UPoly::from_ints(&[1, 0, 1]))
            .unwrap()
            .is_empty());
        let p = &UPoly::from_ints(&[-1, 1]).pow(2) * &UPoly::from_ints(&[2, 1]);
        let r = isolate_real_roots(&p).unwrap();
        assert_eq!(r.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(r[0].0.as_rational(), Some(&rat(-2)));
        assert!(matches!(
            isolate_real_roots(&UPoly::zero()),
            Err(Error::UndefinedRootSet)
        ));
    }

    #[test]
    fn compares_exactly() {
        let s = sqrt2();
        assert_eq!(
            compare(&s, &RealAlgebraic::from_rational(ratio(3, 2))),
            Ordering::Less
        );
        let t = RealAlgebraic::from_isolating(UPoly::from_ints(&[-2, 0, 1]), ratio(5, 4), rat(2))
            .unwrap();
        let u = RealAlgebraic::from_isolating(UPoly::from_ints(&[-2, 0, 1]), rat(1), ratio(3, 2))
            .unwrap();
        assert_eq!(compare(&u, &t), Ordering::Equal);
        let s3 =
            RealAlgebraic::from_isolating(UPoly::from_ints(&[-3, 0, 1]), rat(1), rat(2)).unwrap();
        assert_eq!(compare(&s, &s3), Ordering::Less);
        // same value, different defining polynomials
        let p = &UPoly::from_ints(&[-2, 0, 1]) * &UPoly::from_ints(&[2, 0, 1]);
        let s5 = RealAlgebraic::from_isolating(p, ratio(13, 10), ratio(3, 2)).unwrap();
        assert_eq!(compare(&s, &s5), Ordering::Equal);
    }

    #[test]
    fn sign_of_poly_detects_exact_zero() {
        let s = sqrt2();
        assert_eq!(s.sign_of_poly(&UPoly::from_ints(&[-2, 0, 1])), 0);
        assert_eq!(s.sign_of_poly(&UPoly::from_ints(&[-1, 1])), 1);
        assert_eq!(s.sign_of_poly(&UPoly::from_ints(&[-3, 2])), -1);
        let r = RealAlgebraic::from_rational(rat(3));
        assert_eq!(r.sign_of_poly(&UPoly::from_ints(&[-3, 1])), 0);
    }
}
