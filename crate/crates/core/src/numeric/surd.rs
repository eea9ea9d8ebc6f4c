//! Exact signs in `Q(alpha)[sqrt(d)]`.
//!
//! Elements of `Q(alpha)` are polynomials evaluated at `alpha`, reduced modulo its
//! defining polynomial.

use num::Zero;

use super::algebraic::RealAlgebraic;
use super::poly::UPoly;
use super::rational::{rat, Interval, Rational};

/// The extension `Q(alpha)`; arithmetic is carried out in `Q[x] / (poly)`.
#[derive(Clone, Debug)]
pub struct Field {
    alpha: RealAlgebraic,
}

impl Field {
    pub fn new(alpha: RealAlgebraic) -> Self {
        Field { alpha }
    }

    pub fn rational(r: Rational) -> Self {
        Field {
            alpha: RealAlgebraic::from_rational(r),
        }
    }

    pub fn alpha(&self) -> &RealAlgebraic {
        &self.alpha
    }

    pub fn reduce(&self, e: &UPoly) -> UPoly {
        e.rem(self.alpha.poly())
    }

    pub fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.reduce(&(a * b))
    }

    pub fn sign(&self, e: &UPoly) -> i32 {
        self.alpha.sign_of_poly(e)
    }

    /// Sign of `a + b sqrt(d)`, with `d >= 0`.
    pub fn sign1(&self, a: &UPoly, b: &UPoly, d: &UPoly) -> i32 {
        let sa = self.sign(a);
        let sb = self.sign(b);
        if sb == 0 || self.sign(d) == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let n = &self.mul(a, a) - &self.mul(&self.mul(b, b), d);
        sa * self.sign(&n)
    }

    /// Sign of `a + b sqrt(d1) + c sqrt(d2)`, with `d1, d2 >= 0`.
    pub fn sign2(&self, a: &UPoly, b: &UPoly, d1: &UPoly, c: &UPoly, d2: &UPoly) -> i32 {
        let sx = self.sign1(a, b, d1);
        let sc = self.sign(c);
        if sc == 0 || self.sign(d2) == 0 {
            return sx;
        }
        if sx == 0 {
            return sc;
        }
        if sx == sc {
            return sx;
        }
        // (a + b sqrt d1)^2 - c^2 d2
        let p =
            &(&self.mul(a, a) + &self.mul(&self.mul(b, b), d1)) - &self.mul(&self.mul(c, c), d2);
        let q = self.mul(a, b).scale(&rat(2));
        sx * self.sign1(&p, &q, d1)
    }

    /// Interval enclosure of an element after refining `alpha` to the given width.
    pub fn enclose(&self, e: &UPoly, width: &Rational) -> Interval {
        let a = self.alpha.refined(width);
        e.eval_interval(&a.interval())
    }
}

/// An element `p + q sqrt(d)` of `Q(alpha)[sqrt(d)]`; `d` is carried by the context.
#[derive(Clone, Debug, PartialEq)]
pub struct Surd {
    pub p: UPoly,
    pub q: UPoly,
}

impl Surd {
    pub fn from_base(p: UPoly) -> Self {
        Surd {
            p,
            q: UPoly::zero(),
        }
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_base(UPoly::constant(r))
    }

    pub fn is_base(&self) -> bool {
        self.q.is_zero()
    }

    pub fn add(&self, o: &Surd) -> Surd {
        Surd {
            p: &self.p + &o.p,
            q: &self.q + &o.q,
        }
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        Surd {
            p: &self.p - &o.p,
            q: &self.q - &o.q,
        }
    }

    pub fn scale(&self, k: &Rational) -> Surd {
        Surd {
            p: self.p.scale(k),
            q: self.q.scale(k),
        }
    }

    pub fn mul(&self, o: &Surd, d: &UPoly, f: &Field) -> Surd {
        let p = &f.mul(&self.p, &o.p) + &f.mul(&f.mul(&self.q, &o.q), d);
        let q = &f.mul(&self.p, &o.q) + &f.mul(&self.q, &o.p);
        Surd { p, q }
    }

    pub fn sign(&self, d: &UPoly, f: &Field) -> i32 {
        f.sign1(&self.p, &self.q, d)
    }

    pub fn enclose(&self, d: &UPoly, f: &Field, width: &Rational) -> Interval {
        let a = f.alpha.refined(width);
        let iv = a.interval();
        let pi = self.p.eval_interval(&iv);
        if self.q.is_zero() {
            return pi;
        }
        let qi = self.q.eval_interval(&iv);
        let di = d.eval_interval(&iv);
        let di = Interval::new(di.lo.max(Rational::zero()), di.hi.max(Rational::zero()));
        pi.add(&qi.mul(&di.sqrt(width)))
    }
}
