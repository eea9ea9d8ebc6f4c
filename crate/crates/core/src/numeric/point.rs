//! Plane points with coordinates in `Q(alpha)[sqrt(d)]`.

use num::Zero;

use super::algebraic::RealAlgebraic;
use super::bipoly::BiPoly;
use super::poly::UPoly;
use super::rational::{rat, to_f64, Interval, Rational};
use super::surd::{Field, Surd};
use crate::sign::Sign;

/// A point whose coordinates are `p(alpha) + q(alpha) sqrt(d(alpha))`.
#[derive(Clone, Debug)]
pub struct AlgebraicPoint {
    field: Field,
    d: UPoly,
    x: Surd,
    y: Surd,
}

impl AlgebraicPoint {
    pub fn rational(x: Rational, y: Rational) -> Self {
        AlgebraicPoint {
            field: Field::rational(Rational::zero()),
            d: UPoly::zero(),
            x: Surd::constant(x),
            y: Surd::constant(y),
        }
    }

    /// The point `(alpha, y(alpha))`.
    pub fn on_alpha(alpha: RealAlgebraic, y: UPoly) -> Self {
        let field = Field::new(alpha);
        let y = field.reduce(&y);
        AlgebraicPoint {
            x: Surd::from_base(field.reduce(&UPoly::x())),
            y: Surd::from_base(y),
            field,
            d: UPoly::zero(),
        }
    }

    /// Folds `sqrt d` into the base field when `d` is the square of a rational.
    pub fn new(field: Field, d: UPoly, x: Surd, y: Surd) -> Self {
        let d = field.reduce(&d);
        let mut pt = AlgebraicPoint { field, d, x, y };
        if pt.x.q.is_zero() && pt.y.q.is_zero() {
            pt.d = UPoly::zero();
        } else if pt.d.is_constant() {
            if let Some(r) = rational_sqrt(&pt.d.coeff(0)) {
                let fold = |s: &Surd| Surd::from_base(&s.p + &s.q.scale(&r));
                pt.x = fold(&pt.x);
                pt.y = fold(&pt.y);
                pt.d = UPoly::zero();
            }
        }
        pt
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn radicand(&self) -> &UPoly {
        &self.d
    }

    pub fn x(&self) -> &Surd {
        &self.x
    }

    pub fn y(&self) -> &Surd {
        &self.y
    }

    /// Both coordinates when they are rational.
    pub fn as_rational(&self) -> Option<(Rational, Rational)> {
        let r = |s: &Surd| -> Option<Rational> {
            if !s.q.is_zero() && self.field.sign(&self.d) != 0 {
                return None;
            }
            let p = self.field.reduce(&s.p);
            if p.is_constant() {
                return Some(p.coeff(0));
            }
            self.field.alpha().as_rational().map(|a| p.eval(a))
        };
        Some((r(&self.x)?, r(&self.y)?))
    }

    /// Evaluates `f` at the point as an element of `Q(alpha)[sqrt d]`.
    pub fn eval(&self, f: &BiPoly) -> Surd {
        let deg = f.total_degree();
        let mut xp = vec![Surd::constant(rat(1))];
        let mut yp = vec![Surd::constant(rat(1))];
        for k in 1..=deg {
            xp.push(xp[k - 1].mul(&self.x, &self.d, &self.field));
            yp.push(yp[k - 1].mul(&self.y, &self.d, &self.field));
        }
        let mut acc = Surd::constant(Rational::zero());
        for (i, j, c) in f.terms() {
            acc = acc.add(&xp[i].mul(&yp[j], &self.d, &self.field).scale(c));
        }
        acc
    }

    pub fn sign_at(&self, f: &BiPoly) -> Sign {
        Sign::from_i32(self.eval(f).sign(&self.d, &self.field))
    }

    pub fn enclose(&self, width: &Rational) -> (Interval, Interval) {
        (
            self.x.enclose(&self.d, &self.field, width),
            self.y.enclose(&self.d, &self.field, width),
        )
    }

    pub fn approx(&self) -> (f64, f64) {
        let w = Rational::new(1.into(), num::BigInt::from(1u64 << 50));
        let (x, y) = self.enclose(&w);
        (
            (to_f64(&x.lo) + to_f64(&x.hi)) / 2.0,
            (to_f64(&y.lo) + to_f64(&y.hi)) / 2.0,
        )
    }

    /// A human-readable exact description.
    pub fn describe(&self) -> String {
        if let Some((x, y)) = self.as_rational() {
            return format!("({x}, {y})");
        }
        let (ax, ay) = self.approx();
        let a = self.field.alpha();
        let mut s = format!("(~{ax:.6}, ~{ay:.6}) with alpha = {a}");
        if !self.d.is_zero() {
            s.push_str(&format!(", d = {}", self.d));
        }
        s
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    use num::Signed;
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// Exact sign of `f` at `p`.
pub fn sign_at(f: &BiPoly, p: &AlgebraicPoint) -> Sign {
    p.sign_at(f)
}
