//! Curves in a sheared frame `x = u + t v, y = v` and their roots on vertical fibers.

use num::Signed;
use std::cmp::Ordering;

use crate::numeric::bipoly::BiPoly;
use crate::numeric::point::AlgebraicPoint;
use crate::numeric::poly::UPoly;
use crate::numeric::rational::{rat, ratio, Rational};
use crate::numeric::surd::{Field, Surd};

/// Which root of a curve on a fiber: a line has one, a conic a lower and an upper one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Single,
    Lower,
    Upper,
}

#[derive(Clone, Debug)]
pub struct ShearedCurve {
    pub g: BiPoly,
    /// Coefficients in `v`, each a polynomial in `u`; the leading one is a nonzero constant.
    pub a: Vec<UPoly>,
    /// Discriminant in `v` for conics.
    pub disc: Option<UPoly>,
}

#[derive(Clone, Debug)]
pub struct FiberRoot {
    pub curve: usize,
    pub branch: Branch,
    pub v: Surd,
    pub d: UPoly,
}

/// Shear parameters tried in order.
pub fn shear_candidates() -> impl Iterator<Item = Rational> {
    let fixed = [
        rat(0),
        rat(1),
        rat(-1),
        rat(2),
        rat(-2),
        ratio(1, 2),
        ratio(-1, 2),
    ];
    fixed.into_iter().chain((3i64..).flat_map(|k| {
        [
            rat(k),
            rat(-k),
            ratio(1, k),
            ratio(-1, k),
            ratio(k, k + 1),
            ratio(-k, k + 1),
        ]
    }))
}

impl ShearedCurve {
    /// `None` if the curve has a vertical asymptotic direction in this frame.
    pub fn new(poly: &BiPoly, t: &Rational) -> Option<Self> {
        let g = poly.shear(t);
        let a = g.y_coeffs();
        let lead = a.last()?;
        if !lead.is_constant() || lead.is_zero() || a.len() < 2 {
            return None;
        }
        let disc = (a.len() == 3).then(|| {
            let four = UPoly::constant(rat(4));
            &(&a[1] * &a[1]) - &(&(&four * &a[2]) * &a[0])
        });
        Some(ShearedCurve { g, a, disc })
    }

    pub fn is_line(&self) -> bool {
        self.a.len() == 2
    }

    pub fn lead(&self) -> Rational {
        self.a.last().unwrap().coeff(0)
    }

    /// Real roots in `v` over `u = alpha`, in increasing order.
    pub fn roots(&self, curve: usize, f: &Field) -> Vec<FiberRoot> {
        let lead = self.lead();
        if self.is_line() {
            let p = f.reduce(&self.a[0].scale(&(-lead.recip())));
            return vec![FiberRoot {
                curve,
                branch: Branch::Single,
                v: Surd::from_base(p),
                d: UPoly::zero(),
            }];
        }
        let disc = f.reduce(self.disc.as_ref().unwrap());
        let two_a = &lead * rat(2);
        let p = f.reduce(&self.a[1].scale(&(-two_a.recip())));
        match f.sign(&disc) {
            -1 => vec![],
            0 => vec![FiberRoot {
                curve,
                branch: Branch::Single,
                v: Surd::from_base(p),
                d: UPoly::zero(),
            }],
            _ => {
                let q = two_a.abs().recip();
                let lower = Surd {
                    p: p.clone(),
                    q: UPoly::constant(-q.clone()),
                };
                let upper = Surd {
                    p,
                    q: UPoly::constant(q),
                };
                vec![
                    FiberRoot {
                        curve,
                        branch: Branch::Lower,
                        v: lower,
                        d: disc.clone(),
                    },
                    FiberRoot {
                        curve,
                        branch: Branch::Upper,
                        v: upper,
                        d: disc,
                    },
                ]
            }
        }
    }

    /// Sign of `dg/dv` at a point of the sheared frame.
    pub fn dv_sign(&self, pt: &AlgebraicPoint) -> i32 {
        pt.sign_at(&self.g.dy()).to_i32()
    }
}

pub fn cmp_roots(f: &Field, r1: &FiberRoot, r2: &FiberRoot) -> Ordering {
    let a = &r1.v.p - &r2.v.p;
    let c = -&r2.v.q;
    match f.sign2(&a, &r1.v.q, &r1.d, &c, &r2.d) {
        1 => Ordering::Greater,
        -1 => Ordering::Less,
        _ => Ordering::Equal,
    }
}

/// The point `(alpha, v)` in sheared coordinates.
pub fn sheared_point(f: &Field, r: &FiberRoot) -> AlgebraicPoint {
    AlgebraicPoint::new(
        f.clone(),
        r.d.clone(),
        Surd::from_base(f.reduce(&UPoly::x())),
        r.v.clone(),
    )
}

/// The same point in original coordinates `x = u + t v, y = v`.
pub fn original_point(f: &Field, r: &FiberRoot, t: &Rational) -> AlgebraicPoint {
    let u = Surd::from_base(f.reduce(&UPoly::x()));
    let x = u.add(&r.v.scale(t));
    AlgebraicPoint::new(
        f.clone(),
        r.d.clone(),
        Surd {
            p: f.reduce(&x.p),
            q: x.q,
        },
        r.v.clone(),
    )
}

/// Sorts the roots of several curves on one fiber and groups coincident ones.
pub fn group_roots(f: &Field, mut roots: Vec<FiberRoot>) -> Vec<Vec<FiberRoot>> {
    roots.sort_by(|a, b| cmp_roots(f, a, b));
    let mut out: Vec<Vec<FiberRoot>> = Vec::new();
    for r in roots {
        match out.last_mut() {
            Some(g) if cmp_roots(f, &g[0], &r) == Ordering::Equal => g.push(r),
            _ => out.push(vec![r]),
        }
    }
    out
}
