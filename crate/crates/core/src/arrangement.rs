//! Curves, arrangement validation and exact pairwise intersection.

use num::{Signed, Zero};
use std::fmt;

use crate::error::Error;
use crate::fiber::{original_point, shear_candidates, ShearedCurve};
use crate::numeric::algebraic::isolate_real_roots;
use crate::numeric::bipoly::BiPoly;
use crate::numeric::point::AlgebraicPoint;
use crate::numeric::rational::{rat, Rational};
use crate::numeric::surd::Field;
use crate::sign::Sign;

#[derive(Clone, Debug, PartialEq)]
pub enum CurveKind {
    /// `a x + b y + c = 0`
    Line([Rational; 3]),
    /// `A x^2 + B xy + C y^2 + D x + E y + F = 0`
    Conic([Rational; 6]),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub kind: CurveKind,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicClass {
    Ellipse,
    Parabola,
    Hyperbola,
}

/// Shape of a validated curve's real locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveShape {
    Line,
    Conic(ConicClass),
}

impl CurveShape {
    pub fn is_oval(self) -> bool {
        self == CurveShape::Conic(ConicClass::Ellipse)
    }
}

impl Curve {
    pub fn line(a: Rational, b: Rational, c: Rational, label: impl Into<String>) -> Self {
        Curve {
            kind: CurveKind::Line([a, b, c]),
            label: label.into(),
        }
    }

    pub fn conic(k: [Rational; 6], label: impl Into<String>) -> Self {
        Curve {
            kind: CurveKind::Conic(k),
            label: label.into(),
        }
    }

    /// Integer shorthand: `[a, b, c]`.
    pub fn line_i(k: [i64; 3], label: impl Into<String>) -> Self {
        Self::line(rat(k[0]), rat(k[1]), rat(k[2]), label)
    }

    /// Integer shorthand: `[A, B, C, D, E, F]`.
    pub fn conic_i(k: [i64; 6], label: impl Into<String>) -> Self {
        Self::conic(k.map(rat), label)
    }

    pub fn poly(&self) -> BiPoly {
        match &self.kind {
            CurveKind::Line([a, b, c]) => BiPoly::line(a, b, c),
            CurveKind::Conic(k) => BiPoly::conic(k),
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self.kind, CurveKind::Line(_))
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        match &self.kind {
            CurveKind::Line(k) => k.to_vec(),
            CurveKind::Conic(k) => k.to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        if self.is_line() {
            1
        } else {
            2
        }
    }

    /// Checks the curve on its own and returns the shape of its real locus.
    pub fn classify(&self, index: usize) -> Result<CurveShape, Error> {
        let label = self.label.clone();
        match &self.kind {
            CurveKind::Line([a, b, _]) => {
                if a.is_zero() && b.is_zero() {
                    return Err(Error::DegenerateCoefficients {
                        index,
                        label,
                        detail: "a = b = 0".into(),
                    });
                }
                Ok(CurveShape::Line)
            }
            CurveKind::Conic(k) => classify_conic(k, index, label).map(CurveShape::Conic),
        }
    }
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn classify_conic(k: &[Rational; 6], index: usize, label: String) -> Result<ConicClass, Error> {
    let [a, b, c, d, e, f] = k;
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::DegenerateCoefficients {
            index,
            label,
            detail: "A = B = C = 0; enter it as a line".into(),
        });
    }
    let half = Rational::new(1.into(), 2.into());
    let m = [
        [a.clone(), b * &half, d * &half],
        [b * &half, c.clone(), e * &half],
        [d * &half, e * &half, f.clone()],
    ];
    let big = det3(&m);
    let small = a * c - b * b / rat(4);
    if !big.is_zero() {
        if small.is_positive() {
            return if (a * &big).is_negative() {
                Ok(ConicClass::Ellipse)
            } else {
                Err(Error::EmptyRealLocus { index, label })
            };
        }
        return Ok(if small.is_zero() {
            ConicClass::Parabola
        } else {
            ConicClass::Hyperbola
        });
    }
    let minors = [
        (0, 1, 0, 1),
        (0, 1, 0, 2),
        (0, 1, 1, 2),
        (0, 2, 0, 1),
        (0, 2, 0, 2),
        (0, 2, 1, 2),
        (1, 2, 0, 1),
        (1, 2, 0, 2),
        (1, 2, 1, 2),
    ];
    let rank2 = minors
        .iter()
        .any(|&(r0, r1, c0, c1)| !(&m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]).is_zero());
    if !rank2 {
        return Err(Error::DoubleLine { index, label });
    }
    if small.is_negative() {
        return Err(Error::ReducibleConic { index, label });
    }
    if small.is_positive() {
        return Err(Error::PointLocus { index, label });
    }
    // parallel pair: real or imaginary according to the sum of the principal minors
    let kk = (c * f - e * e / rat(4)) + (a * f - d * d / rat(4));
    if kk.is_negative() {
        Err(Error::ReducibleConic { index, label })
    } else {
        Err(Error::EmptyRealLocus { index, label })
    }
}

fn proportional(u: &[Rational], v: &[Rational]) -> bool {
    u.len() == v.len() && (0..u.len()).all(|i| (0..u.len()).all(|j| &u[i] * &v[j] == &u[j] * &v[i]))
}

/// A validated arrangement; the curve order fixes sign-vector coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement {
    curves: Vec<Curve>,
    shapes: Vec<CurveShape>,
}

impl Arrangement {
    pub fn empty() -> Self {
        Arrangement {
            curves: Vec::new(),
            shapes: Vec::new(),
        }
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn shape(&self, i: usize) -> CurveShape {
        self.shapes[i]
    }

    pub fn polys(&self) -> Vec<BiPoly> {
        self.curves.iter().map(Curve::poly).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.curves.iter().map(|c| c.label.clone()).collect()
    }

    pub fn is_line_arrangement(&self) -> bool {
        self.curves.iter().all(Curve::is_line)
    }

    pub fn total_degree(&self) -> usize {
        self.curves.iter().map(Curve::degree).sum()
    }

    /// Resolves a label, or a 1-based index written as a number.
    pub fn index_of(&self, name: &str) -> Result<usize, Error> {
        if let Some(i) = self.curves.iter().position(|c| c.label == name) {
            return Ok(i);
        }
        match name.parse::<usize>() {
            Ok(k) if k >= 1 && k <= self.len() => Ok(k - 1),
            _ => Err(Error::UnknownComponent(name.to_string())),
        }
    }

    /// The deleted arrangement without curve `h`.
    pub fn delete(&self, h: usize) -> Result<Arrangement, Error> {
        if h >= self.len() {
            return Err(Error::InvalidIndex(h));
        }
        let mut a = self.clone();
        a.curves.remove(h);
        a.shapes.remove(h);
        Ok(a)
    }

    /// Sign vector of an arbitrary point.
    pub fn sign_vector(&self, p: &AlgebraicPoint) -> crate::sign::SignVector {
        crate::sign::SignVector(self.polys().iter().map(|f| p.sign_at(f)).collect())
    }
}

/// Validates a curve list against the definition of a real conic-line arrangement.
pub fn validate(curves: Vec<Curve>) -> Result<Arrangement, Error> {
    let mut shapes = Vec::with_capacity(curves.len());
    for (i, c) in curves.iter().enumerate() {
        shapes.push(c.classify(i)?);
    }
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            if curves[i].is_line() == curves[j].is_line()
                && proportional(&curves[i].coeffs(), &curves[j].coeffs())
            {
                return Err(Error::DuplicateCurve {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(Arrangement { curves, shapes })
}

#[derive(Clone, Debug)]
pub struct IntersectionRecord {
    pub point: AlgebraicPoint,
    pub multiplicity: usize,
    pub tangential: bool,
}

/// Jacobian determinant `f_x g_y - f_y g_x`.
pub fn jacobian(f: &BiPoly, g: &BiPoly) -> BiPoly {
    &(&f.dx() * &g.dy()) - &(&f.dy() * &g.dx())
}

/// All real intersection points of two curves with multiplicities.
pub fn intersect(c1: &Curve, c2: &Curve) -> Result<Vec<IntersectionRecord>, Error> {
    if c1.is_line() == c2.is_line() && proportional(&c1.coeffs(), &c2.coeffs()) {
        return Err(Error::IdenticalCurves);
    }
    let (p1, p2) = (c1.poly(), c2.poly());
    let jac = jacobian(&p1, &p2);
    'shear: for t in shear_candidates().take(200) {
        let (Some(s1), Some(s2)) = (ShearedCurve::new(&p1, &t), ShearedCurve::new(&p2, &t)) else {
            continue;
        };
        let res = s1.g.resultant_y(&s2.g);
        if res.is_zero() {
            return Err(Error::IdenticalCurves);
        }
        let mut out = Vec::new();
        for (alpha, m) in isolate_real_roots(&res)? {
            let f = Field::new(alpha);
            let r2 = s2.roots(1, &f);
            let common: Vec<_> = s1
                .roots(0, &f)
                .into_iter()
                .filter(|a| r2.iter().any(|b| crate::fiber::cmp_roots(&f, a, b).is_eq()))
                .collect();
            match common.len() {
                0 => continue,
                1 => {}
                _ => continue 'shear,
            }
            let point = original_point(&f, &common[0], &t);
            let tangential = point.sign_at(&jac) == Sign::Zero;
            debug_assert_eq!(tangential, m >= 2);
            out.push(IntersectionRecord {
                point,
                multiplicity: m,
                tangential,
            });
        }
        return Ok(out);
    }
    Err(Error::Unsupported("no admissible shear found".into()))
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: &Rational, mono: &str| -> Option<String> {
            (!c.is_zero()).then(|| {
                if mono.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}*{mono}")
                }
            })
        };
        let parts: Vec<String> = match &self.kind {
            CurveKind::Line([a, b, c]) => [term(a, "x"), term(b, "y"), term(c, "")]
                .into_iter()
                .flatten()
                .collect(),
            CurveKind::Conic([a, b, c, d, e, ff]) => [
                term(a, "x^2"),
                term(b, "x*y"),
                term(c, "y^2"),
                term(d, "x"),
                term(e, "y"),
                term(ff, ""),
            ]
            .into_iter()
            .flatten()
            .collect(),
        };
        write!(
            f,
            "{}: {} = 0",
            self.label,
            parts.join(" + ").replace("+ -", "- ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err_kind(c: Curve) -> String {
        format!("{:?}", validate(vec![c]).unwrap_err())
            .split([' ', '{', '('])
            .next()
            .unwrap()
            .to_string()
    }

    #[test]
    fn validation_diagnostics() {
        assert!(validate(vec![
            Curve::line_i([0, 1, 0], "L"),
            Curve::conic_i([1, 0, 1, 0, 0, -1], "C")
        ])
        .is_ok());
        assert_eq!(
            err_kind(Curve::conic_i([1, 0, 1, 0, 0, 1], "C")),
            "EmptyRealLocus"
        );
        assert_eq!(
            err_kind(Curve::conic_i([1, 0, 0, 0, 0, 0], "C")),
            "DoubleLine"
        );
        assert_eq!(
            err_kind(Curve::conic_i([1, 0, 1, 0, 0, 0], "C")),
            "PointLocus"
        );
        assert_eq!(
            err_kind(Curve::conic_i([0, 1, 0, 0, 0, 0], "C")),
            "ReducibleConic"
        );
        assert_eq!(
            err_kind(Curve::conic_i([1, 0, 0, 0, 0, -1], "C")),
            "ReducibleConic"
        );
        assert_eq!(
            err_kind(Curve::conic_i([1, 0, 0, 0, 0, 1], "C")),
            "EmptyRealLocus"
        );
        assert_eq!(
            err_kind(Curve::conic_i([0, 0, 0, 1, 1, 0], "C")),
            "DegenerateCoefficients"
        );
        assert_eq!(
            err_kind(Curve::line_i([0, 0, 1], "L")),
            "DegenerateCoefficients"
        );
        let dup = validate(vec![
            Curve::line_i([1, 1, 1], "a"),
            Curve::line_i([2, 2, 2], "b"),
        ]);
        assert!(matches!(
            dup,
            Err(Error::DuplicateCurve {
                first: 0,
                second: 1
            })
        ));
    }

    #[test]
    fn classifies_nondegenerate_conics() {
        let s = |k: [i64; 6]| Curve::conic_i(k, "C").classify(0).unwrap();
        assert_eq!(
            s([1, 0, 1, 0, 0, -1]),
            CurveShape::Conic(ConicClass::Ellipse)
        );
        assert_eq!(
            s([1, 0, 0, 0, -1, 0]),
            CurveShape::Conic(ConicClass::Parabola)
        );
        assert_eq!(
            s([1, 0, -1, 0, 0, -1]),
            CurveShape::Conic(ConicClass::Hyperbola)
        );
        assert_eq!(
            s([0, 1, 0, 0, 0, -1]),
            CurveShape::Conic(ConicClass::Hyperbola)
        );
    }

    #[test]
    fn line_circle_intersections() {
        let l = Curve::line_i([0, 1, 0], "L");
        let c = Curve::conic_i([1, 0, 1, 0, 0, -1], "C");
        let r = intersect(&l, &c).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| x.multiplicity == 1 && !x.tangential));
        let pts: Vec<_> = r.iter().map(|x| x.point.as_rational().unwrap()).collect();
        assert_eq!(pts, vec![(rat(-1), rat(0)), (rat(1), rat(0))]);
        let t = Curve::conic_i([1, 0, 1, 0, -2, 0], "T");
        let r = intersect(&l, &t).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 2);
        assert!(r[0].tangential);
        assert_eq!(r[0].point.as_rational().unwrap(), (rat(0), rat(0)));
    }

    #[test]
    fn circle_ellipse_double_tangency() {
        let c = Curve::conic_i([1, 0, 1, 0, 0, -1], "C");
        let e = Curve::conic(
            [
                Rational::new(1.into(), 4.into()),
                rat(0),
                rat(1),
                rat(0),
                rat(0),
                rat(-1),
            ],
            "E",
        );
        let r = intersect(&c, &e).unwrap();
        assert_eq!(
            r.iter().map(|x| x.multiplicity).collect::<Vec<_>>(),
            vec![2, 2]
        );
        let mut pts: Vec<_> = r.iter().map(|x| x.point.as_rational().unwrap()).collect();
        pts.sort();
        assert_eq!(pts, vec![(rat(0), rat(-1)), (rat(0), rat(1))]);
        assert!(matches!(intersect(&c, &c), Err(Error::IdenticalCurves)));
    }
}
