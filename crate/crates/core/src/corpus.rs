//! Seeded random arrangements for property batteries.
//!
//! Besides generic curves the generators plant special positions on purpose: lines through
//! points already on the arrangement, lines tangent to circles, and circles through existing points.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{validate, Arrangement, Curve};
use crate::numeric::rational::{rat, ratio, Rational};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Points of the unit circle with small rational coordinates.
const PYTHAGOREAN: [(i64, i64, i64); 6] = [
    (1, 0, 1),
    (0, 1, 1),
    (3, 4, 5),
    (4, 3, 5),
    (5, 12, 13),
    (8, 15, 17),
];

#[derive(Clone, Debug)]
struct Circle {
    cx: Rational,
    cy: Rational,
    r: Rational,
    /// Unit directions from the centre to known points on the circle.
    marks: Vec<(Rational, Rational)>,
}

struct Builder {
    curves: Vec<Curve>,
    circles: Vec<Circle>,
    lines: Vec<[Rational; 3]>,
    points: Vec<(Rational, Rational)>,
}

fn unit(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    let (a, b, h) = *PYTHAGOREAN.choose(rng).unwrap();
    let sa = if rng.gen_bool(0.5) { 1 } else { -1 };
    let sb = if rng.gen_bool(0.5) { 1 } else { -1 };
    if rng.gen_bool(0.5) {
        (ratio(sa * a, h), ratio(sb * b, h))
    } else {
        (ratio(sb * b, h), ratio(sa * a, h))
    }
}

fn small(rng: &mut ChaCha8Rng, m: i64) -> Rational {
    rat(rng.gen_range(-m..=m))
}

impl Builder {
    fn new() -> Self {
        Builder {
            curves: Vec::new(),
            circles: Vec::new(),
            lines: Vec::new(),
            points: Vec::new(),
        }
    }

    fn label(&self) -> String {
        format!("H{}", self.curves.len() + 1)
    }

    fn random_point(&mut self, rng: &mut ChaCha8Rng) -> (Rational, Rational) {
        match self.points.choose(rng) {
            Some(p) if rng.gen_bool(0.6) => p.clone(),
            _ => (small(rng, 3), small(rng, 3)),
        }
    }

    fn push_line(&mut self, a: Rational, b: Rational, c: Rational) {
        for [a2, b2, c2] in &self.lines {
            let det = &a * b2 - a2 * &b;
            if det != rat(0) {
                self.points
                    .push(((&b * c2 - b2 * &c) / &det, (a2 * &c - &a * c2) / &det));
            }
        }
        self.lines.push([a.clone(), b.clone(), c.clone()]);
        let l = self.label();
        self.curves.push(Curve::line(a, b, c, l));
    }

    fn line_through(&mut self, p: &(Rational, Rational), dx: Rational, dy: Rational) {
        // normal (dy, -dx)
        let c = -(&dy * &p.0) + &dx * &p.1;
        self.push_line(dy, -dx, c);
    }

    fn generic_line(&mut self, rng: &mut ChaCha8Rng) {
        let (a, b) = loop {
            let (a, b) = (small(rng, 4), small(rng, 4));
            if a != rat(0) || b != rat(0) {
                break (a, b);
            }
        };
        let c = small(rng, 4);
        self.push_line(a, b, c);
    }

    fn special_line(&mut self, rng: &mut ChaCha8Rng) {
        if let Some(c) = self.circles.choose(rng).cloned() {
            if rng.gen_bool(0.5) {
                // tangent at a rational point of the circle, often one already marked
                let known: Vec<_> = c.marks.clone();
                let (ux, uy) = match known.choose(rng) {
                    Some(u) if rng.gen_bool(0.6) => u.clone(),
                    _ => unit(rng),
                };
                let p = (&c.cx + &c.r * &ux, &c.cy + &c.r * &uy);
                self.points.push(p.clone());
                self.line_through(&p, -uy, ux);
                return;
            }
        }
        let p = self.random_point(rng);
        let (dx, dy) = loop {
            let (dx, dy) = (small(rng, 3), small(rng, 3));
            if dx != rat(0) || dy != rat(0) {
                break (dx, dy);
            }
        };
        self.points.push(p.clone());
        self.line_through(&p, dx, dy);
    }

    fn circle(&mut self, rng: &mut ChaCha8Rng) {
        let r = ratio(rng.gen_range(1..=6), 2);
        let mut marks = vec![unit(rng), unit(rng)];
        let (cx, cy) = match self.points.choose(rng) {
            // through an existing point, with that point marked
            Some(p) if rng.gen_bool(0.5) => {
                let u = unit(rng);
                let centre = (&p.0 - &r * &u.0, &p.1 - &r * &u.1);
                marks.push(u);
                centre
            }
            _ => (small(rng, 3), small(rng, 3)),
        };
        let c = Circle { cx, cy, r, marks };
        let k = [
            rat(1),
            rat(0),
            rat(1),
            -&c.cx * rat(2),
            -&c.cy * rat(2),
            &c.cx * &c.cx + &c.cy * &c.cy - &c.r * &c.r,
        ];
        let l = self.label();
        self.curves.push(Curve::conic(k, l));
        for u in &c.marks {
            self.points.push((&c.cx + &c.r * &u.0, &c.cy + &c.r * &u.1));
        }
        self.circles.push(c);
    }

    fn generic_conic(&mut self, rng: &mut ChaCha8Rng) {
        let k = match rng.gen_range(0..3) {
            // axis-aligned ellipse
            0 => {
                let (a, c) = (rat(rng.gen_range(1..=4)), rat(rng.gen_range(1..=4)));
                [
                    a,
                    rat(0),
                    c,
                    small(rng, 3),
                    small(rng, 3),
                    rat(-rng.gen_range(1..=6)),
                ]
            }
            // parabola y = a x^2 + b x + c
            1 => [
                small(rng, 2),
                rat(0),
                rat(0),
                small(rng, 3),
                rat(-1),
                small(rng, 3),
            ],
            // general small coefficients
            _ => std::array::from_fn(|_| small(rng, 3)),
        };
        let l = self.label();
        self.curves.push(Curve::conic(k, l));
    }

    fn finish(self) -> Option<Arrangement> {
        validate(self.curves).ok()
    }
}

/// Up to `max_lines` lines, roughly a third of them through existing points.
pub fn random_line_arrangement(rng: &mut ChaCha8Rng, max_lines: usize) -> Arrangement {
    loop {
        let n = rng.gen_range(1..=max_lines);
        let mut b = Builder::new();
        for _ in 0..n {
            if rng.gen_bool(0.35) && !b.curves.is_empty() {
                b.special_line(rng);
            } else {
                b.generic_line(rng);
            }
        }
        if let Some(a) = b.finish() {
            return a;
        }
    }
}

/// A random arrangement of lines and conics with total degree at most `max_degree`.
pub fn random_cl_arrangement(rng: &mut ChaCha8Rng, max_degree: usize) -> Arrangement {
    loop {
        let mut b = Builder::new();
        // half the draws use the full degree budget
        let target = if rng.gen_bool(0.5) {
            max_degree
        } else {
            rng.gen_range(1..=max_degree)
        };
        let mut degree = 0;
        while degree < target {
            let conic_ok = degree + 2 <= target;
            match rng.gen_range(0..6) {
                0 | 1 if conic_ok => {
                    b.circle(rng);
                    degree += 2;
                }
                2 if conic_ok => {
                    b.generic_conic(rng);
                    degree += 2;
                }
                3 | 4 if !b.curves.is_empty() => {
                    b.special_line(rng);
                    degree += 1;
                }
                _ => {
                    b.generic_line(rng);
                    degree += 1;
                }
            }
        }
        if let Some(a) = b.finish() {
            return a;
        }
    }
}

/// A circle with tangent lines at `k` distinct rational points, for pointed-oval checks.
pub fn tangent_oval(k: usize) -> Arrangement {
    let pts: [(i64, i64, i64); 6] = [
        (0, 1, 1),
        (4, 3, 5),
        (3, -4, 5),
        (-5, -12, 13),
        (-1, 0, 1),
        (-8, 15, 17),
    ];
    assert!(k <= pts.len());
    let mut curves = vec![Curve::conic_i([1, 0, 1, 0, 0, -1], "C")];
    for (i, &(a, b, h)) in pts.iter().take(k).enumerate() {
        // tangent a x + b y = h at (a/h, b/h)
        curves.push(Curve::line_i([a, b, -h], format!("T{}", i + 1)));
    }
    validate(curves).expect("tangent lines at distinct points are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_cl_arrangement(&mut rng(7), 4);
        let b = random_cl_arrangement(&mut rng(7), 4);
        assert_eq!(a.curves(), b.curves());
        assert!(a.total_degree() <= 4);
        let l = random_line_arrangement(&mut rng(3), 6);
        assert!(l.is_line_arrangement() && l.len() <= 6);
        assert_eq!(tangent_oval(5).len(), 6);
    }
}
