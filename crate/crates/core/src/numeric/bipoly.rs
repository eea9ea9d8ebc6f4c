//! Dense bivariate polynomials over the rationals.

use num::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::UPoly;
use super::rational::{rat, Rational};

/// `c[i][j]` is the coefficient of `x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    c: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { c: Vec::new() }
    }

    pub fn constant(k: Rational) -> Self {
        Self::from_terms(&[(0, 0, k)])
    }

    pub fn x() -> Self {
        Self::from_terms(&[(1, 0, Rational::one())])
    }

    pub fn y() -> Self {
        Self::from_terms(&[(0, 1, Rational::one())])
    }

    pub fn from_terms(terms: &[(usize, usize, Rational)]) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, k) in terms {
            p.add_term(*i, *j, k.clone());
        }
        p.normalize();
        p
    }

    /// `a x + b y + c`
    pub fn line(a: &Rational, b: &Rational, c: &Rational) -> Self {
        Self::from_terms(&[(1, 0, a.clone()), (0, 1, b.clone()), (0, 0, c.clone())])
    }

    /// `A x^2 + B xy + C y^2 + D x + E y + F`
    pub fn conic(k: &[Rational; 6]) -> Self {
        Self::from_terms(&[
            (2, 0, k[0].clone()),
            (1, 1, k[1].clone()),
            (0, 2, k[2].clone()),
            (1, 0, k[3].clone()),
            (0, 1, k[4].clone()),
            (0, 0, k[5].clone()),
        ])
    }

    fn add_term(&mut self, i: usize, j: usize, k: Rational) {
        if self.c.len() <= i {
            self.c.resize(i + 1, Vec::new());
        }
        let row = &mut self.c[i];
        if row.len() <= j {
            row.resize(j + 1, Rational::zero());
        }
        row[j] += k;
    }

    fn normalize(&mut self) {
        for row in &mut self.c {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while self.c.last().is_some_and(|r| r.is_empty()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.c
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.c.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, k)| !k.is_zero())
                .map(move |(j, k)| (i, j, k))
        })
    }

    pub fn total_degree(&self) -> usize {
        self.terms().map(|(i, j, _)| i + j).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> usize {
        self.terms().map(|(_, j, _)| j).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (i, j, k) in self.terms() {
            acc += k * num::pow(x.clone(), i) * num::pow(y.clone(), j);
        }
        acc
    }

    pub fn dx(&self) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, k) in self.terms() {
            if i > 0 {
                p.add_term(i - 1, j, k * rat(i as i64));
            }
        }
        p.normalize();
        p
    }

    pub fn dy(&self) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, k) in self.terms() {
            if j > 0 {
                p.add_term(i, j - 1, k * rat(j as i64));
            }
        }
        p.normalize();
        p
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, c) in self.terms() {
            p.add_term(i, j, c * k);
        }
        p.normalize();
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = BiPoly::constant(Rational::one());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Substitutes `x -> u + t v`, `y -> v`; the result is a polynomial in `(u, v)`.
    pub fn shear(&self, t: &Rational) -> Self {
        let xs = &BiPoly::x() + &BiPoly::y().scale(t);
        let mut out = BiPoly::zero();
        for (i, j, k) in self.terms() {
            let term =
                &(&xs.pow(i as u32) * &BiPoly::y().pow(j as u32)) * &BiPoly::constant(k.clone());
            out = &out + &term;
        }
        out
    }

    /// Coefficients as a polynomial in `y` whose coefficients are polynomials in `x`.
    pub fn y_coeffs(&self) -> Vec<UPoly> {
        let d = self.degree_y();
        (0..=d)
            .map(|j| UPoly::new((0..self.c.len()).map(|i| self.coeff(i, j)).collect()))
            .collect()
    }

    /// Restriction to the vertical line `x = a`, a polynomial in `y`.
    pub fn at_x(&self, a: &Rational) -> UPoly {
        UPoly::new(self.y_coeffs().iter().map(|p| p.eval(a)).collect())
    }

    /// Resultant with respect to `y`, a polynomial in `x`.
    pub fn resultant_y(&self, other: &BiPoly) -> UPoly {
        let a = self.y_coeffs();
        let b = other.y_coeffs();
        let (m, n) = (a.len() - 1, b.len() - 1);
        if m == 0 && n == 0 {
            return UPoly::one();
        }
        if m == 0 {
            return a[0].pow(n as u32);
        }
        if n == 0 {
            return b[0].pow(m as u32);
        }
        let size = m + n;
        let mut mat = vec![vec![UPoly::zero(); size]; size];
        for r in 0..n {
            for (k, c) in a.iter().rev().enumerate() {
                mat[r][r + k] = c.clone();
            }
        }
        for r in 0..m {
            for (k, c) in b.iter().rev().enumerate() {
                mat[n + r][r + k] = c.clone();
            }
        }
        det(&mat)
    }
}

/// Laplace expansion; the matrices here are at most 4x4.
fn det(m: &[Vec<UPoly>]) -> UPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = UPoly::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &det(&minor);
        acc = if col % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (i, j, k) in o.terms() {
            p.add_term(i, j, k.clone());
        }
        p.normalize();
        p
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        self + &(-o)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&rat(-1))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut p = BiPoly::zero();
        for (i, j, a) in self.terms() {
            for (k, l, b) in o.terms() {
                p.add_term(i + k, j + l, a * b);
            }
        }
        p.normalize();
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::ratio;

    fn circle() -> BiPoly {
        BiPoly::conic(&[rat(1), rat(0), rat(1), rat(0), rat(0), rat(-1)])
    }

    #[test]
    fn eval_and_derivatives() {
        let c = circle();
        assert_eq!(c.eval(&rat(1), &rat(0)), rat(0));
        assert_eq!(c.dx(), BiPoly::x().scale(&rat(2)));
        assert_eq!(c.dy().eval(&rat(0), &ratio(1, 2)), rat(1));
        assert_eq!(c.total_degree(), 2);
    }

    #[test]
    fn shear_preserves_values() {
        let c = BiPoly::conic(&[rat(2), rat(3), rat(-1), rat(5), rat(-7), rat(1)]);
        let t = ratio(3, 2);
        let s = c.shear(&t);
        let (u, v) = (ratio(1, 3), ratio(-2, 5));
        assert_eq!(s.eval(&u, &v), c.eval(&(&u + &t * &v), &v));
    }

    #[test]
    fn resultant_of_line_and_circle() {
        // y and x^2 + y^2 - 1: resultant in y is x^2 - 1 up to sign
        let r = BiPoly::y().resultant_y(&circle());
        assert_eq!(r.monic(), UPoly::from_ints(&[-1, 0, 1]));
        let e = BiPoly::conic(&[ratio(1, 4), rat(0), rat(1), rat(0), rat(0), rat(-1)]);
        let r = circle().resultant_y(&e);
        // both curves meet at x = 0 with multiplicity two in the projection
        assert_eq!(r.monic(), UPoly::from_ints(&[0, 0, 0, 0, 1]));
    }
}
