//! The geometric and associative products on faces.

use num::One;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::complex::{FaceComplex, Side};
use crate::error::Error;
use crate::numeric::point::AlgebraicPoint;
use crate::numeric::rational::{ratio, Interval, Rational};
use crate::numeric::surd::Surd;
use crate::semigroup::{
    check_closure, image_i, Axiom, AxiomReport, Closure, ProductTable, TableKind,
};
use crate::sign::SignVector;

/// Default number of interval halvings before a tie is reported as ambiguous.
pub const DEFAULT_REFINEMENT_DEPTH: u32 = 40;

/// `F(P1, P2)`: faces above `P1` with sign vector `i(P1) i(P2)`.
pub fn f_set(c: &FaceComplex, p1: usize, p2: usize) -> Vec<usize> {
    let target = c.faces()[p1].signs.mul(&c.faces()[p2].signs);
    c.faces()
        .iter()
        .filter(|f| f.signs == target && c.le(p1, f.id))
        .map(|f| f.id)
        .collect()
}

pub fn geometric_product(c: &FaceComplex, p1: usize, p2: usize) -> Result<usize, Error> {
    geometric_product_with_depth(c, p1, p2, DEFAULT_REFINEMENT_DEPTH)
}

pub fn geometric_product_with_depth(
    c: &FaceComplex,
    p1: usize,
    p2: usize,
    depth: u32,
) -> Result<usize, Error> {
    c.face(p1)?;
    c.face(p2)?;
    let f = f_set(c, p1, p2);
    match f.len() {
        0 => return Ok(p1),
        1 => return Ok(f[0]),
        _ if f.contains(&p2) => return Ok(p2),
        2 => {}
        _ => return Err(Error::AmbiguousTie(p1, p2)),
    }
    if let Some(p) = along_curve(c, p1, p2, &f) {
        return Ok(p);
    }
    by_tangent(c, p1, p2, &f, depth)
}

/// The face entered when moving from `p1` toward `p2` along a common unbounded curve component.
fn along_curve(c: &FaceComplex, p1: usize, p2: usize, f: &[usize]) -> Option<usize> {
    let (s1, s2) = (&c.faces()[p1].support, &c.faces()[p2].support);
    for &k in s1.iter().filter(|k| s2.contains(k)) {
        for path in c.curve_paths(k).iter().filter(|p| !p.closed) {
            let i1 = path.faces.iter().position(|&x| x == p1);
            let i2 = path.faces.iter().position(|&x| x == p2);
            if let (Some(i1), Some(i2)) = (i1, i2) {
                let next = if i2 > i1 {
                    path.faces[i1 + 1]
                } else {
                    path.faces[i1 - 1]
                };
                if f.contains(&next) {
                    return Some(next);
                }
            }
        }
    }
    None
}

/// Sign of `a·b` for vectors of surds at `p1` and enclosures of `q`.
struct DotContext<'a> {
    p1: &'a AlgebraicPoint,
    q: &'a AlgebraicPoint,
    depth: u32,
}

impl DotContext<'_> {
    /// Sign of `(q - p1)·(dx, dy)` with `dx, dy` in the field of `p1`; `None` if undecided.
    fn sign(&self, dx: &Surd, dy: &Surd) -> Option<i32> {
        let (d, field) = (self.p1.radicand(), self.p1.field());
        if let Some((qx, qy)) = self.q.as_rational() {
            let ex = Surd::constant(qx).sub(self.p1.x());
            let ey = Surd::constant(qy).sub(self.p1.y());
            let dot = ex.mul(dx, d, field).add(&ey.mul(dy, d, field));
            return Some(dot.sign(d, field));
        }
        let mut w = ratio(1, 1 << 10);
        for _ in 0..self.depth {
            let (px, py) = self.p1.enclose(&w);
            let (qx, qy) = self.q.enclose(&w);
            let ix = dx.enclose(d, field, &w);
            let iy = dy.enclose(d, field, &w);
            let dot: Interval = qx.sub(&px).mul(&ix).add(&qy.sub(&py).mul(&iy));
            if let Some(s) = dot.strict_sign() {
                return Some(s);
            }
            w *= ratio(1, 2);
        }
        None
    }
}

/// Part II away from a common unbounded curve: compare candidates by the tangent direction at `p1`.
fn by_tangent(
    c: &FaceComplex,
    p1: usize,
    p2: usize,
    f: &[usize],
    depth: u32,
) -> Result<usize, Error> {
    let v = &c.faces()[p1];
    if v.dim != 0 {
        return Err(Error::AmbiguousTie(p1, p2));
    }
    let k = v.support[0];
    let poly = c.arrangement().curves()[k].poly();
    // T = (-f_y, f_x) at p1
    let tx = v.sample.eval(&poly.dy()).scale(&-Rational::one());
    let ty = v.sample.eval(&poly.dx());
    let tu = c.tangent_u_sign(k, p1);
    if tu == 0 {
        return Err(Error::AmbiguousTie(p1, p2));
    }
    let ctx = DotContext {
        p1: &v.sample,
        q: &c.faces()[p2].sample,
        depth,
    };
    // direction of each candidate as a multiple of T
    let mut dirs = Vec::new();
    for &cand in f {
        let sides = c.sides_at_vertex(p1, cand);
        if sides.len() != 1 {
            return Err(Error::AmbiguousTie(p1, p2));
        }
        let want = if sides[0] == Side::Right { 1 } else { -1 };
        dirs.push((cand, want * tu));
    }
    let along = ctx.sign(&tx, &ty).ok_or(Error::AmbiguousTie(p1, p2))?;
    let winners: Vec<usize> = if along != 0 {
        dirs.iter()
            .filter(|(_, s)| *s == along)
            .map(|(p, _)| *p)
            .collect()
    } else {
        // clockwise from p1 on the circle through p1 tangent to T and through q
        let n = ctx
            .sign(&ty.scale(&-Rational::one()), &tx)
            .ok_or(Error::AmbiguousTie(p1, p2))?;
        let cw = if n > 0 { -1 } else { 1 };
        dirs.iter()
            .filter(|(_, s)| *s == cw)
            .map(|(p, _)| *p)
            .collect()
    };
    match winners[..] {
        [p] => Ok(p),
        _ => Err(Error::AmbiguousTie(p1, p2)),
    }
}

/// Full geometric product table on all faces.
pub fn geometric_table(c: &FaceComplex, depth: u32) -> Result<ProductTable, Error> {
    let n = c.len();
    let mut table = vec![vec![0; n]; n];
    for (a, row) in table.iter_mut().enumerate() {
        for (b, e) in row.iter_mut().enumerate() {
            *e = geometric_product_with_depth(c, a, b, depth)?;
        }
    }
    Ok(ProductTable {
        kind: TableKind::Geometric,
        labels: face_labels(c),
        table,
    })
}

pub fn face_labels(c: &FaceComplex) -> Vec<String> {
    c.faces().iter().map(|f| format!("f{}", f.id)).collect()
}

/// A choice of one face in each fiber of the sign map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoiceFunction {
    pub assignment: BTreeMap<SignVector, usize>,
}

impl ChoiceFunction {
    /// Picks the face with the smallest id in every fiber.
    pub fn canonical(c: &FaceComplex) -> ChoiceFunction {
        let l0 = image_i(c);
        ChoiceFunction {
            assignment: l0
                .preimage
                .iter()
                .map(|(v, ids)| (v.clone(), ids[0]))
                .collect(),
        }
    }

    /// Overrides the choice for one fiber; the face must lie in it.
    pub fn with(mut self, c: &FaceComplex, face: usize) -> Result<ChoiceFunction, Error> {
        let s = c.face(face)?.signs.clone();
        self.assignment.insert(s, face);
        Ok(self)
    }

    pub fn get(&self, v: &SignVector) -> Option<usize> {
        self.assignment.get(v).cloned()
    }
}

/// `j(i(x) i(y))`.
pub fn associative_product(
    c: &FaceComplex,
    j: &ChoiceFunction,
    x: usize,
    y: usize,
) -> Result<usize, Error> {
    let v = c.face(x)?.signs.mul(&c.face(y)?.signs);
    j.get(&v).ok_or_else(|| {
        Error::NotClosed(format!(
            "{} * {} = {v}",
            c.faces()[x].signs,
            c.faces()[y].signs
        ))
    })
}

pub fn associative_table(c: &FaceComplex, j: &ChoiceFunction) -> Result<ProductTable, Error> {
    if let Closure::Witness(u, v, w) = check_closure(&image_i(c)) {
        return Err(Error::NotClosed(format!("{u} * {v} = {w}")));
    }
    let n = c.len();
    let table = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| associative_product(c, j, a, b))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProductTable {
        kind: TableKind::Associative,
        labels: face_labels(c),
        table,
    })
}

/// `x² = x`, both alternative laws and `(x·y)·x = x·y`.
pub fn verify_alternative_lrb(t: &ProductTable) -> Result<AxiomReport, Error> {
    t.check_closed()?;
    if let Some(x) = t.find_idempotence_violation() {
        return Ok(AxiomReport::Violation {
            axiom: Axiom::Idempotence,
            witness: vec![x],
        });
    }
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            let xy = t.mul(x, y);
            if t.mul(x, xy) != t.mul(t.mul(x, x), y) {
                return Ok(AxiomReport::Violation {
                    axiom: Axiom::LeftAlternative,
                    witness: vec![x, y],
                });
            }
            if t.mul(x, t.mul(y, y)) != t.mul(xy, y) {
                return Ok(AxiomReport::Violation {
                    axiom: Axiom::RightAlternative,
                    witness: vec![x, y],
                });
            }
        }
    }
    if let Some((x, y)) = t.find_left_regularity_violation() {
        return Ok(AxiomReport::Violation {
            axiom: Axiom::LeftRegularity,
            witness: vec![x, y],
        });
    }
    Ok(AxiomReport::Ok)
}

/// Aperiodicity `x³ = x²` plus the semigroup laws that survive without idempotence.
pub fn verify_aperiodic_semigroup(t: &ProductTable) -> Result<AxiomReport, Error> {
    t.check_closed()?;
    if let Some((x, y, z)) = t.find_associativity_violation() {
        return Ok(AxiomReport::Violation {
            axiom: Axiom::Associativity,
            witness: vec![x, y, z],
        });
    }
    if let Some(x) = t.find_aperiodicity_violation() {
        return Ok(AxiomReport::Violation {
            axiom: Axiom::Aperiodicity,
            witness: vec![x],
        });
    }
    if let Some((x, y)) = t.find_left_regularity_violation() {
        return Ok(AxiomReport::Violation {
            axiom: Axiom::LeftRegularity,
            witness: vec![x, y],
        });
    }
    Ok(AxiomReport::Ok)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    NoObstructionFound,
    Certificate {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },
}

/// Searches `a ≠ b` with `ab = a`, `ba = b` and some `c` with `ac = bc`.
pub fn find_l21_embedding_obstruction(t: &ProductTable) -> Result<Obstruction, Error> {
    t.check_closed()?;
    let n = t.len();
    // certificates with `d ≠ c` first, since those are the informative ones
    for strict in [true, false] {
        for a in 0..n {
            for b in (0..n).filter(|&b| b != a) {
                if t.mul(a, b) != a || t.mul(b, a) != b {
                    continue;
                }
                let hit = |c: usize| t.mul(a, c) == t.mul(b, c) && (!strict || t.mul(a, c) != c);
                if let Some(c) = (0..n).find(|&c| hit(c)) {
                    return Ok(Obstruction::Certificate {
                        a,
                        b,
                        c,
                        d: t.mul(a, c),
                    });
                }
            }
        }
    }
    Ok(Obstruction::NoObstructionFound)
}

/// Faces `x²` of an associative table and whether `i` maps them isomorphically onto `L0`.
pub fn idempotents_match_l0(c: &FaceComplex, t: &ProductTable) -> bool {
    let mut sq: Vec<usize> = (0..t.len()).map(|x| t.mul(x, x)).collect();
    sq.sort();
    sq.dedup();
    let l0 = image_i(c);
    if sq.len() != l0.len() {
        return false;
    }
    let iv = |x: usize| c.faces()[x].signs.clone();
    let distinct: std::collections::BTreeSet<SignVector> = sq.iter().map(|&x| iv(x)).collect();
    distinct.len() == sq.len()
        && sq.iter().all(|&a| {
            sq.iter().all(|&b| {
                let p = t.mul(a, b);
                sq.contains(&p) && iv(p) == iv(a).mul(&iv(b))
            })
        })
}

/// `x ≼ x·(y·z)` and `x ≼ (x·y)·z` for all triples; returns the first failure.
pub fn weak_associativity_violation(
    c: &FaceComplex,
    t: &ProductTable,
) -> Option<(usize, usize, usize)> {
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = t.mul(t.mul(x, y), z);
                let r = t.mul(x, t.mul(y, z));
                if !c.le(x, l) || !c.le(x, r) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{validate, Curve};
    use crate::complex::decompose;
    use crate::numeric::rational::rat;
    use crate::sign::sv;

    fn tangent() -> FaceComplex {
        decompose(
            &validate(vec![
                Curve::line_i([0, 1, 0], "L"),
                Curve::conic_i([1, 0, 1, 0, -2, 0], "C"),
            ])
            .unwrap(),
        )
    }

    fn by_signs(c: &FaceComplex, s: &str) -> Vec<usize> {
        c.faces()
            .iter()
            .filter(|f| f.signs == sv(s))
            .map(|f| f.id)
            .collect()
    }

    #[test]
    fn tangent_table() {
        let c = tangent();
        let rays = by_signs(&c, "0+");
        let (a, b) = (rays[0], rays[1]);
        let circ = by_signs(&c, "+0")[0];
        let d = by_signs(&c, "++")[0];
        let e = by_signs(&c, "00")[0];
        for (x, y, z) in [
            (a, b, a),
            (b, a, b),
            (a, circ, d),
            (b, circ, d),
            (circ, a, d),
            (circ, b, d),
        ] {
            assert_eq!(geometric_product(&c, x, y).unwrap(), z);
        }
        for x in 0..c.len() {
            assert_eq!(geometric_product(&c, e, x).unwrap(), x);
            assert_eq!(geometric_product(&c, x, e).unwrap(), x);
        }
        assert_eq!(f_set(&c, e, d), vec![d]);
        let t = geometric_table(&c, 10).unwrap();
        assert!(verify_alternative_lrb(&t).unwrap().is_ok());
        assert!(t.is_associative());
        assert_eq!(
            find_l21_embedding_obstruction(&t).unwrap(),
            Obstruction::Certificate { a, b, c: circ, d }
        );
        assert_eq!(
            find_l21_embedding_obstruction(&ProductTable::full_l21(1)).unwrap(),
            Obstruction::NoObstructionFound
        );
    }

    #[test]
    fn associative_on_transversal_circle() {
        let c = decompose(
            &validate(vec![
                Curve::line_i([0, 1, 0], "L"),
                Curve::conic_i([1, 0, 1, 0, 0, -1], "C"),
            ])
            .unwrap(),
        );
        let j = ChoiceFunction::canonical(&c);
        let pts = by_signs(&c, "00");
        assert_eq!(pts.len(), 2);
        let t = associative_table(&c, &j).unwrap();
        assert_eq!(t.mul(pts[1], pts[1]), pts[0]);
        assert!(verify_aperiodic_semigroup(&t).unwrap().is_ok());
        assert!(idempotents_match_l0(&c, &t));
        let j2 = j.with(&c, pts[1]).unwrap();
        assert_eq!(
            associative_product(&c, &j2, pts[0], pts[0]).unwrap(),
            pts[1]
        );
        assert_eq!(c.locate(&rat(0), &rat(0)), by_signs(&c, "0-")[0]);
    }
    #[test]
    fn non_associative_example() {
        let arr = validate(vec![
            Curve::conic_i([1, 0, 1, 0, 0, -1], "C"),
            Curve::line_i([0, -1, 1], "T1"),
            Curve::line_i([0, 1, 1], "T2"),
            Curve::line_i([4, -1, 2], "S"),
        ])
        .unwrap();
        let c = decompose(&arr);
        let at = |x: Rational, y: Rational| c.locate(&x, &y);
        let x = at(rat(0), rat(1));
        let y = at(rat(0), rat(-1));
        let w = at(rat(1), rat(0));
        let z = at(rat(-1), rat(0));
        let m = at(ratio(-3, 5), ratio(-4, 5));
        let b = at(ratio(-20, 101), ratio(99, 101));
        assert_eq!(f_set(&c, x, y), {
            let mut v = vec![b, w];
            v.sort();
            v
        });
        assert_eq!(geometric_product(&c, x, y).unwrap(), w);
        assert_eq!(geometric_product(&c, y, z).unwrap(), m);
        assert_eq!(geometric_product(&c, x, m).unwrap(), b);
        assert_eq!(geometric_product(&c, w, z).unwrap(), w);
        let t = geometric_table(&c, 20).unwrap();
        assert!(verify_alternative_lrb(&t).unwrap().is_ok());
        assert!(!t.is_associative());
        assert_eq!(weak_associativity_violation(&c, &t), None);
    }
}
