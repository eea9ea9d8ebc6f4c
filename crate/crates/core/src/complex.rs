//! Face decomposition of the plane by a vertical cell decomposition.
//!
//! The plane is cut into vertical strips and fibers at the critical `u`-values of a
//! sheared frame. Cells of the strips and fibers are merged into faces by union-find
//! over adjacent cells with equal sign vectors.

use num::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;

use crate::arrangement::Arrangement;
use crate::error::Error;
use crate::fiber::{
    cmp_roots, group_roots, original_point, shear_candidates, Branch, FiberRoot, ShearedCurve,
};
use crate::numeric::algebraic::{compare, isolate_real_roots, RealAlgebraic};
use crate::numeric::point::AlgebraicPoint;
use crate::numeric::poly::UPoly;
use crate::numeric::rational::{rat, ratio, simplest_between, Rational};
use crate::numeric::surd::{Field, Surd};
use crate::sign::{Sign, SignVector};

#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    pub dim: u8,
    pub support: Vec<usize>,
    pub sample: AlgebraicPoint,
    pub bounded: bool,
    pub signs: SignVector,
}

#[derive(Clone, Debug)]
pub(crate) struct Column {
    pub field: Field,
    /// `Some(s)` for a strip sampled at `u = s`, `None` for a fiber.
    pub strip: Option<Rational>,
    pub groups: Vec<Vec<FiberRoot>>,
    pub signs: Vec<SignVector>,
    pub face: Vec<usize>,
}

impl Column {
    fn cells(&self) -> usize {
        2 * self.groups.len() + 1
    }

    fn group_of(&self, curve: usize, branch: Branch) -> Option<usize> {
        self.groups
            .iter()
            .position(|g| g.iter().any(|r| r.curve == curve && r.branch == branch))
    }

    /// Group holding the continuation of branch `(curve, branch)` in a fiber.
    fn limit_of(&self, curve: usize, branch: Branch) -> Option<usize> {
        self.group_of(curve, branch)
            .or_else(|| self.group_of(curve, Branch::Single))
    }
}

/// Side of a fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The faces met along one connected component of a curve, in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePath {
    pub faces: Vec<usize>,
    pub closed: bool,
}

#[derive(Clone, Debug)]
pub struct FaceComplex {
    arr: Arrangement,
    shear: Rational,
    sheared: Vec<ShearedCurve>,
    crit: Vec<RealAlgebraic>,
    columns: Vec<Column>,
    offsets: Vec<usize>,
    up: Vec<Vec<usize>>,
    faces: Vec<Face>,
    cells_of: Vec<Vec<(usize, usize)>>,
    leq: Vec<Vec<u64>>,
}

/// Computes the face decomposition of the plane cut out by `arr`.
pub fn decompose(arr: &Arrangement) -> FaceComplex {
    let polys = arr.polys();
    for t in shear_candidates().take(500) {
        if let Some(c) = FaceComplex::build(arr, &polys, t) {
            return c;
        }
    }
    panic!("no admissible shear found");
}

fn critical_values(sheared: &[ShearedCurve]) -> Vec<RealAlgebraic> {
    let mut polys: Vec<UPoly> = sheared.iter().filter_map(|s| s.disc.clone()).collect();
    for i in 0..sheared.len() {
        for j in i + 1..sheared.len() {
            polys.push(sheared[i].g.resultant_y(&sheared[j].g));
        }
    }
    let mut vals: Vec<RealAlgebraic> = Vec::new();
    for p in polys.iter().filter(|p| !p.is_constant()) {
        vals.extend(
            isolate_real_roots(p)
                .expect("nonzero")
                .into_iter()
                .map(|r| r.0),
        );
    }
    vals.sort_by(compare);
    vals.dedup_by(|a, b| compare(a, b) == Ordering::Equal);
    vals
}

fn separate(a: &mut RealAlgebraic, b: &mut RealAlgebraic) {
    while a.hi() >= b.lo() {
        a.refine();
        b.refine();
        if a.as_rational().is_some() && b.as_rational().is_some() {
            break;
        }
    }
}

fn strip_samples(crit: &mut [RealAlgebraic]) -> Vec<Rational> {
    let m = crit.len();
    if m == 0 {
        return vec![Rational::zero()];
    }
    let mut out = vec![crit[0].lo().floor() - Rational::one()];
    for i in 1..m {
        let (l, r) = crit.split_at_mut(i);
        separate(&mut l[i - 1], &mut r[0]);
        let (lo, hi) = (crit[i - 1].hi().clone(), crit[i].lo().clone());
        out.push(if lo < hi {
            simplest_between(&lo, &hi)
        } else {
            lo
        });
    }
    out.push(crit[m - 1].hi().ceil() + Rational::one());
    out
}

/// Rational strictly between two fiber roots over a rational field.
fn rational_between(f: &Field, lower: Option<&FiberRoot>, upper: Option<&FiberRoot>) -> Rational {
    let mut w = ratio(1, 16);
    loop {
        let lo = lower.map(|r| r.v.enclose(&r.d, f, &w));
        let hi = upper.map(|r| r.v.enclose(&r.d, f, &w));
        match (lo, hi) {
            (None, None) => return Rational::zero(),
            (Some(l), None) => return l.hi.floor() + Rational::one(),
            (None, Some(h)) => return h.lo.ceil() - Rational::one(),
            (Some(l), Some(h)) if l.hi < h.lo => return simplest_between(&l.hi, &h.lo),
            _ => w /= rat(16),
        }
    }
}

impl FaceComplex {
    fn build(
        arr: &Arrangement,
        polys: &[crate::numeric::bipoly::BiPoly],
        t: Rational,
    ) -> Option<FaceComplex> {
        let sheared: Vec<ShearedCurve> = polys
            .iter()
            .map(|p| ShearedCurve::new(p, &t))
            .collect::<Option<_>>()?;
        let mut crit = critical_values(&sheared);
        let samples = strip_samples(&mut crit);
        let n = sheared.len();
        let roots_at = |f: &Field| -> Vec<Vec<FiberRoot>> {
            group_roots(f, (0..n).flat_map(|k| sheared[k].roots(k, f)).collect())
        };
        let mut columns = Vec::new();
        for (i, s) in samples.iter().enumerate() {
            let f = Field::rational(s.clone());
            let groups = roots_at(&f);
            columns.push(Column {
                field: f,
                strip: Some(s.clone()),
                groups,
                signs: vec![],
                face: vec![],
            });
            if i < crit.len() {
                let f = Field::new(crit[i].clone());
                let groups = roots_at(&f);
                // a vertex on a vertical tangent would hide the branch directions there
                let bad = groups.iter().any(|g| {
                    g.len() > 1
                        && g.iter()
                            .any(|r| !sheared[r.curve].is_line() && r.branch == Branch::Single)
                });
                if bad {
                    return None;
                }
                columns.push(Column {
                    field: f,
                    strip: None,
                    groups,
                    signs: vec![],
                    face: vec![],
                });
            }
        }
        for col in &mut columns {
            col.signs = (0..col.cells())
                .map(|pos| cell_signs(&sheared, &col.groups, pos))
                .collect();
        }
        let mut offsets = Vec::with_capacity(columns.len());
        let mut total = 0;
        for col in &columns {
            offsets.push(total);
            total += col.cells();
        }
        let mut up = vec![Vec::new(); total];
        for (ci, col) in columns.iter().enumerate() {
            for g in 0..col.groups.len() {
                let root = offsets[ci] + 2 * g + 1;
                up[root].push(offsets[ci] + 2 * g);
                up[root].push(offsets[ci] + 2 * g + 2);
            }
            if col.strip.is_none() {
                continue;
            }
            for fi in [ci.wrapping_sub(1), ci + 1] {
                let Some(fib) = columns.get(fi) else { continue };
                let lim: Vec<usize> = col
                    .groups
                    .iter()
                    .map(|g| {
                        fib.limit_of(g[0].curve, g[0].branch)
                            .expect("branch continues into the fiber")
                    })
                    .collect();
                let r = col.groups.len();
                for (j, &l) in lim.iter().enumerate() {
                    up[offsets[fi] + 2 * l + 1].push(offsets[ci] + 2 * j + 1);
                }
                for j in 0..=r {
                    let from = if j == 0 { 0 } else { 2 * lim[j - 1] + 1 };
                    let to = if j == r {
                        fib.cells() - 1
                    } else {
                        2 * lim[j] + 1
                    };
                    for k in from..=to {
                        up[offsets[fi] + k].push(offsets[ci] + 2 * j);
                    }
                }
            }
        }
        let locate_cell = |g: usize| -> (usize, usize) {
            let c = offsets.partition_point(|&o| o <= g) - 1;
            (c, g - offsets[c])
        };
        let sign_of = |g: usize| -> &SignVector {
            let (c, k) = locate_cell(g);
            &columns[c].signs[k]
        };
        let mut uf = UnionFind::new(total);
        for (lo, ups) in up.iter().enumerate() {
            for &hi in ups {
                if sign_of(lo) == sign_of(hi) {
                    uf.union(lo, hi);
                }
            }
        }
        let mut face_of_root: HashMap<usize, usize> = HashMap::new();
        let mut cell_face = vec![0; total];
        let mut cells_of: Vec<Vec<(usize, usize)>> = Vec::new();
        for (g, slot) in cell_face.iter_mut().enumerate() {
            let root = uf.find(g);
            let id = *face_of_root.entry(root).or_insert_with(|| {
                cells_of.push(Vec::new());
                cells_of.len() - 1
            });
            *slot = id;
            cells_of[id].push(locate_cell(g));
        }
        for (ci, col) in columns.iter_mut().enumerate() {
            col.face = (0..col.cells())
                .map(|k| cell_face[offsets[ci] + k])
                .collect();
        }
        let last_col = columns.len() - 1;
        let faces: Vec<Face> = cells_of
            .iter()
            .enumerate()
            .map(|(id, cells)| {
                let (c0, k0) = cells[0];
                let signs = columns[c0].signs[k0].clone();
                let support: Vec<usize> = (0..n).filter(|&j| signs.get(j) == Sign::Zero).collect();
                let dim = match support.len() {
                    0 => 2,
                    1 => 1,
                    _ => 0,
                };
                let bounded = cells.iter().all(|&(c, k)| {
                    c != 0 && c != last_col && k != 0 && k != columns[c].cells() - 1
                });
                let sample = face_sample(&columns, cells, dim, &t);
                Face {
                    id,
                    dim,
                    support,
                    sample,
                    bounded,
                    signs,
                }
            })
            .collect();
        let nf = faces.len();
        let words = nf.div_ceil(64);
        let mut leq = vec![vec![0u64; words]; nf];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a / 64] |= 1 << (a % 64);
        }
        for (lo, ups) in up.iter().enumerate() {
            for &hi in ups {
                let (a, b) = (cell_face[lo], cell_face[hi]);
                leq[a][b / 64] |= 1 << (b % 64);
            }
        }
        for k in 0..nf {
            let rowk = leq[k].clone();
            for row in leq.iter_mut() {
                if row[k / 64] >> (k % 64) & 1 == 1 {
                    for (w, r) in row.iter_mut().zip(&rowk) {
                        *w |= r;
                    }
                }
            }
        }
        Some(FaceComplex {
            arr: arr.clone(),
            shear: t,
            sheared,
            crit,
            columns,
            offsets,
            up,
            faces,
            cells_of,
            leq,
        })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn shear(&self) -> &Rational {
        &self.shear
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> Result<&Face, Error> {
        self.faces.get(id).ok_or(Error::UnknownFace(id))
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// `a ≼ b`: face `a` lies in the closure of face `b`. Panics on unknown ids.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a][b / 64] >> (b % 64) & 1 == 1
    }

    pub fn leq(&self, a: usize, b: usize) -> Result<bool, Error> {
        self.face(a)?;
        self.face(b)?;
        Ok(self.le(a, b))
    }

    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).filter(move |&b| self.le(a, b)).map(move |b| (a, b)))
            .collect()
    }

    /// Covering relations of the closure order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.le(a, b)
                    && !(0..n).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn chambers(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.dim == 2).collect()
    }

    pub fn edges(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.dim == 1).collect()
    }

    pub fn vertices(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.dim == 0).collect()
    }

    /// Chambers whose closure contains the edge.
    pub fn incident_chambers(&self, edge: usize) -> Vec<usize> {
        self.faces
            .iter()
            .filter(|f| f.dim == 2 && self.le(edge, f.id))
            .map(|f| f.id)
            .collect()
    }

    /// Edges whose closure contains the vertex.
    pub fn incident_edges(&self, vertex: usize) -> Vec<usize> {
        self.faces
            .iter()
            .filter(|f| f.dim == 1 && self.le(vertex, f.id))
            .map(|f| f.id)
            .collect()
    }

    pub fn sign_vectors(&self) -> Vec<SignVector> {
        self.faces.iter().map(|f| f.signs.clone()).collect()
    }

    /// Face containing a rational point.
    pub fn locate(&self, x: &Rational, y: &Rational) -> usize {
        let u = x - &self.shear * y;
        let ua = RealAlgebraic::from_rational(u.clone());
        let pos = self
            .crit
            .partition_point(|c| compare(c, &ua) == Ordering::Less);
        let (ci, groups, f) =
            if pos < self.crit.len() && compare(&self.crit[pos], &ua) == Ordering::Equal {
                let c = &self.columns[2 * pos + 1];
                (2 * pos + 1, c.groups.clone(), c.field.clone())
            } else {
                let f = Field::rational(u);
                let groups = group_roots(
                    &f,
                    (0..self.sheared.len())
                        .flat_map(|k| self.sheared[k].roots(k, &f))
                        .collect(),
                );
                (2 * pos, groups, f)
            };
        let probe = FiberRoot {
            curve: usize::MAX,
            branch: Branch::Single,
            v: Surd::constant(y.clone()),
            d: UPoly::zero(),
        };
        let mut cell = 2 * groups.len();
        for (g, grp) in groups.iter().enumerate() {
            match cmp_roots(&f, &probe, &grp[0]) {
                Ordering::Less => {
                    cell = 2 * g;
                    break;
                }
                Ordering::Equal => {
                    cell = 2 * g + 1;
                    break;
                }
                Ordering::Greater => {}
            }
        }
        self.columns[ci].face[cell]
    }

    /// Sides of the fiber through `vertex` on which `face` touches it.
    pub fn sides_at_vertex(&self, vertex: usize, face: usize) -> Vec<Side> {
        let (c, k) = self.cells_of[vertex][0];
        let mut out = Vec::new();
        for &hi in &self.up[self.offsets[c] + k] {
            let hc = self.offsets.partition_point(|&o| o <= hi) - 1;
            if self.columns[hc].face[hi - self.offsets[hc]] != face {
                continue;
            }
            let side = if hc < c {
                Side::Left
            } else if hc > c {
                Side::Right
            } else {
                continue;
            };
            if !out.contains(&side) {
                out.push(side);
            }
        }
        out
    }

    /// Sign of the `u`-component of a tangent vector `(-g_v, g_u)` of curve `k` at a vertex.
    pub fn tangent_u_sign(&self, k: usize, vertex: usize) -> i32 {
        let (c, g) = self.cells_of[vertex][0];
        let col = &self.columns[c];
        let grp = &col.groups[(g - 1) / 2];
        let root = grp.iter().find(|r| r.curve == k).unwrap_or(&grp[0]);
        let pt = crate::fiber::sheared_point(&col.field, root);
        -self.sheared[k].dv_sign(&pt)
    }

    /// Faces met along each connected component of curve `k`, in traversal order.
    ///
    /// Lines run toward increasing `x` (increasing `y` when vertical), ovals clockwise
    /// from their leftmost point in the sheared frame, parabola and hyperbola branches
    /// with the convex side on the right.
    pub fn curve_paths(&self, k: usize) -> Vec<CurvePath> {
        let runs = |b: Branch| -> Vec<Vec<usize>> {
            let mut out: Vec<Vec<usize>> = Vec::new();
            let mut cur: Vec<usize> = Vec::new();
            for col in &self.columns {
                let g = match col.strip {
                    Some(_) => col.group_of(k, b),
                    None => col.limit_of(k, b),
                };
                match g {
                    Some(g) => cur.push(col.face[2 * g + 1]),
                    None if !cur.is_empty() => out.push(std::mem::take(&mut cur)),
                    None => {}
                }
            }
            if !cur.is_empty() {
                out.push(cur);
            }
            out
        };
        let sc = &self.sheared[k];
        let mut paths: Vec<(Vec<usize>, bool)> = Vec::new();
        if sc.is_line() {
            let mut r = runs(Branch::Single).remove(0);
            if self.line_direction(k) < 0 {
                r.reverse();
            }
            paths.push((r, false));
        } else {
            let lower = runs(Branch::Lower);
            let upper = runs(Branch::Upper);
            let disc = sc.disc.as_ref().unwrap();
            let rev = |v: &Vec<usize>| v.iter().rev().cloned().collect::<Vec<_>>();
            if self.arr.shape(k).is_oval() {
                let mut p = upper[0].clone();
                p.extend(rev(&lower[0]));
                paths.push((p, true));
            } else if disc.degree() == Some(1) {
                // parabola: opening toward the side where the discriminant is positive
                if disc.lc() > Rational::zero() {
                    let mut p = rev(&lower[0]);
                    p.extend(upper[0].iter().cloned());
                    paths.push((p, false));
                } else {
                    let mut p = upper[0].clone();
                    p.extend(rev(&lower[0]));
                    paths.push((p, false));
                }
            } else if upper.len() == 2 {
                let mut left = upper[0].clone();
                left.extend(rev(&lower[0]));
                let mut right = rev(&lower[1]);
                right.extend(upper[1].iter().cloned());
                paths.push((left, false));
                paths.push((right, false));
            } else {
                paths.push((lower[0].clone(), false));
                paths.push((upper[0].clone(), false));
            }
        }
        paths
            .into_iter()
            .map(|(mut faces, closed)| {
                faces.dedup();
                if closed && faces.len() > 1 && faces.first() == faces.last() {
                    faces.pop();
                }
                CurvePath { faces, closed }
            })
            .collect()
    }

    /// `+1` if increasing `u` along line `k` moves toward increasing `x` (or `y` when vertical).
    fn line_direction(&self, k: usize) -> i32 {
        let Some(crate::arrangement::CurveKind::Line([a, b, _])) =
            self.arr.curves().get(k).map(|c| &c.kind)
        else {
            return 1;
        };
        let den = a * &self.shear + b;
        let s = if b.is_zero() { -(a * &den) } else { b * &den };
        if s > Rational::zero() {
            1
        } else {
            -1
        }
    }

    /// Number of vertical columns in the decomposition.
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }
}

fn cell_signs(sheared: &[ShearedCurve], groups: &[Vec<FiberRoot>], pos: usize) -> SignVector {
    SignVector(
        sheared
            .iter()
            .enumerate()
            .map(|(j, sc)| {
                if pos % 2 == 1 && groups[pos / 2].iter().any(|r| r.curve == j) {
                    return Sign::Zero;
                }
                let mut flips = 0;
                for (g, grp) in groups.iter().enumerate() {
                    if 2 * g < pos {
                        continue;
                    }
                    for r in grp.iter().filter(|r| r.curve == j) {
                        flips += if !sc.is_line() && r.branch == Branch::Single {
                            2
                        } else {
                            1
                        };
                    }
                }
                let s = Sign::from_i32(if sc.lead() > Rational::zero() { 1 } else { -1 });
                if flips % 2 == 0 {
                    s
                } else {
                    s.flip()
                }
            })
            .collect(),
    )
}

fn face_sample(
    columns: &[Column],
    cells: &[(usize, usize)],
    dim: u8,
    t: &Rational,
) -> AlgebraicPoint {
    let pick = |want_strip: bool, want_root: bool| {
        cells
            .iter()
            .find(|&&(c, k)| columns[c].strip.is_some() == want_strip && (k % 2 == 1) == want_root)
    };
    match dim {
        2 => {
            let &(c, k) = pick(true, false).expect("chamber meets a strip");
            let col = &columns[c];
            let g = k / 2;
            let lower = g.checked_sub(1).map(|i| &col.groups[i][0]);
            let upper = col.groups.get(g).map(|grp| &grp[0]);
            let v = rational_between(&col.field, lower, upper);
            let u = col.strip.clone().unwrap();
            AlgebraicPoint::rational(&u + t * &v, v)
        }
        1 => {
            let &(c, k) = pick(true, true).expect("edge meets a strip");
            let col = &columns[c];
            original_point(&col.field, &col.groups[k / 2][0], t)
        }
        _ => {
            let &(c, k) = cells.first().unwrap();
            let col = &columns[c];
            let grp = &col.groups[k / 2];
            let rep = grp.iter().find(|r| r.v.is_base()).unwrap_or(&grp[0]);
            original_point(&col.field, rep, t)
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            if ra < rb {
                self.parent[rb] = ra;
            } else {
                self.parent[ra] = rb;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{validate, Curve};

    fn counts(c: &FaceComplex) -> (usize, usize, usize) {
        (c.vertices().len(), c.edges().len(), c.chambers().len())
    }

    #[test]
    fn single_line() {
        let a = validate(vec![Curve::line_i([0, 1, 0], "L")]).unwrap();
        let c = decompose(&a);
        assert_eq!(counts(&c), (0, 1, 2));
        assert!(c.faces().iter().all(|f| !f.bounded));
    }

    #[test]
    fn empty_arrangement_is_one_chamber() {
        let c = decompose(&Arrangement::empty());
        assert_eq!(counts(&c), (0, 0, 1));
    }

    #[test]
    fn tangent_line_and_circle() {
        let a = validate(vec![
            Curve::line_i([0, 1, 0], "L"),
            Curve::conic_i([1, 0, 1, 0, -2, 0], "C"),
        ])
        .unwrap();
        let c = decompose(&a);
        assert_eq!(c.len(), 7);
        assert_eq!(counts(&c), (1, 3, 3));
        let e = c.vertices()[0].id;
        assert!(c.faces().iter().all(|f| c.le(e, f.id)));
        for edge in c.edges() {
            let ch = c.incident_chambers(edge.id);
            assert_eq!(ch.len(), 2);
        }
        let inside = c.locate(&rat(0), &rat(1));
        assert!(c.face(inside).unwrap().bounded);
        assert_eq!(c.face(inside).unwrap().signs.to_string(), "+-");
    }

    #[test]
    fn samples_have_their_sign_vectors() {
        let a = validate(vec![
            Curve::line_i([0, 1, 0], "f1"),
            Curve::line_i([-1, -1, 1], "f2"),
            Curve::line_i([-1, 1, -1], "f3"),
            Curve::conic_i([1, 0, 1, 0, 0, -1], "f4"),
        ])
        .unwrap();
        let c = decompose(&a);
        assert_eq!(counts(&c), (3, 12, 10));
        for f in c.faces() {
            assert_eq!(a.sign_vector(&f.sample), f.signs, "face {}", f.id);
        }
    }

    #[test]
    fn vertical_line_and_paths() {
        let a = validate(vec![
            Curve::line_i([1, 0, 0], "V"),
            Curve::conic_i([1, 0, 1, 0, 0, -1], "C"),
        ])
        .unwrap();
        let c = decompose(&a);
        assert_eq!(counts(&c), (2, 5, 4));
        let p = c.curve_paths(0);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].faces.len(), 5);
        // increasing y: the first face is the lower ray
        let first = c.face(p[0].faces[0]).unwrap();
        assert!(first.sample.approx().1 < -1.0);
        let o = c.curve_paths(1);
        assert!(o[0].closed);
        assert_eq!(o[0].faces.len(), 4);
    }
}
