//! Deletion, restriction to one curve, pointed-curve LRBs and the embedding map.

use serde::Serialize;

use crate::arrangement::{intersect, Arrangement, ConicClass, CurveShape};
use crate::complex::{decompose, FaceComplex};
use crate::error::Error;
use crate::numeric::point::AlgebraicPoint;
use crate::numeric::rational::{ratio, Rational};
use crate::semigroup::L0Set;
use crate::sign::{Sign, SignVector};

pub fn delete(arr: &Arrangement, h: usize) -> Result<Arrangement, Error> {
    arr.delete(h)
}

/// A curve of an arrangement with the points where the other curves meet it.
#[derive(Clone, Debug)]
pub struct PointedCurve {
    pub curve: usize,
    pub closed: bool,
    /// Faces of the full complex along the curve: alternately arcs and points.
    /// Unbounded curves start and end with an arc; ovals start at a marked point.
    pub faces: Vec<usize>,
    /// Vertex faces in traversal order.
    pub points: Vec<usize>,
    pub samples: Vec<AlgebraicPoint>,
    /// Arc face holding the removed point on an oval.
    pub removed_arc: Option<usize>,
    pub removed_point: Option<AlgebraicPoint>,
}

impl PointedCurve {
    pub fn k(&self) -> usize {
        self.points.len()
    }

    /// Starts an oval at its `s`-th marked point; the removed point moves to the preceding gap.
    pub fn rotate_start(&self, s: usize, complex: &FaceComplex) -> PointedCurve {
        if !self.closed || self.points.is_empty() {
            return self.clone();
        }
        let s = s % self.k();
        let mut faces = self.faces.clone();
        faces.rotate_left(2 * s);
        let points: Vec<usize> = faces.iter().step_by(2).cloned().collect();
        let removed = *faces.last().unwrap();
        PointedCurve {
            curve: self.curve,
            closed: true,
            samples: points
                .iter()
                .map(|&p| complex.faces()[p].sample.clone())
                .collect(),
            points,
            faces,
            removed_arc: Some(removed),
            removed_point: Some(complex.faces()[removed].sample.clone()),
        }
    }
}

/// Restriction of the arrangement to curve `h`, using a precomputed complex.
pub fn restrict_in(complex: &FaceComplex, h: usize) -> Result<PointedCurve, Error> {
    let arr = complex.arrangement();
    if h >= arr.len() {
        return Err(Error::InvalidIndex(h));
    }
    if arr.shape(h) == CurveShape::Conic(ConicClass::Hyperbola) {
        return Err(Error::Unsupported(
            "restriction to a hyperbola, whose real locus has two components".into(),
        ));
    }
    let path = complex.curve_paths(h).remove(0);
    let mut faces = path.faces;
    let is_point = |f: usize| complex.faces()[f].dim == 0;
    let (mut removed_arc, mut removed_point) = (None, None);
    if path.closed {
        // start at the marked point with the smallest face id
        if let Some(first) = (0..faces.len())
            .filter(|&i| is_point(faces[i]))
            .min_by_key(|&i| faces[i])
        {
            faces.rotate_left(first);
        }
        let last = *faces.last().unwrap();
        removed_arc = Some(last);
        removed_point = Some(complex.faces()[last].sample.clone());
    }
    let points: Vec<usize> = faces.iter().filter(|&&f| is_point(f)).cloned().collect();
    Ok(PointedCurve {
        curve: h,
        closed: path.closed,
        samples: points
            .iter()
            .map(|&p| complex.faces()[p].sample.clone())
            .collect(),
        points,
        faces,
        removed_arc,
        removed_point,
    })
}

pub fn restrict(arr: &Arrangement, h: usize) -> Result<PointedCurve, Error> {
    restrict_in(&decompose(arr), h)
}

/// Sign vectors of the pointed curve in traversal order, with `+` on the forward side of each point.
pub fn pointed_vectors(k: usize, closed: bool) -> Vec<SignVector> {
    let mut out = Vec::new();
    // arcs are indexed by how many points lie behind them
    let arc = |behind: usize| {
        SignVector(
            (0..k)
                .map(|i| if i < behind { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    };
    let point = |i: usize| {
        let mut v = arc(i);
        v.0[i] = Sign::Zero;
        v
    };
    if !closed || k == 0 {
        out.push(arc(0));
    }
    for i in 0..k {
        out.push(point(i));
        out.push(arc(i + 1));
    }
    if closed && k == 0 {
        return vec![SignVector(vec![])];
    }
    out
}

/// The LRB of the pointed curve; fibers index faces in traversal order.
pub fn pointed_curve_lrb(pc: &PointedCurve) -> L0Set {
    L0Set::from_vectors(pc.k(), pointed_vectors(pc.k(), pc.closed))
}

/// `L0(A)|_H`: elements vanishing in coordinate `h`.
pub fn restricted_sublrb(l0: &L0Set, h: usize) -> L0Set {
    let mut out = l0.clone();
    out.preimage.retain(|v, _| v.get(h) == Sign::Zero);
    out.elements = out.preimage.keys().cloned().collect();
    out
}

/// How coordinate `j` of an image is determined by the pointed-curve vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CoordinateLaw {
    Zero,
    Constant(Sign),
    /// `scalar · ∏ x_i^{m_i}` over 1-based point indices `i`.
    SignedProduct {
        scalar: i32,
        factors: Vec<(usize, usize)>,
    },
}

impl CoordinateLaw {
    pub fn apply(&self, x: &SignVector) -> Sign {
        match self {
            CoordinateLaw::Zero => Sign::Zero,
            CoordinateLaw::Constant(s) => *s,
            CoordinateLaw::SignedProduct { scalar, factors } => {
                let mut acc = Sign::from_i32(*scalar);
                for &(i, m) in factors {
                    let s = x.get(i - 1);
                    acc = acc.times(if m % 2 == 0 && s != Sign::Zero {
                        Sign::Plus
                    } else {
                        s
                    });
                }
                acc
            }
        }
    }

    /// The same law with every multiplicity replaced by its parity (0 mapped to 2).
    pub fn parity_reduced(&self) -> CoordinateLaw {
        match self {
            CoordinateLaw::SignedProduct { scalar, factors } => CoordinateLaw::SignedProduct {
                scalar: *scalar,
                factors: factors
                    .iter()
                    .map(|&(i, m)| (i, if m % 2 == 0 { 2 } else { 1 }))
                    .collect(),
            },
            other => other.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiEntry {
    pub domain: SignVector,
    pub face: usize,
    pub image: SignVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingReport {
    pub curve: usize,
    pub closed: bool,
    pub points: Vec<usize>,
    pub phi: Vec<PhiEntry>,
    /// One law per coordinate of the full arrangement.
    pub laws: Vec<CoordinateLaw>,
    /// Whether distinct faces on the curve have distinct sign vectors.
    pub injective_on_vectors: bool,
    /// `Some(true)` when checked and product-preserving; `None` when not a line arrangement.
    pub isomorphism: Option<bool>,
}

/// Index of the unique candidate equal to `p`, found by refining enclosures until boxes separate.
fn match_point(p: &AlgebraicPoint, candidates: &[AlgebraicPoint]) -> Option<usize> {
    let mut w = ratio(1, 1 << 8);
    for _ in 0..80 {
        let boxes: Vec<_> = candidates.iter().map(|c| c.enclose(&w)).collect();
        let disjoint = (0..boxes.len()).all(|a| {
            (a + 1..boxes.len()).all(|b| {
                !(boxes[a].0.intersects(&boxes[b].0) && boxes[a].1.intersects(&boxes[b].1))
            })
        });
        if disjoint {
            let (px, py) = p.enclose(&w);
            let hits: Vec<usize> = (0..boxes.len())
                .filter(|&i| boxes[i].0.intersects(&px) && boxes[i].1.intersects(&py))
                .collect();
            match hits[..] {
                [i] => return Some(i),
                [] => return None,
                _ => {}
            }
        }
        w *= Rational::new(1.into(), 2.into());
    }
    None
}

/// Marked point indices on curve `j` with their intersection multiplicities, 1-based.
fn multiplicities(
    complex: &FaceComplex,
    pc: &PointedCurve,
    j: usize,
) -> Result<Vec<(usize, usize)>, Error> {
    let arr = complex.arrangement();
    let on_j: Vec<usize> = (0..pc.k())
        .filter(|&i| complex.faces()[pc.points[i]].support.contains(&j))
        .collect();
    if on_j.is_empty() {
        return Ok(vec![]);
    }
    let recs = intersect(&arr.curves()[pc.curve], &arr.curves()[j])?;
    let cands: Vec<AlgebraicPoint> = on_j.iter().map(|&i| pc.samples[i].clone()).collect();
    let mut out = vec![0; on_j.len()];
    for r in &recs {
        let idx = match_point(&r.point, &cands).ok_or_else(|| Error::LawViolation {
            coordinate: j,
            detail: "unmatched intersection point".into(),
        })?;
        out[idx] += r.multiplicity;
    }
    Ok(on_j.iter().zip(out).map(|(&i, m)| (i + 1, m)).collect())
}

fn fit_law(
    j: usize,
    factors: Vec<(usize, usize)>,
    pairs: &[(SignVector, SignVector)],
) -> Result<CoordinateLaw, Error> {
    let law = if factors.is_empty() {
        CoordinateLaw::Constant(pairs.first().map(|p| p.1.get(j)).unwrap_or(Sign::Plus))
    } else {
        let probe = CoordinateLaw::SignedProduct {
            scalar: 1,
            factors: factors.clone(),
        };
        let scalar = pairs
            .iter()
            .find(|(x, _)| probe.apply(x) != Sign::Zero)
            .map(|(x, y)| probe.apply(x).times(y.get(j)).to_i32())
            .unwrap_or(1);
        CoordinateLaw::SignedProduct { scalar, factors }
    };
    for (x, y) in pairs {
        if law.apply(x) != y.get(j) {
            return Err(Error::LawViolation {
                coordinate: j,
                detail: format!("{law:?} maps {x} to {} but the image is {y}", law.apply(x)),
            });
        }
    }
    Ok(law)
}

pub fn embedding_map_in(complex: &FaceComplex, h: usize) -> Result<EmbeddingReport, Error> {
    embedding_for(complex, &restrict_in(complex, h)?)
}

/// The embedding map for a given pointed curve, so that ovals can use any start.
pub fn embedding_for(complex: &FaceComplex, pc: &PointedCurve) -> Result<EmbeddingReport, Error> {
    let arr = complex.arrangement();
    let h = pc.curve;
    let domain = pointed_vectors(pc.k(), pc.closed);
    let pairs: Vec<(SignVector, SignVector)> = domain
        .iter()
        .zip(&pc.faces)
        .map(|(x, &f)| (x.clone(), complex.faces()[f].signs.clone()))
        .collect();
    let phi: Vec<PhiEntry> = pairs
        .iter()
        .zip(&pc.faces)
        .map(|((x, y), &f)| PhiEntry {
            domain: x.clone(),
            face: f,
            image: y.clone(),
        })
        .collect();
    let mut laws = Vec::with_capacity(arr.len());
    for j in 0..arr.len() {
        if j == h {
            if let Some((_, y)) = pairs.iter().find(|(_, y)| y.get(h) != Sign::Zero) {
                return Err(Error::LawViolation {
                    coordinate: j,
                    detail: format!("image {y} is off the curve"),
                });
            }
            laws.push(CoordinateLaw::Zero);
            continue;
        }
        laws.push(fit_law(j, multiplicities(complex, pc, j)?, &pairs)?);
    }
    let mut images: Vec<&SignVector> = pairs.iter().map(|p| &p.1).collect();
    images.sort();
    images.dedup();
    let injective_on_vectors = images.len() == pairs.len();
    let isomorphism = arr.is_line_arrangement().then(|| {
        injective_on_vectors
            && pairs.iter().all(|(x1, y1)| {
                pairs.iter().all(|(x2, y2)| {
                    let p = x1.mul(x2);
                    pairs.iter().any(|(x, y)| *x == p && *y == y1.mul(y2))
                })
            })
    });
    Ok(EmbeddingReport {
        curve: h,
        closed: pc.closed,
        points: pc.points.clone(),
        phi,
        laws,
        injective_on_vectors,
        isomorphism,
    })
}

pub fn embedding_map(arr: &Arrangement, h: usize) -> Result<EmbeddingReport, Error> {
    embedding_map_in(&decompose(arr), h)
}

/// A pair of curve faces whose product is not preserved by `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonHomomorphism {
    pub curve: usize,
    pub a: usize,
    pub c: usize,
    pub b: usize,
    pub product_in_arrangement: SignVector,
}

/// Searches curve `h` for `a, c` with `i_H(a) i_H(c) = i_H(b)` but `i(a) i(c) ≠ i(b)`.
pub fn find_non_homomorphism_on(
    complex: &FaceComplex,
    h: usize,
) -> Result<Option<NonHomomorphism>, Error> {
    let pc = restrict_in(complex, h)?;
    let dom = pointed_vectors(pc.k(), pc.closed);
    let img = |t: usize| &complex.faces()[pc.faces[t]].signs;
    for a in 0..dom.len() {
        for c in 0..dom.len() {
            let p = dom[a].mul(&dom[c]);
            let Some(b) = dom.iter().position(|x| *x == p) else {
                continue;
            };
            let q = img(a).mul(img(c));
            if q != *img(b) {
                return Ok(Some(NonHomomorphism {
                    curve: h,
                    a: pc.faces[a],
                    c: pc.faces[c],
                    b: pc.faces[b],
                    product_in_arrangement: q,
                }));
            }
        }
    }
    Ok(None)
}

/// The first witness over all curves other than hyperbolas.
pub fn find_non_homomorphism(complex: &FaceComplex) -> Result<Option<NonHomomorphism>, Error> {
    for h in 0..complex.arrangement().len() {
        if complex.arrangement().shape(h) == CurveShape::Conic(ConicClass::Hyperbola) {
            continue;
        }
        if let Some(w) = find_non_homomorphism_on(complex, h)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Independence {
    Ok,
    Violation { gap: usize },
}

/// Pointed-segment LRB of an oval cut in gap `g`, in the original point labels.
fn cut_lrb(k: usize, g: usize) -> L0Set {
    // starting after gap g means starting at point g + 1 (mod k)
    let s = (g + 1) % k;
    L0Set::from_vectors(
        k,
        pointed_vectors(k, true).into_iter().map(|v| {
            let mut w = vec![Sign::Zero; k];
            for (pos, sgn) in v.0.into_iter().enumerate() {
                w[(s + pos) % k] = sgn;
            }
            SignVector(w)
        }),
    )
}

/// The LRBs obtained from every placement of the removed point agree under the cyclic shift of points.
pub fn verify_pointed_oval_independence(pc: &PointedCurve) -> Independence {
    let k = pc.k();
    if !pc.closed || k <= 1 {
        return Independence::Ok;
    }
    let shift = |v: &SignVector| SignVector((0..k).map(|i| v.get((i + k - 1) % k)).collect());
    for g in 0..k {
        let here = cut_lrb(k, g);
        let next = cut_lrb(k, (g + 1) % k);
        let mapped = here.map(shift);
        let product_ok = here.elements.iter().all(|a| {
            here.elements
                .iter()
                .all(|b| shift(&a.mul(b)) == shift(a).mul(&shift(b)))
        });
        if mapped.elements != next.elements || !product_ok || here.len() != 2 * k {
            return Independence::Violation { gap: g };
        }
    }
    Independence::Ok
}
