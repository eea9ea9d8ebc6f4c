//! Chamber counting by deletion and restriction.

use serde::Serialize;
use std::collections::BTreeMap;

use crate::arrangement::{Arrangement, ConicClass, CurveShape};
use crate::complex::{decompose, FaceComplex};
use crate::error::Error;
use crate::semigroup::L0Set;
use crate::sign::Sign;

/// Sections of `h`: edges of the complex supported on `h` alone.
pub fn sections(c: &FaceComplex, h: usize) -> Vec<usize> {
    c.edges()
        .iter()
        .filter(|e| e.support == [h])
        .map(|e| e.id)
        .collect()
}

/// The two chambers whose closures contain the section `e`, in increasing id order.
pub fn bound(c: &FaceComplex, h: usize, e: usize) -> Result<(usize, usize), Error> {
    let f = c.face(e)?;
    if f.dim != 1 || f.support != [h] {
        return Err(Error::NotASection(e));
    }
    match c.incident_chambers(e)[..] {
        [a, b] => Ok((a.min(b), a.max(b))),
        [a] => Ok((a, a)),
        _ => Err(Error::NotASection(e)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub chamber_pair: (usize, usize),
}

/// Sections of `h` grouped by equal chamber pairs, ordered by smallest member.
pub fn b_classes(c: &FaceComplex, h: usize) -> Result<Vec<BoundClass>, Error> {
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in sections(c, h) {
        groups.entry(bound(c, h, e)?).or_default().push(e);
    }
    let mut out: Vec<BoundClass> = groups
        .into_iter()
        .map(|(pair, members)| BoundClass {
            representative: members[0],
            members,
            chamber_pair: pair,
        })
        .collect();
    out.sort_by_key(|b| b.representative);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCheck {
    /// Chamber of the deleted arrangement.
    pub chamber: usize,
    /// Number of chambers of the full arrangement inside it.
    pub parts: usize,
    /// Number of classes whose chamber pair lies inside it.
    pub classes: usize,
    /// Parts joined by classes form one connected graph.
    pub graph_connected: bool,
    /// `classes - parts + 1` for a connected graph; nonzero exactly when the graph has a cycle.
    pub cycle_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentRow {
    pub curve: usize,
    pub label: String,
    /// False for hyperbolas; the identity is only claimed for connected curves.
    pub connected: bool,
    pub chambers: usize,
    pub deleted_chambers: usize,
    pub sections: usize,
    pub classes: usize,
    /// `|C(A)| = |C(A^H)| + |b(H)|`
    pub identity_holds: bool,
    /// `|C(A)| = |C(A^H)| + |C(A_H)|`, reported for line arrangements only.
    pub zaslavsky: Option<bool>,
    pub splits: Vec<SplitCheck>,
    /// Every split chamber with `k` parts holds exactly `k - 1` classes.
    pub splits_hold: bool,
}

pub fn component_row(c: &FaceComplex, h: usize) -> Result<ComponentRow, Error> {
    let arr = c.arrangement();
    let deleted = decompose(&arr.delete(h)?);
    let classes = b_classes(c, h)?;
    let n_sections = sections(c, h).len();
    let chambers = c.chambers().len();
    let deleted_chambers = deleted.chambers().len();
    // chamber of A^H containing each chamber of A
    let mut home: BTreeMap<usize, usize> = BTreeMap::new();
    for x in c.chambers() {
        let (px, py) = x
            .sample
            .as_rational()
            .ok_or_else(|| Error::Unsupported("irrational chamber sample".into()))?;
        home.insert(x.id, deleted.locate(&px, &py));
    }
    let mut splits: Vec<SplitCheck> = deleted
        .chambers()
        .iter()
        .map(|y| SplitCheck {
            chamber: y.id,
            parts: home.values().filter(|&&v| v == y.id).count(),
            classes: 0,
            graph_connected: true,
            cycle_rank: 0,
        })
        .collect();
    for s in splits.iter_mut() {
        let parts: Vec<usize> = home
            .iter()
            .filter(|(_, &v)| v == s.chamber)
            .map(|(&x, _)| x)
            .collect();
        let edges: Vec<(usize, usize)> = classes
            .iter()
            .map(|b| b.chamber_pair)
            .filter(|(x1, x2)| home[x1] == s.chamber && home[x2] == s.chamber)
            .collect();
        s.classes = edges.len();
        let components = count_components(&parts, &edges);
        s.graph_connected = components <= 1;
        s.cycle_rank = (edges.len() + components).saturating_sub(parts.len());
    }
    let splits_hold = splits
        .iter()
        .all(|s| s.parts >= 1 && s.classes + 1 == s.parts)
        && classes
            .iter()
            .all(|b| home[&b.chamber_pair.0] == home[&b.chamber_pair.1]);
    Ok(ComponentRow {
        curve: h,
        label: arr.curves()[h].label.clone(),
        connected: arr.shape(h) != CurveShape::Conic(ConicClass::Hyperbola),
        chambers,
        deleted_chambers,
        sections: n_sections,
        classes: classes.len(),
        identity_holds: chambers == deleted_chambers + classes.len(),
        zaslavsky: arr
            .is_line_arrangement()
            .then_some(chambers == deleted_chambers + n_sections),
        splits,
        splits_hold,
    })
}

impl ComponentRow {
    /// Identity and split counts hold, or the curve is disconnected and they are not claimed.
    pub fn holds_where_claimed(&self) -> bool {
        !self.connected || (self.identity_holds && self.splits_hold)
    }
}

/// Connected components of a graph on `nodes`.
fn count_components(nodes: &[usize], edges: &[(usize, usize)]) -> usize {
    let mut parent: BTreeMap<usize, usize> = nodes.iter().map(|&n| (n, n)).collect();
    fn root(p: &mut BTreeMap<usize, usize>, mut x: usize) -> usize {
        while p[&x] != x {
            x = p[&x];
        }
        x
    }
    let mut count = nodes.len();
    for &(a, b) in edges {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent.insert(ra, rb);
            count -= 1;
        }
    }
    count
}

/// One row per curve.
pub fn verify_deletion_restriction(arr: &Arrangement) -> Result<Vec<ComponentRow>, Error> {
    let c = decompose(arr);
    (0..arr.len()).map(|h| component_row(&c, h)).collect()
}

/// Chambers times anything and anything times chambers stay among chambers of `L0`.
pub fn chambers_form_ideal(l0: &L0Set) -> bool {
    let is_chamber = |v: &crate::sign::SignVector| v.0.iter().all(|s| *s != Sign::Zero);
    let ch: Vec<_> = l0.elements.iter().filter(|v| is_chamber(v)).collect();
    ch.iter().all(|x| {
        l0.elements.iter().all(|y| {
            let (a, b) = (x.mul(y), y.mul(x));
            is_chamber(&a) && is_chamber(&b) && l0.contains(&a) && l0.contains(&b)
        })
    })
}
