//! L0 as the image of the sign map, closure checks and finite product tables.

use serde::Serialize;
use std::collections::BTreeMap;

use crate::arrangement::Arrangement;
use crate::complex::{decompose, FaceComplex};
use crate::error::Error;
use crate::sign::SignVector;

/// The image of the sign map together with its fibers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct L0Set {
    pub arity: usize,
    /// Sorted, without repetition.
    pub elements: Vec<SignVector>,
    /// Face ids mapping to each element.
    pub preimage: BTreeMap<SignVector, Vec<usize>>,
}

impl L0Set {
    pub fn from_vectors(arity: usize, vs: impl IntoIterator<Item = SignVector>) -> L0Set {
        let mut preimage: BTreeMap<SignVector, Vec<usize>> = BTreeMap::new();
        for (i, v) in vs.into_iter().enumerate() {
            assert_eq!(v.len(), arity, "sign vector arity");
            preimage.entry(v).or_default().push(i);
        }
        let elements = preimage.keys().cloned().collect();
        L0Set {
            arity,
            elements,
            preimage,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.preimage.contains_key(v)
    }

    pub fn index_of(&self, v: &SignVector) -> Option<usize> {
        self.elements.binary_search(v).ok()
    }

    pub fn is_injective(&self) -> bool {
        self.preimage.values().all(|f| f.len() == 1)
    }

    /// Product table under the componentwise product, if closed.
    pub fn table(&self) -> Result<ProductTable, Error> {
        if let Closure::Witness(u, v, w) = check_closure(self) {
            return Err(Error::NotClosed(format!("{u} * {v} = {w}")));
        }
        let n = self.len();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.index_of(&self.elements[i].mul(&self.elements[j]))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        Ok(ProductTable {
            kind: TableKind::SignVectors,
            labels: self.elements.iter().map(|e| e.to_string()).collect(),
            table,
        })
    }

    /// Applies a map to every element.
    pub fn map(&self, f: impl Fn(&SignVector) -> SignVector) -> L0Set {
        let arity = self
            .elements
            .first()
            .map(|e| f(e).len())
            .unwrap_or(self.arity);
        let mut preimage: BTreeMap<SignVector, Vec<usize>> = BTreeMap::new();
        for (v, ids) in &self.preimage {
            preimage
                .entry(f(v))
                .or_default()
                .extend(ids.iter().cloned());
        }
        for ids in preimage.values_mut() {
            ids.sort();
        }
        L0Set {
            arity,
            elements: preimage.keys().cloned().collect(),
            preimage,
        }
    }
}

/// `L0(A)`: sign vectors of all faces, with fibers.
pub fn image_i(complex: &FaceComplex) -> L0Set {
    L0Set::from_vectors(
        complex.arrangement().len(),
        complex.faces().iter().map(|f| f.signs.clone()),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Closure {
    Closed,
    Witness(SignVector, SignVector, SignVector),
}

/// Order in which closure witnesses are searched: more zeros first, then lexicographic.
fn search_order(l0: &L0Set) -> Vec<&SignVector> {
    let mut v: Vec<&SignVector> = l0.elements.iter().collect();
    v.sort_by(|a, b| b.zeros().cmp(&a.zeros()).then_with(|| a.cmp(b)));
    v
}

pub fn check_closure(l0: &L0Set) -> Closure {
    let order = search_order(l0);
    for u in &order {
        for v in &order {
            let w = u.mul(v);
            if !l0.contains(&w) {
                return Closure::Witness((*u).clone(), (*v).clone(), w);
            }
        }
    }
    Closure::Closed
}

/// True iff no point of the plane lies on more than two curves.
pub fn two_component_condition(complex: &FaceComplex) -> bool {
    complex.vertices().iter().all(|v| v.support.len() == 2)
}

pub fn satisfies_two_component_condition(arr: &Arrangement) -> bool {
    two_component_condition(&decompose(arr))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableKind {
    Geometric,
    Associative,
    SignVectors,
}

/// A finite magma on `0..n` with display labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductTable {
    pub kind: TableKind,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Idempotence,
    Associativity,
    LeftRegularity,
    LeftAlternative,
    RightAlternative,
    Aperiodicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomReport {
    Ok,
    Violation { axiom: Axiom, witness: Vec<usize> },
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        *self == AxiomReport::Ok
    }
}

impl ProductTable {
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn check_closed(&self) -> Result<(), Error> {
        let n = self.len();
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NonClosedTable(i, row.len()));
            }
            if let Some(j) = row.iter().position(|&e| e >= n) {
                return Err(Error::NonClosedTable(i, j));
            }
        }
        Ok(())
    }

    pub fn find_idempotence_violation(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.mul(x, x) != x)
    }

    pub fn find_associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.find_associativity_violation().is_none()
    }

    /// `(x·y)·x = x·y`
    pub fn find_left_regularity_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let xy = self.mul(x, y);
                self.mul(xy, x) != xy
            })
    }

    /// `x³ = x²` for the bracketing `(x·x)·x`.
    pub fn find_aperiodicity_violation(&self) -> Option<usize> {
        (0..self.len()).find(|&x| {
            let x2 = self.mul(x, x);
            self.mul(x2, x) != x2 || self.mul(x, x2) != x2
        })
    }

    /// Idempotence, associativity and left regularity.
    pub fn check_lrb_axioms(&self) -> Result<AxiomReport, Error> {
        self.check_closed()?;
        if let Some(x) = self.find_idempotence_violation() {
            return Ok(AxiomReport::Violation {
                axiom: Axiom::Idempotence,
                witness: vec![x],
            });
        }
        if let Some((x, y, z)) = self.find_associativity_violation() {
            return Ok(AxiomReport::Violation {
                axiom: Axiom::Associativity,
                witness: vec![x, y, z],
            });
        }
        if let Some((x, y)) = self.find_left_regularity_violation() {
            return Ok(AxiomReport::Violation {
                axiom: Axiom::LeftRegularity,
                witness: vec![x, y],
            });
        }
        Ok(AxiomReport::Ok)
    }

    /// Relabels through a bijection `phi` given as a vector and compares tables.
    pub fn is_isomorphic_via(&self, other: &ProductTable, phi: &[usize]) -> bool {
        let n = self.len();
        n == other.len()
            && (0..n).all(|a| (0..n).all(|b| phi[self.mul(a, b)] == other.mul(phi[a], phi[b])))
    }

    /// Restriction to a subset of elements closed under the product.
    pub fn sub_table(&self, subset: &[usize]) -> Option<ProductTable> {
        let pos: BTreeMap<usize, usize> = subset.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let table = subset
            .iter()
            .map(|&a| {
                subset
                    .iter()
                    .map(|&b| pos.get(&self.mul(a, b)).cloned())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ProductTable {
            kind: self.kind,
            labels: subset.iter().map(|&e| self.labels[e].clone()).collect(),
            table,
        })
    }

    /// Full product table of `(L_2^1)^n`.
    pub fn full_l21(n: usize) -> ProductTable {
        let all: Vec<SignVector> = all_sign_vectors(n);
        L0Set::from_vectors(n, all)
            .table()
            .expect("the full power is closed")
    }
}

pub fn all_sign_vectors(n: usize) -> Vec<SignVector> {
    use crate::sign::Sign;
    let mut out = vec![SignVector(vec![])];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                [Sign::Minus, Sign::Zero, Sign::Plus]
                    .into_iter()
                    .map(move |s| {
                        let mut w = v.0.clone();
                        w.push(s);
                        SignVector(w)
                    })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{validate, Curve};
    use crate::sign::sv;

    #[test]
    fn full_powers_are_lrbs() {
        for n in 0..=2 {
            let t = ProductTable::full_l21(n);
            assert_eq!(t.len(), 3usize.pow(n as u32));
            assert!(t.check_lrb_axioms().unwrap().is_ok());
        }
    }

    #[test]
    fn injected_idempotence_violation() {
        let mut t = ProductTable::full_l21(1);
        t.table[0][0] = 1;
        assert_eq!(
            t.check_lrb_axioms().unwrap(),
            AxiomReport::Violation {
                axiom: Axiom::Idempotence,
                witness: vec![0]
            }
        );
        t.table[0][0] = 7;
        assert!(t.check_lrb_axioms().is_err());
    }

    #[test]
    fn single_line_image() {
        let a = validate(vec![Curve::line_i([0, 1, 0], "L")]).unwrap();
        let l0 = image_i(&decompose(&a));
        assert_eq!(l0.elements, vec![sv("-"), sv("0"), sv("+")]);
        assert!(l0.is_injective());
        assert_eq!(check_closure(&l0), Closure::Closed);
    }

    #[test]
    fn tangent_fixture_is_closed() {
        let a = validate(vec![
            Curve::line_i([0, 1, 0], "L"),
            Curve::conic_i([1, 0, 1, 0, -2, 0], "C"),
        ])
        .unwrap();
        let c = decompose(&a);
        let l0 = image_i(&c);
        assert_eq!(l0.len(), 6);
        assert_eq!(l0.preimage[&sv("0+")].len(), 2);
        assert_eq!(check_closure(&l0), Closure::Closed);
        assert!(l0.table().unwrap().check_lrb_axioms().unwrap().is_ok());
        assert!(two_component_condition(&c));
    }
}
