//! The left coideal subalgebra classification for Taft algebras and the
//! computation of their automorphism group.
//!
//! The predicted inventory is: the group-algebra slices `k<g^d>` and the
//! non-semisimple `N_{d,x}` (generated by `g^d` and `x`) for each divisor
//! `d | n`, together with the one-parameter family `N_β` generated by
//! `g + βx`. Automorphisms split the inventory into singletons plus one
//! orbit through the whole `N_β` family.

use std::collections::BTreeMap;

use crate::builders::{map_subspace, phi_beta, TaftHandle};
use crate::error::{Error, Result};
use crate::hopf::{Element, HopfAlgebra};
use crate::linalg::{kernel, subspace_count, Matrix};
use crate::scalar::{FieldKind, Scalar};

use super::enumerate::{enumerate_coideal_subalgebras, group_likes, skew_primitives};
use super::{certify, counital_integral, radical, subalgebra_closure, CoidealSubalgebra};

/// Label of a classified coideal subalgebra, verified by construction from
/// the generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoidealLabel {
    /// Generated by `g^d`; `d = n` is the trivial coideal `k·1`.
    KGPrime(usize),
    /// Generated by `g^d` and `x`; `d = 1` is the whole algebra.
    NdX(usize),
    /// Generated by `g + βx`.
    NBeta(Scalar),
    Other,
}

/// Whether the inventory was cross-checked against the complete subspace
/// enumeration or only certified item by item.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    Verified,
    InventoryOnly,
}

#[derive(Clone, Debug)]
pub struct ClassifiedCoideal {
    pub coideal: CoidealSubalgebra,
    pub label: CoidealLabel,
    pub orbit_id: usize,
    /// `None` when the radical gate (char 0 or char > dim) fails.
    pub semisimple: Option<bool>,
    pub counital_integral: Option<Element>,
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub items: Vec<ClassifiedCoideal>,
    pub completeness: Completeness,
    pub orbit_count: usize,
}

impl ClassificationResult {
    pub fn count_by_label_class(&self) -> BTreeMap<&'static str, usize> {
        let mut counts = BTreeMap::new();
        for item in &self.items {
            let key = match item.label {
                CoidealLabel::KGPrime(_) => "kgprime",
                CoidealLabel::NdX(_) => "ndx",
                CoidealLabel::NBeta(_) => "nbeta",
                CoidealLabel::Other => "other",
            };
            *counts.entry(key).or_insert(0) += 1;
        }
        counts
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Builds, certifies, and labels the full predicted coideal inventory of a
/// Taft algebra; groups it into automorphism orbits; and, when the subspace
/// stream is feasible, cross-checks completeness: every coideal subalgebra
/// of the algebra must appear in the inventory.
pub fn classify_taft(
    h: &TaftHandle,
    beta_sample: Option<&[Scalar]>,
    subspace_cap: u128,
) -> Result<ClassificationResult> {
    let a = &h.algebra;
    let f = a.field();
    let g = h.g();
    let x = h.x();

    let betas: Vec<Scalar> = match (beta_sample, f.kind()) {
        (Some(sample), _) => sample.to_vec(),
        (None, FieldKind::Prime { p }) => (1..*p).map(|r| f.from_residue(r)).collect(),
        (None, _) => [1i64, 2, -1].iter().map(|&v| f.from_i64(v)).collect(),
    };
    if betas.iter().any(|b| f.is_zero(b)) {
        return Err(Error::ZeroBeta);
    }

    let mut items: Vec<(CoidealLabel, CoidealSubalgebra)> = Vec::new();
    for &d in &divisors(h.n) {
        let gd = {
            let mut v = a.unit();
            for _ in 0..d {
                v = a.mul(&v, &g);
            }
            v
        };
        let kg = certify(a, &subalgebra_closure(a, std::slice::from_ref(&gd)))?;
        items.push((CoidealLabel::KGPrime(d), kg));
        let ndx = certify(a, &subalgebra_closure(a, &[gd, x.clone()]))?;
        items.push((CoidealLabel::NdX(d), ndx));
    }
    for b in &betas {
        let gen = a.add(&g, &a.scale(b, &x));
        let nb = certify(a, &subalgebra_closure(a, &[gen]))?;
        items.push((CoidealLabel::NBeta(b.clone()), nb));
    }

    for (label, item) in &items {
        if !item.certified() {
            return Err(Error::EquivalenceViolation {
                dump: format!("inventory item {label:?} failed certification"),
            });
        }
    }
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i].1.subspace == items[j].1.subspace {
                return Err(Error::EquivalenceViolation {
                    dump: format!(
                        "inventory items {:?} and {:?} coincide",
                        items[i].0, items[j].0
                    ),
                });
            }
        }
    }

    // Orbit structure under the φ_β automorphisms: the N_β family is one
    // orbit, everything else is a fixed point. Verified by transport.
    let transport_sample: Vec<Scalar> = match f.kind() {
        FieldKind::Prime { p } => (1..*p).map(|r| f.from_residue(r)).collect(),
        _ => [2i64, -1].iter().map(|&v| f.from_i64(v)).collect(),
    };
    let mut orbit_ids = Vec::with_capacity(items.len());
    let mut next_orbit = 0usize;
    let mut beta_orbit: Option<usize> = None;
    let mut first_beta: Option<&CoidealSubalgebra> = None;
    for (label, item) in &items {
        match label {
            CoidealLabel::NBeta(beta) => {
                let id = *beta_orbit.get_or_insert_with(|| {
                    let id = next_orbit;
                    next_orbit += 1;
                    id
                });
                orbit_ids.push(id);
                match first_beta {
                    None => first_beta = Some(item),
                    Some(base) => {
                        // φ_{β}(N_1-like base) must reach this item; the base
                        // has label β0, so transport by β/β0.
                        let CoidealLabel::NBeta(beta0) = &items
                            .iter()
                            .find(|(l, _)| matches!(l, CoidealLabel::NBeta(_)))
                            .expect("base exists")
                            .0
                        else {
                            unreachable!()
                        };
                        let ratio = f.div(beta, beta0)?;
                        let phi = phi_beta(h, &ratio)?;
                        if map_subspace(f, &phi, &base.subspace) != item.subspace {
                            return Err(Error::EquivalenceViolation {
                                dump: format!("β-family transport failed at {beta:?}"),
                            });
                        }
                    }
                }
            }
            _ => {
                for b in &transport_sample {
                    let phi = phi_beta(h, b)?;
                    if map_subspace(f, &phi, &item.subspace) != item.subspace {
                        return Err(Error::EquivalenceViolation {
                            dump: format!("{label:?} is not an automorphism fixed point"),
                        });
                    }
                }
                orbit_ids.push(next_orbit);
                next_orbit += 1;
            }
        }
    }

    // Completeness cross-check where the subspace stream is feasible.
    let completeness = match f.kind() {
        FieldKind::Prime { p } if subspace_count(*p, a.dim()) <= subspace_cap => {
            let all = enumerate_coideal_subalgebras(a, subspace_cap)?;
            if all.len() != items.len() {
                return Err(Error::EquivalenceViolation {
                    dump: format!(
                        "census found {} coideal subalgebras, inventory predicts {}",
                        all.len(),
                        items.len()
                    ),
                });
            }
            for found in &all {
                if !items.iter().any(|(_, it)| it.subspace == found.subspace) {
                    return Err(Error::EquivalenceViolation {
                        dump: "census found a coideal subalgebra outside the inventory".into(),
                    });
                }
            }
            Completeness::Verified
        }
        _ => Completeness::InventoryOnly,
    };

    let mut classified = Vec::with_capacity(items.len());
    for ((label, coideal), orbit_id) in items.into_iter().zip(orbit_ids) {
        let semisimple = match radical(a, &coideal) {
            Ok(r) => Some(r.dim() == 0),
            Err(Error::CharTooSmall { .. }) => None,
            Err(e) => return Err(e),
        };
        let integral = counital_integral(a, &coideal)?;
        classified.push(ClassifiedCoideal {
            coideal,
            label,
            orbit_id,
            semisimple,
            counital_integral: integral,
        });
    }
    Ok(ClassificationResult {
        items: classified,
        completeness,
        orbit_count: next_orbit,
    })
}

/// Exact check that a linear map is a Hopf algebra automorphism: bijective,
/// multiplicative, unital, comultiplicative, counital, and commuting with
/// the antipode — all on basis elements.
pub fn is_hopf_automorphism(a: &HopfAlgebra, m: &Matrix) -> Result<bool> {
    let f = a.field();
    let d = a.dim();
    if m.inverse(f).is_none() {
        return Ok(false);
    }
    let apply = |v: &Element| Element(m.matvec(f, &v.0));
    if apply(&a.unit()) != a.unit() {
        return Ok(false);
    }
    for i in 0..d {
        let ei = a.basis_element(i);
        for j in 0..d {
            let ej = a.basis_element(j);
            if apply(&a.mul(&ei, &ej)) != a.mul(&apply(&ei), &apply(&ej)) {
                return Ok(false);
            }
        }
    }
    for k in 0..d {
        let e = a.basis_element(k);
        let lhs = a.delta(&apply(&e))?;
        let t = a.delta(&e)?;
        let mut rhs = a.zero_tensor();
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (i, j) = (idx / d, idx % d);
            let pi = m.matvec(f, &a.basis_element(i).0);
            let pj = m.matvec(f, &a.basis_element(j).0);
            for (x, px) in pi.iter().enumerate() {
                if f.is_zero(px) {
                    continue;
                }
                for (y, py) in pj.iter().enumerate() {
                    if !f.is_zero(py) {
                        let o = x * d + y;
                        rhs.0[o] = f.add(&rhs.0[o], &f.mul(v, &f.mul(px, py)));
                    }
                }
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
        if a.counit(&apply(&e))? != a.counit(&e)? {
            return Ok(false);
        }
        if a.antipode(&apply(&e))? != apply(&a.antipode(&e)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Computes the full automorphism group of a Taft algebra over a prime
/// field. The search space is cut down by verified structural facts: any
/// automorphism fixes the unique group-like `s` whose `(1, s)`-primitive
/// space is two-dimensional, and must send `x` into the one-dimensional
/// intersection of that space with the ω-eigenspace of conjugation by `g`.
/// The surviving candidates are scanned and verified exactly.
pub fn hopf_automorphisms_taft(h: &TaftHandle, budget: u128) -> Result<Vec<Matrix>> {
    let a = &h.algebra;
    let f = a.field();
    let FieldKind::Prime { p } = *f.kind() else {
        return Err(Error::Invalid(
            "automorphism search needs a prime field".into(),
        ));
    };
    let d = a.dim();

    // Group-likes must be exactly the powers of g.
    let gls = group_likes(a, budget)?;
    let mut powers: Vec<Element> = Vec::new();
    let mut acc = a.unit();
    for _ in 0..h.n {
        powers.push(acc.clone());
        acc = a.mul(&acc, &h.g());
    }
    powers.sort();
    if gls != powers {
        return Err(Error::EquivalenceViolation {
            dump: "group-likes are not the powers of g".into(),
        });
    }

    // The distinguished group-like: unique s != 1 with dim P_{1,s} = 2.
    let mut distinguished = Vec::new();
    for s in &gls {
        if *s == a.unit() {
            continue;
        }
        if skew_primitives(a, &a.unit(), s)?.dim() == 2 {
            distinguished.push(s.clone());
        }
    }
    if distinguished.len() != 1 || distinguished[0] != h.g() {
        return Err(Error::EquivalenceViolation {
            dump: "distinguished group-like is not g".into(),
        });
    }

    // ω-eigenspace of conjugation by g: {v : g v = ω v g}.
    let mut m = Matrix::zeros(f, d, d);
    for k in 0..d {
        let e = a.basis_element(k);
        let gv = a.mul(&h.g(), &e);
        let vg = a.scale(&h.omega, &a.mul(&e, &h.g()));
        for (r, (x, y)) in gv.0.iter().zip(&vg.0).enumerate() {
            *m.at_mut(r, k) = f.sub(x, y);
        }
    }
    let eig = kernel(f, &m);
    let p1g = skew_primitives(a, &a.unit(), &h.g())?;
    let line = p1g.intersect(f, &eig)?;
    if line.dim() != 1 {
        return Err(Error::EquivalenceViolation {
            dump: format!("candidate line for images of x has dim {}", line.dim()),
        });
    }
    let x0 = Element(line.basis_vectors().remove(0));

    // Candidates: g ↦ g, x ↦ c·x0 for c in F_p^x, extended multiplicatively.
    let mut autos = Vec::new();
    for c in 1..p {
        let image_x = a.scale(&f.from_residue(c), &x0);
        let mut mat = Matrix::zeros(f, d, d);
        for i in 0..h.n {
            for j in 0..h.n {
                let mut v = a.unit();
                for _ in 0..i {
                    v = a.mul(&v, &image_x);
                }
                for _ in 0..j {
                    v = a.mul(&v, &h.g());
                }
                for (r, s) in v.0.into_iter().enumerate() {
                    *mat.at_mut(r, h.index(i, j)) = s;
                }
            }
        }
        if is_hopf_automorphism(a, &mat)? {
            autos.push(mat);
        }
    }

    // The result must be exactly the diagonal family and closed under
    // composition.
    for c in 1..p {
        let expected = phi_beta(h, &f.from_residue(c))?;
        if !autos.contains(&expected) {
            return Err(Error::EquivalenceViolation {
                dump: format!("missing diagonal automorphism for β = {c}"),
            });
        }
    }
    if autos.len() != (p - 1) as usize {
        return Err(Error::EquivalenceViolation {
            dump: format!("expected {} automorphisms, found {}", p - 1, autos.len()),
        });
    }
    for u in &autos {
        for v in &autos {
            let prod = u.matmul(f, v);
            if !autos.contains(&prod) {
                return Err(Error::EquivalenceViolation {
                    dump: "automorphisms are not closed under composition".into(),
                });
            }
        }
    }
    Ok(autos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::taft;
    use crate::scalar::Field;

    #[test]
    fn classify_sweedler_over_f5() {
        let f = Field::prime(5, 2).unwrap();
        let h = taft(2, &f).unwrap();
        let r = classify_taft(&h, None, 10_000_000).unwrap();
        assert_eq!(r.items.len(), 8);
        assert_eq!(r.completeness, Completeness::Verified);
        let counts = r.count_by_label_class();
        assert_eq!(counts["kgprime"], 2);
        assert_eq!(counts["ndx"], 2);
        assert_eq!(counts["nbeta"], 4);
        assert!(!counts.contains_key("other"));
        // Orbits: 4 singletons plus the β family.
        assert_eq!(r.orbit_count, 5);
        let beta_orbits: std::collections::BTreeSet<usize> = r
            .items
            .iter()
            .filter(|i| matches!(i.label, CoidealLabel::NBeta(_)))
            .map(|i| i.orbit_id)
            .collect();
        assert_eq!(beta_orbits.len(), 1);

        for item in &r.items {
            match &item.label {
                CoidealLabel::KGPrime(_) | CoidealLabel::NBeta(_) => {
                    assert_eq!(item.semisimple, Some(true), "{:?}", item.label);
                    assert!(item.counital_integral.is_some());
                }
                CoidealLabel::NdX(_) => {
                    assert_eq!(item.semisimple, Some(false), "{:?}", item.label);
                    assert!(item.counital_integral.is_none());
                }
                CoidealLabel::Other => panic!("unexpected label"),
            }
        }
    }

    #[test]
    fn classify_taft3_over_f7() {
        let f = Field::prime(7, 3).unwrap();
        let h = taft(3, &f).unwrap();
        let r = classify_taft(&h, None, 10_000_000).unwrap();
        assert_eq!(r.items.len(), 10);
        assert_eq!(r.completeness, Completeness::InventoryOnly);
        let counts = r.count_by_label_class();
        assert_eq!(counts["kgprime"], 2);
        assert_eq!(counts["ndx"], 2);
        assert_eq!(counts["nbeta"], 6);
        // dim 9 = the whole algebra exceeds the radical gate over F_7.
        let full = r
            .items
            .iter()
            .find(|i| matches!(i.label, CoidealLabel::NdX(1)))
            .unwrap();
        assert_eq!(full.semisimple, None);
        let ndx3 = r
            .items
            .iter()
            .find(|i| matches!(i.label, CoidealLabel::NdX(3)))
            .unwrap();
        assert_eq!(ndx3.semisimple, Some(false));
        assert_eq!(ndx3.coideal.dim(), 3);
    }

    #[test]
    fn classify_over_rationals_with_sample() {
        let q = Field::rational_with_root(2).unwrap();
        let h = taft(2, &q).unwrap();
        let sample: Vec<_> = [1i64, 2, -1].iter().map(|&v| q.from_i64(v)).collect();
        let r = classify_taft(&h, Some(&sample), 10_000_000).unwrap();
        assert_eq!(r.items.len(), 7);
        assert_eq!(r.completeness, Completeness::InventoryOnly);
        // Three distinct N_β in a single orbit.
        let betas: Vec<&ClassifiedCoideal> = r
            .items
            .iter()
            .filter(|i| matches!(i.label, CoidealLabel::NBeta(_)))
            .collect();
        assert_eq!(betas.len(), 3);
        let orbit = betas[0].orbit_id;
        assert!(betas.iter().all(|i| i.orbit_id == orbit));
        for (i, u) in betas.iter().enumerate() {
            for v in &betas[i + 1..] {
                assert_ne!(u.coideal.subspace, v.coideal.subspace);
            }
        }
    }

    #[test]
    fn automorphism_groups() {
        let f5 = Field::prime(5, 2).unwrap();
        let h = taft(2, &f5).unwrap();
        let autos = hopf_automorphisms_taft(&h, 1 << 30).unwrap();
        assert_eq!(autos.len(), 4);

        let f7 = Field::prime(7, 3).unwrap();
        let h = taft(3, &f7).unwrap();
        let autos = hopf_automorphisms_taft(&h, 1 << 30).unwrap();
        assert_eq!(autos.len(), 6);
        // φ_2 ∘ φ_3 = φ_6.
        let p2 = phi_beta(&h, &f7.from_i64(2)).unwrap();
        let p3 = phi_beta(&h, &f7.from_i64(3)).unwrap();
        let p6 = phi_beta(&h, &f7.from_i64(6)).unwrap();
        assert_eq!(p2.matmul(&f7, &p3), p6);
    }
}
