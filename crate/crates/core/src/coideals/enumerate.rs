//! Exhaustive enumeration engines over prime fields: idempotents, group-like
//! projections of every kind, group-like elements, skew-primitive spaces,
//! and coideal subalgebras through the full subspace stream.
//!
//! The scans run on raw residue vectors against precompiled sparse structure
//! tables for speed; every survivor is re-verified through the generic exact
//! predicates before it is returned, so the fast path can only lose
//! candidates, never fabricate them — and a lost candidate would break the
//! frozen census counts.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hopf::{Element, HopfAlgebra, Tensor2};
use crate::linalg::{enumerate_subspaces, kernel, Matrix, Subspace};
use crate::projections::{gl_check, summary_report, GlKind};
use crate::scalar::FieldKind;

use super::{certify, CoidealSubalgebra};

/// Sparse structure tables over `F_p` for the scan inner loops.
struct FpTables {
    p: u64,
    dim: usize,
    /// `(i * dim + j)` → nonzero products of `e_i e_j`.
    mult: Vec<Vec<(usize, u64)>>,
    /// column `k` → nonzero entries of `Δ(e_k)` as (flat index, coeff).
    delta: Vec<Vec<(usize, u64)>>,
    counit: Vec<u64>,
}

impl FpTables {
    fn new(a: &HopfAlgebra) -> Result<FpTables> {
        let f = a.field();
        let FieldKind::Prime { p } = *f.kind() else {
            return Err(Error::Invalid("exhaustive scans need a prime field".into()));
        };
        let dim = a.dim();
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let row = a
                    .structure_constant(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !f.is_zero(s))
                    .map(|(k, s)| (k, f.to_residue(s).expect("prime scalar")))
                    .collect();
                mult.push(row);
            }
        }
        let c = a.coalgebra()?;
        let mut delta = Vec::with_capacity(dim);
        for k in 0..dim {
            let mut col = Vec::new();
            for r in 0..dim * dim {
                let s = c.delta.at(r, k);
                if !f.is_zero(s) {
                    col.push((r, f.to_residue(s).expect("prime scalar")));
                }
            }
            delta.push(col);
        }
        let counit = c
            .counit
            .iter()
            .map(|s| f.to_residue(s).expect("prime scalar"))
            .collect();
        Ok(FpTables {
            p,
            dim,
            mult,
            delta,
            counit,
        })
    }

    fn mul_into(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        out.fill(0);
        let p = self.p as u128;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = (xi as u128 * yj as u128 % p) as u64;
                for &(k, m) in &self.mult[i * self.dim + j] {
                    out[k] = ((out[k] as u128 + c as u128 * m as u128) % p) as u64;
                }
            }
        }
    }

    fn is_idempotent(&self, v: &[u64], scratch: &mut [u64]) -> bool {
        self.mul_into(v, v, scratch);
        scratch == v
    }

    fn is_group_like(&self, v: &[u64], scratch2: &mut [u64]) -> bool {
        scratch2.fill(0);
        let p = self.p as u128;
        for (k, &vk) in v.iter().enumerate() {
            if vk == 0 {
                continue;
            }
            for &(r, c) in &self.delta[k] {
                scratch2[r] = ((scratch2[r] as u128 + vk as u128 * c as u128) % p) as u64;
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let expect = (v[i] as u128 * v[j] as u128 % p) as u64;
                if scratch2[i * self.dim + j] != expect {
                    return false;
                }
            }
        }
        true
    }
}

/// Streams the affine slice `ε(v) = target` (or the whole space when
/// `slice = None`), invoking `visit` on each residue vector. Parallelized by
/// the leading free coordinate; collected blocks preserve order.
fn scan_slice(
    tables: &FpTables,
    slice: Option<u64>,
    budget: u128,
    visit: impl Fn(&[u64]) -> bool + Sync,
) -> Result<Vec<Vec<u64>>> {
    let p = tables.p;
    let dim = tables.dim;
    let (free, pivot): (Vec<usize>, Option<(usize, u64)>) = match slice {
        None => ((0..dim).collect(), None),
        Some(_) => {
            let k0 = tables
                .counit
                .iter()
                .position(|&e| e != 0)
                .ok_or_else(|| Error::Invalid("counit is zero".into()))?;
            let inv = crate::scalar::pow_mod(tables.counit[k0], p - 2, p);
            ((0..dim).filter(|&k| k != k0).collect(), Some((k0, inv)))
        }
    };
    let count = (p as u128).pow(free.len() as u32);
    if count > budget {
        return Err(Error::SearchTooLarge {
            count,
            budget,
        });
    }

    let scan_block = |lead: u64| -> Vec<Vec<u64>> {
        let mut found = Vec::new();
        let mut digits = vec![0u64; free.len()];
        if let Some(first) = digits.first_mut() {
            *first = lead;
        }
        let mut v = vec![0u64; dim];
        loop {
            for (d, &k) in digits.iter().zip(&free) {
                v[k] = *d;
            }
            if let Some((k0, inv)) = pivot {
                // Solve ε(v) = target for the pivot coordinate.
                let mut acc: u128 = 0;
                for (&vk, &ek) in v.iter().zip(&tables.counit) {
                    if vk != 0 && ek != 0 {
                        acc = (acc + vk as u128 * ek as u128) % p as u128;
                    }
                }
                let acc = acc as u64 % p;
                // counit[k0] * v[k0] must absorb (target - acc); acc so far
                // includes v[k0] = digits-independent stale value, so zero it
                // first.
                let stale = (tables.counit[k0] as u128 * v[k0] as u128 % p as u128) as u64;
                let partial = (acc + p - stale) % p;
                let target = slice.unwrap_or(1);
                let need = (target + p - partial % p) % p;
                v[k0] = (need as u128 * inv as u128 % p as u128) as u64;
            }
            if visit(&v) {
                found.push(v.clone());
            }
            // Odometer over the free digits after the leading one.
            let mut i = digits.len();
            loop {
                if i <= 1 {
                    return found;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
            }
        }
    };

    if free.is_empty() {
        let mut v = vec![0u64; dim];
        if let Some((k0, inv)) = pivot {
            v[k0] = (slice.unwrap_or(1) as u128 * inv as u128 % p as u128) as u64;
        }
        let mut out = Vec::new();
        if visit(&v) {
            out.push(v);
        }
        return Ok(out);
    }
    let blocks: Vec<Vec<Vec<u64>>> = (0..p).into_par_iter().map(scan_block).collect();
    Ok(blocks.into_iter().flatten().collect())
}

fn to_element(a: &HopfAlgebra, v: &[u64]) -> Element {
    let f = a.field();
    Element(v.iter().map(|&r| f.from_residue(r)).collect())
}

/// All nonzero idempotents of a prime-field algebra, by full scan of the
/// `p^dim` coefficient vectors, in lexicographic residue order.
pub fn enumerate_idempotents(a: &HopfAlgebra, budget: u128) -> Result<Vec<Element>> {
    let tables = FpTables::new(a)?;
    let found = scan_slice(&tables, None, budget, |v| {
        if v.iter().all(|&c| c == 0) {
            return false;
        }
        let mut scratch = [0u64; 256];
        tables.is_idempotent(v, &mut scratch[..tables.dim])
    })?;
    let mut out: Vec<Element> = found.iter().map(|v| to_element(a, v)).collect();
    out.sort();
    Ok(out)
}

/// Complete list of group-like projections of the requested kind, found by
/// scanning the `ε(P) = 1` slice (forced for every kind), prefiltered by
/// idempotence on the fast path and confirmed by the exact predicates. Every
/// returned element also passes the equivalence battery.
pub fn enumerate_gl_projections(
    a: &HopfAlgebra,
    kind: GlKind,
    budget: u128,
) -> Result<Vec<Element>> {
    let tables = FpTables::new(a)?;
    let candidates = scan_slice(&tables, Some(1), budget, |v| {
        let mut scratch = [0u64; 256];
        !v.iter().all(|&c| c == 0) && tables.is_idempotent(v, &mut scratch[..tables.dim])
    })?;
    let mut out = Vec::new();
    for v in candidates {
        let e = to_element(a, &v);
        summary_report(a, &e)?;
        if gl_check(a, &e, kind)? {
            out.push(e);
        }
    }
    out.sort();
    Ok(out)
}

/// Nonzero solutions of `Δ(v) = v ⊗ v` over a prime field, via the
/// `ε(v) = 1` slice (the counit law forces `ε` of a group-like to be 1).
pub fn group_likes(a: &HopfAlgebra, budget: u128) -> Result<Vec<Element>> {
    let tables = FpTables::new(a)?;
    let found = scan_slice(&tables, Some(1), budget, |v| {
        let mut scratch2 = [0u64; 256];
        tables.is_group_like(v, &mut scratch2[..tables.dim * tables.dim])
    })?;
    let mut out: Vec<Element> = found
        .iter()
        .map(|v| to_element(a, v))
        .filter(|e| !a.is_zero_elem(e))
        .collect();
    for e in &out {
        let d = a.delta(e)?;
        if d != a.tensor(e, e) {
            return Err(Error::EquivalenceViolation {
                dump: format!("fast path returned a non-group-like {}", a.elem_to_string(e)),
            });
        }
    }
    out.sort();
    Ok(out)
}

/// The space `P_{s,t} = {v : Δ(v) = v ⊗ s + t ⊗ v}` of skew-primitive
/// elements for group-likes `s` and `t`, as a kernel computation.
pub fn skew_primitives(
    a: &HopfAlgebra,
    s: &Element,
    t: &Element,
) -> Result<Subspace> {
    let f = a.field();
    for gl in [s, t] {
        if a.delta(gl)? != a.tensor(gl, gl) {
            return Err(Error::Invalid("reference elements must be group-like".into()));
        }
    }
    let d = a.dim();
    let columns = |k: usize| -> Result<Tensor2> {
        let e = a.basis_element(k);
        let de = a.delta(&e)?;
        let es = a.tensor(&e, s);
        let te = a.tensor(t, &e);
        Ok(Tensor2(
            de.0.iter()
                .zip(&es.0)
                .zip(&te.0)
                .map(|((x, y), z)| f.sub(&f.sub(x, y), z))
                .collect(),
        ))
    };
    let mut m = Matrix::zeros(f, d * d, d);
    for k in 0..d {
        let t2 = columns(k)?;
        for (r, v) in t2.0.into_iter().enumerate() {
            *m.at_mut(r, k) = v;
        }
    }
    Ok(kernel(f, &m))
}

/// Certified coideal subalgebras, found by filtering the complete canonical
/// subspace stream. Deterministic order inherited from the stream.
pub fn enumerate_coideal_subalgebras(
    a: &HopfAlgebra,
    cap: u128,
) -> Result<Vec<CoidealSubalgebra>> {
    let f = a.field();
    let stream = enumerate_subspaces(f, a.dim(), cap)?;
    let mut out = Vec::new();
    for s in stream {
        let c = certify(a, &s)?;
        if c.certified() {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{function_algebra, group_algebra, taft, GroupPresentation};
    use crate::scalar::Field;

    fn h4() -> HopfAlgebra {
        taft(2, &Field::prime(5, 2).unwrap()).unwrap().algebra
    }

    fn elem(a: &HopfAlgebra, coeffs: &[i64]) -> Element {
        Element(coeffs.iter().map(|&c| a.field().from_i64(c)).collect())
    }

    #[test]
    fn sweedler_projection_census() {
        let a = h4();
        let f = a.field();
        let right = enumerate_gl_projections(&a, GlKind::Right, 1 << 30).unwrap();
        assert_eq!(right.len(), 6);
        // {1} ∪ {3 + 3g + βx}.
        let mut expected: Vec<Element> = (0..5).map(|b| elem(&a, &[3, 3, b, 0])).collect();
        expected.push(a.unit());
        expected.sort();
        assert_eq!(right, expected);

        let left = enumerate_gl_projections(&a, GlKind::Left, 1 << 30).unwrap();
        assert_eq!(left.len(), 6);
        let mut expected: Vec<Element> = (0..5).map(|d| elem(&a, &[3, 3, 0, d])).collect();
        expected.push(a.unit());
        expected.sort();
        assert_eq!(left, expected);

        let two = enumerate_gl_projections(&a, GlKind::TwoSided, 1 << 30).unwrap();
        assert_eq!(two, {
            let mut v = vec![a.unit(), elem(&a, &[3, 3, 0, 0])];
            v.sort();
            v
        });

        let weak = enumerate_gl_projections(&a, GlKind::Weak, 1 << 30).unwrap();
        assert_eq!(weak.len(), 26);
        // {1} ∪ {3 + 3g + βx + δgx}.
        let mut expected: Vec<Element> = Vec::new();
        for b in 0..5 {
            for d in 0..5 {
                expected.push(elem(&a, &[3, 3, b, d]));
            }
        }
        expected.push(a.unit());
        expected.sort();
        assert_eq!(weak, expected);
        // The β != 0 right projections are right but not left.
        for b in 1..5 {
            let p = elem(&a, &[3, 3, b, 0]);
            assert!(gl_check(&a, &p, GlKind::Right).unwrap());
            assert!(!gl_check(&a, &p, GlKind::Left).unwrap());
        }
        let _ = f;
    }

    #[test]
    fn idempotent_census() {
        let a = h4();
        let all = enumerate_idempotents(&a, 1 << 30).unwrap();
        assert_eq!(all.len(), 51);
        for e in &all {
            assert_eq!(a.mul(e, e), *e);
        }
    }

    #[test]
    fn group_like_census() {
        let a = h4();
        let gls = group_likes(&a, 1 << 30).unwrap();
        assert_eq!(gls, vec![a.basis_element(1), a.unit()]);

        let f7 = Field::prime(7, 3).unwrap();
        let h9 = taft(3, &f7).unwrap();
        let gls = group_likes(&h9.algebra, 1 << 30).unwrap();
        assert_eq!(gls.len(), 3);
    }

    #[test]
    fn skew_primitive_examples() {
        let a = h4();
        let g = a.basis_element(1);
        // P_{1,g} = span{1 - g, x}.
        let s = skew_primitives(&a, &a.unit(), &g).unwrap();
        assert_eq!(s.dim(), 2);
        let f = a.field();
        assert!(s.contains_vector(f, &elem(&a, &[1, -1, 0, 0]).0));
        assert!(s.contains_vector(f, &elem(&a, &[0, 0, 1, 0]).0));
        // P_{1,1}: no nonzero primitives.
        let s = skew_primitives(&a, &a.unit(), &a.unit()).unwrap();
        assert_eq!(s.dim(), 0);
        // Non-group-like reference is rejected.
        assert!(skew_primitives(&a, &a.unit(), &elem(&a, &[0, 0, 1, 0])).is_err());
    }

    #[test]
    fn coideal_subalgebra_censuses() {
        // H_4 over F_3: exactly 6.
        let f3 = Field::prime(3, 2).unwrap();
        let a3 = taft(2, &f3).unwrap().algebra;
        let got = enumerate_coideal_subalgebras(&a3, 10_000_000).unwrap();
        assert_eq!(got.len(), 6);

        // H_4 over F_5: exactly 8.
        let a5 = h4();
        let got = enumerate_coideal_subalgebras(&a5, 10_000_000).unwrap();
        assert_eq!(got.len(), 8);

        // k[Z/2] over F_5: span{1} and the whole algebra.
        let f5 = Field::prime(5, 2).unwrap();
        let z2 = group_algebra(&GroupPresentation::Cyclic(vec![2]), &f5).unwrap();
        let got = enumerate_coideal_subalgebras(&z2, 10_000).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].dim(), 0 + 1);
        assert_eq!(got[1].dim(), 2);
    }

    #[test]
    fn function_algebra_projections_are_subgroup_indicators() {
        let f7 = Field::prime(7, 1).unwrap();
        let s3 = GroupPresentation::symmetric(3);
        let fa = function_algebra(&s3, &f7).unwrap();
        let found = enumerate_gl_projections(&fa, GlKind::Right, 1 << 30).unwrap();
        assert_eq!(found.len(), 6);
        for p in &found {
            assert!(gl_check(&fa, p, GlKind::TwoSided).unwrap());
            // Indicator vectors: coefficients 0/1.
            let f = fa.field();
            assert!(p.0.iter().all(|c| f.is_zero(c) || f.is_one(c)));
        }

        // Cyclic case over F_5: one projection per subgroup of Z/4.
        let f5 = Field::prime(5, 2).unwrap();
        let z4 = function_algebra(&GroupPresentation::Cyclic(vec![4]), &f5).unwrap();
        let found = enumerate_gl_projections(&z4, GlKind::Right, 1 << 30).unwrap();
        assert_eq!(found.len(), 3);
        let f = z4.field();
        let indicator = |members: &[usize]| {
            let mut v = z4.zero();
            for &m in members {
                v.0[m] = f.one();
            }
            v
        };
        let mut expected = vec![
            indicator(&[0]),
            indicator(&[0, 2]),
            indicator(&[0, 1, 2, 3]),
        ];
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn budget_is_enforced() {
        let a = h4();
        assert!(matches!(
            enumerate_gl_projections(&a, GlKind::Right, 10),
            Err(Error::SearchTooLarge { .. })
        ));
    }
}
