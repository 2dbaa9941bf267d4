//! The core coideal constructions: the smallest left coideal `V_P` carrying a
//! right group-like projection, the maximal coideal subalgebras `N_P` (and
//! one-sided variants), integrals, trace-form radicals, Frobenius-functional
//! search, annihilators, normality, and quotient identifications.

mod classify;
mod enumerate;

pub use classify::{
    classify_taft, hopf_automorphisms_taft, is_hopf_automorphism, ClassificationResult,
    ClassifiedCoideal, CoidealLabel, Completeness,
};
pub use enumerate::{
    enumerate_coideal_subalgebras, enumerate_gl_projections, enumerate_idempotents, group_likes,
    skew_primitives,
};

use crate::error::{Error, Result};
use crate::hopf::{
    quotient_module_coalgebra, right_leg_space, Element, HopfAlgebra, QuotientCoalgebra, Side,
    Tensor2,
};
use crate::linalg::{kernel, Matrix, Subspace};
use crate::projections::{gl_check, GlKind};
use crate::scalar::{FieldKind, Scalar};

/// A subspace with its coideal-subalgebra certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealSubalgebra {
    pub subspace: Subspace,
    pub is_subalgebra: bool,
    pub is_left_coideal: bool,
    pub unital: bool,
}

impl CoidealSubalgebra {
    pub fn certified(&self) -> bool {
        self.is_subalgebra && self.is_left_coideal && self.unital
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

/// Which of the coideal subalgebras attached to a right group-like
/// projection to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NpVariant {
    /// Both defining identities.
    Full,
    /// `(1 ⊗ P)Δ(x) = x ⊗ P` only.
    L,
    /// `Δ(x)(1 ⊗ P) = x ⊗ P` only.
    R,
}

/// Certifies a subspace: a left coideal means every basis vector's
/// comultiplication has all left-leg rows inside the subspace; a unital
/// subalgebra means closure under products plus the unit.
pub fn certify(a: &HopfAlgebra, s: &Subspace) -> Result<CoidealSubalgebra> {
    let f = a.field();
    let unital = s.contains_vector(f, &a.unit().0);
    let basis = s.basis_vectors();
    let mut is_subalgebra = unital;
    'outer: for u in &basis {
        for v in &basis {
            let prod = a.mul(&Element(u.clone()), &Element(v.clone()));
            if !s.contains_vector(f, &prod.0) {
                is_subalgebra = false;
                break 'outer;
            }
        }
    }
    // Algebra-only data cannot be a coideal; the subalgebra certificates
    // still apply.
    let mut is_left_coideal = a.has_coalgebra();
    if is_left_coideal {
        'coideal: for v in &basis {
            let t = a.delta(&Element(v.clone()))?;
            let d = a.dim();
            for i in 0..d {
                let row = &t.0[i * d..(i + 1) * d];
                if !s.contains_vector(f, row) {
                    is_left_coideal = false;
                    break 'coideal;
                }
            }
        }
    }
    Ok(CoidealSubalgebra {
        subspace: s.clone(),
        is_subalgebra,
        is_left_coideal,
        unital,
    })
}

/// The smallest left coideal containing a right group-like projection: the
/// span of the right tensor legs of `Δ(P)`.
pub fn v_p(a: &HopfAlgebra, p: &Element) -> Result<Subspace> {
    if !gl_check(a, p, GlKind::Right)? {
        return Err(Error::NotRightGroupLike);
    }
    let legs = right_leg_space(a, &a.delta(p)?);
    if !legs.contains_vector(a.field(), &p.0) {
        return Err(Error::EquivalenceViolation {
            dump: format!("P = {} is not inside its own leg span", a.elem_to_string(p)),
        });
    }
    Ok(legs)
}

/// The maximal left coideal subalgebra for which `P` is a counital integral,
/// as the kernel of the defining linear identities. Certifies the result and
/// asserts the containments that the construction forces.
pub fn n_p(a: &HopfAlgebra, p: &Element, variant: NpVariant) -> Result<CoidealSubalgebra> {
    if !gl_check(a, p, GlKind::Right)? {
        return Err(Error::NotRightGroupLike);
    }
    let f = a.field();
    let d = a.dim();
    let one_p = a.tensor(&a.unit(), p);

    let col_r = |k: usize| -> Result<Tensor2> {
        let de = a.delta(&a.basis_element(k))?;
        let lhs = a.tensor2_mul(&de, &one_p);
        let ep = a.tensor(&a.basis_element(k), p);
        Ok(Tensor2(
            lhs.0.iter().zip(&ep.0).map(|(x, y)| f.sub(x, y)).collect(),
        ))
    };
    let col_l = |k: usize| -> Result<Tensor2> {
        let de = a.delta(&a.basis_element(k))?;
        let lhs = a.tensor2_mul(&one_p, &de);
        let ep = a.tensor(&a.basis_element(k), p);
        Ok(Tensor2(
            lhs.0.iter().zip(&ep.0).map(|(x, y)| f.sub(x, y)).collect(),
        ))
    };

    let rows = match variant {
        NpVariant::R => 1,
        NpVariant::L => 1,
        NpVariant::Full => 2,
    };
    let mut m = Matrix::zeros(f, rows * d * d, d);
    for k in 0..d {
        match variant {
            NpVariant::R => {
                for (r, v) in col_r(k)?.0.into_iter().enumerate() {
                    *m.at_mut(r, k) = v;
                }
            }
            NpVariant::L => {
                for (r, v) in col_l(k)?.0.into_iter().enumerate() {
                    *m.at_mut(r, k) = v;
                }
            }
            NpVariant::Full => {
                for (r, v) in col_r(k)?.0.into_iter().enumerate() {
                    *m.at_mut(r, k) = v;
                }
                for (r, v) in col_l(k)?.0.into_iter().enumerate() {
                    *m.at_mut(d * d + r, k) = v;
                }
            }
        }
    }
    let space = kernel(f, &m);
    let cert = certify(a, &space)?;
    if !cert.certified() {
        return Err(Error::EquivalenceViolation {
            dump: format!(
                "solution space for {} is not a certified coideal subalgebra",
                a.elem_to_string(p)
            ),
        });
    }
    // Forced containments: P lies in the full variant, and the leg span is
    // inside every variant.
    if matches!(variant, NpVariant::Full) && !space.contains_vector(f, &p.0) {
        return Err(Error::EquivalenceViolation {
            dump: format!("P = {} does not lie in its own coideal", a.elem_to_string(p)),
        });
    }
    let vp = right_leg_space(a, &a.delta(p)?);
    if !space.contains_subspace(f, &vp) {
        return Err(Error::EquivalenceViolation {
            dump: format!(
                "leg span of {} escapes the {:?} coideal",
                a.elem_to_string(p),
                variant
            ),
        });
    }
    Ok(cert)
}

/// Smallest unital subalgebra containing the generators, by iterated
/// span-and-multiply until the dimension stabilizes.
pub fn subalgebra_closure(a: &HopfAlgebra, gens: &[Element]) -> Subspace {
    let f = a.field();
    let d = a.dim();
    let mut rows: Vec<Vec<Scalar>> = vec![a.unit().0];
    rows.extend(gens.iter().map(|g| g.0.clone()));
    let mut space = Subspace::span_vectors(f, &rows, d);
    loop {
        let basis = space.basis_vectors();
        let mut rows = basis.clone();
        for u in &basis {
            for v in &basis {
                rows.push(a.mul(&Element(u.clone()), &Element(v.clone())).0);
            }
        }
        let bigger = Subspace::span_vectors(f, &rows, d);
        if bigger.dim() == space.dim() {
            return space;
        }
        space = bigger;
    }
}

/// A certified subalgebra re-expressed abstractly: its own structure
/// constants, unit coordinates, and counit restriction.
pub struct SubalgebraData {
    pub basis: Vec<Vec<Scalar>>,
    /// `sc[i * m + j]` = coordinates of `b_i b_j` over the basis.
    pub sc: Vec<Vec<Scalar>>,
    pub unit_coords: Vec<Scalar>,
    pub eps: Vec<Scalar>,
}

impl SubalgebraData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn new(a: &HopfAlgebra, s: &Subspace) -> Result<SubalgebraData> {
        let f = a.field();
        let basis = s.basis_vectors();
        let m = basis.len();
        let mut sc = Vec::with_capacity(m * m);
        for u in &basis {
            for v in &basis {
                let prod = a.mul(&Element(u.clone()), &Element(v.clone()));
                let coords = s.coordinates(f, &prod.0).ok_or_else(|| {
                    Error::Invalid("subspace is not closed under multiplication".into())
                })?;
                sc.push(coords);
            }
        }
        let unit_coords = s
            .coordinates(f, &a.unit().0)
            .ok_or_else(|| Error::Invalid("subspace does not contain the unit".into()))?;
        let eps = if a.has_coalgebra() {
            basis
                .iter()
                .map(|v| a.counit(&Element(v.clone())))
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![f.zero(); m]
        };
        Ok(SubalgebraData {
            basis,
            sc,
            unit_coords,
            eps,
        })
    }

    fn mul_coords(&self, f: &crate::scalar::Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim();
        let mut out = vec![f.zero(); m];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                let coords = &self.sc[i * m + j];
                for r in 0..m {
                    if !f.is_zero(&coords[r]) {
                        out[r] = f.add(&out[r], &f.mul(&c, &coords[r]));
                    }
                }
            }
        }
        out
    }

    /// Maps subalgebra coordinates back into the ambient algebra.
    pub fn to_ambient(&self, f: &crate::scalar::Field, coords: &[Scalar]) -> Vec<Scalar> {
        let n = self.basis.first().map_or(0, Vec::len);
        let mut out = vec![f.zero(); n];
        for (c, b) in coords.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
        out
    }
}

/// Which integral condition to solve for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralSide {
    Left,
    Right,
    TwoSided,
}

/// The space of integrals of a certified coideal subalgebra: elements
/// `Λ ∈ N` with `xΛ = ε(x)Λ` (left), `Λx = ε(x)Λ` (right), or both. The
/// result lives in ambient coordinates.
pub fn integral_space(a: &HopfAlgebra, n: &CoidealSubalgebra, side: IntegralSide) -> Result<Subspace> {
    let f = a.field();
    let data = SubalgebraData::new(a, &n.subspace)?;
    let m = data.dim();
    if m == 0 {
        return Ok(Subspace::zero(a.dim()));
    }
    // Unknown: Λ in subalgebra coordinates. For each basis b_j, impose the
    // chosen identity as m scalar equations.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..m {
        let mut bj = vec![f.zero(); m];
        bj[j] = f.one();
        let eps_j = data.eps[j].clone();
        let push_side = |left: bool, rows: &mut Vec<Vec<Scalar>>| {
            for r in 0..m {
                let mut row = vec![f.zero(); m];
                for i in 0..m {
                    let mut li = vec![f.zero(); m];
                    li[i] = f.one();
                    let prod = if left {
                        data.mul_coords(f, &bj, &li)
                    } else {
                        data.mul_coords(f, &li, &bj)
                    };
                    // b_j Λ - ε(b_j) Λ = 0 (or Λ b_j - ...)
                    let mut val = prod[r].clone();
                    if r == i {
                        val = f.sub(&val, &eps_j);
                    }
                    row[i] = val;
                }
                rows.push(row);
            }
        };
        match side {
            IntegralSide::Left => push_side(true, &mut rows),
            IntegralSide::Right => push_side(false, &mut rows),
            IntegralSide::TwoSided => {
                push_side(true, &mut rows);
                push_side(false, &mut rows);
            }
        }
    }
    let system = Matrix::from_rows(f, &rows);
    let solutions = kernel(f, &system);
    let ambient_rows: Vec<Vec<Scalar>> = solutions
        .basis_vectors()
        .into_iter()
        .map(|coords| data.to_ambient(f, &coords))
        .collect();
    Ok(Subspace::span_vectors(f, &ambient_rows, a.dim()))
}

/// The unique two-sided integral normalized to `ε(Λ) = 1`, when the
/// two-sided integral space is one-dimensional and not inside `ker ε`. An
/// idempotent counital integral is automatically central in `N` with
/// one-dimensional `ΛN`; both facts are asserted.
pub fn counital_integral(a: &HopfAlgebra, n: &CoidealSubalgebra) -> Result<Option<Element>> {
    let f = a.field();
    let space = integral_space(a, n, IntegralSide::TwoSided)?;
    if space.dim() != 1 {
        return Ok(None);
    }
    let v = Element(space.basis_vectors().remove(0));
    let eps = a.counit(&v)?;
    if f.is_zero(&eps) {
        return Ok(None);
    }
    let lambda = a.scale(&f.inv(&eps)?, &v);
    if a.mul(&lambda, &lambda) == lambda {
        let basis = n.subspace.basis_vectors();
        let mut image_rows = Vec::new();
        for b in &basis {
            let be = Element(b.clone());
            if a.mul(&lambda, &be) != a.mul(&be, &lambda) {
                return Err(Error::EquivalenceViolation {
                    dump: format!(
                        "counital integral {} is not central in its coideal",
                        a.elem_to_string(&lambda)
                    ),
                });
            }
            image_rows.push(a.mul(&lambda, &be).0);
        }
        let image = Subspace::span_vectors(f, &image_rows, a.dim());
        if image.dim() != 1 {
            return Err(Error::EquivalenceViolation {
                dump: format!(
                    "Λ·N has dimension {} instead of 1 for Λ = {}",
                    image.dim(),
                    a.elem_to_string(&lambda)
                ),
            });
        }
    }
    Ok(Some(lambda))
}

/// Jacobson radical of a certified subalgebra through the trace form
/// `(a, b) ↦ tr(L_a L_b)`, valid in characteristic 0 or above `dim N`;
/// iterated on quotients until stable. The result is asserted to be a
/// nilpotent two-sided ideal.
pub fn radical(a: &HopfAlgebra, n: &CoidealSubalgebra) -> Result<Subspace> {
    let f = a.field();
    let data = SubalgebraData::new(a, &n.subspace)?;
    let m = data.dim();
    let ch = f.characteristic();
    if ch != 0 && (ch as usize) <= m {
        return Err(Error::CharTooSmall { ch, dim: m });
    }

    // Radical in subalgebra coordinates, grown until the quotient trace form
    // is nondegenerate.
    let mut rad = Subspace::zero(m);
    loop {
        let grown = grow_radical(f, &data, &rad)?;
        if grown.dim() == rad.dim() {
            break;
        }
        rad = grown;
    }

    // Assertions: two-sided ideal, nilpotent.
    let rad_vecs = rad.basis_vectors();
    for k in &rad_vecs {
        for j in 0..m {
            let mut bj = vec![f.zero(); m];
            bj[j] = f.one();
            if !rad.contains_vector(f, &data.mul_coords(f, &bj, k))
                || !rad.contains_vector(f, &data.mul_coords(f, k, &bj))
            {
                return Err(Error::EquivalenceViolation {
                    dump: "trace-form kernel is not a two-sided ideal".into(),
                });
            }
        }
    }
    let mut power = rad.clone();
    for _ in 0..=m {
        if power.dim() == 0 {
            break;
        }
        let mut rows = Vec::new();
        for u in power.basis_vectors() {
            for v in &rad_vecs {
                rows.push(data.mul_coords(f, &u, v));
            }
        }
        let next = Subspace::span_vectors(f, &rows, m);
        if next.dim() == power.dim() && next == power {
            return Err(Error::EquivalenceViolation {
                dump: "trace-form kernel is not nilpotent".into(),
            });
        }
        power = next;
    }
    if power.dim() != 0 {
        return Err(Error::EquivalenceViolation {
            dump: "trace-form kernel is not nilpotent".into(),
        });
    }

    let ambient_rows: Vec<Vec<Scalar>> = rad_vecs
        .into_iter()
        .map(|coords| data.to_ambient(f, &coords))
        .collect();
    Ok(Subspace::span_vectors(f, &ambient_rows, a.dim()))
}

/// One radical growth step: kernel of the trace form on the quotient by the
/// current ideal, lifted back.
fn grow_radical(
    f: &crate::scalar::Field,
    data: &SubalgebraData,
    current: &Subspace,
) -> Result<Subspace> {
    let m = data.dim();
    // Representative coordinates for the quotient: non-pivot positions.
    let pivots: Vec<usize> = current.pivots().to_vec();
    let reps: Vec<usize> = (0..m).filter(|i| !pivots.contains(i)).collect();
    let q = reps.len();
    if q == 0 {
        return Ok(current.clone());
    }
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let (rem, _) = current.reduce(f, v);
        reps.iter().map(|&c| rem[c].clone()).collect()
    };
    // Quotient left-multiplication matrices for each representative class.
    let mut lmats = Vec::with_capacity(q);
    for &r in &reps {
        let mut x = vec![f.zero(); m];
        x[r] = f.one();
        let mut mat = Matrix::zeros(f, q, q);
        for (col, &c) in reps.iter().enumerate() {
            let mut y = vec![f.zero(); m];
            y[c] = f.one();
            let prod = project(&data.mul_coords(f, &x, &y));
            for row in 0..q {
                *mat.at_mut(row, col) = prod[row].clone();
            }
        }
        lmats.push(mat);
    }
    let mut trace_form = Matrix::zeros(f, q, q);
    for i in 0..q {
        for j in 0..q {
            let prod = lmats[i].matmul(f, &lmats[j]);
            let mut tr = f.zero();
            for k in 0..q {
                tr = f.add(&tr, prod.at(k, k));
            }
            *trace_form.at_mut(i, j) = tr;
        }
    }
    let ker = kernel(f, &trace_form);
    if ker.dim() == 0 {
        return Ok(current.clone());
    }
    // Lift: preimage of the quotient kernel.
    let mut rows = current.basis_vectors();
    for v in ker.basis_vectors() {
        let mut lifted = vec![f.zero(); m];
        for (idx, &c) in reps.iter().enumerate() {
            lifted[c] = v[idx].clone();
        }
        rows.push(lifted);
    }
    Ok(Subspace::span_vectors(f, &rows, m))
}

pub fn is_semisimple(a: &HopfAlgebra, n: &CoidealSubalgebra) -> Result<bool> {
    Ok(radical(a, n)?.dim() == 0)
}

/// Outcome of the Frobenius-functional search. A witness proves the algebra
/// Frobenius (hence quasi-Frobenius); a proven negative only arises from
/// full enumeration over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusOutcome {
    /// Functional coordinates over the subalgebra basis whose induced
    /// bilinear form is nondegenerate.
    Witness(Vec<Scalar>),
    ProvenNone,
    Inconclusive,
}

/// Searches for a functional `λ` on `N` whose form `(a, b) ↦ λ(ab)` is
/// nondegenerate. Over a prime field the search is a full enumeration when
/// `p^dim` fits the cap; over the rationals it scans the integer grid
/// `{-1, 0, 1}^dim`.
pub fn frobenius_functional(a: &HopfAlgebra, n: &CoidealSubalgebra) -> Result<FrobeniusOutcome> {
    const CAP: u128 = 1_000_000;
    let f = a.field();
    let data = SubalgebraData::new(a, &n.subspace)?;
    let m = data.dim();

    let gram_rank = |lambda: &[Scalar]| -> usize {
        let mut g = Matrix::zeros(f, m, m);
        for i in 0..m {
            for j in 0..m {
                let coords = &data.sc[i * m + j];
                let mut acc = f.zero();
                for (k, c) in coords.iter().enumerate() {
                    if !f.is_zero(c) {
                        acc = f.add(&acc, &f.mul(c, &lambda[k]));
                    }
                }
                *g.at_mut(i, j) = acc;
            }
        }
        g.rank(f)
    };

    match f.kind() {
        FieldKind::Prime { p } => {
            let total = (*p as u128).pow(m as u32);
            let exhaustive = total <= CAP;
            let scan = total.min(CAP);
            let mut digits = vec![0u64; m];
            let mut seen: u128 = 0;
            loop {
                let lambda: Vec<Scalar> = digits.iter().map(|&d| f.from_residue(d)).collect();
                if gram_rank(&lambda) == m {
                    return Ok(FrobeniusOutcome::Witness(lambda));
                }
                seen += 1;
                if seen >= scan {
                    return Ok(if exhaustive {
                        FrobeniusOutcome::ProvenNone
                    } else {
                        FrobeniusOutcome::Inconclusive
                    });
                }
                let mut i = m;
                loop {
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < *p {
                        break;
                    }
                    digits[i] = 0;
                }
            }
        }
        _ => {
            // Integer grid of side 3 around zero.
            let total = 3u128.pow(m as u32).min(CAP);
            let mut digits = vec![0u64; m];
            let mut seen: u128 = 0;
            loop {
                let lambda: Vec<Scalar> = digits
                    .iter()
                    .map(|&d| f.from_i64([0i64, 1, -1][d as usize]))
                    .collect();
                if gram_rank(&lambda) == m {
                    return Ok(FrobeniusOutcome::Witness(lambda));
                }
                seen += 1;
                if seen >= total {
                    return Ok(FrobeniusOutcome::Inconclusive);
                }
                let mut i = m;
                loop {
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < 3 {
                        break;
                    }
                    digits[i] = 0;
                }
            }
        }
    }
}

/// `{x ∈ N : x V = 0}` (left) or `{x ∈ N : V x = 0}` (right), in ambient
/// coordinates.
pub fn annihilator(a: &HopfAlgebra, n: &Subspace, v: &Subspace, side: Side) -> Result<Subspace> {
    if n.ambient_dim() != a.dim() || v.ambient_dim() != a.dim() {
        return Err(Error::AmbientMismatch(n.ambient_dim(), a.dim()));
    }
    let f = a.field();
    let nb = n.basis_vectors();
    let m = nb.len();
    if m == 0 {
        return Ok(Subspace::zero(a.dim()));
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for w in v.basis_vectors() {
        let we = Element(w);
        for r in 0..a.dim() {
            let mut row = vec![f.zero(); m];
            for (i, b) in nb.iter().enumerate() {
                let be = Element(b.clone());
                let prod = match side {
                    Side::Left => a.mul(&be, &we),
                    Side::Right => a.mul(&we, &be),
                };
                row[i] = prod.0[r].clone();
            }
            rows.push(row);
        }
    }
    let coords = kernel(f, &Matrix::from_rows(f, &rows));
    let ambient: Vec<Vec<Scalar>> = coords
        .basis_vectors()
        .into_iter()
        .map(|c| {
            let mut out = vec![f.zero(); a.dim()];
            for (ci, b) in c.iter().zip(&nb) {
                if !f.is_zero(ci) {
                    for (o, x) in out.iter_mut().zip(b) {
                        *o = f.add(o, &f.mul(ci, x));
                    }
                }
            }
            out
        })
        .collect();
    Ok(Subspace::span_vectors(f, &ambient, a.dim()))
}

/// `Ad(a ⊗ x) = a_(1) x S(a_(2))` evaluated on basis pairs.
pub fn adjoint_action(a: &HopfAlgebra, i: usize, x: &Element) -> Result<Element> {
    let f = a.field();
    let d = a.dim();
    let t = a.delta(&a.basis_element(i))?;
    let mut out = a.zero();
    for (idx, v) in t.0.iter().enumerate() {
        if f.is_zero(v) {
            continue;
        }
        let (l, r) = (idx / d, idx % d);
        let term = a.mul(
            &a.basis_element(l),
            &a.mul(x, &a.antipode(&a.basis_element(r))?),
        );
        out = a.add(&out, &a.scale(v, &term));
    }
    Ok(out)
}

/// A coideal subalgebra is normal when the adjoint action maps
/// `A ⊗ N` into `N`.
pub fn is_normal(a: &HopfAlgebra, n: &Subspace) -> Result<bool> {
    let f = a.field();
    for i in 0..a.dim() {
        for v in n.basis_vectors() {
            let image = adjoint_action(a, i, &Element(v))?;
            if !n.contains_vector(f, &image.0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_central(a: &HopfAlgebra, x: &Element) -> bool {
    (0..a.dim()).all(|i| {
        let e = a.basis_element(i);
        a.mul(x, &e) == a.mul(&e, x)
    })
}

/// Instance check tying centrality to normality: for a right group-like
/// projection `P`, a central `P` forces `N_P` normal, and a normal `N_P`
/// carrying `P` as its counital integral forces `P` central.
pub struct CentralityInstance {
    pub p_central: bool,
    pub np_normal: bool,
}

pub fn centrality_instance(a: &HopfAlgebra, p: &Element) -> Result<CentralityInstance> {
    let np = n_p(a, p, NpVariant::Full)?;
    let p_central = is_central(a, p);
    let np_normal = is_normal(a, &np.subspace)?;
    if p_central && !np_normal {
        return Err(Error::EquivalenceViolation {
            dump: format!(
                "central projection {} with non-normal coideal",
                a.elem_to_string(p)
            ),
        });
    }
    if np_normal {
        let li = counital_integral(a, &np)?;
        if li.as_ref() == Some(p) && !p_central {
            return Err(Error::EquivalenceViolation {
                dump: format!(
                    "normal coideal with counital integral {} that is not central",
                    a.elem_to_string(p)
                ),
            });
        }
    }
    Ok(CentralityInstance {
        p_central,
        np_normal,
    })
}

/// Builds the quotient module coalgebra `C_N = A/(A N^-)` and the coideal
/// `N_π = {x : (id ⊗ π)Δ(x) = x ⊗ π(1)}` it determines.
pub fn quotient_and_n_pi(
    a: &HopfAlgebra,
    n: &CoidealSubalgebra,
) -> Result<(QuotientCoalgebra, Subspace)> {
    let f = a.field();
    let d = a.dim();
    // N^- = N ∩ ker ε.
    let c = a.coalgebra()?;
    let eps_mat = Matrix::new(1, d, c.counit.clone());
    let ker_eps = kernel(f, &eps_mat);
    let nminus = n.subspace.intersect(f, &ker_eps)?;
    // A·N^-.
    let mut rows = Vec::new();
    for v in nminus.basis_vectors() {
        let ve = Element(v);
        for i in 0..d {
            rows.push(a.mul(&a.basis_element(i), &ve).0);
        }
    }
    let ideal = Subspace::span_vectors(f, &rows, d);
    let q = quotient_module_coalgebra(a, &ideal)?;

    // N_π as the kernel of x ↦ (id ⊗ π)Δ(x) - x ⊗ π(1).
    let pi_one = q.project(f, &a.unit().0);
    let qdim = q.dim;
    let mut m = Matrix::zeros(f, d * qdim, d);
    for k in 0..d {
        let t = a.delta(&a.basis_element(k))?;
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (i, j) = (idx / d, idx % d);
            let pj = q.project(f, &a.basis_element(j).0);
            for (cc, pv) in pj.iter().enumerate() {
                if !f.is_zero(pv) {
                    let r = i * qdim + cc;
                    let add = f.mul(v, pv);
                    *m.at_mut(r, k) = f.add(m.at(r, k), &add);
                }
            }
        }
        for (cc, pv) in pi_one.iter().enumerate() {
            if !f.is_zero(pv) {
                let r = k * qdim + cc;
                *m.at_mut(r, k) = f.sub(m.at(r, k), pv);
            }
        }
    }
    let npi = kernel(f, &m);
    Ok((q, npi))
}
