//! Structure-constant representation of finite-dimensional algebras and Hopf
//! algebras: element and tensor arithmetic, the four W-operators, axiom
//! verification, dualization, and quotient module coalgebras.
//!
//! The tensor index convention is fixed once for the whole crate: the pair
//! `(i, j)` with `i` the left tensorand flattens to `i * dim + j`. Every
//! matrix realization of the comultiplication, the W-operators and quotient
//! projections uses it.

use crate::error::{Error, Result};
use crate::linalg::{kernel, solve, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// Element of the algebra: a coefficient vector over the basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Element(pub Vec<Scalar>);

/// Element of `A ⊗ A`: coefficients indexed by `i * dim + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2(pub Vec<Scalar>);

/// Linear functional on the algebra: a covector over the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional(pub Vec<Scalar>);

/// The coalgebra half of a Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra {
    /// `dim^2 x dim` matrix; column `k` holds the coefficients of `Δ(e_k)`.
    pub delta: Matrix,
    pub counit: Vec<Scalar>,
    /// `dim x dim`; column `k` holds the coefficients of `S(e_k)`.
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
}

/// A finite-dimensional algebra, optionally with Hopf structure, given by
/// structure constants over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra {
    dim: usize,
    labels: Vec<String>,
    field: Field,
    /// `mult[i * dim + j]` is the coefficient vector of `e_i * e_j`.
    mult: Vec<Vec<Scalar>>,
    /// Sparse mirror of `mult` for the arithmetic kernels.
    mult_sparse: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
    coalgebra: Option<Coalgebra>,
}

/// Which of the four invertible operators on `A ⊗ A` to apply. The first
/// index is the tensorand receiving the comultiplication, the second is the
/// side on which the other tensorand is multiplied in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WKind {
    Lr,
    Ll,
    Rl,
    Rr,
}

pub const W_KINDS: [WKind; 4] = [WKind::Lr, WKind::Ll, WKind::Rl, WKind::Rr];

/// Which tensorand a functional contracts against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl HopfAlgebra {
    pub fn new(
        labels: Vec<String>,
        field: Field,
        mult: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
        coalgebra: Option<Coalgebra>,
    ) -> Result<HopfAlgebra> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::Invalid("algebra must have positive dimension".into()));
        }
        if mult.len() != dim * dim || mult.iter().any(|v| v.len() != dim) || unit.len() != dim {
            return Err(Error::Invalid("structure constant shapes do not match dim".into()));
        }
        if let Some(c) = &coalgebra {
            if c.delta.rows() != dim * dim
                || c.delta.cols() != dim
                || c.counit.len() != dim
                || c.antipode.rows() != dim
                || c.antipode.cols() != dim
                || c.antipode_inv.rows() != dim
                || c.antipode_inv.cols() != dim
            {
                return Err(Error::Invalid("coalgebra shapes do not match dim".into()));
            }
        }
        let mult_sparse = mult
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, s)| !field.is_zero(s))
                    .map(|(k, s)| (k, s.clone()))
                    .collect()
            })
            .collect();
        Ok(HopfAlgebra {
            dim,
            labels,
            field,
            mult,
            mult_sparse,
            unit,
            coalgebra,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_coalgebra(&self) -> bool {
        self.coalgebra.is_some()
    }

    pub fn coalgebra(&self) -> Result<&Coalgebra> {
        self.coalgebra.as_ref().ok_or(Error::MissingCoalgebra)
    }

    #[cfg(test)]
    pub(crate) fn coalgebra_mut(&mut self) -> Option<&mut Coalgebra> {
        self.coalgebra.as_mut()
    }

    pub fn mult_table(&self) -> &[Vec<Scalar>] {
        &self.mult
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i * self.dim + j]
    }

    pub fn zero(&self) -> Element {
        Element(vec![self.field.zero(); self.dim])
    }

    pub fn unit(&self) -> Element {
        Element(self.unit.clone())
    }

    pub fn basis_element(&self, k: usize) -> Element {
        let mut v = self.zero();
        v.0[k] = self.field.one();
        v
    }

    pub fn zero_tensor(&self) -> Tensor2 {
        Tensor2(vec![self.field.zero(); self.dim * self.dim])
    }

    fn check_elem(&self, a: &Element) -> Result<()> {
        if a.0.len() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn is_zero_elem(&self, a: &Element) -> bool {
        a.0.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_zero_tensor(&self, t: &Tensor2) -> bool {
        t.0.iter().all(|x| self.field.is_zero(x))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| self.field.add(x, y))
                .collect(),
        )
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| self.field.sub(x, y))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar, a: &Element) -> Element {
        Element(a.0.iter().map(|x| self.field.mul(c, x)).collect())
    }

    /// Bilinear product through the structure constants.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in a.0.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let c = f.mul(x, y);
                for (k, s) in &self.mult_sparse[i * self.dim + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        Element(out)
    }

    pub fn delta(&self, a: &Element) -> Result<Tensor2> {
        self.check_elem(a)?;
        let c = self.coalgebra()?;
        Ok(Tensor2(c.delta.matvec(&self.field, &a.0)))
    }

    pub fn counit(&self, a: &Element) -> Result<Scalar> {
        self.check_elem(a)?;
        let c = self.coalgebra()?;
        let f = &self.field;
        let mut acc = f.zero();
        for (x, e) in a.0.iter().zip(&c.counit) {
            acc = f.add(&acc, &f.mul(x, e));
        }
        Ok(acc)
    }

    pub fn antipode(&self, a: &Element) -> Result<Element> {
        self.check_elem(a)?;
        let c = self.coalgebra()?;
        Ok(Element(c.antipode.matvec(&self.field, &a.0)))
    }

    pub fn antipode_inv(&self, a: &Element) -> Result<Element> {
        self.check_elem(a)?;
        let c = self.coalgebra()?;
        Ok(Element(c.antipode_inv.matvec(&self.field, &a.0)))
    }

    pub fn tensor(&self, a: &Element, b: &Element) -> Tensor2 {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim * self.dim];
        for (i, x) in a.0.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !f.is_zero(y) {
                    out[i * self.dim + j] = f.mul(x, y);
                }
            }
        }
        Tensor2(out)
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, extended bilinearly.
    pub fn tensor2_mul(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![f.zero(); d * d];
        for (st, sv) in s.0.iter().enumerate() {
            if f.is_zero(sv) {
                continue;
            }
            let (i, j) = (st / d, st % d);
            for (tt, tv) in t.0.iter().enumerate() {
                if f.is_zero(tv) {
                    continue;
                }
                let (k, l) = (tt / d, tt % d);
                let c = f.mul(sv, tv);
                for (m, cm) in &self.mult_sparse[i * d + k] {
                    let left = f.mul(&c, cm);
                    for (n, cn) in &self.mult_sparse[j * d + l] {
                        let idx = m * d + n;
                        out[idx] = f.add(&out[idx], &f.mul(&left, cn));
                    }
                }
            }
        }
        Tensor2(out)
    }

    /// The four invertible operators that apply the comultiplication to one
    /// tensorand and multiply the other into one of its legs, together with
    /// their inverses (which twist by the antipode).
    pub fn w_apply(&self, kind: WKind, t: &Tensor2, inverse: bool) -> Result<Tensor2> {
        let c = self.coalgebra()?;
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![f.zero(); d * d];
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (x, y) = (idx / d, idx % d);
            let (target, other) = match kind {
                WKind::Lr | WKind::Ll => (x, y),
                WKind::Rl | WKind::Rr => (y, x),
            };
            for a_leg in 0..d {
                for b_leg in 0..d {
                    let dc = c.delta.at(a_leg * d + b_leg, target);
                    if f.is_zero(dc) {
                        continue;
                    }
                    let coeff = f.mul(v, dc);
                    // The twisted leg in the inverse formulas.
                    let twisted = |m: usize| -> Element {
                        let e = self.basis_element(m);
                        if !inverse {
                            return e;
                        }
                        let mat = if matches!(kind, WKind::Lr | WKind::Rl) {
                            &c.antipode
                        } else {
                            &c.antipode_inv
                        };
                        Element(mat.matvec(f, &e.0))
                    };
                    let other_e = self.basis_element(other);
                    let (kept, prod) = match kind {
                        // x_(1) ⊗ x_(2) y  /  x_(1) ⊗ S(x_(2)) y
                        WKind::Lr => (a_leg, self.mul(&twisted(b_leg), &other_e)),
                        // x_(1) ⊗ y x_(2)  /  x_(1) ⊗ y S^{-1}(x_(2))
                        WKind::Ll => (a_leg, self.mul(&other_e, &twisted(b_leg))),
                        // x y_(1) ⊗ y_(2)  /  x S(y_(1)) ⊗ y_(2)
                        WKind::Rl => (b_leg, self.mul(&other_e, &twisted(a_leg))),
                        // y_(1) x ⊗ y_(2)  /  S^{-1}(y_(1)) x ⊗ y_(2)
                        WKind::Rr => (b_leg, self.mul(&twisted(a_leg), &other_e)),
                    };
                    for (n, pv) in prod.0.iter().enumerate() {
                        if f.is_zero(pv) {
                            continue;
                        }
                        let o = match kind {
                            WKind::Lr | WKind::Ll => kept * d + n,
                            WKind::Rl | WKind::Rr => n * d + kept,
                        };
                        out[o] = f.add(&out[o], &f.mul(&coeff, pv));
                    }
                }
            }
        }
        Ok(Tensor2(out))
    }

    /// Contracts a functional against the chosen tensorand:
    /// `(μ ⊗ id)` for [`Side::Left`], `(id ⊗ μ)` for [`Side::Right`].
    pub fn apply_functional(&self, side: Side, mu: &Functional, t: &Tensor2) -> Element {
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![f.zero(); d];
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (a, b) = (idx / d, idx % d);
            match side {
                Side::Left => out[b] = f.add(&out[b], &f.mul(v, &mu.0[a])),
                Side::Right => out[a] = f.add(&out[a], &f.mul(v, &mu.0[b])),
            }
        }
        Element(out)
    }

    pub fn eval(&self, mu: &Functional, a: &Element) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for (x, y) in mu.0.iter().zip(&a.0) {
            acc = f.add(&acc, &f.mul(x, y));
        }
        acc
    }

    /// `Δ(a)` seen as a `dim x dim` matrix with the left index as rows.
    pub fn delta_matrix(&self, a: &Element) -> Result<Matrix> {
        let t = self.delta(a)?;
        Ok(Matrix::new(self.dim, self.dim, t.0))
    }

    pub fn elem_to_string(&self, a: &Element) -> String {
        let f = &self.field;
        let mut parts = Vec::new();
        for (i, c) in a.0.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            if f.is_one(c) {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("{}*{}", f.fmt_scalar(c), self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Outcome of exact basis-by-basis axiom verification. `None` entries mean
/// the algebra has no coalgebra part to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub associative: bool,
    pub unital: bool,
    pub coassociative: Option<bool>,
    pub counital: Option<bool>,
    pub bialgebra: Option<bool>,
    pub antipode: Option<bool>,
    pub antipode_invertible: Option<bool>,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.associative
            && self.unital
            && self.coassociative.unwrap_or(true)
            && self.counital.unwrap_or(true)
            && self.bialgebra.unwrap_or(true)
            && self.antipode.unwrap_or(true)
            && self.antipode_invertible.unwrap_or(true)
    }

    pub fn all_pass_hopf(&self) -> bool {
        self.all_pass() && self.coassociative.is_some()
    }
}

/// Checks every (co)algebra axiom exactly on all basis elements;
/// multilinearity makes these checks complete.
pub fn verify_hopf_axioms(a: &HopfAlgebra) -> AxiomReport {
    let f = a.field();
    let d = a.dim();
    let mut failures = Vec::new();

    let mut associative = true;
    for i in 0..d {
        for j in 0..d {
            let ij = a.mul(&a.basis_element(i), &a.basis_element(j));
            for k in 0..d {
                let left = a.mul(&ij, &a.basis_element(k));
                let right = a.mul(
                    &a.basis_element(i),
                    &a.mul(&a.basis_element(j), &a.basis_element(k)),
                );
                if left != right {
                    associative = false;
                    failures.push(format!(
                        "associativity fails at ({}, {}, {})",
                        a.labels()[i],
                        a.labels()[j],
                        a.labels()[k]
                    ));
                }
            }
        }
    }

    let unit = a.unit();
    let mut unital = true;
    for i in 0..d {
        let e = a.basis_element(i);
        if a.mul(&unit, &e) != e || a.mul(&e, &unit) != e {
            unital = false;
            failures.push(format!("unit law fails at {}", a.labels()[i]));
        }
    }

    if !a.has_coalgebra() {
        return AxiomReport {
            associative,
            unital,
            coassociative: None,
            counital: None,
            bialgebra: None,
            antipode: None,
            antipode_invertible: None,
            failures,
        };
    }
    let c = a.coalgebra().expect("present");

    // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on basis elements, computed in dim^3 coordinates.
    let mut coassociative = true;
    for k in 0..d {
        let t = a.delta(&a.basis_element(k)).expect("coalgebra present");
        let mut lhs = vec![f.zero(); d * d * d];
        let mut rhs = vec![f.zero(); d * d * d];
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (i, j) = (idx / d, idx % d);
            for x in 0..d {
                for y in 0..d {
                    let dc = c.delta.at(x * d + y, i);
                    if !f.is_zero(dc) {
                        let o = (x * d + y) * d + j;
                        lhs[o] = f.add(&lhs[o], &f.mul(v, dc));
                    }
                    let dc = c.delta.at(x * d + y, j);
                    if !f.is_zero(dc) {
                        let o = (i * d + x) * d + y;
                        rhs[o] = f.add(&rhs[o], &f.mul(v, dc));
                    }
                }
            }
        }
        if lhs != rhs {
            coassociative = false;
            failures.push(format!("coassociativity fails at {}", a.labels()[k]));
        }
    }

    let mut counital = true;
    for k in 0..d {
        let e = a.basis_element(k);
        let t = a.delta(&e).expect("present");
        let mu = Functional(c.counit.clone());
        if a.apply_functional(Side::Left, &mu, &t) != e
            || a.apply_functional(Side::Right, &mu, &t) != e
        {
            counital = false;
            failures.push(format!("counit law fails at {}", a.labels()[k]));
        }
    }

    // Δ and ε must be algebra maps.
    let mut bialgebra = true;
    let unit_tensor = a.tensor(&a.unit(), &a.unit());
    if a.delta(&a.unit()).expect("present") != unit_tensor {
        bialgebra = false;
        failures.push("Δ(1) != 1 ⊗ 1".into());
    }
    if !f.is_one(&a.counit(&a.unit()).expect("present")) {
        bialgebra = false;
        failures.push("ε(1) != 1".into());
    }
    for i in 0..d {
        for j in 0..d {
            let prod = a.mul(&a.basis_element(i), &a.basis_element(j));
            let lhs = a.delta(&prod).expect("present");
            let rhs = a.tensor2_mul(
                &a.delta(&a.basis_element(i)).expect("present"),
                &a.delta(&a.basis_element(j)).expect("present"),
            );
            if lhs != rhs {
                bialgebra = false;
                failures.push(format!(
                    "Δ is not multiplicative at ({}, {})",
                    a.labels()[i],
                    a.labels()[j]
                ));
            }
            let eps_prod = a.counit(&prod).expect("present");
            let eps_sep = f.mul(
                &a.counit(&a.basis_element(i)).expect("present"),
                &a.counit(&a.basis_element(j)).expect("present"),
            );
            if eps_prod != eps_sep {
                bialgebra = false;
                failures.push(format!(
                    "ε is not multiplicative at ({}, {})",
                    a.labels()[i],
                    a.labels()[j]
                ));
            }
        }
    }

    // m(S ⊗ id)Δ = ε(·) 1 = m(id ⊗ S)Δ.
    let mut antipode_ok = true;
    for k in 0..d {
        let e = a.basis_element(k);
        let t = a.delta(&e).expect("present");
        let mut lhs = a.zero();
        let mut rhs = a.zero();
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (i, j) = (idx / d, idx % d);
            let si = a.antipode(&a.basis_element(i)).expect("present");
            let sj = a.antipode(&a.basis_element(j)).expect("present");
            lhs = a.add(&lhs, &a.scale(v, &a.mul(&si, &a.basis_element(j))));
            rhs = a.add(&rhs, &a.scale(v, &a.mul(&a.basis_element(i), &sj)));
        }
        let target = a.scale(&a.counit(&e).expect("present"), &a.unit());
        if lhs != target || rhs != target {
            antipode_ok = false;
            failures.push(format!("antipode law fails at {}", a.labels()[k]));
        }
    }

    let mut antipode_invertible = true;
    for k in 0..d {
        let e = a.basis_element(k);
        let s_then_inv = a
            .antipode_inv(&a.antipode(&e).expect("present"))
            .expect("present");
        let inv_then_s = a
            .antipode(&a.antipode_inv(&e).expect("present"))
            .expect("present");
        if s_then_inv != e || inv_then_s != e {
            antipode_invertible = false;
            failures.push(format!("antipode inverse fails at {}", a.labels()[k]));
        }
    }

    AxiomReport {
        associative,
        unital,
        coassociative: Some(coassociative),
        counital: Some(counital),
        bialgebra: Some(bialgebra),
        antipode: Some(antipode_ok),
        antipode_invertible: Some(antipode_invertible),
        failures,
    }
}

/// The dual Hopf algebra on the dual basis: multiplication is the transpose
/// of Δ, comultiplication the transpose of multiplication, unit is ε, counit
/// is evaluation at 1, antipode the transpose of S.
pub fn dualize(a: &HopfAlgebra) -> Result<HopfAlgebra> {
    let c = a.coalgebra()?;
    let f = a.field().clone();
    let d = a.dim();

    let mut mult = vec![vec![f.zero(); d]; d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                mult[i * d + j][k] = c.delta.at(i * d + j, k).clone();
            }
        }
    }
    let mut delta = Matrix::zeros(&f, d * d, d);
    for k in 0..d {
        for i in 0..d {
            for j in 0..d {
                *delta.at_mut(i * d + j, k) = a.structure_constant(i, j)[k].clone();
            }
        }
    }
    let counit = a.unit().0;
    let unit = c.counit.clone();
    let antipode = c.antipode.transpose();
    let antipode_inv = c.antipode_inv.transpose();
    let labels = a.labels().iter().map(|l| format!("{l}^")).collect();
    HopfAlgebra::new(
        labels,
        f,
        mult,
        unit,
        Some(Coalgebra {
            delta,
            counit,
            antipode,
            antipode_inv,
        }),
    )
}

/// Quotient of the algebra by a left ideal that is also a coideal-compatible
/// kernel, carrying the induced coalgebra structure and left module action.
#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub parent_dim: usize,
    pub dim: usize,
    /// Basis of the quotient: the non-pivot coordinates of the ideal.
    pub rep_cols: Vec<usize>,
    /// `dim x parent_dim` projection matrix.
    pub pi: Matrix,
    /// `dim^2 x dim` induced comultiplication.
    pub delta: Matrix,
    pub counit: Vec<Scalar>,
    /// `action[i]` is the `dim x dim` matrix of the left action of `e_i`.
    pub action: Vec<Matrix>,
}

impl QuotientCoalgebra {
    pub fn project(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        self.pi.matvec(field, v)
    }

    /// Section of the projection: coset representative supported on the
    /// non-pivot coordinates.
    pub fn represent(&self, field: &Field, c: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![field.zero(); self.parent_dim];
        for (idx, &col) in self.rep_cols.iter().enumerate() {
            v[col] = c[idx].clone();
        }
        v
    }
}

/// Builds `A / ideal` as a left module quotient coalgebra. The ideal must be
/// a left ideal with `ε(ideal) = 0` and `Δ(ideal) ⊆ ideal ⊗ A + A ⊗ ideal`.
pub fn quotient_module_coalgebra(a: &HopfAlgebra, ideal: &Subspace) -> Result<QuotientCoalgebra> {
    let _ = a.coalgebra()?;
    let f = a.field();
    let d = a.dim();
    if ideal.ambient_dim() != d {
        return Err(Error::AmbientMismatch(ideal.ambient_dim(), d));
    }

    for v in ideal.basis_vectors() {
        let ve = Element(v);
        for i in 0..d {
            let prod = a.mul(&a.basis_element(i), &ve);
            if !ideal.contains_vector(f, &prod.0) {
                return Err(Error::NotLeftIdeal);
            }
        }
    }

    // Coideal-kernel check: ε vanishes and Δ maps into ideal⊗A + A⊗ideal.
    let mixed = {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for v in ideal.basis_vectors() {
            for j in 0..d {
                let mut t = vec![f.zero(); d * d];
                for (i, x) in v.iter().enumerate() {
                    t[i * d + j] = x.clone();
                }
                rows.push(t);
                let mut t = vec![f.zero(); d * d];
                for (i, x) in v.iter().enumerate() {
                    t[j * d + i] = x.clone();
                }
                rows.push(t);
            }
        }
        Subspace::span_vectors(f, &rows, d * d)
    };
    for v in ideal.basis_vectors() {
        let ve = Element(v);
        if !f.is_zero(&a.counit(&ve)?) {
            return Err(Error::NotCoidealKernel);
        }
        let t = a.delta(&ve)?;
        if !mixed.contains_vector(f, &t.0) {
            return Err(Error::NotCoidealKernel);
        }
    }

    let pivot_cols: Vec<usize> = ideal.pivots().to_vec();
    let rep_cols: Vec<usize> = (0..d).filter(|i| !pivot_cols.contains(i)).collect();
    let qdim = rep_cols.len();

    // π: reduce mod the ideal, then read off the non-pivot coordinates.
    let mut pi = Matrix::zeros(f, qdim, d);
    for k in 0..d {
        let (rem, _) = ideal.reduce(f, &a.basis_element(k).0);
        for (r, &col) in rep_cols.iter().enumerate() {
            *pi.at_mut(r, k) = rem[col].clone();
        }
    }

    // Induced Δ_C(π(e_r)) = (π ⊗ π)Δ(e_r) on the representative basis.
    let mut delta = Matrix::zeros(f, qdim * qdim, qdim);
    let mut counit = vec![f.zero(); qdim];
    for (col, &rep) in rep_cols.iter().enumerate() {
        let t = a.delta(&a.basis_element(rep))?;
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (i, j) = (idx / d, idx % d);
            let pi_i = pi.matvec(f, &a.basis_element(i).0);
            let pi_j = pi.matvec(f, &a.basis_element(j).0);
            for (x, px) in pi_i.iter().enumerate() {
                if f.is_zero(px) {
                    continue;
                }
                for (y, py) in pi_j.iter().enumerate() {
                    if !f.is_zero(py) {
                        let o = x * qdim + y;
                        let add = f.mul(v, &f.mul(px, py));
                        *delta.at_mut(o, col) = f.add(delta.at(o, col), &add);
                    }
                }
            }
        }
        counit[col] = a.counit(&a.basis_element(rep))?;
    }

    let mut action = Vec::with_capacity(d);
    for i in 0..d {
        let mut m = Matrix::zeros(f, qdim, qdim);
        for (col, &rep) in rep_cols.iter().enumerate() {
            let prod = a.mul(&a.basis_element(i), &a.basis_element(rep));
            let proj = pi.matvec(f, &prod.0);
            for r in 0..qdim {
                *m.at_mut(r, col) = proj[r].clone();
            }
        }
        action.push(m);
    }

    let q = QuotientCoalgebra {
        parent_dim: d,
        dim: qdim,
        rep_cols,
        pi,
        delta,
        counit,
        action,
    };

    // π must be a coalgebra map, (π ⊗ π)Δ(e_k) = Δ_C(π(e_k)), and A-linear.
    for k in 0..d {
        let t = a.delta(&a.basis_element(k))?;
        let mut lhs = vec![f.zero(); qdim * qdim];
        for (idx, v) in t.0.iter().enumerate() {
            if f.is_zero(v) {
                continue;
            }
            let (i, j) = (idx / d, idx % d);
            let pi_i = q.pi.matvec(f, &a.basis_element(i).0);
            let pi_j = q.pi.matvec(f, &a.basis_element(j).0);
            for (x, px) in pi_i.iter().enumerate() {
                for (y, py) in pi_j.iter().enumerate() {
                    let o = x * qdim + y;
                    lhs[o] = f.add(&lhs[o], &f.mul(v, &f.mul(px, py)));
                }
            }
        }
        let pk = q.pi.matvec(f, &a.basis_element(k).0);
        let rhs = q.delta.matvec(f, &pk);
        if lhs != rhs {
            return Err(Error::NotCoidealKernel);
        }
        for i in 0..d {
            let lin_lhs = q
                .pi
                .matvec(f, &a.mul(&a.basis_element(i), &a.basis_element(k)).0);
            let lin_rhs = q.action[i].matvec(f, &pk);
            if lin_lhs != lin_rhs {
                return Err(Error::NotLeftIdeal);
            }
        }
    }

    Ok(q)
}

/// Span of the right tensor legs of a tensor, i.e. `{(μ ⊗ id) t : μ}`.
pub fn right_leg_space(a: &HopfAlgebra, t: &Tensor2) -> Subspace {
    let d = a.dim();
    let rows: Vec<Vec<Scalar>> = (0..d).map(|i| t.0[i * d..(i + 1) * d].to_vec()).collect();
    Subspace::span_vectors(a.field(), &rows, d)
}

/// Span of the left tensor legs, i.e. `{(id ⊗ μ) t : μ}`.
pub fn left_leg_space(a: &HopfAlgebra, t: &Tensor2) -> Subspace {
    let d = a.dim();
    let rows: Vec<Vec<Scalar>> = (0..d)
        .map(|j| (0..d).map(|i| t.0[i * d + j].clone()).collect())
        .collect();
    Subspace::span_vectors(a.field(), &rows, d)
}

/// Solves `t = y ⊗ b` for `y` given `b != 0`; verifies the factorization.
pub fn factor_left(a: &HopfAlgebra, t: &Tensor2, b: &Element) -> Option<Element> {
    let f = a.field();
    let d = a.dim();
    let j0 = (0..d).find(|&j| !f.is_zero(&b.0[j]))?;
    let inv = f.inv(&b.0[j0]).ok()?;
    let y = Element((0..d).map(|i| f.mul(&t.0[i * d + j0], &inv)).collect());
    (a.tensor(&y, b) == *t).then_some(y)
}

/// Solves `t = b ⊗ y` for `y` given `b != 0`; verifies the factorization.
pub fn factor_right(a: &HopfAlgebra, t: &Tensor2, b: &Element) -> Option<Element> {
    let f = a.field();
    let d = a.dim();
    let i0 = (0..d).find(|&i| !f.is_zero(&b.0[i]))?;
    let inv = f.inv(&b.0[i0]).ok()?;
    let y = Element((0..d).map(|j| f.mul(&t.0[i0 * d + j], &inv)).collect());
    (a.tensor(b, &y) == *t).then_some(y)
}

/// Finds `c` with `t = c · b` for `b != 0`, verifying the proportionality.
pub fn factor_scale(a: &HopfAlgebra, t: &Element, b: &Element) -> Option<Scalar> {
    let f = a.field();
    let i0 = (0..a.dim()).find(|&i| !f.is_zero(&b.0[i]))?;
    let c = f.div(&t.0[i0], &b.0[i0]).ok()?;
    (a.scale(&c, b) == *t).then_some(c)
}

/// Finds a functional witness `μ` with `(id ⊗ μ)(t) = target`, if one exists.
pub fn functional_witness_right(
    a: &HopfAlgebra,
    t: &Tensor2,
    target: &Element,
) -> Option<Functional> {
    let f = a.field();
    let d = a.dim();
    let mut m = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            *m.at_mut(i, j) = t.0[i * d + j].clone();
        }
    }
    solve(f, &m, &target.0).map(Functional)
}

/// Kernel of a linear map `A -> A ⊗ A` described by its basis images.
pub fn kernel_of_tensor_map(
    a: &HopfAlgebra,
    columns: impl Fn(usize) -> Result<Tensor2>,
) -> Result<Subspace> {
    let f = a.field();
    let d = a.dim();
    let mut m = Matrix::zeros(f, d * d, d);
    for k in 0..d {
        let t = columns(k)?;
        for (r, v) in t.0.into_iter().enumerate() {
            *m.at_mut(r, k) = v;
        }
    }
    Ok(kernel(f, &m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::taft;

    fn h4() -> HopfAlgebra {
        taft(2, &Field::prime(5, 2).unwrap()).unwrap().algebra
    }

    /// (1/2)(1 + g + 2x) = 3 + 3g + x over F_5, a right group-like projection.
    fn p_right(a: &HopfAlgebra) -> Element {
        let f = a.field();
        Element(vec![f.from_i64(3), f.from_i64(3), f.from_i64(1), f.zero()])
    }

    #[test]
    fn taft_relations_via_elem_arith() {
        let a = h4();
        let f = a.field();
        // basis order: 1, g, x, xg
        let g = a.basis_element(1);
        let x = a.basis_element(2);
        let gx = a.mul(&g, &x);
        assert_eq!(a.mul(&x, &g), a.scale(&f.from_i64(4), &gx));
        assert_eq!(a.delta(&g).unwrap(), a.tensor(&g, &g));
        let expect = {
            let t1 = a.tensor(&x, &a.unit());
            let t2 = a.tensor(&g, &x);
            Tensor2(t1.0.iter().zip(&t2.0).map(|(u, v)| f.add(u, v)).collect())
        };
        assert_eq!(a.delta(&x).unwrap(), expect);
    }

    #[test]
    fn tensor2_mul_examples() {
        let a = h4();
        let one_one = a.tensor(&a.unit(), &a.unit());
        let g = a.basis_element(1);
        let x = a.basis_element(2);
        let t = a.tensor(&g, &x);
        assert_eq!(a.tensor2_mul(&one_one, &t), t);

        let gg = a.tensor(&g, &g);
        assert_eq!(a.tensor2_mul(&gg, &gg), one_one);

        // Δ(P)(1 ⊗ P) = P ⊗ P but Δ(P)(P ⊗ 1) != P ⊗ P.
        let p = p_right(&a);
        let dp = a.delta(&p).unwrap();
        let lhs = a.tensor2_mul(&dp, &a.tensor(&a.unit(), &p));
        assert_eq!(lhs, a.tensor(&p, &p));
        let swapped = a.tensor2_mul(&dp, &a.tensor(&p, &a.unit()));
        assert_ne!(swapped, a.tensor(&p, &p));
    }

    #[test]
    fn w_operator_examples() {
        let a = h4();
        let g = a.basis_element(1);
        let x = a.basis_element(2);
        let t = a.tensor(&a.unit(), &x);
        assert_eq!(a.w_apply(WKind::Lr, &t, false).unwrap(), t);
        let t = a.tensor(&g, &x);
        let gx = a.mul(&g, &x);
        assert_eq!(a.w_apply(WKind::Lr, &t, false).unwrap(), a.tensor(&g, &gx));
    }

    #[test]
    fn w_inverse_law_on_random_tensors() {
        use rand::{Rng, SeedableRng};
        let a = h4();
        let f = a.field();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t = Tensor2((0..16).map(|_| f.from_i64(rng.gen_range(0..5))).collect());
            for kind in W_KINDS {
                let fwd = a.w_apply(kind, &t, false).unwrap();
                let back = a.w_apply(kind, &fwd, true).unwrap();
                assert_eq!(back, t, "W_{kind:?} inverse law failed");
                let fwd2 = a
                    .w_apply(kind, &a.w_apply(kind, &t, true).unwrap(), false)
                    .unwrap();
                assert_eq!(fwd2, t);
            }
        }
    }

    #[test]
    fn functional_contraction_examples() {
        let a = h4();
        let f = a.field();
        let c = a.coalgebra().unwrap();
        let eps = Functional(c.counit.clone());
        for k in 0..4 {
            let e = a.basis_element(k);
            let t = a.delta(&e).unwrap();
            assert_eq!(a.apply_functional(Side::Left, &eps, &t), e);
            assert_eq!(a.apply_functional(Side::Right, &eps, &t), e);
        }
        // μ dual to g contracted on the left of Δ(3 + 3g + x) gives 3g + x.
        let mut mu = Functional(vec![f.zero(); 4]);
        mu.0[1] = f.one();
        let p = p_right(&a);
        let out = a.apply_functional(Side::Left, &mu, &a.delta(&p).unwrap());
        assert_eq!(
            out,
            Element(vec![f.zero(), f.from_i64(3), f.from_i64(1), f.zero()])
        );
    }

    #[test]
    fn axioms_and_mutation() {
        let a = h4();
        let report = verify_hopf_axioms(&a);
        assert!(report.all_pass_hopf(), "{:?}", report.failures);

        let mut bad = a.clone();
        let f = Field::prime(5, 2).unwrap();
        *bad.coalgebra_mut().unwrap().antipode.at_mut(0, 1) = f.from_i64(3);
        let report = verify_hopf_axioms(&bad);
        assert_eq!(report.antipode, Some(false));
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        use crate::builders::{function_algebra, group_algebra, GroupPresentation};
        let f = Field::prime(5, 2).unwrap();
        let z2 = GroupPresentation::Cyclic(vec![2]);
        let dual = dualize(&group_algebra(&z2, &f).unwrap()).unwrap();
        let fun = function_algebra(&z2, &f).unwrap();
        // Identical structure constants under the dual-basis pairing.
        assert_eq!(dual.mult, fun.mult);
        assert_eq!(dual.unit, fun.unit);
        let (dc, fc) = (dual.coalgebra().unwrap(), fun.coalgebra().unwrap());
        assert_eq!(dc.delta, fc.delta);
        assert_eq!(dc.counit, fc.counit);
        assert_eq!(dc.antipode, fc.antipode);
    }

    #[test]
    fn dual_is_hopf_and_double_dual_is_identity() {
        let a = h4();
        let dual = dualize(&a).unwrap();
        assert!(verify_hopf_axioms(&dual).all_pass_hopf());
        let double = dualize(&dual).unwrap();
        assert_eq!(double.mult, a.mult);
        assert_eq!(double.unit, a.unit);
        let (dc, ac) = (double.coalgebra().unwrap(), a.coalgebra().unwrap());
        assert_eq!(dc.delta, ac.delta);
        assert_eq!(dc.counit, ac.counit);
        assert_eq!(dc.antipode, ac.antipode);
    }

    #[test]
    fn quotient_examples() {
        let a = h4();
        let f = a.field();
        // ideal = A·N^- for N = span{1, g + 2x}: dim C = 2.
        let nminus = Element(vec![f.from_i64(1), f.from_i64(4), f.from_i64(3), f.zero()]);
        let rows: Vec<Vec<Scalar>> = (0..4)
            .map(|i| a.mul(&a.basis_element(i), &nminus).0)
            .collect();
        let ideal = Subspace::span_vectors(f, &rows, 4);
        assert_eq!(ideal.dim(), 2);
        let q = quotient_module_coalgebra(&a, &ideal).unwrap();
        assert_eq!(q.dim, 2);

        // Zero ideal: quotient is A itself as a coalgebra.
        let q = quotient_module_coalgebra(&a, &Subspace::zero(4)).unwrap();
        assert_eq!(q.dim, 4);
        assert_eq!(q.delta, a.coalgebra().unwrap().delta);

        // ideal = ker ε: one-dimensional quotient with group-like π(1).
        let c = a.coalgebra().unwrap();
        let eps_mat = Matrix::new(1, 4, c.counit.clone());
        let ker_eps = kernel(f, &eps_mat);
        let q = quotient_module_coalgebra(&a, &ker_eps).unwrap();
        assert_eq!(q.dim, 1);
        let p1 = q.project(f, &a.unit().0);
        let dp1 = q.delta.matvec(f, &p1);
        assert_eq!(dp1, vec![f.mul(&p1[0], &p1[0])]);
    }

    #[test]
    fn quotient_rejects_non_ideals() {
        let a = h4();
        let f = a.field();
        let s = Subspace::span_vectors(f, &[a.basis_element(1).0], 4);
        assert!(matches!(
            quotient_module_coalgebra(&a, &s),
            Err(Error::NotLeftIdeal) | Err(Error::NotCoidealKernel)
        ));
    }

    #[test]
    fn leg_spaces_of_delta_p() {
        let a = h4();
        let f = a.field();
        let p = p_right(&a);
        let dp = a.delta(&p).unwrap();
        // Right legs span {1, g + 2x}.
        let legs = right_leg_space(&a, &dp);
        let expected = Subspace::span_vectors(
            f,
            &[
                a.unit().0,
                vec![f.zero(), f.from_i64(1), f.from_i64(2), f.zero()],
            ],
            4,
        );
        assert_eq!(legs, expected);
    }
}
