//! Exact dense linear algebra over any [`Field`], plus the subspace lattice
//! and exhaustive subspace enumeration over prime fields.
//!
//! Subspaces are kept in reduced row-echelon form, which is a canonical
//! representative of the row space: two subspaces are equal iff their RREF
//! matrices are identical. Every set-level equality in the crate reduces to
//! this comparison.

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldKind, Scalar};

/// Dense row-major matrix over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Scalar>]) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        let _ = field;
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn stack(top: &Matrix, bottom: &Matrix) -> Matrix {
        assert_eq!(top.cols, bottom.cols);
        let mut entries = top.entries.clone();
        entries.extend(bottom.entries.iter().cloned());
        Matrix {
            rows: top.rows + bottom.rows,
            cols: top.cols,
            entries,
        }
    }

    /// Matrix-vector product `m * v`.
    pub fn matvec(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![field.zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.at(r, c);
                if !field.is_zero(e) && !field.is_zero(&v[c]) {
                    out[r] = field.add(&out[r], &field.mul(e, &v[c]));
                }
            }
        }
        out
    }

    pub fn matmul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k).clone();
                if field.is_zero(&a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !field.is_zero(b) {
                        let prev = out.at(r, c).clone();
                        *out.at_mut(r, c) = field.add(&prev, &field.mul(&a, b));
                    }
                }
            }
        }
        out
    }

    /// In-place Gauss-Jordan reduction; returns pivot column indices.
    pub fn rref_in_place(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !field.is_zero(self.at(r, col))) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.entries.swap(row * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = field.inv(self.at(row, col)).expect("pivot nonzero");
            for c in col..self.cols {
                let v = field.mul(self.at(row, c), &inv);
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || field.is_zero(self.at(r, col)) {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let delta = field.mul(&factor, self.at(row, c));
                    let v = field.sub(self.at(r, c), &delta);
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Reduced row-echelon form with zero rows dropped.
    pub fn rref(&self, field: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(field);
        let rank = pivots.len();
        m.entries.truncate(rank * m.cols);
        m.rows = rank;
        (m, pivots)
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rref(field).1.len()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self, field: &Field) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = field.one();
        }
        let pivots = aug.rref_in_place(field);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(field, n, n);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = aug.at(r, n + c).clone();
            }
        }
        Some(inv)
    }
}

/// A linear subspace of `field^ambient_dim` in canonical RREF form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix {
                rows: 0,
                cols: ambient_dim,
                entries: Vec::new(),
            },
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn span(field: &Field, m: &Matrix) -> Subspace {
        let (basis, pivots) = m.rref(field);
        Subspace {
            ambient_dim: m.cols,
            basis,
            pivots,
        }
    }

    pub fn span_vectors(field: &Field, vectors: &[Vec<Scalar>], ambient_dim: usize) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        Subspace::span(field, &Matrix::from_rows(field, vectors))
    }

    /// Reconstructs a subspace from rows already known to be canonical.
    pub fn from_canonical_basis(field: &Field, m: Matrix) -> Subspace {
        let s = Subspace::span(field, &m);
        debug_assert_eq!(s.basis, m);
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row_vec(r)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` lies in
    /// the subspace. Also returns the coordinates used.
    pub fn reduce(&self, field: &Field, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rem = v.to_vec();
        let mut coords = vec![field.zero(); self.dim()];
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = rem[p].clone();
            if field.is_zero(&c) {
                continue;
            }
            coords[r] = c.clone();
            for col in 0..self.ambient_dim {
                let b = self.basis.at(r, col);
                if !field.is_zero(b) {
                    rem[col] = field.sub(&rem[col], &field.mul(&c, b));
                }
            }
        }
        (rem, coords)
    }

    pub fn contains_vector(&self, field: &Field, v: &[Scalar]) -> bool {
        let (rem, _) = self.reduce(field, v);
        rem.iter().all(|x| field.is_zero(x))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, field: &Field, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (rem, coords) = self.reduce(field, v);
        rem.iter().all(|x| field.is_zero(x)).then_some(coords)
    }

    pub fn contains_subspace(&self, field: &Field, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains_vector(field, other.basis.row(r)))
    }

    pub fn sum(&self, field: &Field, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.dim() == 0 {
            return Ok(other.clone());
        }
        if other.dim() == 0 {
            return Ok(self.clone());
        }
        Ok(Subspace::span(
            field,
            &Matrix::stack(&self.basis, &other.basis),
        ))
    }

    /// Intersection through annihilators: `U ∩ W = (U^0 + W^0)^0`, each
    /// annihilator realized as a kernel.
    pub fn intersect(&self, field: &Field, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let u0 = kernel(field, &self.basis);
        let w0 = kernel(field, &other.basis);
        if u0.dim() == 0 && w0.dim() == 0 {
            return Ok(Subspace::full(field, self.ambient_dim));
        }
        let stacked = if u0.dim() == 0 {
            w0.basis.clone()
        } else if w0.dim() == 0 {
            u0.basis.clone()
        } else {
            Matrix::stack(&u0.basis, &w0.basis)
        };
        Ok(kernel(field, &stacked))
    }
}

/// Solution space `{v : m v = 0}`.
pub fn kernel(field: &Field, m: &Matrix) -> Subspace {
    let n = m.cols;
    if m.rows == 0 {
        return Subspace::full(field, n);
    }
    let (r, pivots) = m.rref(field);
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut rows = Vec::new();
    for free in 0..n {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(r.at(i, free));
        }
        rows.push(v);
    }
    Subspace::span_vectors(field, &rows, n)
}

/// Solves `m x = b`; returns one solution if consistent.
pub fn solve(field: &Field, m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows);
    let mut aug = Matrix::zeros(field, m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            *aug.at_mut(r, c) = m.at(r, c).clone();
        }
        *aug.at_mut(r, m.cols) = b[r].clone();
    }
    let pivots = aug.rref_in_place(field);
    if pivots.contains(&m.cols) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug.at(i, m.cols).clone();
    }
    Some(x)
}

/// Number of subspaces of `F_p^d`, as a sum of Gaussian binomials.
pub fn subspace_count(p: u64, d: usize) -> u128 {
    let mut total: u128 = 0;
    for k in 0..=d {
        total += gaussian_binomial(p, d, k);
    }
    total
}

/// Gaussian binomial `[d choose k]_p` counted exactly in u128.
pub fn gaussian_binomial(p: u64, d: usize, k: usize) -> u128 {
    if k > d {
        return 0;
    }
    // Product formula evaluated as an exact integer via the q-factorial
    // recurrence [d,k] = [d-1,k-1] * (p^d - 1)/(p^k - 1) is awkward in
    // integers; use the Pascal-type recurrence instead.
    let mut row: Vec<u128> = vec![0; k + 1];
    row[0] = 1;
    for _ in 1..=d {
        for j in (1..=k).rev() {
            let pk = (p as u128).pow(j as u32);
            row[j] = row[j]
                .checked_mul(pk)
                .and_then(|x| x.checked_add(row[j - 1]))
                .expect("gaussian binomial overflow");
        }
    }
    row[k]
}

/// Streams every subspace of `F_p^d` exactly once as canonical RREF bases, in
/// a deterministic order: by dimension, then lexicographic pivot sets, then
/// lexicographic free entries.
pub fn enumerate_subspaces(field: &Field, d: usize, cap: u128) -> Result<SubspaceIter> {
    let p = match field.kind() {
        FieldKind::Prime { p } => *p,
        _ => return Err(Error::Invalid("subspace enumeration needs a prime field".into())),
    };
    let count = subspace_count(p, d);
    if count > cap {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    Ok(SubspaceIter {
        field: field.clone(),
        p,
        d,
        k: 0,
        pivots: Vec::new(),
        free_positions: Vec::new(),
        free_values: Vec::new(),
        done_k: false,
        started: false,
    })
}

pub struct SubspaceIter {
    field: Field,
    p: u64,
    d: usize,
    k: usize,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>,
    free_values: Vec<u64>,
    done_k: bool,
    started: bool,
}

impl SubspaceIter {
    fn build(&self) -> Subspace {
        let f = &self.field;
        let mut basis = Matrix::zeros(f, self.k, self.d);
        for (r, &pc) in self.pivots.iter().enumerate() {
            *basis.at_mut(r, pc) = f.one();
        }
        for (idx, &(r, c)) in self.free_positions.iter().enumerate() {
            *basis.at_mut(r, c) = f.from_residue(self.free_values[idx]);
        }
        Subspace {
            ambient_dim: self.d,
            basis,
            pivots: self.pivots.clone(),
        }
    }

    /// Free slots of an RREF pattern: entries right of their row's pivot and
    /// not in any pivot column.
    fn compute_free_positions(&mut self) {
        self.free_positions.clear();
        for (r, &pc) in self.pivots.iter().enumerate() {
            for c in pc + 1..self.d {
                if !self.pivots.contains(&c) {
                    self.free_positions.push((r, c));
                }
            }
        }
        self.free_values = vec![0; self.free_positions.len()];
    }

    fn first_pivots(&mut self) -> bool {
        if self.k > self.d {
            return false;
        }
        self.pivots = (0..self.k).collect();
        self.compute_free_positions();
        true
    }

    /// Advances the pivot set in lexicographic combination order.
    fn next_pivots(&mut self) -> bool {
        let k = self.k;
        if k == 0 {
            return false;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < self.d - (k - i) {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                self.compute_free_positions();
                return true;
            }
        }
        false
    }

    fn next_values(&mut self) -> bool {
        let mut i = self.free_values.len();
        while i > 0 {
            i -= 1;
            if self.free_values[i] + 1 < self.p {
                self.free_values[i] += 1;
                for v in &mut self.free_values[i + 1..] {
                    *v = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if !self.started {
            self.started = true;
            self.done_k = !self.first_pivots();
        } else if !self.next_values()
            && !self.next_pivots() {
                self.k += 1;
                self.done_k = !self.first_pivots();
            }
        if self.done_k {
            return None;
        }
        Some(self.build())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn f5() -> Field {
        Field::prime(5, 4).unwrap()
    }

    fn mat(field: &Field, rows: &[&[i64]]) -> Matrix {
        let data: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, &data)
    }

    #[test]
    fn rref_examples() {
        let f = q();
        let (r, p) = mat(&f, &[&[2, 4], &[1, 2]]).rref(&f);
        assert_eq!(r, mat(&f, &[&[1, 2]]));
        assert_eq!(p, vec![0]);

        let id = Matrix::identity(&f, 3);
        assert_eq!(id.rref(&f).0, id);

        let (r, _) = mat(&f, &[&[0, 0]]).rref(&f);
        assert_eq!(r.rows(), 0);
    }

    #[test]
    fn rref_is_idempotent() {
        let f = f5();
        let m = mat(&f, &[&[1, 2, 3, 4], &[2, 4, 1, 0], &[3, 1, 4, 4]]);
        let (r1, _) = m.rref(&f);
        let (r2, _) = r1.rref(&f);
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_examples() {
        let f = f5();
        let k = kernel(&f, &mat(&f, &[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&f, &[f.from_i64(1), f.from_i64(4)]));

        let inv = mat(&f, &[&[1, 1], &[0, 1]]);
        assert_eq!(kernel(&f, &inv).dim(), 0);

        let z = Matrix::zeros(&f, 1, 3);
        assert_eq!(kernel(&f, &z).dim(), 3);
    }

    #[test]
    fn subspace_lattice_examples() {
        let f = q();
        let e = |i: usize| -> Vec<Scalar> {
            let mut v = vec![f.zero(); 3];
            v[i] = f.one();
            v
        };
        let u = Subspace::span_vectors(&f, &[e(0), e(1)], 3);
        let w = Subspace::span_vectors(&f, &[e(1), e(2)], 3);
        let meet = u.intersect(&f, &w).unwrap();
        assert_eq!(meet, Subspace::span_vectors(&f, &[e(1)], 3));

        assert_eq!(u.sum(&f, &u).unwrap(), u);

        let f5 = f5();
        let line = Subspace::span_vectors(&f5, &[vec![f5.from_i64(1), f5.from_i64(2)]], 2);
        assert!(line.contains_vector(&f5, &[f5.from_i64(3), f5.from_i64(1)]));
    }

    #[test]
    fn dimension_formula_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let f = f5();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let d = 4;
            let rand_space = |rng: &mut rand_chacha::ChaCha8Rng| {
                let rows = rng.gen_range(0..=3);
                let vecs: Vec<Vec<Scalar>> = (0..rows)
                    .map(|_| (0..d).map(|_| f.from_i64(rng.gen_range(0..5))).collect())
                    .collect();
                Subspace::span_vectors(&f, &vecs, d)
            };
            let u = rand_space(&mut rng);
            let w = rand_space(&mut rng);
            let s = u.sum(&f, &w).unwrap();
            let m = u.intersect(&f, &w).unwrap();
            assert_eq!(u.dim() + w.dim(), s.dim() + m.dim());
            assert!(s.contains_subspace(&f, &u));
            assert!(u.contains_subspace(&f, &m));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = q();
        let m = mat(&f, &[&[1, 2], &[2, 4]]);
        let b = vec![f.from_i64(3), f.from_i64(6)];
        let x = solve(&f, &m, &b).unwrap();
        assert_eq!(m.matvec(&f, &x), b);
        let b_bad = vec![f.from_i64(3), f.from_i64(7)];
        assert!(solve(&f, &m, &b_bad).is_none());
    }

    #[test]
    fn subspace_enumeration_counts() {
        let f2 = Field::prime(2, 1).unwrap();
        let all: Vec<Subspace> = enumerate_subspaces(&f2, 2, 10_000).unwrap().collect();
        assert_eq!(all.len(), 5);

        let f3 = Field::prime(3, 2).unwrap();
        assert_eq!(subspace_count(3, 4), 212);
        let all: Vec<Subspace> = enumerate_subspaces(&f3, 4, 10_000).unwrap().collect();
        assert_eq!(all.len(), 212);

        let f5 = f5();
        assert_eq!(subspace_count(5, 4), 1120);
        let all: Vec<Subspace> = enumerate_subspaces(&f5, 4, 10_000).unwrap().collect();
        assert_eq!(all.len(), 1120);

        // Pairwise distinct canonical forms; spot-check canonicality.
        let mut seen = std::collections::HashSet::new();
        for s in &all {
            let key = format!("{:?}", s.basis());
            assert!(seen.insert(key), "duplicate subspace emitted");
            let re = Subspace::span(&f5, s.basis());
            assert_eq!(&re, s);
        }
    }

    #[test]
    fn enumeration_too_large_is_reported() {
        let f7 = Field::prime(7, 3).unwrap();
        assert!(matches!(
            enumerate_subspaces(&f7, 9, 10_000_000),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 2, 1), 3);
        assert_eq!(gaussian_binomial(3, 4, 1), 40);
        assert_eq!(gaussian_binomial(3, 4, 2), 130);
        assert_eq!(gaussian_binomial(5, 4, 2), 806);
        assert_eq!(gaussian_binomial(5, 4, 1), 156);
    }

    #[test]
    fn matrix_inverse() {
        let f = f5();
        let m = mat(&f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.matmul(&f, &inv), Matrix::identity(&f, 2));
        let sing = mat(&f, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse(&f).is_none());
    }
}
