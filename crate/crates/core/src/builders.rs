//! Constructors for the algebras under study: the Taft algebras `H_{n^2}`
//! (with Sweedler's four-dimensional algebra as `n = 2`), group algebras,
//! function algebras on finite groups, and a five-dimensional algebra with a
//! proper idempotent faithful ideal. Also the grading helpers and the
//! one-parameter automorphisms of Taft algebras.

use crate::error::{Error, Result};
use crate::hopf::{verify_hopf_axioms, Coalgebra, Element, HopfAlgebra, Tensor2};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// A Taft algebra together with its generator bookkeeping. Basis element
/// `x^i g^j` sits at index `i * n + j` for `0 <= i, j < n`.
#[derive(Clone, Debug)]
pub struct TaftHandle {
    pub algebra: HopfAlgebra,
    pub n: usize,
    pub omega: Scalar,
}

impl TaftHandle {
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    /// The group-like generator `g`.
    pub fn g(&self) -> Element {
        self.algebra.basis_element(self.index(0, 1 % self.n))
    }

    /// The skew-primitive generator `x`.
    pub fn x(&self) -> Element {
        self.algebra.basis_element(self.index(1, 0))
    }

    /// `(1/n) Σ_{i<n} (g + βx)^i`, idempotent for every β; a right group-like
    /// projection.
    pub fn p_beta(&self, beta: &Scalar) -> Element {
        let a = &self.algebra;
        let f = a.field();
        let gen = a.add(&self.g(), &a.scale(beta, &self.x()));
        let mut acc = a.zero();
        let mut power = a.unit();
        for _ in 0..self.n {
            acc = a.add(&acc, &power);
            power = a.mul(&power, &gen);
        }
        let ninv = f
            .inv(&f.from_i64(self.n as i64))
            .expect("char does not divide n");
        a.scale(&ninv, &acc)
    }

    /// `(d/n) Σ_{i < n/d} g^{di}` for a divisor `d | n`: the two-sided
    /// group-like projection supported on the subgroup generated by `g^d`.
    pub fn divisor_projection(&self, d: usize) -> Element {
        assert!(d >= 1 && self.n.is_multiple_of(d), "d must divide n");
        let a = &self.algebra;
        let f = a.field();
        let mut acc = a.zero();
        for i in 0..self.n / d {
            acc = a.add(&acc, &a.basis_element(self.index(0, (d * i) % self.n)));
        }
        let scale = f
            .div(&f.from_i64(d as i64), &f.from_i64(self.n as i64))
            .expect("char does not divide n");
        a.scale(&scale, &acc)
    }
}

/// Builds the Taft algebra `H_{n^2}` over a field whose designated root of
/// unity has order exactly `n`. Relations: `g^n = 1`, `x^n = 0`,
/// `g x g^{-1} = ω x`; `Δ(g) = g ⊗ g`, `Δ(x) = x ⊗ 1 + g ⊗ x`. The antipode
/// is derived by solving the antipode axiom on generators (`S(g) = g^{-1}`,
/// `S(x) = -g^{-1} x`) and then verified globally.
pub fn taft(n: usize, field: &Field) -> Result<TaftHandle> {
    if n < 2 {
        return Err(Error::Invalid("Taft algebras need n >= 2".into()));
    }
    field.check_char_coprime(n as u64)?;
    if field.root_order() != n as u64 {
        return Err(Error::NoPrimitiveRoot { order: n as u64 });
    }
    let f = field;
    let omega = f.omega();
    let dim = n * n;
    let idx = |i: usize, j: usize| i * n + j;

    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            let xs = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x{i}"),
            };
            let gs = match j {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g{j}"),
            };
            labels.push(if xs.is_empty() && gs.is_empty() {
                "1".into()
            } else {
                format!("{xs}{gs}")
            });
        }
    }

    // (x^i g^j)(x^k g^l) = ω^{jk} x^{i+k} g^{j+l}.
    let mut mult = vec![vec![f.zero(); dim]; dim * dim];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if i + k < n {
                        let c = f.pow_u(&omega, (j * k) as u64);
                        mult[idx(i, j) * dim + idx(k, l)][idx(i + k, (j + l) % n)] = c;
                    }
                }
            }
        }
    }
    let mut unit = vec![f.zero(); dim];
    unit[idx(0, 0)] = f.one();

    let plain = HopfAlgebra::new(labels.clone(), f.clone(), mult.clone(), unit.clone(), None)?;

    // Δ on generators, extended multiplicatively.
    let delta_g = plain.tensor(
        &plain.basis_element(idx(0, 1)),
        &plain.basis_element(idx(0, 1)),
    );
    let delta_x = {
        let t1 = plain.tensor(&plain.basis_element(idx(1, 0)), &plain.unit());
        let t2 = plain.tensor(
            &plain.basis_element(idx(0, 1)),
            &plain.basis_element(idx(1, 0)),
        );
        Tensor2(t1.0.iter().zip(&t2.0).map(|(u, v)| f.add(u, v)).collect())
    };
    let mut delta = Matrix::zeros(f, dim * dim, dim);
    for i in 0..n {
        for j in 0..n {
            let mut t = plain.tensor(&plain.unit(), &plain.unit());
            for _ in 0..i {
                t = plain.tensor2_mul(&t, &delta_x);
            }
            for _ in 0..j {
                t = plain.tensor2_mul(&t, &delta_g);
            }
            for (r, v) in t.0.into_iter().enumerate() {
                *delta.at_mut(r, idx(i, j)) = v;
            }
        }
    }

    let mut counit = vec![f.zero(); dim];
    for j in 0..n {
        counit[idx(0, j)] = f.one();
    }

    // S(x^i g^j) = S(g)^j S(x)^i with S(g) = g^{n-1}, S(x) = -g^{n-1} x.
    let g_inv = plain.basis_element(idx(0, n - 1));
    let s_x = plain.scale(
        &f.from_i64(-1),
        &plain.mul(&g_inv, &plain.basis_element(idx(1, 0))),
    );
    let mut antipode = Matrix::zeros(f, dim, dim);
    for i in 0..n {
        for j in 0..n {
            let mut v = plain.unit();
            for _ in 0..j {
                v = plain.mul(&v, &g_inv);
            }
            for _ in 0..i {
                v = plain.mul(&v, &s_x);
            }
            for (r, s) in v.0.into_iter().enumerate() {
                *antipode.at_mut(r, idx(i, j)) = s;
            }
        }
    }
    let antipode_inv = antipode
        .inverse(f)
        .ok_or_else(|| Error::Invalid("Taft antipode must be invertible".into()))?;

    let algebra = HopfAlgebra::new(
        labels,
        f.clone(),
        mult,
        unit,
        Some(Coalgebra {
            delta,
            counit,
            antipode,
            antipode_inv,
        }),
    )?;
    let report = verify_hopf_axioms(&algebra);
    if !report.all_pass_hopf() {
        return Err(Error::Invalid(format!(
            "Taft construction failed its axioms: {:?}",
            report.failures
        )));
    }
    Ok(TaftHandle { algebra, n, omega })
}

/// A finite group, either as invariant factors of an abelian group or as an
/// explicit Cayley table (`table[i][j]` = index of the product).
#[derive(Clone, Debug)]
pub enum GroupPresentation {
    Cyclic(Vec<usize>),
    Table(Vec<Vec<usize>>),
}

impl GroupPresentation {
    /// The symmetric group on `n` letters as a Cayley table; permutations are
    /// listed in lexicographic one-line order, composition applies the right
    /// factor first.
    pub fn symmetric(n: usize) -> GroupPresentation {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            perms.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let comp: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
                        perms.iter().position(|r| *r == comp).unwrap()
                    })
                    .collect()
            })
            .collect();
        GroupPresentation::Table(table)
    }

    /// Expands to validated group data, checking the group axioms for
    /// explicit tables.
    pub fn realize(&self) -> Result<GroupData> {
        match self {
            GroupPresentation::Cyclic(factors) => {
                if factors.is_empty() || factors.contains(&0) {
                    return Err(Error::BadCayleyTable(
                        "invariant factors must be positive".into(),
                    ));
                }
                let order: usize = factors.iter().product();
                let to_tuple = |mut k: usize| -> Vec<usize> {
                    let mut t: Vec<usize> = factors
                        .iter()
                        .rev()
                        .map(|&f| {
                            let r = k % f;
                            k /= f;
                            r
                        })
                        .collect();
                    t.reverse();
                    t
                };
                let from_tuple = |t: &[usize]| -> usize {
                    t.iter().zip(factors).fold(0, |acc, (&x, &f)| acc * f + x)
                };
                let mut table = vec![vec![0; order]; order];
                for a in 0..order {
                    for b in 0..order {
                        let (ta, tb) = (to_tuple(a), to_tuple(b));
                        let sum: Vec<usize> = ta
                            .iter()
                            .zip(&tb)
                            .zip(factors)
                            .map(|((&x, &y), &f)| (x + y) % f)
                            .collect();
                        table[a][b] = from_tuple(&sum);
                    }
                }
                let labels = (0..order)
                    .map(|k| {
                        if factors.len() == 1 {
                            match k {
                                0 => "e".into(),
                                1 => "g".into(),
                                _ => format!("g{k}"),
                            }
                        } else {
                            format!(
                                "g({})",
                                to_tuple(k)
                                    .iter()
                                    .map(usize::to_string)
                                    .collect::<Vec<_>>()
                                    .join(",")
                            )
                        }
                    })
                    .collect();
                GroupData::from_table(table, labels)
            }
            GroupPresentation::Table(table) => {
                let labels = (0..table.len()).map(|i| format!("s{i}")).collect();
                GroupData::from_table(table.clone(), labels)
            }
        }
    }
}

/// Validated group data.
pub struct GroupData {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl GroupData {
    fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<GroupData> {
        let order = table.len();
        if order == 0 {
            return Err(Error::BadCayleyTable("empty table".into()));
        }
        for row in &table {
            if row.len() != order || row.iter().any(|&v| v >= order) {
                return Err(Error::BadCayleyTable("ragged or out-of-range row".into()));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::BadCayleyTable("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; order];
        for (a, slot) in inverse.iter_mut().enumerate() {
            *slot = (0..order)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::BadCayleyTable(format!("element {a} has no inverse")))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::BadCayleyTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupData {
            order,
            table,
            labels,
            identity,
            inverse,
        })
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The group algebra `kG`: basis indexed by group elements, `Δ(g) = g ⊗ g`,
/// `ε(g) = 1`, `S(g) = g^{-1}`. Semisimple when the characteristic does not
/// divide `|G|`; callers wanting Maschke-type conclusions must pick fields
/// accordingly.
pub fn group_algebra(group: &GroupPresentation, field: &Field) -> Result<HopfAlgebra> {
    let g = group.realize()?;
    let f = field;
    let dim = g.order;
    let mut mult = vec![vec![f.zero(); dim]; dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            mult[a * dim + b][g.table[a][b]] = f.one();
        }
    }
    let mut unit = vec![f.zero(); dim];
    unit[g.identity] = f.one();
    let mut delta = Matrix::zeros(f, dim * dim, dim);
    for a in 0..dim {
        *delta.at_mut(a * dim + a, a) = f.one();
    }
    let counit = vec![f.one(); dim];
    let mut antipode = Matrix::zeros(f, dim, dim);
    let mut antipode_inv = Matrix::zeros(f, dim, dim);
    for a in 0..dim {
        *antipode.at_mut(g.inverse[a], a) = f.one();
        *antipode_inv.at_mut(g.inverse[a], a) = f.one();
    }
    HopfAlgebra::new(
        g.labels,
        f.clone(),
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

/// The function algebra on a finite group: basis of point indicators with
/// pointwise product, `Δ(δ_g) = Σ_{hk=g} δ_h ⊗ δ_k`, `ε(δ_g) = [g = e]`,
/// `S(δ_g) = δ_{g^{-1}}`.
pub fn function_algebra(group: &GroupPresentation, field: &Field) -> Result<HopfAlgebra> {
    let g = group.realize()?;
    let f = field;
    let dim = g.order;
    let mut mult = vec![vec![f.zero(); dim]; dim * dim];
    for a in 0..dim {
        mult[a * dim + a][a] = f.one();
    }
    let unit = vec![f.one(); dim];
    let mut delta = Matrix::zeros(f, dim * dim, dim);
    for h in 0..dim {
        for k in 0..dim {
            *delta.at_mut(h * dim + k, g.table[h][k]) = f.one();
        }
    }
    let mut counit = vec![f.zero(); dim];
    counit[g.identity] = f.one();
    let mut antipode = Matrix::zeros(f, dim, dim);
    let mut antipode_inv = Matrix::zeros(f, dim, dim);
    for a in 0..dim {
        *antipode.at_mut(g.inverse[a], a) = f.one();
        *antipode_inv.at_mut(g.inverse[a], a) = f.one();
    }
    let labels = g.labels.iter().map(|l| format!("d_{l}")).collect();
    HopfAlgebra::new(
        labels,
        f.clone(),
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

/// A five-dimensional algebra (no coalgebra structure) with basis
/// `{e, f, x, y, z}`, `f = 1 - e`, radical spanned by `{x, y, z}` and
/// relations `x = exf`, `y = fye`, `yx = 0`, `xy = z`,
/// `xz = zx = yz = zy = 0`. Returns the algebra and the ideal
/// `I = span{e, x, y, z}`, a proper idempotent ideal that is left and right
/// faithful.
pub fn example_ff(field: &Field) -> Result<(HopfAlgebra, Subspace)> {
    let f = field;
    let labels: Vec<String> = ["e", "f", "x", "y", "z"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let dim = 5;
    let (e, ff, x, y, z) = (0usize, 1usize, 2usize, 3usize, 4usize);
    // products[i][j] names the basis element e_i * e_j maps to (None = 0).
    let products: [[Option<usize>; 5]; 5] = [
        [Some(e), None, Some(x), None, Some(z)],
        [None, Some(ff), None, Some(y), None],
        [None, Some(x), None, Some(z), None],
        [Some(y), None, None, None, None],
        [Some(z), None, None, None, None],
    ];
    let mut mult = vec![vec![f.zero(); dim]; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            if let Some(k) = products[i][j] {
                mult[i * dim + j][k] = f.one();
            }
        }
    }
    let mut unit = vec![f.zero(); dim];
    unit[e] = f.one();
    unit[ff] = f.one();
    let algebra = HopfAlgebra::new(labels, f.clone(), mult, unit, None)?;
    let report = verify_hopf_axioms(&algebra);
    if !(report.associative && report.unital) {
        return Err(Error::Invalid(format!(
            "idempotent-ideal example failed algebra axioms: {:?}",
            report.failures
        )));
    }
    let ideal = Subspace::span_vectors(
        f,
        &[
            algebra.basis_element(e).0,
            algebra.basis_element(x).0,
            algebra.basis_element(y).0,
            algebra.basis_element(z).0,
        ],
        dim,
    );
    Ok((algebra, ideal))
}

/// Degree data of a Taft element under `deg g = 0`, `deg x = 1`: the largest
/// and smallest `i` over the nonzero coefficients of `x^i g^j`, and the
/// degree-zero part (the image in the group algebra).
pub fn taft_degree(h: &TaftHandle, a: &Element) -> Result<(usize, usize, Element)> {
    let f = h.algebra.field();
    if h.algebra.is_zero_elem(a) {
        return Err(Error::ZeroElement);
    }
    let mut deg = 0usize;
    let mut deg_prime = h.n;
    let mut free = h.algebra.zero();
    for i in 0..h.n {
        for j in 0..h.n {
            let c = &a.0[h.index(i, j)];
            if f.is_zero(c) {
                continue;
            }
            deg = deg.max(i);
            deg_prime = deg_prime.min(i);
            if i == 0 {
                free.0[h.index(0, j)] = c.clone();
            }
        }
    }
    Ok((deg, deg_prime, free))
}

/// The Hopf automorphism `x ↦ βx, g ↦ g` of a Taft algebra, as the diagonal
/// matrix `x^i g^j ↦ β^i x^i g^j`.
pub fn phi_beta(h: &TaftHandle, beta: &Scalar) -> Result<Matrix> {
    let f = h.algebra.field();
    if f.is_zero(beta) {
        return Err(Error::ZeroBeta);
    }
    let dim = h.algebra.dim();
    let mut m = Matrix::zeros(f, dim, dim);
    for i in 0..h.n {
        let bi = f.pow_u(beta, i as u64);
        for j in 0..h.n {
            *m.at_mut(h.index(i, j), h.index(i, j)) = bi.clone();
        }
    }
    Ok(m)
}

/// Transports a subspace along a linear map, returning the canonical image.
pub fn map_subspace(field: &Field, map: &Matrix, s: &Subspace) -> Subspace {
    let rows: Vec<Vec<Scalar>> = s
        .basis_vectors()
        .into_iter()
        .map(|v| map.matvec(field, &v))
        .collect();
    Subspace::span_vectors(field, &rows, s.ambient_dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::dualize;

    fn f5() -> Field {
        Field::prime(5, 2).unwrap()
    }

    #[test]
    fn taft_2_relations_and_antipode() {
        let h = taft(2, &f5()).unwrap();
        let a = &h.algebra;
        let f = a.field();
        let g = h.g();
        let x = h.x();
        let gx = a.mul(&g, &x);
        // x·g = 4·(gx) and S(x) = 4·(gx) = -g^{-1}x.
        assert_eq!(a.mul(&x, &g), a.scale(&f.from_i64(4), &gx));
        assert_eq!(a.antipode(&x).unwrap(), a.scale(&f.from_i64(4), &gx));
        assert!(a.is_zero_elem(&a.mul(&x, &x)));
        assert_eq!(a.mul(&g, &g), a.unit());
    }

    #[test]
    fn taft_antipode_order_is_2n() {
        let h = taft(2, &f5()).unwrap();
        let a = &h.algebra;
        let mut differs_at_2 = false;
        for k in 0..a.dim() {
            let e = a.basis_element(k);
            let s2 = a.antipode(&a.antipode(&e).unwrap()).unwrap();
            if s2 != e {
                differs_at_2 = true;
            }
            let s4 = a.antipode(&a.antipode(&s2).unwrap()).unwrap();
            assert_eq!(s4, e);
        }
        assert!(differs_at_2, "S^2 should not be the identity");
        // S^2 = conjugation by g on every basis element.
        let g = h.g();
        let ginv = a.antipode(&g).unwrap();
        for k in 0..a.dim() {
            let e = a.basis_element(k);
            let s2 = a.antipode(&a.antipode(&e).unwrap()).unwrap();
            assert_eq!(s2, a.mul(&g, &a.mul(&e, &ginv)));
        }
    }

    #[test]
    fn taft_3_over_f7() {
        let f = Field::prime(7, 3).unwrap();
        assert_eq!(f.omega(), Scalar::Prime(2));
        let h = taft(3, &f).unwrap();
        let a = &h.algebra;
        assert_eq!(a.dim(), 9);
        let x = h.x();
        let g = h.g();
        let x3 = a.mul(&a.mul(&x, &x), &x);
        assert!(a.is_zero_elem(&x3));
        assert_eq!(a.mul(&a.mul(&g, &g), &g), a.unit());
        assert!(verify_hopf_axioms(a).all_pass_hopf());
    }

    #[test]
    fn taft_rejects_bad_fields() {
        // Designated root has order 4, not 2.
        let f = Field::prime(5, 4).unwrap();
        assert!(taft(2, &f).is_err());
        // Characteristic divides n.
        let f = Field::prime(2, 1).unwrap();
        assert!(taft(2, &f).is_err());
    }

    #[test]
    fn taft_over_rationals_and_cyclotomic() {
        let q = Field::rational_with_root(2).unwrap();
        let h = taft(2, &q).unwrap();
        assert!(verify_hopf_axioms(&h.algebra).all_pass_hopf());

        let q4 = Field::cyclotomic(4).unwrap();
        let h = taft(4, &q4).unwrap();
        assert_eq!(h.algebra.dim(), 16);
        assert!(verify_hopf_axioms(&h.algebra).all_pass_hopf());
    }

    #[test]
    fn group_algebra_z2_projection_census() {
        let f = f5();
        let a = group_algebra(&GroupPresentation::Cyclic(vec![2]), &f).unwrap();
        assert!(verify_hopf_axioms(&a).all_pass_hopf());

        // Exhaustive scan over all 25 elements: the two-sided group-like
        // projections of k[Z/2] over F_5 are exactly {1, 3 + 3g}.
        let mut found = Vec::new();
        for c0 in 0..5 {
            for c1 in 0..5 {
                let p = Element(vec![f.from_i64(c0), f.from_i64(c1)]);
                if a.is_zero_elem(&p) || a.mul(&p, &p) != p {
                    continue;
                }
                let dp = a.delta(&p).unwrap();
                let pp = a.tensor(&p, &p);
                let one_p = a.tensor(&a.unit(), &p);
                let p_one = a.tensor(&p, &a.unit());
                if a.tensor2_mul(&dp, &one_p) == pp
                    && a.tensor2_mul(&one_p, &dp) == pp
                    && a.tensor2_mul(&dp, &p_one) == pp
                    && a.tensor2_mul(&p_one, &dp) == pp
                {
                    found.push(p);
                }
            }
        }
        let expected = vec![
            Element(vec![f.one(), f.zero()]),
            Element(vec![f.from_i64(3), f.from_i64(3)]),
        ];
        assert_eq!(found, expected);
    }

    #[test]
    fn cyclic_divisor_idempotents() {
        let f = Field::prime(7, 1).unwrap();
        for n in [2usize, 3, 4, 6] {
            let a = group_algebra(&GroupPresentation::Cyclic(vec![n]), &f).unwrap();
            for d in 1..=n {
                if n % d != 0 {
                    continue;
                }
                let mut acc = a.zero();
                for i in 0..n / d {
                    acc = a.add(&acc, &a.basis_element((d * i) % n));
                }
                let c = f.div(&f.from_i64(d as i64), &f.from_i64(n as i64)).unwrap();
                let p = a.scale(&c, &acc);
                assert_eq!(a.mul(&p, &p), p, "divisor idempotent fails at n={n}, d={d}");
            }
        }
    }

    #[test]
    fn trivial_group_algebra() {
        let f = f5();
        let a = group_algebra(&GroupPresentation::Cyclic(vec![1]), &f).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(verify_hopf_axioms(&a).all_pass_hopf());
        let p = a.unit();
        assert_eq!(a.mul(&p, &p), p);
    }

    #[test]
    fn function_algebra_examples() {
        let f = f5();
        let a = function_algebra(&GroupPresentation::Cyclic(vec![2]), &f).unwrap();
        assert!(verify_hopf_axioms(&a).all_pass_hopf());
        // δ_e is a two-sided group-like projection.
        let de = a.basis_element(0);
        let dp = a.delta(&de).unwrap();
        let pp = a.tensor(&de, &de);
        assert_eq!(a.tensor2_mul(&dp, &a.tensor(&a.unit(), &de)), pp);
        assert_eq!(a.tensor2_mul(&dp, &a.tensor(&de, &a.unit())), pp);
        // 1_G = Σ δ_g is the unit.
        let sum = a.add(&a.basis_element(0), &a.basis_element(1));
        assert_eq!(sum, a.unit());
    }

    #[test]
    fn s3_is_a_group_and_its_algebras_pass() {
        let g = GroupPresentation::symmetric(3);
        let data = g.realize().unwrap();
        assert_eq!(data.order, 6);
        let f7 = Field::prime(7, 1).unwrap();
        let fa = function_algebra(&g, &f7).unwrap();
        assert!(verify_hopf_axioms(&fa).all_pass_hopf());
        let ga = group_algebra(&g, &f7).unwrap();
        assert!(verify_hopf_axioms(&ga).all_pass_hopf());
        assert!(verify_hopf_axioms(&dualize(&fa).unwrap()).all_pass_hopf());
    }

    #[test]
    fn bad_cayley_table_is_rejected() {
        let t = GroupPresentation::Table(vec![vec![1, 1], vec![1, 1]]);
        assert!(matches!(
            group_algebra(&t, &f5()),
            Err(Error::BadCayleyTable(_))
        ));
    }

    #[test]
    fn example_ff_shape() {
        let f = Field::rational();
        let (a, ideal) = example_ff(&f).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(ideal.dim(), 4);
        // I · I = I as subspaces.
        let mut products = Vec::new();
        for u in ideal.basis_vectors() {
            for v in ideal.basis_vectors() {
                products.push(a.mul(&Element(u.clone()), &Element(v)).0);
            }
        }
        let ii = Subspace::span_vectors(&f, &products, 5);
        assert_eq!(ii, ideal);
        // f = 1 - e is outside the ideal.
        assert!(!ideal.contains_vector(&f, &a.basis_element(1).0));
        // xy = z and yx = 0.
        let x = a.basis_element(2);
        let y = a.basis_element(3);
        assert_eq!(a.mul(&x, &y), a.basis_element(4));
        assert!(a.is_zero_elem(&a.mul(&y, &x)));
    }

    #[test]
    fn degree_examples() {
        let f7 = Field::prime(7, 3).unwrap();
        let h = taft(3, &f7).unwrap();
        let a = &h.algebra;
        // a = x^2 g + g: deg 2, deg' 0, free term g.
        let mut v = a.zero();
        v.0[h.index(2, 1)] = f7.one();
        v.0[h.index(0, 1)] = f7.one();
        let (deg, degp, free) = taft_degree(&h, &v).unwrap();
        assert_eq!((deg, degp), (2, 0));
        assert_eq!(free, h.g());

        let x = h.x();
        let (deg, degp, free) = taft_degree(&h, &x).unwrap();
        assert_eq!((deg, degp), (1, 1));
        assert!(a.is_zero_elem(&free));

        let h2 = taft(2, &f5()).unwrap();
        let p = h2.p_beta(&f5().from_i64(2));
        let (deg, degp, free) = taft_degree(&h2, &p).unwrap();
        assert_eq!((deg, degp), (1, 0));
        let f = f5();
        assert_eq!(
            free,
            Element(vec![f.from_i64(3), f.from_i64(3), f.zero(), f.zero()])
        );
        assert!(taft_degree(&h2, &h2.algebra.zero()).is_err());
    }

    #[test]
    fn p_beta_matches_hand_value() {
        let h = taft(2, &f5()).unwrap();
        let f = f5();
        // (1/2)(1 + g + 2x) = 3 + 3g + x.
        let p = h.p_beta(&f.from_i64(2));
        assert_eq!(
            p,
            Element(vec![f.from_i64(3), f.from_i64(3), f.from_i64(1), f.zero()])
        );
        let e1 = h.divisor_projection(1);
        assert_eq!(
            e1,
            Element(vec![f.from_i64(3), f.from_i64(3), f.zero(), f.zero()])
        );
        assert_eq!(h.divisor_projection(2), h.algebra.unit());
    }

    #[test]
    fn phi_beta_composition_law() {
        let h = taft(2, &f5()).unwrap();
        let f = f5();
        let a = &h.algebra;
        let id = phi_beta(&h, &f.one()).unwrap();
        assert_eq!(id, Matrix::identity(&f, 4));
        let p2 = phi_beta(&h, &f.from_i64(2)).unwrap();
        let p3 = phi_beta(&h, &f.from_i64(3)).unwrap();
        assert_eq!(p2.matmul(&f, &p3), id);
        assert!(phi_beta(&h, &f.zero()).is_err());

        // φ_2 transports the β-family member 3+3g+x to 3+3g+2x.
        let p = h.p_beta(&f.from_i64(2));
        let moved = Element(p2.matvec(&f, &p.0));
        assert_eq!(
            moved,
            Element(vec![f.from_i64(3), f.from_i64(3), f.from_i64(2), f.zero()])
        );
        // Transport preserves the right group-like identities.
        let dp = a.delta(&moved).unwrap();
        let pp = a.tensor(&moved, &moved);
        assert_eq!(a.tensor2_mul(&dp, &a.tensor(&a.unit(), &moved)), pp);
        assert_eq!(a.tensor2_mul(&a.tensor(&a.unit(), &moved), &dp), pp);
    }

    #[test]
    fn phi_beta_commutes_with_hopf_structure() {
        let f7 = Field::prime(7, 3).unwrap();
        let h = taft(3, &f7).unwrap();
        let a = &h.algebra;
        let f = a.field().clone();
        for b in 1..7 {
            let phi = phi_beta(&h, &f.from_i64(b)).unwrap();
            for k in 0..a.dim() {
                let e = a.basis_element(k);
                let phie = Element(phi.matvec(&f, &e.0));
                // Δ ∘ φ = (φ ⊗ φ) ∘ Δ.
                let lhs = a.delta(&phie).unwrap();
                let t = a.delta(&e).unwrap();
                let mut rhs = a.zero_tensor();
                let d = a.dim();
                for (idx, v) in t.0.iter().enumerate() {
                    if f.is_zero(v) {
                        continue;
                    }
                    let (i, j) = (idx / d, idx % d);
                    let pi = phi.matvec(&f, &a.basis_element(i).0);
                    let pj = phi.matvec(&f, &a.basis_element(j).0);
                    for (xx, px) in pi.iter().enumerate() {
                        for (yy, py) in pj.iter().enumerate() {
                            let o = xx * d + yy;
                            rhs.0[o] = f.add(&rhs.0[o], &f.mul(v, &f.mul(px, py)));
                        }
                    }
                }
                assert_eq!(lhs, rhs);
                assert_eq!(a.counit(&phie).unwrap(), a.counit(&e).unwrap());
                assert_eq!(
                    a.antipode(&phie).unwrap(),
                    Element(phi.matvec(&f, &a.antipode(&e).unwrap().0))
                );
            }
        }
    }
}
