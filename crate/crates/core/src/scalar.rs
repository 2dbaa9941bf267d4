//! Exact field arithmetic over the three supported coefficient fields: the
//! rationals, cyclotomic extensions `Q(w_n)`, and prime fields `F_p`, each
//! carrying a designated primitive root of unity.
//!
//! A [`Field`] is a context object; [`Scalar`]s are plain canonical values and
//! all arithmetic goes through the field that owns them. Canonical forms make
//! scalar equality a plain structural comparison: fractions are always reduced
//! with positive denominator, cyclotomic representatives are reduced mod the
//! cyclotomic polynomial, residues lie in `[0, p)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// An exact field element. Values are meaningful only relative to the
/// [`Field`] that produced them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Coefficients of a polynomial in the root `t`, reduced mod `Phi_n`;
    /// length is exactly `phi(n)`.
    Cyclotomic(Vec<BigRational>),
    /// Residue in `[0, p)`.
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Cyclotomic { n: u64 },
    Prime { p: u64 },
}

/// A coefficient field with a designated primitive root of unity.
#[derive(Clone, Debug)]
pub struct Field {
    kind: FieldKind,
    root_order: u64,
    /// Cyclotomic only: the modulus `Phi_n`, monic of degree `phi(n)`.
    modulus: Vec<BigRational>,
    omega: Scalar,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.omega == other.omega
    }
}
impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Cyclotomic { n } => write!(f, "Q(w_{n})"),
            FieldKind::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

impl Field {
    /// The rationals with `omega = 1`.
    pub fn rational() -> Field {
        Field::rational_with_root(1).expect("order 1 always exists")
    }

    /// The rationals with a designated root of order 1 (`omega = 1`) or 2
    /// (`omega = -1`). Higher orders do not exist in `Q`.
    pub fn rational_with_root(order: u64) -> Result<Field> {
        let omega = match order {
            1 => BigRational::one(),
            2 => -BigRational::one(),
            _ => return Err(Error::NoPrimitiveRoot { order }),
        };
        Ok(Field {
            kind: FieldKind::Rational,
            root_order: order,
            modulus: Vec::new(),
            omega: Scalar::Rational(omega),
        })
    }

    /// `Q(w_n)` as `Q[t]/(Phi_n)` with `omega = t`, of order `n`.
    pub fn cyclotomic(n: u64) -> Result<Field> {
        Field::cyclotomic_with_root(n, n)
    }

    /// `Q(w_n)` with the designated root `t^(n/order)` for `order | n`.
    pub fn cyclotomic_with_root(n: u64, order: u64) -> Result<Field> {
        if n < 2 {
            return Err(Error::Invalid(format!("cyclotomic index must be >= 2, got {n}")));
        }
        if order == 0 || !n.is_multiple_of(order) {
            return Err(Error::NoPrimitiveRoot { order });
        }
        let modulus = cyclotomic_polynomial(n);
        let deg = modulus.len() - 1;
        let mut field = Field {
            kind: FieldKind::Cyclotomic { n },
            root_order: n,
            modulus,
            omega: Scalar::Cyclotomic(vec![BigRational::zero(); deg]),
        };
        // class of t, reduced (n = 2 gives deg 1, where t = -1).
        let mut t = vec![BigRational::zero(), BigRational::one()];
        poly_reduce(&mut t, &field.modulus);
        t.resize(deg, BigRational::zero());
        field.omega = field.pow_u(&Scalar::Cyclotomic(t), n / order);
        field.root_order = order;
        Ok(field)
    }

    /// `F_p` with a designated root of exact order `order`, found through a
    /// primitive root of the full multiplicative group.
    pub fn prime(p: u64, order: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if order == 0 || !(p - 1).is_multiple_of(order) {
            return Err(Error::NoPrimitiveRoot { order });
        }
        let g = primitive_root(p);
        let omega = pow_mod(g, (p - 1) / order, p);
        Ok(Field {
            kind: FieldKind::Prime { p },
            root_order: order,
            modulus: Vec::new(),
            omega: Scalar::Prime(omega),
        })
    }

    /// `F_p` with an explicitly designated root; its order is computed.
    pub fn prime_with_omega(p: u64, omega: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if omega == 0 || omega >= p {
            return Err(Error::Invalid(format!("omega {omega} out of range for F_{p}")));
        }
        Ok(Field {
            kind: FieldKind::Prime { p },
            root_order: multiplicative_order(omega, p),
            modulus: Vec::new(),
            omega: Scalar::Prime(omega),
        })
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// 0 for `Q` and `Q(w_n)`, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::Prime { p } => p,
            _ => 0,
        }
    }

    pub fn omega(&self) -> Scalar {
        self.omega.clone()
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    /// Checks the precondition for hosting a primitive n-th root: the
    /// characteristic must not divide n.
    pub fn check_char_coprime(&self, n: u64) -> Result<()> {
        let ch = self.characteristic();
        if ch != 0 && n.is_multiple_of(ch) {
            return Err(Error::CharacteristicDividesN { ch, n });
        }
        Ok(())
    }

    fn cyclo_deg(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> Scalar {
        match self.kind {
            FieldKind::Rational => Scalar::Rational(BigRational::zero()),
            FieldKind::Cyclotomic { .. } => {
                Scalar::Cyclotomic(vec![BigRational::zero(); self.cyclo_deg()])
            }
            FieldKind::Prime { .. } => Scalar::Prime(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.kind {
            FieldKind::Rational => Scalar::Rational(BigRational::from(BigInt::from(v))),
            FieldKind::Cyclotomic { .. } => {
                let mut c = vec![BigRational::zero(); self.cyclo_deg()];
                c[0] = BigRational::from(BigInt::from(v));
                Scalar::Cyclotomic(c)
            }
            FieldKind::Prime { p } => Scalar::Prime(v.rem_euclid(p as i64) as u64),
        }
    }

    /// The exact fraction `num/den` (den nonzero); reduces mod p over `F_p`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        if self.is_zero(&d) {
            return Err(Error::DivisionByZero);
        }
        self.div(&self.from_i64(num), &d)
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Cyclotomic(c) => c.iter().all(|x| x.is_zero()),
            Scalar::Prime(r) => *r == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                Scalar::Cyclotomic(x.iter().zip(y).map(|(u, v)| u + v).collect())
            }
            (Scalar::Prime(x), Scalar::Prime(y)) => {
                let p = self.p();
                Scalar::Prime((x + y) % p)
            }
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.iter().map(|x| -x).collect()),
            Scalar::Prime(r) => {
                let p = self.p();
                Scalar::Prime(if *r == 0 { 0 } else { p - r })
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                let mut prod = poly_mul(x, y);
                poly_reduce(&mut prod, &self.modulus);
                prod.resize(self.cyclo_deg(), BigRational::zero());
                Scalar::Cyclotomic(prod)
            }
            (Scalar::Prime(x), Scalar::Prime(y)) => {
                let p = self.p() as u128;
                Scalar::Prime(((*x as u128 * *y as u128) % p) as u64)
            }
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            Scalar::Rational(x) => Scalar::Rational(x.recip()),
            Scalar::Cyclotomic(c) => {
                // gcd(c, Phi_n) = 1 since Phi_n is irreducible over Q.
                let (g, u, _) = poly_ext_gcd(c, &self.modulus);
                debug_assert_eq!(poly_degree(&g), Some(0));
                let scale = g[0].recip();
                let mut inv: Vec<BigRational> = u.iter().map(|x| x * &scale).collect();
                poly_reduce(&mut inv, &self.modulus);
                inv.resize(self.cyclo_deg(), BigRational::zero());
                Scalar::Cyclotomic(inv)
            }
            Scalar::Prime(r) => Scalar::Prime(pow_mod(*r, self.p() - 2, self.p())),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow_u(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: &Scalar, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow_u(a, e as u64))
        } else {
            Ok(self.pow_u(&self.inv(a)?, e.unsigned_abs()))
        }
    }

    fn p(&self) -> u64 {
        match self.kind {
            FieldKind::Prime { p } => p,
            _ => panic!("not a prime field"),
        }
    }

    /// Raw residue of a prime-field scalar.
    pub fn to_residue(&self, a: &Scalar) -> Option<u64> {
        match a {
            Scalar::Prime(r) => Some(*r),
            _ => None,
        }
    }

    pub fn from_residue(&self, r: u64) -> Scalar {
        Scalar::Prime(r % self.p())
    }

    /// Human-readable form: `3/2`, `1 - t`, or a residue.
    pub fn fmt_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rational(x) => x.to_string(),
            Scalar::Prime(r) => r.to_string(),
            Scalar::Cyclotomic(c) => {
                if c.iter().all(|x| x.is_zero()) {
                    return "0".into();
                }
                let mut parts = Vec::new();
                for (i, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let mono = match i {
                        0 => x.to_string(),
                        1 if x.is_one() => "t".into(),
                        1 => format!("{x}*t"),
                        _ if x.is_one() => format!("t^{i}"),
                        _ => format!("{x}*t^{i}"),
                    };
                    parts.push(mono);
                }
                parts.join(" + ")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Integer helpers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let mut base = a as u128 % p as u128;
    let mut acc = 1u128;
    let p = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u64
}

/// Smallest generator of `F_p^x`, found by checking `g^((p-1)/q) != 1` for
/// every prime `q | p-1`.
fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let primes = factorize(p - 1);
    (2..p)
        .find(|&g| primes.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("F_p^x is cyclic")
}

pub fn multiplicative_order(a: u64, p: u64) -> u64 {
    let mut order = p - 1;
    for q in factorize(p - 1) {
        while order.is_multiple_of(q) && pow_mod(a, order / q, p) == 1 {
            order /= q;
        }
    }
    order
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers over Q (coefficient index = degree).

fn poly_degree(a: &[BigRational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (da, db) = match (poly_degree(a), poly_degree(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return vec![BigRational::zero()],
    };
    let mut out = vec![BigRational::zero(); da + db + 1];
    for i in 0..=da {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..=db {
            if !b[j].is_zero() {
                out[i + j] += &a[i] * &b[j];
            }
        }
    }
    out
}

/// Long division: returns `(quotient, remainder)` with `deg r < deg b`.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem: Vec<BigRational> = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len().max(db + 1)];
    while let Some(dr) = poly_degree(&rem) {
        if dr < db {
            break;
        }
        let coeff = &rem[dr] / &lead;
        quot[dr - db] = coeff.clone();
        for k in 0..=db {
            let delta = &coeff * &b[k];
            rem[dr - db + k] -= delta;
        }
    }
    (quot, rem)
}

fn poly_reduce(a: &mut Vec<BigRational>, modulus: &[BigRational]) {
    let (_, rem) = poly_divmod(a, modulus);
    *a = rem;
}

/// Extended Euclid over `Q[t]`: returns `(g, u, v)` with `u*a + v*b = g`.
fn poly_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let one = || vec![BigRational::one()];
    let zero = || vec![BigRational::zero()];
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (one(), zero());
    let (mut t0, mut t1) = (zero(), one());
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        *slot = x - y;
    }
    out
}

/// The n-th cyclotomic polynomial, by the recursive quotient
/// `Phi_n = (t^n - 1) / prod_{d|n, d<n} Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigRational> {
    assert!(n >= 1);
    let mut numerator = vec![BigRational::zero(); n as usize + 1];
    numerator[0] = -BigRational::one();
    numerator[n as usize] = BigRational::one();
    let mut denominator = vec![BigRational::one()];
    for d in 1..n {
        if n.is_multiple_of(d) {
            denominator = poly_mul(&denominator, &cyclotomic_polynomial(d));
        }
    }
    let (quot, rem) = poly_divmod(&numerator, &denominator);
    debug_assert!(poly_degree(&rem).is_none(), "cyclotomic division must be exact");
    let deg = poly_degree(&quot).expect("nonzero");
    quot[..=deg].to_vec()
}
