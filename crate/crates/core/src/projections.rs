//! Predicates and reports for the group-like projection notions
//! (right / left / two-sided / weak), the equivalence battery tying them
//! together, and shifts of projections with their witness identities.

use crate::error::{Error, Result};
use crate::hopf::{factor_left, factor_right, Element, Functional, HopfAlgebra, Tensor2};
use crate::scalar::{FieldKind, Scalar};

/// The projection notion a predicate decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlKind {
    Right,
    Left,
    TwoSided,
    WeakRight,
    WeakLeft,
    Weak,
}

/// Which side a shift lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftSide {
    Right,
    Left,
}

/// Per-element truth table of all projection conditions, each computed
/// independently from the defining identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionReport {
    pub idempotent: bool,
    pub right_gl: bool,
    pub left_gl: bool,
    pub two_sided: bool,
    pub s_fixed: bool,
    pub s2_fixed: bool,
    pub psp_commute: bool,
    /// `Δ(P)(1 ⊗ P) = Δ(P)(P ⊗ 1)`.
    pub delta_swap: bool,
    pub weak_right: bool,
    pub weak_left: bool,
    pub weak: bool,
    pub eps_value: Scalar,
}

struct GlIdentities {
    right: bool,
    left: bool,
    weak_right: bool,
    weak_left: bool,
    delta_swap: bool,
}

fn gl_identities(a: &HopfAlgebra, p: &Element) -> Result<GlIdentities> {
    let dp = a.delta(p)?;
    let pp = a.tensor(p, p);
    let one_p = a.tensor(&a.unit(), p);
    let p_one = a.tensor(p, &a.unit());
    let dp_one_p = a.tensor2_mul(&dp, &one_p);
    let one_p_dp = a.tensor2_mul(&one_p, &dp);
    let dp_p_one = a.tensor2_mul(&dp, &p_one);
    let p_one_dp = a.tensor2_mul(&p_one, &dp);
    Ok(GlIdentities {
        right: dp_one_p == pp && one_p_dp == pp,
        left: dp_p_one == pp && p_one_dp == pp,
        weak_right: a.tensor2_mul(&dp, &pp) == pp,
        weak_left: a.tensor2_mul(&pp, &dp) == pp,
        delta_swap: dp_one_p == dp_p_one,
    })
}

/// Decides one projection notion by exact tensor-identity evaluation. All
/// kinds require a nonzero idempotent; the weak kinds additionally require
/// `ε(P) = 1` by definition.
pub fn gl_check(a: &HopfAlgebra, p: &Element, kind: GlKind) -> Result<bool> {
    if a.is_zero_elem(p) {
        return Err(Error::ZeroElement);
    }
    if a.mul(p, p) != *p {
        return Ok(false);
    }
    let ids = gl_identities(a, p)?;
    Ok(match kind {
        GlKind::Right => ids.right,
        GlKind::Left => ids.left,
        GlKind::TwoSided => ids.right && ids.left,
        GlKind::WeakRight | GlKind::WeakLeft | GlKind::Weak => {
            let f = a.field();
            let eps_one = f.is_one(&a.counit(p)?);
            match kind {
                GlKind::WeakRight => eps_one && ids.weak_right,
                GlKind::WeakLeft => eps_one && ids.weak_left,
                _ => eps_one && ids.weak_right && ids.weak_left,
            }
        }
    })
}

/// Computes the full truth table for `P` and checks the equivalence battery:
/// for a nonzero idempotent the eight conditions
/// right+S-fixed, right+S²-fixed, right+PS(P)=S(P)P, the three left
/// variants, two-sided, and the Δ-swap identity must all agree. A
/// disagreement aborts with a dump since it would falsify the theory.
pub fn summary_report(a: &HopfAlgebra, p: &Element) -> Result<ProjectionReport> {
    if a.is_zero_elem(p) {
        return Err(Error::ZeroElement);
    }
    let f = a.field();
    let idempotent = a.mul(p, p) == *p;
    let ids = gl_identities(a, p)?;
    let sp = a.antipode(p)?;
    let s2p = a.antipode(&sp)?;
    let s_fixed = sp == *p;
    let s2_fixed = s2p == *p;
    let psp_commute = a.mul(p, &sp) == a.mul(&sp, p);
    let eps_value = a.counit(p)?;
    let right_gl = idempotent && ids.right;
    let left_gl = idempotent && ids.left;
    let two_sided = idempotent && ids.right && ids.left;
    let weak_right = idempotent && f.is_one(&eps_value) && ids.weak_right;
    let weak_left = idempotent && f.is_one(&eps_value) && ids.weak_left;
    let report = ProjectionReport {
        idempotent,
        right_gl,
        left_gl,
        two_sided,
        s_fixed,
        s2_fixed,
        psp_commute,
        delta_swap: ids.delta_swap,
        weak_right,
        weak_left,
        weak: weak_right && weak_left,
        eps_value,
    };
    if idempotent {
        let battery = [
            right_gl && s_fixed,
            right_gl && s2_fixed,
            right_gl && psp_commute,
            left_gl && s_fixed,
            left_gl && s2_fixed,
            left_gl && psp_commute,
            two_sided,
            ids.delta_swap,
        ];
        if battery.iter().any(|&b| b != battery[0]) {
            return Err(Error::EquivalenceViolation {
                dump: format!(
                    "element {} over {}: battery {:?}, report {:?}",
                    a.elem_to_string(p),
                    f,
                    battery,
                    report
                ),
            });
        }
    }
    Ok(report)
}

/// Outcome of checking whether `Q` is a (right or left) shift of `P`.
#[derive(Clone, Debug)]
pub struct ShiftReport {
    pub is_shift: bool,
    /// The antipode-twisted equivalent identities; populated when the shift
    /// identities hold.
    pub twisted_identities: Option<bool>,
    /// Functional witness: `Q = (id ⊗ μ)Δ(P)` (right) or `(μ ⊗ id)Δ(P)`
    /// (left).
    pub mu_witness: Option<Functional>,
    pub s2_p_fixed: bool,
    pub s2_q_fixed: bool,
}

impl ShiftReport {
    /// The consistency the report must satisfy when the shift identities
    /// hold: twisted identities, a functional witness, and matching squared-
    /// antipode behavior.
    pub fn consistent(&self) -> bool {
        !self.is_shift
            || (self.twisted_identities == Some(true)
                && self.mu_witness.is_some()
                && self.s2_p_fixed == self.s2_q_fixed)
    }
}

/// Checks the defining shift identities together with their consequences:
/// the antipode-twisted identities, a functional witness, and the
/// equivalence `S²(Q) = Q ⟺ S²(P) = P`.
pub fn verify_shift(
    a: &HopfAlgebra,
    p: &Element,
    q: &Element,
    side: ShiftSide,
) -> Result<ShiftReport> {
    if a.is_zero_elem(p) || a.is_zero_elem(q) {
        return Err(Error::ZeroElement);
    }
    if a.mul(p, p) != *p || a.mul(q, q) != *q {
        return Err(Error::NotIdempotent);
    }
    let dq = a.delta(q)?;
    let (lhs, mid, rhs) = match side {
        ShiftSide::Right => (
            a.tensor2_mul(&dq, &a.tensor(&a.unit(), q)),
            a.tensor(p, q),
            a.tensor2_mul(&a.tensor(&a.unit(), q), &dq),
        ),
        ShiftSide::Left => (
            a.tensor2_mul(&dq, &a.tensor(q, &a.unit())),
            a.tensor(q, p),
            a.tensor2_mul(&a.tensor(q, &a.unit()), &dq),
        ),
    };
    let is_shift = lhs == mid && rhs == mid;
    let s2_p_fixed = a.antipode(&a.antipode(p)?)? == *p;
    let s2_q_fixed = a.antipode(&a.antipode(q)?)? == *q;
    if !is_shift {
        return Ok(ShiftReport {
            is_shift,
            twisted_identities: None,
            mu_witness: None,
            s2_p_fixed,
            s2_q_fixed,
        });
    }

    let dp = a.delta(p)?;
    let sq = a.antipode(q)?;
    let sq_inv = a.antipode_inv(q)?;
    let twisted = match side {
        ShiftSide::Right => {
            // (1 ⊗ S^{-1}(Q))Δ(P) = Q ⊗ S^{-1}(Q) and
            // Δ(P)(1 ⊗ S(Q)) = Q ⊗ S(Q).
            let t1 = a.tensor2_mul(&a.tensor(&a.unit(), &sq_inv), &dp) == a.tensor(q, &sq_inv);
            let t2 = a.tensor2_mul(&dp, &a.tensor(&a.unit(), &sq)) == a.tensor(q, &sq);
            t1 && t2
        }
        ShiftSide::Left => {
            // (S^{-1}(Q) ⊗ 1)Δ(P) = S^{-1}(Q) ⊗ Q and
            // Δ(P)(S(Q) ⊗ 1) = S(Q) ⊗ Q.
            let t1 = a.tensor2_mul(&a.tensor(&sq_inv, &a.unit()), &dp) == a.tensor(&sq_inv, q);
            let t2 = a.tensor2_mul(&dp, &a.tensor(&sq, &a.unit())) == a.tensor(&sq, q);
            t1 && t2
        }
    };

    let mu_witness = match side {
        ShiftSide::Right => crate::hopf::functional_witness_right(a, &dp, q),
        ShiftSide::Left => {
            // (μ ⊗ id)Δ(P) = Q: transpose the legs and reuse the right solver.
            let d = a.dim();
            let f = a.field();
            let mut flipped = vec![f.zero(); d * d];
            for i in 0..d {
                for j in 0..d {
                    flipped[j * d + i] = dp.0[i * d + j].clone();
                }
            }
            crate::hopf::functional_witness_right(a, &Tensor2(flipped), q)
        }
    };

    Ok(ShiftReport {
        is_shift,
        twisted_identities: Some(twisted),
        mu_witness,
        s2_p_fixed,
        s2_q_fixed,
    })
}

/// One shift found by the exhaustive search, with its report and, when
/// `S²(Q) = Q`, the two-sided projection that `Q` is a shift of on the
/// opposite side.
#[derive(Clone, Debug)]
pub struct ShiftFinding {
    pub q: Element,
    pub report: ShiftReport,
    pub two_sided_witness: Option<Element>,
}

/// Finds all shifts of `P` on the given side over a prime field. Candidates
/// are restricted to the functional-witness subspace (`{(id ⊗ μ)Δ(P)}` for
/// right shifts), which every shift provably lies in; that subspace is then
/// scanned completely.
pub fn find_shifts(
    a: &HopfAlgebra,
    p: &Element,
    side: ShiftSide,
    budget: u128,
) -> Result<Vec<ShiftFinding>> {
    let f = a.field();
    let FieldKind::Prime { p: modulus } = *f.kind() else {
        return Err(Error::Invalid("shift search needs a prime field".into()));
    };
    let gl_kind = match side {
        ShiftSide::Right => GlKind::Right,
        ShiftSide::Left => GlKind::Left,
    };
    if !gl_check(a, p, gl_kind)? {
        return Err(Error::NotRightGroupLike);
    }
    let dp = a.delta(p)?;
    let candidates = match side {
        ShiftSide::Right => crate::hopf::left_leg_space(a, &dp),
        ShiftSide::Left => crate::hopf::right_leg_space(a, &dp),
    };
    let k = candidates.dim();
    let total = (modulus as u128).pow(k as u32);
    if total > budget {
        return Err(Error::SearchTooLarge {
            count: total,
            budget,
        });
    }
    let basis = candidates.basis_vectors();
    let mut found = Vec::new();
    let mut digits = vec![0u64; k];
    loop {
        let mut q = a.zero();
        for (c, b) in digits.iter().zip(&basis) {
            if *c != 0 {
                let s = f.from_residue(*c);
                q = a.add(&q, &a.scale(&s, &Element(b.clone())));
            }
        }
        if !a.is_zero_elem(&q) && a.mul(&q, &q) == q {
            let report = verify_shift(a, p, &q, side)?;
            if report.is_shift {
                let two_sided_witness = if report.s2_q_fixed {
                    Some(shift_two_sided_witness(a, &q, side)?)
                } else {
                    None
                };
                found.push(ShiftFinding {
                    q,
                    report,
                    two_sided_witness,
                });
            }
        }
        // base-p odometer over the candidate coordinates
        let mut i = k;
        loop {
            if i == 0 {
                found.sort_by(|x, y| x.q.cmp(&y.q));
                return Ok(found);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < modulus {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// For an S²-fixed shift `Q`, produces the two-sided group-like projection
/// that `Q` is a shift of on the opposite side, and verifies it.
fn shift_two_sided_witness(a: &HopfAlgebra, q: &Element, side: ShiftSide) -> Result<Element> {
    let dq = a.delta(q)?;
    let (t, opposite) = match side {
        // Right shift with S²(Q) = Q: solve Δ(Q)(Q ⊗ 1) = Q ⊗ y.
        ShiftSide::Right => (
            a.tensor2_mul(&dq, &a.tensor(q, &a.unit())),
            ShiftSide::Left,
        ),
        ShiftSide::Left => (
            a.tensor2_mul(&dq, &a.tensor(&a.unit(), q)),
            ShiftSide::Right,
        ),
    };
    let witness = match opposite {
        ShiftSide::Left => factor_right(a, &t, q),
        ShiftSide::Right => factor_left(a, &t, q),
    }
    .ok_or_else(|| Error::EquivalenceViolation {
        dump: format!(
            "S²-fixed shift {} does not factor into a two-sided witness",
            a.elem_to_string(q)
        ),
    })?;
    if !gl_check(a, &witness, GlKind::TwoSided)? {
        return Err(Error::EquivalenceViolation {
            dump: format!(
                "shift witness {} is not a two-sided group-like projection",
                a.elem_to_string(&witness)
            ),
        });
    }
    if !verify_shift(a, &witness, q, opposite)?.is_shift {
        return Err(Error::EquivalenceViolation {
            dump: format!(
                "{} is not a shift of its own witness {}",
                a.elem_to_string(q),
                a.elem_to_string(&witness)
            ),
        });
    }
    Ok(witness)
}

/// If `(1 ⊗ Q)Δ(Q) = Δ(Q)(1 ⊗ Q)` with common value `y ⊗ Q`, returns `y`,
/// which is then a right group-like projection; `S²(Q) = Q` forces
/// `S²(y) = y`.
pub fn basic_lem_witness(a: &HopfAlgebra, q: &Element) -> Result<Option<Element>> {
    if a.is_zero_elem(q) {
        return Err(Error::ZeroElement);
    }
    if a.mul(q, q) != *q {
        return Err(Error::NotIdempotent);
    }
    let dq = a.delta(q)?;
    let one_q = a.tensor(&a.unit(), q);
    let lhs = a.tensor2_mul(&one_q, &dq);
    let rhs = a.tensor2_mul(&dq, &one_q);
    if lhs != rhs {
        return Ok(None);
    }
    let Some(y) = factor_left(a, &lhs, q) else {
        return Ok(None);
    };
    if a.is_zero_elem(&y) {
        return Ok(None);
    }
    if !gl_check(a, &y, GlKind::Right)? {
        return Err(Error::EquivalenceViolation {
            dump: format!(
                "factor {} of {} is not a right group-like projection",
                a.elem_to_string(&y),
                a.elem_to_string(q)
            ),
        });
    }
    let s2q_fixed = a.antipode(&a.antipode(q)?)? == *q;
    let s2y_fixed = a.antipode(&a.antipode(&y)?)? == y;
    if s2q_fixed && !s2y_fixed {
        return Err(Error::EquivalenceViolation {
            dump: format!(
                "S²-fixed {} produced a non-S²-fixed witness {}",
                a.elem_to_string(q),
                a.elem_to_string(&y)
            ),
        });
    }
    Ok(Some(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::taft;
    use crate::scalar::Field;

    fn h4() -> HopfAlgebra {
        taft(2, &Field::prime(5, 2).unwrap()).unwrap().algebra
    }

    fn elem(a: &HopfAlgebra, coeffs: [i64; 4]) -> Element {
        Element(coeffs.iter().map(|&c| a.field().from_i64(c)).collect())
    }

    #[test]
    fn gl_check_examples() {
        let a = h4();
        assert!(gl_check(&a, &a.unit(), GlKind::TwoSided).unwrap());
        // P = 3 + 3g + x is right but not left.
        let p = elem(&a, [3, 3, 1, 0]);
        assert!(gl_check(&a, &p, GlKind::Right).unwrap());
        assert!(!gl_check(&a, &p, GlKind::Left).unwrap());
        // P = 3 + 3g + x + gx is weak but not right.
        let w = elem(&a, [3, 3, 1, 1]);
        assert!(gl_check(&a, &w, GlKind::Weak).unwrap());
        assert!(!gl_check(&a, &w, GlKind::Right).unwrap());
        assert!(gl_check(&a, &a.zero(), GlKind::Right).is_err());
    }

    #[test]
    fn summary_examples() {
        let a = h4();
        // P = (1/2)(1 + g) = 3 + 3g: everything group-like holds.
        let p = elem(&a, [3, 3, 0, 0]);
        let r = summary_report(&a, &p).unwrap();
        assert!(r.right_gl && r.left_gl && r.two_sided && r.s_fixed);
        assert!(r.weak && r.delta_swap);

        // P = 3 + 3g + x: right only.
        let p = elem(&a, [3, 3, 1, 0]);
        let r = summary_report(&a, &p).unwrap();
        assert!(r.right_gl);
        assert!(!r.s_fixed && !r.s2_fixed && !r.psp_commute && !r.delta_swap && !r.left_gl);
        assert!(r.weak_right && r.weak_left);

        let r = summary_report(&a, &a.unit()).unwrap();
        assert!(
            r.idempotent
                && r.right_gl
                && r.left_gl
                && r.two_sided
                && r.s_fixed
                && r.s2_fixed
                && r.psp_commute
                && r.delta_swap
                && r.weak
        );
    }

    #[test]
    fn battery_over_all_idempotents() {
        // Full scan of H_4 over F_5: summary_report must never raise an
        // equivalence violation, and the derived identities must hold.
        let a = h4();
        let f = a.field();
        let mut idempotents = 0;
        for c0 in 0..5 {
            for c1 in 0..5 {
                for c2 in 0..5 {
                    for c3 in 0..5 {
                        let p = elem(&a, [c0, c1, c2, c3]);
                        if a.is_zero_elem(&p) || a.mul(&p, &p) != p {
                            continue;
                        }
                        idempotents += 1;
                        let r = summary_report(&a, &p).unwrap();
                        if r.right_gl {
                            assert!(f.is_one(&r.eps_value));
                            let sp = a.antipode(&p).unwrap();
                            assert_eq!(a.mul(&sp, &p), p, "S(P)P = P");
                            assert_eq!(a.mul(&p, &sp), sp, "PS(P) = S(P)");
                            // Antipode transport: S(P) is left group-like.
                            assert!(gl_check(&a, &sp, GlKind::Left).unwrap());
                        }
                        if r.weak_right && r.s_fixed {
                            assert!(r.two_sided, "weak right + S-fixed must be two-sided");
                        }
                    }
                }
            }
        }
        // 1 and the two families (1 ± g)/2 + βx + δgx.
        assert_eq!(idempotents, 51);
    }

    #[test]
    fn shift_examples() {
        let a = h4();
        let half_plus = elem(&a, [3, 3, 0, 0]);
        let half_minus = elem(&a, [3, 2, 0, 0]);
        let r = verify_shift(&a, &half_plus, &half_minus, ShiftSide::Right).unwrap();
        assert!(r.is_shift && r.consistent());
        assert!(r.s2_p_fixed && r.s2_q_fixed);

        // Q = P is always a right shift of a right group-like P.
        let p = elem(&a, [3, 3, 1, 0]);
        let r = verify_shift(&a, &p, &p, ShiftSide::Right).unwrap();
        assert!(r.is_shift && r.consistent());

        // Q = 1 is not a shift of (1+g)/2.
        let r = verify_shift(&a, &half_plus, &a.unit(), ShiftSide::Right).unwrap();
        assert!(!r.is_shift);

        assert!(matches!(
            verify_shift(&a, &half_plus, &elem(&a, [1, 1, 0, 0]), ShiftSide::Right),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn find_shifts_examples() {
        let a = h4();
        let half_plus = elem(&a, [3, 3, 0, 0]);
        let found = find_shifts(&a, &half_plus, ShiftSide::Right, 1 << 20).unwrap();
        let qs: Vec<Element> = found.iter().map(|s| s.q.clone()).collect();
        assert_eq!(qs, vec![elem(&a, [3, 2, 0, 0]), elem(&a, [3, 3, 0, 0])]);
        for s in &found {
            assert!(s.report.consistent());
            // Both shifts are S²-fixed, so both carry a two-sided witness.
            let w = s.two_sided_witness.as_ref().unwrap();
            assert!(gl_check(&a, w, GlKind::TwoSided).unwrap());
        }
        // ½(1-g) is a left shift of ½(1+g) itself.
        assert_eq!(found[0].two_sided_witness.as_ref().unwrap(), &half_plus);

        // P = 1: the only shift is 1.
        let found = find_shifts(&a, &a.unit(), ShiftSide::Right, 1 << 20).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].q, a.unit());

        // P = 3 + 3g + x: every shift fails S².
        let p = elem(&a, [3, 3, 1, 0]);
        let found = find_shifts(&a, &p, ShiftSide::Right, 1 << 20).unwrap();
        assert!(!found.is_empty());
        for s in &found {
            assert!(!s.report.s2_q_fixed);
            assert!(s.two_sided_witness.is_none());
        }

        // A candidate space of 25 points does not fit a budget of 3.
        assert!(matches!(
            find_shifts(&a, &half_plus, ShiftSide::Right, 3),
            Err(Error::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn basic_lem_examples() {
        let a = h4();
        // Q = ½(1-g): witness y = ½(1+g).
        let q = elem(&a, [3, 2, 0, 0]);
        let y = basic_lem_witness(&a, &q).unwrap().unwrap();
        assert_eq!(y, elem(&a, [3, 3, 0, 0]));
        assert!(gl_check(&a, &y, GlKind::TwoSided).unwrap());

        // Q = 1: witness 1.
        let y = basic_lem_witness(&a, &a.unit()).unwrap().unwrap();
        assert_eq!(y, a.unit());

        // Q = ½(1+g) + gx: the two sides differ, no witness.
        let q = elem(&a, [3, 3, 0, 1]);
        assert!(basic_lem_witness(&a, &q).unwrap().is_none());

        assert!(matches!(
            basic_lem_witness(&a, &elem(&a, [1, 1, 0, 0])),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn w_route_agrees_with_direct_predicates() {
        use crate::hopf::WKind;
        let a = h4();
        // For every idempotent in the ε(P) = 1 slice, the W-operator
        // characterization agrees with the direct tensor identities.
        let f = a.field().clone();
        for c1 in 0..5 {
            for c2 in 0..5 {
                for c3 in 0..5 {
                    let c0 = f.sub(&f.one(), &f.from_i64(c1));
                    let p = Element(vec![c0, f.from_i64(c1), f.from_i64(c2), f.from_i64(c3)]);
                    if a.is_zero_elem(&p) || a.mul(&p, &p) != p {
                        continue;
                    }
                    let pp = a.tensor(&p, &p);
                    let w_right = a.w_apply(WKind::Lr, &pp, false).unwrap() == pp
                        && a.w_apply(WKind::Ll, &pp, false).unwrap() == pp;
                    let w_left = a.w_apply(WKind::Rr, &pp, false).unwrap() == pp
                        && a.w_apply(WKind::Rl, &pp, false).unwrap() == pp;
                    assert_eq!(w_right, gl_check(&a, &p, GlKind::Right).unwrap());
                    assert_eq!(w_left, gl_check(&a, &p, GlKind::Left).unwrap());
                }
            }
        }
    }
}
