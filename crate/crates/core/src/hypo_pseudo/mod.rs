//! The operators `r`, `H`, `H'`, `P` on `U_τ`, the operations `∘` and `•`,
//! and exact checks of the hypospecial and pseudospecial identities.

use crate::combo::Combo;
use crate::envelope::{Memo, Mono, Operator, UElem, UTau};
use crate::error::{Error, Result};
use crate::report::{fmt_elem, CheckRecord};

pub mod flow;
pub mod hypo;
pub mod pseudo;

pub use flow::{bernoulli, flow_check, FlowReport};
pub use hypo::{circ_build, HypoChecker};
pub use pseudo::{bullet_general, bullet_prim, BulletTable, PseudoChecker};

/// `r(u,v)` as a symbolic operator: `x ↦ ((x u₍₁₎) v₍₁₎)/(u₍₂₎ v₍₂₎)`.
pub fn r_op(u: &UTau, a: &UElem, b: &UElem) -> Result<Operator> {
    let d = UTau::degree(a) + UTau::degree(b);
    if d > u.cap() {
        return Err(Error::DegreeOverflow { degree: d, cap: u.cap() });
    }
    let mut op = Operator::zero();
    for ((a1, a2), ca) in u.delta(a).iter() {
        for ((b1, b2), cb) in u.delta(b).iter() {
            let den = u.mul(&Combo::basis(a2.clone()), &Combo::basis(b2.clone()));
            let chain = Operator::right(Combo::basis(a1.clone()))
                .then(&Operator::right(Combo::basis(b1.clone())))
                .then(&Operator::right_div(den));
            op = op.add(&chain.scale(&(ca * cb)));
        }
    }
    Ok(op)
}

/// Memoised basis-level values of `r(u, v)(x)`.
pub struct RTable<'a> {
    pub u: &'a UTau,
    memo: Memo<(Mono, Mono, Mono), UElem>,
}

impl<'a> RTable<'a> {
    pub fn new(u: &'a UTau) -> Self {
        Self { u, memo: Memo::new() }
    }

    pub fn basis_value(&self, a: &Mono, b: &Mono, x: &Mono) -> UElem {
        let u = self.u;
        (*self.memo.get_or(&(a.clone(), b.clone(), x.clone()), || {
            let xe: UElem = Combo::basis(x.clone());
            let mut out = Combo::zero();
            for ((a1, a2), ca) in u.delta(&Combo::basis(a.clone())).iter() {
                for ((b1, b2), cb) in u.delta(&Combo::basis(b.clone())).iter() {
                    let num = u.mul(&u.mul(&xe, &Combo::basis(a1.clone())), &Combo::basis(b1.clone()));
                    let den = u.mul(&Combo::basis(a2.clone()), &Combo::basis(b2.clone()));
                    out.add_scaled(&u.right_div(&num, &den), &(ca * cb));
                }
            }
            out
        }))
        .clone()
    }

    /// `r(a, b)(x)` with `x` an arbitrary element.
    pub fn apply(&self, a: &Mono, b: &Mono, x: &UElem) -> UElem {
        let mut out = Combo::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.basis_value(a, b, m), c);
        }
        out
    }
}

/// `[a, b] = ab − ba` in `U_τ`.
pub fn commutator(u: &UTau, a: &UElem, b: &UElem) -> UElem {
    &u.mul(a, b) - &u.mul(b, a)
}

/// `r(a,a) = 0` and `2r(a,b) = −[R_a,R_b] − R_{[a,b]}` for primitive basis
/// elements, evaluated on the basis up to `max_deg`.
pub fn check_r_identities(u: &UTau, max_deg: usize) -> Vec<CheckRecord> {
    let labels = u.labels();
    let basis = u.basis(max_deg);
    let r = RTable::new(u);
    let k = u.k();
    let mut w_aa = None;
    let mut w_ab = None;
    'outer: for i in 0..k {
        let a = vec![i as u16];
        for x in &basis {
            let v = r.basis_value(&a, &a, x);
            if !v.is_zero() {
                w_aa = Some(format!("r({0},{0})({1}) = {2}", labels[i], fmt_elem(&Combo::basis(x.clone()), &labels), fmt_elem(&v, &labels)));
                break 'outer;
            }
        }
    }
    'outer2: for i in 0..k {
        for j in 0..k {
            let (a, b) = (u.prim(i), u.prim(j));
            let ab = commutator(u, &a, &b);
            for x in basis.iter().filter(|x| x.len() + 2 <= max_deg) {
                let xe: UElem = Combo::basis(x.clone());
                let lhs = r.basis_value(&vec![i as u16], &vec![j as u16], x).scaled(&crate::rational::q(2));
                let rarb = &u.mul(&u.mul(&xe, &b), &a) - &u.mul(&u.mul(&xe, &a), &b);
                let rhs = -&(&rarb + &u.mul(&xe, &ab));
                if lhs != rhs {
                    w_ab = Some(format!(
                        "a = {}, b = {}, x = {}: 2r(a,b)(x) = {}, expected {}",
                        labels[i],
                        labels[j],
                        fmt_elem(&xe, &labels),
                        fmt_elem(&lhs, &labels),
                        fmt_elem(&rhs, &labels)
                    ));
                    break 'outer2;
                }
            }
        }
    }
    vec![
        CheckRecord::new("r(a,a) = 0", "r-operator on equal primitives", max_deg, w_aa),
        CheckRecord::new("2r(a,b) = -[R_a,R_b] - R_[a,b]", "r-operator on primitives", max_deg.saturating_sub(2), w_ab),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_utau;
    use crate::examples;

    #[test]
    fn r_identities_on_examples() {
        for t in [examples::aff1_triple(), examples::sl2_reductive()] {
            let u = build_utau(&t, 4).unwrap();
            for rec in check_r_identities(&u, 4) {
                assert!(rec.passed, "{}", rec.line());
            }
        }
    }

    #[test]
    fn r_op_matches_table() {
        let u = build_utau(&examples::sl2_reductive(), 4).unwrap();
        let r = RTable::new(&u);
        let (a, b) = (vec![0u16], vec![0u16, 1]);
        let op = r_op(&u, &Combo::basis(a.clone()), &Combo::basis(b.clone())).unwrap();
        for x in u.basis(2) {
            assert_eq!(op.apply(&u, &Combo::basis(x.clone())), r.basis_value(&a, &b, &x));
        }
        // r(1,1)(x) = x/1 = x is the identity, and r(1,1) − id vanishes
        let one = r_op(&u, &u.one(), &u.one()).unwrap();
        assert!(one.equal_on(&Operator::identity(), &u, 3));
        let big = Combo::basis(vec![0; 3]);
        assert!(matches!(r_op(&u, &big, &big), Err(Error::DegreeOverflow { .. })));
    }
}
