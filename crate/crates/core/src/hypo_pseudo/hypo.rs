//! The operation `∘` and the hypospecial identities.

use crate::combo::Combo;
use crate::envelope::section::{check_pi_section, enveloping_span, rho_pair, sigma_section};
use crate::envelope::{BinOp, Memo, Mono, Operator, UElem, UTau};
use crate::error::Result;
use crate::rational::q;
use crate::report::{fmt_elem, CheckRecord};

use super::{commutator, RTable};

/// `u∘v = σ(ρ(u,v))(1)` with `σ` from the normalizer lift (first solution).
pub fn circ_build(u: &UTau) -> Result<BinOp<'_>> {
    Ok(BinOp::new(u, sigma_section(u)?))
}

/// Evaluates `H(u,v)` and `H'(u,v)` on basis elements with memoisation.
pub struct HypoChecker<'a> {
    pub u: &'a UTau,
    pub circ: &'a BinOp<'a>,
    r: RTable<'a>,
    h: Memo<(Mono, Mono, Mono), Result<UElem>>,
    hp: Memo<(Mono, Mono, Mono), Result<UElem>>,
}

impl<'a> HypoChecker<'a> {
    pub fn new(circ: &'a BinOp<'a>) -> Self {
        let u = circ.utau;
        Self { u, circ, r: RTable::new(u), h: Memo::new(), hp: Memo::new() }
    }

    /// `H(a,b)(x) = r(a₍₁₎,b₍₁₎)(x)(a₍₂₎∘b₍₂₎)`.
    pub fn h_basis(&self, a: &Mono, b: &Mono, x: &Mono) -> Result<UElem> {
        let u = self.u;
        (*self.h.get_or(&(a.clone(), b.clone(), x.clone()), || {
            let mut out = Combo::zero();
            for ((a1, a2), ca) in u.delta(&Combo::basis(a.clone())).iter() {
                for ((b1, b2), cb) in u.delta(&Combo::basis(b.clone())).iter() {
                    let left = self.r.basis_value(a1, b1, x);
                    let right = self.circ.basis_value(a2, b2)?;
                    out.add_scaled(&u.mul(&left, &right), &(ca * cb));
                }
            }
            Ok(out)
        }))
        .clone()
    }

    pub fn h_apply(&self, a: &Mono, b: &Mono, x: &UElem) -> Result<UElem> {
        let mut out = Combo::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.h_basis(a, b, m)?, c);
        }
        Ok(out)
    }

    /// `H'(a,b)(y) = (a₍₁₎∘b₍₁₎)\H(a₍₂₎,b₍₂₎)(y)`.
    pub fn hp_basis(&self, a: &Mono, b: &Mono, y: &Mono) -> Result<UElem> {
        let u = self.u;
        (*self.hp.get_or(&(a.clone(), b.clone(), y.clone()), || {
            let mut out = Combo::zero();
            for ((a1, a2), ca) in u.delta(&Combo::basis(a.clone())).iter() {
                for ((b1, b2), cb) in u.delta(&Combo::basis(b.clone())).iter() {
                    let head = self.circ.basis_value(a1, b1)?;
                    let tail = self.h_basis(a2, b2, y)?;
                    out.add_scaled(&u.left_div(&head, &tail), &(ca * cb));
                }
            }
            Ok(out)
        }))
        .clone()
    }

    pub fn hp_apply(&self, a: &Mono, b: &Mono, y: &UElem) -> Result<UElem> {
        let mut out = Combo::zero();
        for (m, c) in y.iter() {
            out.add_scaled(&self.hp_basis(a, b, m)?, c);
        }
        Ok(out)
    }

    /// `H(u,v)(xy) = H(u₍₁₎,v₍₁₎)(x) H'(u₍₂₎,v₍₂₎)(y)` for all basis tuples
    /// of total degree `≤ max_deg`.
    pub fn check_hypospecial(&self, max_deg: usize) -> Result<CheckRecord> {
        let u = self.u;
        let labels = u.labels();
        let basis = u.basis(max_deg);
        let mut witness = None;
        'outer: for a in &basis {
            for b in basis.iter().filter(|b| a.len() + b.len() <= max_deg) {
                let da = u.delta(&Combo::basis(a.clone()));
                let db = u.delta(&Combo::basis(b.clone()));
                for x in basis.iter().filter(|x| a.len() + b.len() + x.len() <= max_deg) {
                    for y in basis.iter().filter(|y| a.len() + b.len() + x.len() + y.len() <= max_deg) {
                        let xy = u.mul(&Combo::basis(x.clone()), &Combo::basis(y.clone()));
                        let lhs = self.h_apply(a, b, &xy)?;
                        let mut rhs = Combo::zero();
                        for ((a1, a2), ca) in da.iter() {
                            for ((b1, b2), cb) in db.iter() {
                                let l = self.h_basis(a1, b1, x)?;
                                let r = self.hp_basis(a2, b2, y)?;
                                rhs.add_scaled(&u.mul(&l, &r), &(ca * cb));
                            }
                        }
                        if lhs != rhs {
                            witness = Some(format!(
                                "u = {}, v = {}, x = {}, y = {}: lhs = {}, rhs = {}",
                                fmt_elem(&Combo::basis(a.clone()), &labels),
                                fmt_elem(&Combo::basis(b.clone()), &labels),
                                fmt_elem(&Combo::basis(x.clone()), &labels),
                                fmt_elem(&Combo::basis(y.clone()), &labels),
                                fmt_elem(&lhs, &labels),
                                fmt_elem(&rhs, &labels)
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        Ok(CheckRecord::new("H(u,v)(xy) = H(u1,v1)(x) H'(u2,v2)(y)", "hypospecial identity", max_deg, witness))
    }

    /// `[[R_a,R_b] + R_{[a,b]−2a∘b}, R_c] = R_{−2H'(a,b)(c)}` on primitive
    /// basis triples, as operators on the basis up to `max_deg`.
    pub fn check_bracket(&self, max_deg: usize) -> Result<CheckRecord> {
        let u = self.u;
        let labels = u.labels();
        let k = u.k();
        let mut witness = None;
        'outer: for i in 0..k {
            for j in 0..k {
                let (a, b) = (u.prim(i), u.prim(j));
                let ab = self.circ.basis_value(&vec![i as u16], &vec![j as u16])?;
                let inner_elem = &commutator(u, &a, &b) - &ab.scaled(&q(2));
                let inner = Operator::right(a.clone())
                    .bracket(&Operator::right(b.clone()))
                    .add(&Operator::right(inner_elem));
                for l in 0..k {
                    let c = u.prim(l);
                    let lhs = inner.bracket(&Operator::right(c.clone()));
                    let w = self.hp_apply(&vec![i as u16], &vec![j as u16], &c)?.scaled(&q(-2));
                    if let Some(x) = lhs.differs_on(&Operator::right(w.clone()), u, max_deg) {
                        witness = Some(format!(
                            "a = {}, b = {}, c = {}, x = {}: expected R_({})",
                            labels[i],
                            labels[j],
                            labels[l],
                            fmt_elem(&x, &labels),
                            fmt_elem(&w, &labels)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        Ok(CheckRecord::new("[[R_a,R_b]+R_([a,b]-2a∘b), R_c] = R_(-2H'(a,b)(c))", "hyporeductive bracket identity", max_deg, witness))
    }
}

/// `a∘b` is primitive for primitive `a`, `b`; returns the table in c coordinates.
pub fn circ_on_primitives(circ: &BinOp<'_>) -> Result<(Vec<Vec<Vec<crate::rational::Q>>>, CheckRecord)> {
    let u = circ.utau;
    let labels = u.labels();
    let k = u.k();
    let mut table = vec![vec![vec![crate::rational::zero(); k]; k]; k];
    let mut witness = None;
    for i in 0..k {
        for j in 0..k {
            let v = circ.basis_value(&vec![i as u16], &vec![j as u16])?;
            match u.primitive_coords(&v) {
                Some(c) => table[i][j] = c,
                None if witness.is_none() => {
                    witness = Some(format!("{}∘{} = {} is not primitive", labels[i], labels[j], fmt_elem(&v, &labels)))
                }
                None => {}
            }
        }
    }
    Ok((table, CheckRecord::new("a∘b primitive", "primitivity of a∘b", 2, witness)))
}

/// Coalgebra-morphism, unit and factorisation checks for a binary operation,
/// plus `π σ = id` and membership of `σ(ρ(u,v))` in `U(n)`.
pub fn check_circ_structure(circ: &BinOp<'_>, max_deg: usize) -> Result<Vec<CheckRecord>> {
    let u = circ.utau;
    let mut out = vec![
        CheckRecord::new("π σ = id", "section of π", u.cap(), check_pi_section(u, &circ.section)),
        CheckRecord::new("Δ(u∘v) = (u1∘v1)⊗(u2∘v2), u∘1 = ε(u)1 = 1∘u", "coalgebra morphism ∘", max_deg, circ.check_coalgebra(max_deg)?),
        CheckRecord::new("σ(ρ(u,v)) = ρ_(u1∘v1) ρ(u2,v2)", "factorisation of σρ", max_deg, circ.check_factorization(max_deg)?),
    ];
    let n_basis = u.triple().normalizer().basis().to_vec();
    let span = enveloping_span(u.ue(), &n_basis, max_deg);
    let mut witness = None;
    'outer: for a in u.basis(max_deg) {
        for b in u.basis(max_deg - a.len()) {
            let img = circ.section.apply(&rho_pair(u, &Combo::basis(a.clone()), &Combo::basis(b.clone())))?;
            if !span.contains(&img) {
                witness = Some(format!("σ(ρ) leaves U(n) at ({a:?}, {b:?})"));
                break 'outer;
            }
        }
    }
    out.push(CheckRecord::new("σ(ρ(u,v)) ∈ U(n)", "image of σρ in U(n)", max_deg, witness));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_utau;
    use crate::examples;

    #[test]
    fn reductive_circ_vanishes_on_primitives() {
        let u = build_utau(&examples::sl2_reductive(), 3).unwrap();
        let circ = circ_build(&u).unwrap();
        let (table, rec) = circ_on_primitives(&circ).unwrap();
        assert!(rec.passed);
        assert!(table.iter().flatten().flatten().all(|c| *c == crate::rational::zero()));
    }

    #[test]
    fn unit_tuple_is_trivial() {
        let u = build_utau(&examples::aff1_triple(), 3).unwrap();
        let circ = circ_build(&u).unwrap();
        let h = HypoChecker::new(&circ);
        let x = vec![0u16, 0];
        assert_eq!(h.h_basis(&vec![], &vec![], &x).unwrap(), Combo::basis(x.clone()));
        assert!(h.check_hypospecial(3).unwrap().passed);
    }
}
