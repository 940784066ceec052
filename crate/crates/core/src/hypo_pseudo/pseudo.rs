//! The operation `•` and the pseudospecial identities.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::combo::Combo;
use crate::envelope::section::zeta_section;
use crate::envelope::{BinOp, Memo, Mono, Operator, UElem, UTau};
use crate::error::{Error, Result};
use crate::linalg::{kernel, solve, Vector};
use crate::rational::{q, qf, Q};
use crate::report::{fmt_elem, CheckRecord};

use super::{commutator, RTable};

/// `a_i • a_j` in c coordinates.
pub type BulletTable = Vec<Vec<Vec<Q>>>;

/// `a•b = ζ(2r(a,b))` on primitive basis pairs. The operator `2r(a,b)` is
/// pulled back along `d ↦ (x ↦ d·x)` from `s` to an element `d`, checked on
/// the basis up to `eval_deg`, and `a•b = ζ(d)`. Fails if no preimage exists
/// or if `ζ` does not vanish on the kernel of the pullback.
pub fn bullet_prim(u: &UTau, eval_deg: usize) -> Result<BulletTable> {
    let t = u.triple();
    let zeta = t.zeta().ok_or_else(|| Error::Input("triple carries no zeta".into()))?;
    let k = u.k();
    let n = t.dim();
    let basis = u.basis(eval_deg);
    let mut index: BTreeMap<(usize, Mono), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<((usize, Mono), Q)>> = Vec::new();
    for l in k..n {
        let f = u.ue().letter(l);
        let mut col = Vec::new();
        for (bi, m) in basis.iter().enumerate() {
            for (w, c) in u.ue_act(&f, &Combo::basis(m.clone())).iter() {
                col.push(((bi, w.clone()), c.clone()));
            }
        }
        columns.push(col);
    }
    let r = RTable::new(u);
    let mut targets = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let mut col = Vec::new();
            for (bi, m) in basis.iter().enumerate() {
                for (w, c) in r.basis_value(&vec![i as u16], &vec![j as u16], m).iter() {
                    col.push(((bi, w.clone()), c * q(2)));
                }
            }
            targets.push(col);
        }
    }
    for (key, _) in columns.iter().chain(&targets).flatten() {
        let next = index.len();
        index.entry(key.clone()).or_insert(next);
    }
    let rows = index.len();
    let ns = n - k;
    let mut a = vec![vec![Q::zero(); ns]; rows];
    for (jcol, col) in columns.iter().enumerate() {
        for (key, c) in col {
            a[index[key]][jcol] = c.clone();
        }
    }
    let zeta_of = |d: &[Q]| -> Vector {
        let mut out = vec![Q::zero(); k];
        for (i, x) in d.iter().enumerate() {
            for (o, z) in out.iter_mut().zip(&zeta[i][..k]) {
                *o += x * z;
            }
        }
        out
    };
    for kv in kernel(&a, ns) {
        if zeta_of(&kv).iter().any(|x| !x.is_zero()) {
            return Err(Error::Precondition("ζ does not vanish on the kernel of s → operators".into()));
        }
    }
    let mut table = vec![vec![Vec::new(); k]; k];
    for (idx, col) in targets.iter().enumerate() {
        let mut b = vec![Q::zero(); rows];
        for (key, c) in col {
            b[index[key]] = c.clone();
        }
        let d = solve(&a, ns, &b).ok_or_else(|| {
            let labels = u.labels();
            Error::Construction(format!("2r({}, {}) is not the action of an element of s", labels[idx / k], labels[idx % k]))
        })?;
        table[idx / k][idx % k] = zeta_of(&d);
    }
    Ok(table)
}

/// `u•v = θ'Ψ⁻¹(ρ(u,v))(1)` with `θ(d) = d + 2ζ(d)`.
pub fn bullet_general(u: &UTau) -> Result<BinOp<'_>> {
    Ok(BinOp::new(u, zeta_section(u)?))
}

/// Evaluates `P(u,v)` on basis elements with memoisation.
pub struct PseudoChecker<'a> {
    pub u: &'a UTau,
    pub bullet: &'a BinOp<'a>,
    pub table: BulletTable,
    r: RTable<'a>,
    p: Memo<(Mono, Mono, Mono), Result<UElem>>,
}

impl<'a> PseudoChecker<'a> {
    pub fn new(bullet: &'a BinOp<'a>, table: BulletTable) -> Self {
        let u = bullet.utau;
        Self { u, bullet, table, r: RTable::new(u), p: Memo::new() }
    }

    fn prim_bullet(&self, i: usize, j: usize) -> UElem {
        self.u.from_primitive(&self.table[i][j])
    }

    /// `P(a,b)(x) = r(a₍₁₎,b₍₁₎)(x)(a₍₂₎•b₍₂₎)`.
    pub fn p_basis(&self, a: &Mono, b: &Mono, x: &Mono) -> Result<UElem> {
        let u = self.u;
        (*self.p.get_or(&(a.clone(), b.clone(), x.clone()), || {
            let mut out = Combo::zero();
            for ((a1, a2), ca) in u.delta(&Combo::basis(a.clone())).iter() {
                for ((b1, b2), cb) in u.delta(&Combo::basis(b.clone())).iter() {
                    let left = self.r.basis_value(a1, b1, x);
                    let right = self.bullet.basis_value(a2, b2)?;
                    out.add_scaled(&u.mul(&left, &right), &(ca * cb));
                }
            }
            Ok(out)
        }))
        .clone()
    }

    pub fn p_apply(&self, a: &Mono, b: &Mono, x: &UElem) -> Result<UElem> {
        let mut out = Combo::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.p_basis(a, b, m)?, c);
        }
        Ok(out)
    }

    /// The general operation agrees with the pulled-back table on primitives.
    pub fn check_consistency(&self) -> Result<CheckRecord> {
        let u = self.u;
        let labels = u.labels();
        let mut witness = None;
        for i in 0..u.k() {
            for j in 0..u.k() {
                let v = self.bullet.basis_value(&vec![i as u16], &vec![j as u16])?;
                if v != self.prim_bullet(i, j) && witness.is_none() {
                    witness = Some(format!(
                        "{}•{}: section gives {}, pullback gives {}",
                        labels[i],
                        labels[j],
                        fmt_elem(&v, &labels),
                        fmt_elem(&self.prim_bullet(i, j), &labels)
                    ));
                }
            }
        }
        Ok(CheckRecord::new("u•v restricted to primitives = ζ(2r(a,b))", "• on primitives", 2, witness))
    }

    /// `R_{a•b}R_y + R_yR_{a•b} = R_{(a•b)y + y(a•b)}` for `|y| ≤ max_deg − 1`,
    /// evaluated on `x` with `|x| + |y| + 1 ≤ max_deg`.
    pub fn check_bol(&self, max_deg: usize) -> CheckRecord {
        let u = self.u;
        let labels = u.labels();
        let basis = u.basis(max_deg);
        let mut witness = None;
        'outer: for i in 0..u.k() {
            for j in 0..u.k() {
                let w = self.prim_bullet(i, j);
                for y in basis.iter().filter(|y| y.len() < max_deg) {
                    let ye: UElem = Combo::basis(y.clone());
                    let target = &u.mul(&w, &ye) + &u.mul(&ye, &w);
                    for x in basis.iter().filter(|x| x.len() + y.len() < max_deg) {
                        let xe: UElem = Combo::basis(x.clone());
                        let lhs = &u.mul(&u.mul(&xe, &ye), &w) + &u.mul(&u.mul(&xe, &w), &ye);
                        let rhs = u.mul(&xe, &target);
                        if lhs != rhs {
                            witness = Some(format!(
                                "a = {}, b = {}, y = {}, x = {}",
                                labels[i],
                                labels[j],
                                fmt_elem(&ye, &labels),
                                fmt_elem(&xe, &labels)
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        CheckRecord::new("R_(a•b)R_y + R_yR_(a•b) = R_((a•b)y + y(a•b))", "Bol identity", max_deg, witness)
    }

    /// `P(u,v)(xy) = r(u₍₁₎,v₍₁₎)(x) P(u₍₂₎,v₍₂₎)(y)` for basis tuples of total
    /// degree `≤ max_deg`.
    pub fn check_pseudospecial(&self, max_deg: usize) -> Result<CheckRecord> {
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
                        let lhs = self.p_apply(a, b, &xy)?;
                        let mut rhs = Combo::zero();
                        for ((a1, a2), ca) in da.iter() {
                            for ((b1, b2), cb) in db.iter() {
                                let l = self.r.basis_value(a1, b1, x);
                                let r = self.p_basis(a2, b2, y)?;
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
        Ok(CheckRecord::new("P(u,v)(xy) = r(u1,v1)(x) P(u2,v2)(y)", "pseudospecial identity", max_deg, witness))
    }

    /// `P(a,b)(xy) = r(a,b)(x)y + xP(a,b)(y)` for primitive `a`, `b`.
    pub fn check_derivation(&self, max_deg: usize) -> Result<CheckRecord> {
        let u = self.u;
        let labels = u.labels();
        let basis = u.basis(max_deg);
        let mut witness = None;
        'outer: for i in 0..u.k() {
            for j in 0..u.k() {
                let (a, b) = (vec![i as u16], vec![j as u16]);
                for x in &basis {
                    for y in basis.iter().filter(|y| x.len() + y.len() + 2 <= max_deg) {
                        let (xe, ye): (UElem, UElem) = (Combo::basis(x.clone()), Combo::basis(y.clone()));
                        let lhs = self.p_apply(&a, &b, &u.mul(&xe, &ye))?;
                        let rhs = &u.mul(&self.r.basis_value(&a, &b, x), &ye) + &u.mul(&xe, &self.p_basis(&a, &b, y)?);
                        if lhs != rhs {
                            witness = Some(format!(
                                "a = {}, b = {}, x = {}, y = {}",
                                labels[i],
                                labels[j],
                                fmt_elem(&xe, &labels),
                                fmt_elem(&ye, &labels)
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        Ok(CheckRecord::new("P(a,b)(xy) = r(a,b)(x)y + xP(a,b)(y)", "derivation property of P", max_deg, witness))
    }

    /// `[r(a,b) + ½R_{a•b}, R_c] = R_{r(a,b)(c) + ½[c,a•b]}` on primitive triples.
    pub fn check_bracket(&self, max_deg: usize) -> Result<CheckRecord> {
        let u = self.u;
        let labels = u.labels();
        let half = qf(1, 2);
        let mut witness = None;
        'outer: for i in 0..u.k() {
            for j in 0..u.k() {
                let w = self.prim_bullet(i, j);
                let lhs_inner = super::r_op(u, &u.prim(i), &u.prim(j))?.add(&Operator::right(w.clone()).scale(&half));
                for l in 0..u.k() {
                    let c = u.prim(l);
                    let lhs = lhs_inner.bracket(&Operator::right(c.clone()));
                    let target = &self.r.apply(&vec![i as u16], &vec![j as u16], &c) + &commutator(u, &c, &w).scaled(&half);
                    if let Some(x) = lhs.differs_on(&Operator::right(target.clone()), u, max_deg) {
                        witness = Some(format!(
                            "a = {}, b = {}, c = {}, x = {}: expected R_({})",
                            labels[i],
                            labels[j],
                            labels[l],
                            fmt_elem(&x, &labels),
                            fmt_elem(&target, &labels)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        Ok(CheckRecord::new("[r(a,b) + 1/2 R_(a•b), R_c] = R_(r(a,b)(c) + 1/2[c,a•b])", "pseudoreductive bracket identity", max_deg, witness))
    }

    /// `[R_c,[R_c,R_{a•b}]]` is a right multiplication by a primitive.
    pub fn check_ad_squared(&self, max_deg: usize) -> CheckRecord {
        let u = self.u;
        let labels = u.labels();
        let mut witness = None;
        'outer: for i in 0..u.k() {
            for j in 0..u.k() {
                let rw = Operator::right(self.prim_bullet(i, j));
                for l in 0..u.k() {
                    let rc = Operator::right(u.prim(l));
                    let op = rc.bracket(&rc.bracket(&rw));
                    let ok = op.as_right_mult(u, max_deg).and_then(|v| u.primitive_coords(&v).or(v.is_zero().then(Vec::new)));
                    if ok.is_none() {
                        witness = Some(format!("a = {}, b = {}, c = {}", labels[i], labels[j], labels[l]));
                        break 'outer;
                    }
                }
            }
        }
        CheckRecord::new("[R_c,[R_c,R_(a•b)]] = R_p with p primitive", "ad-squared stability", max_deg, witness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_utau;
    use crate::examples;

    #[test]
    fn zero_zeta_gives_zero_bullet() {
        let u = build_utau(&examples::sl2_reductive_zeta0(), 3).unwrap();
        let table = bullet_prim(&u, 3).unwrap();
        assert!(table.iter().flatten().flatten().all(|c| c.is_zero()));
    }

    #[test]
    fn tilted_heisenberg_bullet() {
        // a•b = −ζ([a,b]_s) with [a,b] = w = (w − a) + a, so a•b = −a
        let u = build_utau(&examples::heisenberg_tilted(), 3).unwrap();
        let table = bullet_prim(&u, 3).unwrap();
        assert_eq!(table[0][1], vec![q(-1), q(0)]);
        assert_eq!(table[1][0], vec![q(1), q(0)]);
        assert!(table[0][0].iter().all(|c| c.is_zero()));
        let bullet = bullet_general(&u).unwrap();
        let pc = PseudoChecker::new(&bullet, table);
        assert!(pc.check_consistency().unwrap().passed);
        assert!(pc.check_bol(3).passed);
    }
}
