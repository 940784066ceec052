//! `U_τ = U(g)/U(g)s` with the symmetrised basis, its product, coproduct and
//! divisions, and the `ρ`/`π` factorisation of `U(g)`.
//!
//! Internally the triple is adapted: letters `0..k` span `c` and letters
//! `k..n` span `s`, so a PBW monomial lies in `U(g)s` exactly when its last
//! letter is at least `k`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::free_nonassoc::NonAssocAlgebra;
use crate::lie::Triple;
use crate::rational::{one, q, Q};

use super::pbw::{Pbw, UEnvelope};
use super::{monomials, multiset_splits, Memo, Mono};

/// Element of `U_τ` on the basis `e_m = (1/|m|!) Σ_σ c_{m_σ(1)}⋯c_{m_σ(n)}`.
pub type UElem = Combo<Mono>;

pub struct UTau {
    triple: Triple,
    k: usize,
    cap: usize,
    ue: UEnvelope,
    sym: Memo<Mono, Pbw>,
    conv: Memo<Mono, UElem>,
    prod: Memo<(Mono, Mono), UElem>,
    ldiv: Memo<(Mono, Mono), UElem>,
    rdiv: Memo<(Mono, Mono), UElem>,
    splits: Memo<Mono, Vec<(Mono, Mono, Q)>>,
}

/// Builds `U_τ` for a triple; `cap` bounds the basis used by checks and tables.
pub fn build_utau(t: &Triple, cap: usize) -> Result<UTau> {
    if cap < 1 {
        return Err(Error::Input("degree cap must be at least 1".into()));
    }
    let triple = t.adapted();
    if !triple.g().is_subalgebra(triple.s()) {
        return Err(Error::NotSubalgebra("s is not closed under the bracket".into()));
    }
    let k = triple.c_basis().len();
    let ue = UEnvelope::new(triple.g().clone());
    Ok(UTau {
        triple,
        k,
        cap,
        ue,
        sym: Memo::new(),
        conv: Memo::new(),
        prod: Memo::new(),
        ldiv: Memo::new(),
        rdiv: Memo::new(),
        splits: Memo::new(),
    })
}

impl UTau {
    /// The adapted triple (c first, then s).
    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn ue(&self) -> &UEnvelope {
        &self.ue
    }

    pub fn labels(&self) -> Vec<String> {
        self.triple.g().labels()[..self.k].to_vec()
    }

    pub fn one(&self) -> UElem {
        Combo::basis(Vec::new())
    }

    pub fn prim(&self, i: usize) -> UElem {
        Combo::basis(vec![i as u16])
    }

    /// Basis multisets of degree `≤ max_deg`, ordered by (degree, multiset).
    pub fn basis(&self, max_deg: usize) -> Vec<Mono> {
        monomials(0, self.k as u16, max_deg)
    }

    pub fn basis_of_degree(&self, d: usize) -> Vec<Mono> {
        self.basis(d).into_iter().filter(|m| m.len() == d).collect()
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        (0..=self.cap).map(|d| self.basis_of_degree(d).len()).collect()
    }

    pub fn degree(u: &UElem) -> usize {
        u.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn counit(&self, u: &UElem) -> Q {
        u.coeff(&Vec::new())
    }

    fn splits_of(&self, m: &Mono) -> std::sync::Arc<Vec<(Mono, Mono, Q)>> {
        self.splits.get_or(m, || multiset_splits(m))
    }

    /// The symmetric-coalgebra coproduct.
    pub fn delta(&self, u: &UElem) -> Combo<(Mono, Mono)> {
        let mut out = Combo::zero();
        for (m, c) in u.iter() {
            for (a, b, w) in self.splits_of(m).iter() {
                out.add_term((a.clone(), b.clone()), c * w);
            }
        }
        out
    }

    /// Proper splits of a basis element, with both parts nonempty.
    fn proper_splits(&self, m: &Mono) -> Vec<(Mono, Mono, Q)> {
        self.splits_of(m).iter().filter(|(a, b, _)| !a.is_empty() && !b.is_empty()).cloned().collect()
    }

    /// Normalised symmetrisation of the c-letters of `m` inside `U(g)`; this is `ρ_{e_m}`.
    pub fn sym(&self, m: &Mono) -> Pbw {
        if m.len() <= 1 {
            return Combo::basis(m.clone());
        }
        (*self.sym.get_or(m, || {
            let n = m.len();
            let mut out = Combo::zero();
            let mut i = 0;
            while i < n {
                let mut j = i;
                while j < n && m[j] == m[i] {
                    j += 1;
                }
                let mut rest = m.clone();
                rest.remove(i);
                let term = self.ue.mul(&self.ue.letter(m[i] as usize), &self.sym(&rest));
                out.add_scaled(&term, &q((j - i) as i64));
                i = j;
            }
            out.scaled(&(one() / q(n as i64)))
        }))
        .clone()
    }

    /// `ρ_u`, the lift of `u` to `U(g)` acting as right multiplication by `u`.
    pub fn rho(&self, u: &UElem) -> Pbw {
        let mut out = Combo::zero();
        for (m, c) in u.iter() {
            out.add_scaled(&self.sym(m), c);
        }
        out
    }

    /// Image of `f ∈ U(g)` in `U_τ`.
    pub fn to_utau(&self, f: &Pbw) -> UElem {
        let mut out = Combo::zero();
        for (m, c) in f.iter() {
            if m.last().is_some_and(|&x| x as usize >= self.k) {
                continue;
            }
            out.add_scaled(&self.convert(m), c);
        }
        out
    }

    // c-only PBW monomial c^α = e_α + (c^α − Sym(α)), the bracket lies in lower degree
    fn convert(&self, m: &Mono) -> UElem {
        if m.len() <= 1 {
            return Combo::basis(m.clone());
        }
        (*self.conv.get_or(m, || {
            let mut diff: Pbw = Combo::basis(m.clone());
            diff -= &self.sym(m);
            let mut out = self.to_utau(&diff);
            out.add_term(m.clone(), one());
            out
        }))
        .clone()
    }

    /// Left action of `U(g)` on `U_τ`.
    pub fn ue_act(&self, f: &Pbw, u: &UElem) -> UElem {
        self.to_utau(&self.ue.mul(f, &self.rho(u)))
    }

    fn mul_basis(&self, a: &Mono, b: &Mono) -> UElem {
        if a.is_empty() {
            return Combo::basis(b.clone());
        }
        if b.is_empty() {
            return Combo::basis(a.clone());
        }
        (*self.prod.get_or(&(a.clone(), b.clone()), || self.to_utau(&self.ue.mul(&self.sym(b), &self.sym(a))))).clone()
    }

    /// The product, exact in every degree.
    pub fn mul(&self, u: &UElem, v: &UElem) -> UElem {
        let mut out = Combo::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.mul_basis(a, b), &(ca * cb));
            }
        }
        out
    }

    /// The product, refusing degrees beyond the cap.
    pub fn mul_checked(&self, u: &UElem, v: &UElem) -> Result<UElem> {
        let d = Self::degree(u) + Self::degree(v);
        if d > self.cap {
            return Err(Error::DegreeOverflow { degree: d, cap: self.cap });
        }
        Ok(self.mul(u, v))
    }

    // e_m \ e_n = −e_m e_n − Σ' C · e_{m'} \ (e_{m''} e_n)
    fn ldiv_basis(&self, m: &Mono, n: &Mono) -> UElem {
        if m.is_empty() {
            return Combo::basis(n.clone());
        }
        (*self.ldiv.get_or(&(m.clone(), n.clone()), || {
            let v: UElem = Combo::basis(n.clone());
            let mut out = -&self.mul_basis(m, n);
            for (a, b, c) in self.proper_splits(m) {
                let inner = self.mul(&Combo::basis(b), &v);
                out.add_scaled(&self.left_div(&Combo::basis(a), &inner), &-c);
            }
            out
        }))
        .clone()
    }

    // e_n / e_m = −e_n e_m − Σ' C · (e_n e_{m'}) / e_{m''}
    fn rdiv_basis(&self, n: &Mono, m: &Mono) -> UElem {
        if m.is_empty() {
            return Combo::basis(n.clone());
        }
        (*self.rdiv.get_or(&(n.clone(), m.clone()), || {
            let u: UElem = Combo::basis(n.clone());
            let mut out = -&self.mul_basis(n, m);
            for (a, b, c) in self.proper_splits(m) {
                let inner = self.mul(&u, &Combo::basis(a));
                out.add_scaled(&self.right_div(&inner, &Combo::basis(b)), &-c);
            }
            out
        }))
        .clone()
    }

    /// `u \ v`.
    pub fn left_div(&self, u: &UElem, v: &UElem) -> UElem {
        let mut out = Combo::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.ldiv_basis(a, b), &(ca * cb));
            }
        }
        out
    }

    /// `u / v`.
    pub fn right_div(&self, u: &UElem, v: &UElem) -> UElem {
        let mut out = Combo::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.rdiv_basis(a, b), &(ca * cb));
            }
        }
        out
    }

    /// Whether a PBW element lies in `U(s)` (only s-letters occur).
    pub fn in_us(&self, f: &Pbw) -> bool {
        f.keys().all(|m| m.iter().all(|&x| x as usize >= self.k))
    }

    /// `π(f) = S(ρ_{f₍₁₎(1)}) f₍₂₎`, the projection of `U(g)` onto `U(s)`.
    pub fn pi(&self, f: &Pbw) -> Pbw {
        let mut out = Combo::zero();
        for ((a, b), c) in self.ue.delta(f).iter() {
            let head = self.ue.antipode(&self.rho(&self.to_utau(&Combo::basis(a.clone()))));
            out.add_scaled(&self.ue.mul(&head, &Combo::basis(b.clone())), c);
        }
        out
    }

    /// `f ↦ ρ_{f₍₁₎(1)} ⊗ π(f₍₂₎)`, keyed by (U_τ basis, U(s) PBW monomial).
    pub fn factorize(&self, f: &Pbw) -> Combo<(Mono, Mono)> {
        let mut out = Combo::zero();
        for ((a, b), c) in self.ue.delta(f).iter() {
            let u = self.to_utau(&Combo::basis(a.clone()));
            let p = self.pi(&Combo::basis(b.clone()));
            for (m, cm) in u.iter() {
                for (s, cs) in p.iter() {
                    out.add_term((m.clone(), s.clone()), c * cm * cs);
                }
            }
        }
        out
    }

    /// Inverse of [`factorize`](Self::factorize): `Σ ρ_u g`.
    pub fn recombine(&self, fac: &Combo<(Mono, Mono)>) -> Pbw {
        let mut out = Combo::zero();
        for ((m, s), c) in fac.iter() {
            out.add_scaled(&self.ue.mul(&self.sym(m), &Combo::basis(s.clone())), c);
        }
        out
    }

    /// First basis pair violating one of the four division identities, up to total degree `max_deg`.
    pub fn check_divisions(&self, max_deg: usize) -> Option<String> {
        let basis = self.basis(max_deg);
        for u in &basis {
            let ue: UElem = Combo::basis(u.clone());
            let du = self.delta(&ue);
            for v in &basis {
                if u.len() + v.len() > max_deg {
                    continue;
                }
                let ve: UElem = Combo::basis(v.clone());
                let dv = self.delta(&ve);
                let eu = ve.scaled(&self.counit(&ue));
                let ev = ue.scaled(&self.counit(&ve));
                let mut chains: [UElem; 4] = Default::default();
                for ((a, b), c) in du.iter() {
                    let (a, b): (UElem, UElem) = (Combo::basis(a.clone()), Combo::basis(b.clone()));
                    chains[0].add_scaled(&self.left_div(&a, &self.mul(&b, &ve)), c);
                    chains[1].add_scaled(&self.mul(&a, &self.left_div(&b, &ve)), c);
                }
                for ((a, b), c) in dv.iter() {
                    let (a, b): (UElem, UElem) = (Combo::basis(a.clone()), Combo::basis(b.clone()));
                    chains[2].add_scaled(&self.right_div(&self.mul(&ue, &a), &b), c);
                    chains[3].add_scaled(&self.mul(&self.right_div(&ue, &a), &b), c);
                }
                let names = ["u1\\(u2 v)", "u1 (u2\\v)", "(u v1)/v2", "(u/v1) v2"];
                for (i, ch) in chains.iter().enumerate() {
                    let expected = if i < 2 { &eu } else { &ev };
                    if ch != expected {
                        return Some(format!("{} fails for u = {:?}, v = {:?}", names[i], u, v));
                    }
                }
            }
        }
        None
    }

    /// `((x y₍₁₎)⋯) y₍ₙ₎` (when `left` is true) or `x ((y₍₁₎ y₍₂₎)⋯ y₍ₙ₎)`.
    fn coproduct_power(&self, x: &UElem, y: &Mono, n: usize, left: bool) -> UElem {
        let mut states: BTreeMap<Mono, UElem> = BTreeMap::new();
        states.insert(y.clone(), if left { x.clone() } else { self.one() });
        for _ in 0..n {
            let mut next: BTreeMap<Mono, UElem> = BTreeMap::new();
            for (rem, cur) in &states {
                for (a, b, c) in self.splits_of(rem).iter() {
                    let prod = self.mul(cur, &Combo::basis(a.clone()));
                    next.entry(b.clone()).or_default().add_scaled(&prod, c);
                }
            }
            states = next;
        }
        let done = states.remove(&Vec::new()).unwrap_or_default();
        if left {
            done
        } else {
            self.mul(x, &done)
        }
    }

    /// Right monoalternativity for basis `x, y` with `|x| + |y| ≤ max_deg` and `1 ≤ n ≤ max_n`.
    pub fn check_monoalternative(&self, max_deg: usize, max_n: usize) -> Option<String> {
        let basis = self.basis(max_deg);
        for x in &basis {
            let xe: UElem = Combo::basis(x.clone());
            for y in &basis {
                if x.len() + y.len() > max_deg {
                    continue;
                }
                for n in 1..=max_n {
                    let l = self.coproduct_power(&xe, y, n, true);
                    let r = self.coproduct_power(&xe, y, n, false);
                    if l != r {
                        return Some(format!("x = {x:?}, y = {y:?}, n = {n}"));
                    }
                }
            }
        }
        None
    }

    /// Left-normed power `((u u)⋯) u`.
    pub fn left_power(&self, u: &UElem, n: usize) -> UElem {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, u))
    }

    /// `x c̄ⁿ = ((x c̄)⋯) c̄` for basis `x`, primitive `c`, `|x| + n ≤ max_deg`.
    pub fn check_power_identity(&self, c: &UElem, max_deg: usize) -> Option<String> {
        for x in self.basis(max_deg) {
            let xe: UElem = Combo::basis(x.clone());
            let mut iter = xe.clone();
            for n in 1..=max_deg - x.len() {
                iter = self.mul(&iter, c);
                if self.mul(&xe, &self.left_power(c, n)) != iter {
                    return Some(format!("x = {x:?}, n = {n}"));
                }
            }
        }
        None
    }

    /// Coordinates of the primitive part; `None` if `u` has components outside degree 1.
    pub fn primitive_coords(&self, u: &UElem) -> Option<Vec<Q>> {
        let mut v = vec![Q::zero(); self.k];
        for (m, c) in u.iter() {
            if m.len() != 1 {
                return None;
            }
            v[m[0] as usize] = c.clone();
        }
        Some(v)
    }

    pub fn from_primitive(&self, v: &[Q]) -> UElem {
        Combo::from_terms(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (vec![i as u16], c.clone())))
    }
}

impl NonAssocAlgebra for UTau {
    type Key = Mono;

    fn one(&self) -> UElem {
        UTau::one(self)
    }

    fn mul(&self, a: &UElem, b: &UElem) -> UElem {
        UTau::mul(self, a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn aff1_is_polynomial() {
        let u = build_utau(&examples::aff1_triple(), 5).unwrap();
        let y = u.prim(0);
        assert_eq!(u.mul(&y, &y), Combo::basis(vec![0, 0]));
        assert_eq!(u.mul(&Combo::basis(vec![0, 0]), &Combo::basis(vec![0])), Combo::basis(vec![0, 0, 0]));
        assert_eq!(u.graded_dims(), vec![1; 6]);
    }

    #[test]
    fn unit_and_divisions_by_primitives() {
        let u = build_utau(&examples::sl2_reductive(), 4).unwrap();
        let (e, f) = (u.prim(0), u.prim(1));
        assert_eq!(u.mul(&u.one(), &e), e);
        assert_eq!(u.mul(&f, &u.one()), f);
        let v = Combo::basis(vec![0, 1]);
        assert_eq!(u.left_div(&e, &v), -&u.mul(&e, &v));
        assert_eq!(u.right_div(&v, &f), -&u.mul(&v, &f));
        assert_eq!(u.left_div(&u.one(), &v), v);
    }

    #[test]
    fn sl2_degree_two_product() {
        // e·f = e_{ef} + ½[f, e] projected to c, and [f, e] = -h lies in s
        let u = build_utau(&examples::sl2_reductive(), 4).unwrap();
        assert_eq!(u.mul(&u.prim(0), &u.prim(1)), Combo::basis(vec![0, 1]));
    }

    #[test]
    fn actions() {
        let u = build_utau(&examples::sl2_reductive(), 4).unwrap();
        let h = u.ue().letter(2);
        assert!(u.ue_act(&h, &u.one()).is_zero());
        let e = u.ue().letter(0);
        let x = Combo::basis(vec![1]);
        assert_eq!(u.ue_act(&e, &x), u.mul(&x, &u.prim(0)));
    }
}
