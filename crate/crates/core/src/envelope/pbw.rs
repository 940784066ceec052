//! `U(g)` in PBW normal form.
//!
//! Products are straightened letter by letter using the structure constants
//! and are exact in every degree; nothing is truncated.

use num_traits::Zero;

use crate::combo::Combo;
use crate::free_nonassoc::NonAssocAlgebra;
use crate::lie::LieAlgebra;
use crate::rational::{one, q, Q};

use super::{Memo, Mono};

pub type Pbw = Combo<Mono>;

pub struct UEnvelope {
    g: LieAlgebra,
    straighten: Memo<(Mono, u16), Pbw>,
}

impl UEnvelope {
    pub fn new(g: LieAlgebra) -> Self {
        Self { g, straighten: Memo::new() }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn unit(&self) -> Pbw {
        Combo::basis(Vec::new())
    }

    pub fn letter(&self, i: usize) -> Pbw {
        Combo::basis(vec![i as u16])
    }

    /// Embeds a vector of g as a degree-1 element.
    pub fn from_vector(&self, v: &[Q]) -> Pbw {
        Combo::from_terms(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (vec![i as u16], c.clone())))
    }

    /// `m · x` for a normal monomial `m` and a letter `x`.
    pub fn mul_mono_letter(&self, m: &[u16], x: u16) -> Pbw {
        match m.last() {
            None => Combo::basis(vec![x]),
            Some(&y) if y <= x => {
                let mut w = m.to_vec();
                w.push(x);
                Combo::basis(w)
            }
            Some(_) => (*self.straighten.get_or(&(m.to_vec(), x), || self.straighten_step(m, x))).clone(),
        }
    }

    // m'·y·x = (m'·x)·y + m'·[y,x]  when y > x
    fn straighten_step(&self, m: &[u16], x: u16) -> Pbw {
        let (prefix, y) = (&m[..m.len() - 1], m[m.len() - 1]);
        let mut out = Combo::zero();
        for (w, c) in self.mul_mono_letter(prefix, x).iter() {
            out.add_scaled(&self.mul_mono_letter(w, y), c);
        }
        for (k, c) in self.g.bracket_basis(y as usize, x as usize).iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.mul_mono_letter(prefix, k as u16), c);
            }
        }
        out
    }

    pub fn mul_letter(&self, a: &Pbw, x: u16) -> Pbw {
        let mut out = Combo::zero();
        for (m, c) in a.iter() {
            out.add_scaled(&self.mul_mono_letter(m, x), c);
        }
        out
    }

    pub fn mul(&self, a: &Pbw, b: &Pbw) -> Pbw {
        let mut out = Combo::zero();
        for (m, c) in b.iter() {
            let mut part = a.clone();
            for &x in m {
                part = self.mul_letter(&part, x);
            }
            out.add_scaled(&part, c);
        }
        out
    }

    /// Ordered product of degree-1 elements.
    pub fn product_of(&self, factors: &[Pbw]) -> Pbw {
        factors.iter().fold(self.unit(), |acc, f| self.mul(&acc, f))
    }

    pub fn counit(&self, a: &Pbw) -> Q {
        a.coeff(&Vec::new())
    }

    pub fn degree(a: &Pbw) -> usize {
        a.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Coproduct; every letter is primitive, so a normal monomial splits into
    /// complementary subsequences, all of which are again normal.
    pub fn delta(&self, a: &Pbw) -> Combo<(Mono, Mono)> {
        let mut out = Combo::zero();
        for (m, c) in a.iter() {
            let n = m.len();
            for mask in 0u32..(1 << n) {
                let (mut l, mut r) = (Vec::new(), Vec::new());
                for (i, &x) in m.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        l.push(x);
                    } else {
                        r.push(x);
                    }
                }
                out.add_term((l, r), c.clone());
            }
        }
        out
    }

    /// `S(x₁⋯x_k) = (−1)^k x_k⋯x₁`, straightened.
    pub fn antipode(&self, a: &Pbw) -> Pbw {
        let mut out = Combo::zero();
        for (m, c) in a.iter() {
            let mut part = self.unit();
            for &x in m.iter().rev() {
                part = self.mul_letter(&part, x);
            }
            let sign = if m.len() % 2 == 0 { one() } else { q(-1) };
            out.add_scaled(&part, &(c * sign));
        }
        out
    }

    /// Multiplies two tensor expansions factorwise.
    pub fn tensor_mul(&self, a: &Combo<(Mono, Mono)>, b: &Combo<(Mono, Mono)>) -> Combo<(Mono, Mono)> {
        let mut out = Combo::zero();
        for ((a1, a2), ca) in a.iter() {
            for ((b1, b2), cb) in b.iter() {
                let l = self.mul(&Combo::basis(a1.clone()), &Combo::basis(b1.clone()));
                let r = self.mul(&Combo::basis(a2.clone()), &Combo::basis(b2.clone()));
                let s = ca * cb;
                for (x, cx) in l.iter() {
                    for (y, cy) in r.iter() {
                        out.add_term((x.clone(), y.clone()), &s * cx * cy);
                    }
                }
            }
        }
        out
    }
}

impl NonAssocAlgebra for UEnvelope {
    type Key = Mono;

    fn one(&self) -> Pbw {
        self.unit()
    }

    fn mul(&self, a: &Pbw, b: &Pbw) -> Pbw {
        UEnvelope::mul(self, a, b)
    }
}

/// `Σ c · (l ⊗ r)` for two elements.
pub fn tensor(a: &Pbw, b: &Pbw) -> Combo<(Mono, Mono)> {
    let mut out = Combo::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term((x.clone(), y.clone()), cx * cy);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::monomials;
    use crate::examples;

    #[test]
    fn sl2_relations() {
        // basis e, f, h
        let u = UEnvelope::new(examples::sl2());
        let (e, f, h) = (u.letter(0), u.letter(1), u.letter(2));
        let ef = u.mul(&e, &f);
        let fe = u.mul(&f, &e);
        assert_eq!(&ef - &fe, h);
        assert_eq!(fe, &Combo::basis(vec![0, 1]) - &h);
        assert_eq!(u.mul(&e, &e), Combo::basis(vec![0, 0]));
    }

    #[test]
    fn hopf_axioms_sampled() {
        let u = UEnvelope::new(examples::sl2());
        let basis = monomials(0, 3, 3);
        for m in &basis {
            let a = Combo::basis(m.clone());
            // S(u1) u2 = ε(u) 1
            let mut acc = Combo::zero();
            for ((l, r), c) in u.delta(&a).iter() {
                acc.add_scaled(&u.mul(&u.antipode(&Combo::basis(l.clone())), &Combo::basis(r.clone())), c);
            }
            assert_eq!(acc, u.unit().scaled(&u.counit(&a)));
        }
        for m in basis.iter().take(10) {
            for n in basis.iter().take(10) {
                let (a, b) = (Combo::basis(m.clone()), Combo::basis(n.clone()));
                assert_eq!(u.delta(&u.mul(&a, &b)), u.tensor_mul(&u.delta(&a), &u.delta(&b)));
            }
        }
        let xy = u.mul(&u.letter(0), &u.letter(1));
        assert_eq!(u.antipode(&xy), u.mul(&u.letter(1), &u.letter(0)));
    }

    #[test]
    fn straightening_is_associative() {
        let u = UEnvelope::new(examples::sl2());
        let words = monomials(0, 3, 2);
        for a in &words {
            for b in &words {
                for c in &words {
                    let (x, y, z) = (Combo::basis(a.clone()), Combo::basis(b.clone()), Combo::basis(c.clone()));
                    assert_eq!(u.mul(&u.mul(&x, &y), &z), u.mul(&x, &u.mul(&y, &z)));
                }
            }
        }
    }
}
