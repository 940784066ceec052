//! Linear operators on `U_τ` built from right multiplications, divisions and
//! the `U(g)` action, kept symbolically as sums of compositions and
//! evaluated exactly.

use num_traits::Zero;

use crate::combo::Combo;
use crate::rational::{one, Q};

use super::pbw::Pbw;
use super::utau::{UElem, UTau};

#[derive(Clone, Debug, PartialEq)]
pub enum Atom {
    /// `x ↦ x·u`
    Right(UElem),
    /// `x ↦ u\x`
    LeftDiv(UElem),
    /// `x ↦ x/u`
    RightDiv(UElem),
    /// `x ↦ f·x` for `f ∈ U(g)`
    Act(Pbw),
}

impl Atom {
    pub fn apply(&self, u: &UTau, x: &UElem) -> UElem {
        match self {
            Atom::Right(v) => u.mul(x, v),
            Atom::LeftDiv(v) => u.left_div(v, x),
            Atom::RightDiv(v) => u.right_div(x, v),
            Atom::Act(f) => u.ue_act(f, x),
        }
    }
}

/// `Σ c · (a_k ∘ ⋯ ∘ a_1)`; each chain is stored in application order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Operator {
    terms: Vec<(Q, Vec<Atom>)>,
}

impl Operator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self { terms: vec![(one(), Vec::new())] }
    }

    fn atom(a: Atom) -> Self {
        Self { terms: vec![(one(), vec![a])] }
    }

    pub fn right(v: UElem) -> Self {
        Self::atom(Atom::Right(v))
    }

    pub fn left_div(v: UElem) -> Self {
        Self::atom(Atom::LeftDiv(v))
    }

    pub fn right_div(v: UElem) -> Self {
        Self::atom(Atom::RightDiv(v))
    }

    pub fn act(f: Pbw) -> Self {
        Self::atom(Atom::Act(f))
    }

    pub fn terms(&self) -> &[(Q, Vec<Atom>)] {
        &self.terms
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(c, w)| (c * s, w.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-one()))
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                terms.push((c1 * c2, w));
            }
        }
        Self { terms }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        other.then(self)
    }

    /// `[A, B] = AB − BA`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, u: &UTau, x: &UElem) -> UElem {
        let mut out = Combo::zero();
        for (c, chain) in &self.terms {
            let y = chain.iter().fold(x.clone(), |acc, a| a.apply(u, &acc));
            out.add_scaled(&y, c);
        }
        out
    }

    /// First basis element of degree `≤ max_deg` on which the two operators differ.
    pub fn differs_on(&self, other: &Self, u: &UTau, max_deg: usize) -> Option<UElem> {
        u.basis(max_deg).into_iter().map(Combo::basis).find(|x| self.apply(u, x) != other.apply(u, x))
    }

    pub fn equal_on(&self, other: &Self, u: &UTau, max_deg: usize) -> bool {
        self.differs_on(other, u, max_deg).is_none()
    }

    /// Whether `A x = x · A(1)` on the basis up to `max_deg`; returns `A(1)` if so.
    pub fn as_right_mult(&self, u: &UTau, max_deg: usize) -> Option<UElem> {
        let w = self.apply(u, &u.one());
        Operator::right(w.clone()).equal_on(self, u, max_deg).then_some(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_utau;
    use crate::examples;
    use crate::rational::q;

    #[test]
    fn primitive_atoms() {
        // for primitive a the division identities give x/a = −x·a
        let u = build_utau(&examples::sl2_reductive(), 4).unwrap();
        let a = u.prim(0);
        assert!(Operator::right_div(a.clone()).equal_on(&Operator::right(a.clone()).scale(&q(-1)), &u, 3));
        assert!(Operator::act(u.ue().letter(1)).equal_on(&Operator::right(u.prim(1)), &u, 3));
        let comp = Operator::right(a.clone()).then(&Operator::left_div(a.clone()));
        assert_eq!(comp.apply(&u, &u.one()), -&u.mul(&a, &a));
    }

    #[test]
    fn bracket_of_right_mults_on_abelian() {
        let u = build_utau(&examples::aff1_triple(), 4).unwrap();
        let a = Operator::right(u.prim(0));
        let z = a.bracket(&a.scale(&q(3)));
        assert!(z.equal_on(&Operator::zero(), &u, 3));
        assert_eq!(a.as_right_mult(&u, 3), Some(u.prim(0)));
    }
}
