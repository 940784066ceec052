//! Small named algebras and triples used throughout the tests and the CLI docs.

use crate::hta::Hta;
use crate::lie::{LieAlgebra, Triple};
use crate::linalg::Vector;
use crate::rational::q;

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// sl2 in the basis `e, f, h`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        labels(&["e", "f", "h"]),
        &[(2, 0, v(&[2, 0, 0])), (2, 1, v(&[0, -2, 0])), (0, 1, v(&[0, 0, 1]))],
    )
    .expect("sl2 constants")
}

/// The non-abelian 2-dimensional algebra `[x, y] = y`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(labels(&["x", "y"]), &[(0, 1, v(&[0, 1]))]).expect("aff(1) constants")
}

/// Heisenberg algebra `[a, b] = w` with `w` central.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(labels(&["a", "b", "w"]), &[(0, 1, v(&[0, 0, 1]))]).expect("heisenberg constants")
}

/// `(sl2, span{h}, span{e, f})`, a reductive triple.
pub fn sl2_reductive() -> Triple {
    Triple::new(sl2(), vec![v(&[0, 0, 1])], vec![v(&[1, 0, 0]), v(&[0, 1, 0])], None).expect("valid triple")
}

/// `sl2_reductive` with `ζ = 0` attached.
pub fn sl2_reductive_zeta0() -> Triple {
    Triple::new(sl2(), vec![v(&[0, 0, 1])], vec![v(&[1, 0, 0]), v(&[0, 1, 0])], Some(vec![v(&[0, 0, 0])]))
        .expect("valid triple")
}

/// `(sl2, span{e}, span{f, h})`, which is not hyporeductive.
pub fn sl2_borel_like() -> Triple {
    Triple::new(sl2(), vec![v(&[1, 0, 0])], vec![v(&[0, 1, 0]), v(&[0, 0, 1])], None).expect("valid triple")
}

/// `(aff(1), span{x}, span{y})`.
pub fn aff1_triple() -> Triple {
    Triple::new(aff1(), vec![v(&[1, 0])], vec![v(&[0, 1])], Some(vec![v(&[0, 0])])).expect("valid triple")
}

/// Heisenberg with `s = span{w - a}`, `c = span{a, b}` and `ζ(w - a) = a`.
/// The normalizer of `c` is `span{w}`, so the triple is hyporeductive but not
/// reductive, and `ζ` makes it pseudoreductive with `a•b = -a`.
pub fn heisenberg_tilted() -> Triple {
    Triple::new(
        heisenberg(),
        vec![v(&[-1, 0, 1])],
        vec![v(&[1, 0, 0]), v(&[0, 1, 0])],
        Some(vec![v(&[1, 0, 0])]),
    )
    .expect("valid triple")
}

/// All three products vanish on a 2-dimensional space.
pub fn zero_hta() -> Hta {
    Hta::zero(labels(&["a", "b"]))
}

/// Two generators with `a∗b = a = -(b∗a)` and vanishing dot and ternary
/// products. Its envelope is the Heisenberg algebra.
pub fn class2_hta() -> Hta {
    let mut h = Hta::zero(labels(&["a", "b"]));
    h.star[0][1] = v(&[1, 0]);
    h.star[1][0] = v(&[-1, 0]);
    h
}
