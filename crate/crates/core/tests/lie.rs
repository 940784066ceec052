use nahopf::examples;
use nahopf::lie::{check_hyporeductive, check_pseudoreductive, tau_red, triples_equivalent, Equivalence, LieAlgebra, LieViolation, Triple};
use nahopf::rational::{q, Q};
use proptest::prelude::*;

fn v(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

#[test]
fn examples_are_lie_algebras() {
    for g in [examples::sl2(), examples::aff1(), examples::heisenberg()] {
        assert_eq!(g.check(), Ok(()));
    }
}

#[test]
fn jacobi_violation_is_named() {
    // [x,y] = y, [x,z] = z, [y,z] = x fails Jacobi
    let g = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, v(&[0, 1, 0])), (0, 2, v(&[0, 0, 1])), (1, 2, v(&[1, 0, 0]))],
    )
    .unwrap();
    assert!(matches!(g.check(), Err(LieViolation::Jacobi { .. })));
}

#[test]
fn hyporeductive_examples() {
    assert!(check_hyporeductive(&examples::sl2_reductive()));
    assert!(check_hyporeductive(&examples::heisenberg_tilted()));
    assert!(!check_hyporeductive(&examples::sl2_borel_like()));
}

#[test]
fn pseudoreductive_examples() {
    assert!(check_pseudoreductive(&examples::heisenberg_tilted()).unwrap().passed());
    assert!(check_pseudoreductive(&examples::sl2_reductive_zeta0()).unwrap().passed());
    let bad = examples::sl2_reductive().with_zeta(Some(vec![v(&[1, 0, 0])])).unwrap();
    let r = check_pseudoreductive(&bad).unwrap();
    assert!(!r.prt1);
}

#[test]
fn inequivalent_triples_are_told_apart() {
    let a = tau_red(&examples::sl2_reductive());
    let b = tau_red(&examples::heisenberg_tilted());
    assert_eq!(triples_equivalent(&a, &b, 6), Equivalence::No);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // e ↦ λe, f ↦ f/λ is an automorphism of sl2 fixing h, so the rescaled
    // triple is equivalent to the original.
    #[test]
    fn rescaled_sl2_triple_is_equivalent(n in 1i64..6, d in 1i64..6) {
        let lam = Q::new(n.into(), d.into());
        let t = examples::sl2_reductive();
        let c = vec![vec![lam.clone(), q(0), q(0)], vec![q(0), q(1) / lam, q(0)]];
        let t2 = Triple::new(t.g().clone(), t.s_basis().to_vec(), c, None).unwrap();
        prop_assert_eq!(triples_equivalent(&tau_red(&t), &tau_red(&t2), 6), Equivalence::Yes);
    }
}
