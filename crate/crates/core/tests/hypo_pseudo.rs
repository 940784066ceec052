use nahopf::envelope::build_utau;
use nahopf::error::Error;
use nahopf::examples;
use nahopf::hypo_pseudo::hypo::{check_circ_structure, circ_on_primitives};
use nahopf::hypo_pseudo::{bullet_general, bullet_prim, check_r_identities, circ_build, HypoChecker, PseudoChecker};
use nahopf::rational::q;

#[test]
fn non_hyporeductive_triple_is_rejected() {
    let u = build_utau(&examples::sl2_borel_like(), 3).unwrap();
    assert!(matches!(circ_build(&u), Err(Error::Precondition(_))));
}

#[test]
fn tilted_heisenberg_hypo_suite() {
    let u = build_utau(&examples::heisenberg_tilted(), 4).unwrap();
    let circ = circ_build(&u).unwrap();
    let (_, rec) = circ_on_primitives(&circ).unwrap();
    assert!(rec.passed);
    for r in check_circ_structure(&circ, 4).unwrap() {
        assert!(r.passed, "{}", r.line());
    }
    for r in check_r_identities(&u, 4) {
        assert!(r.passed, "{}", r.line());
    }
    let h = HypoChecker::new(&circ);
    assert!(h.check_hypospecial(4).unwrap().passed);
    assert!(h.check_bracket(3).unwrap().passed);
}

// a•b = −ζ([a,b]_s): [a,b] = w = (w − a) + a, and ζ(w − a) = a
#[test]
fn tilted_heisenberg_bullet_matches_formula() {
    let u = build_utau(&examples::heisenberg_tilted(), 4).unwrap();
    let table = bullet_prim(&u, 4).unwrap();
    assert_eq!(table[0][1], vec![q(-1), q(0)]);
    assert_eq!(table[1][0], vec![q(1), q(0)]);
    assert_eq!(table[0][0], vec![q(0), q(0)]);
    let bullet = bullet_general(&u).unwrap();
    let pc = PseudoChecker::new(&bullet, table);
    for r in [pc.check_consistency().unwrap(), pc.check_bol(4), pc.check_pseudospecial(4).unwrap(), pc.check_derivation(4).unwrap()] {
        assert!(r.passed, "{}", r.line());
    }
}

#[test]
fn aff1_bullet_vanishes() {
    let u = build_utau(&examples::aff1_triple(), 4).unwrap();
    let table = bullet_prim(&u, 4).unwrap();
    assert!(table.iter().flatten().flatten().all(|c| *c == q(0)));
}
