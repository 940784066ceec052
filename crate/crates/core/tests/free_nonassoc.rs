use nahopf::envelope::build_utau;
use nahopf::examples;
use nahopf::free_nonassoc::{associator, evaluate_su, generator, na_counit, na_delta, na_mul, su_bracket, FreeNA, NonAssocAlgebra};
use nahopf::rational::q;
use proptest::prelude::*;

#[test]
fn free_magma_is_not_associative() {
    let (x, y, z) = (generator(0), generator(1), generator(2));
    assert!(!associator(&FreeNA, &x, &y, &z).is_zero());
}

#[test]
fn coproduct_of_a_product_of_primitives() {
    let (x, y) = (generator(0), generator(1));
    let xy = na_mul(&x, &y);
    // xy ⊗ 1 + x ⊗ y + y ⊗ x + 1 ⊗ xy
    assert_eq!(na_delta(&xy).len(), 4);
    assert_eq!(na_counit(&xy), q(0));
    assert_eq!(na_counit(&FreeNA.one()), q(1));
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..4, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // in the tilted Heisenberg U_τ, direct and symbolic SU brackets agree and
    // are antisymmetric in the last two slots
    #[test]
    fn su_brackets_in_utau(x in coeffs(), y in coeffs(), z in coeffs()) {
        let u = build_utau(&examples::heisenberg_tilted(), 4).unwrap();
        let p = |c: &Vec<i64>| u.from_primitive(&c.iter().map(|&n| q(n)).collect::<Vec<_>>());
        let (x, y, z) = (p(&x), p(&y), p(&z));
        let xs = [x];
        let direct = su_bracket(&u, &xs, &y, &z);
        prop_assert_eq!(&direct, &evaluate_su(&u, &xs, &y, &z));
        prop_assert_eq!(&direct, &-&su_bracket(&u, &xs, &z, &y));
        prop_assert!(u.primitive_coords(&direct).is_some() || direct.is_zero());
    }
}
