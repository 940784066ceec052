use nahopf::combo::Combo;
use nahopf::envelope::{build_utau, monomials, Mono, Pbw, UEnvelope};
use nahopf::examples;
use nahopf::rational::{binomial, q, Q};
use proptest::prelude::*;

/// Number of PBW monomials of degree `d` in `k` letters: C(k + d - 1, d).
#[test]
fn graded_dims_count_multisets() {
    for t in [examples::sl2_reductive(), examples::aff1_triple(), examples::heisenberg_tilted()] {
        let u = build_utau(&t, 5).unwrap();
        let k = u.k();
        for (d, &n) in u.graded_dims().iter().enumerate() {
            assert_eq!(q(n as i64), binomial(k + d - 1, d));
        }
    }
}

#[test]
fn over_cap_product_is_an_error() {
    let u = build_utau(&examples::sl2_reductive(), 2).unwrap();
    let x = Combo::basis(vec![0u16, 1]);
    assert!(u.mul_checked(&x, &x).is_err());
}

fn elem(ue: &UEnvelope, terms: &[(usize, i64)]) -> Pbw {
    let monos = monomials(0, ue.dim() as u16, 3);
    Combo::from_terms(terms.iter().map(|&(i, c)| (monos[i % monos.len()].clone(), q(c))))
}

fn mul_tensor(ue: &UEnvelope, a: &Pbw, b: &Pbw) -> Combo<(Mono, Mono)> {
    ue.tensor_mul(&ue.delta(a), &ue.delta(b))
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..40, -3i64..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coproduct_is_multiplicative(a in terms(), b in terms()) {
        let ue = UEnvelope::new(examples::sl2());
        let (x, y) = (elem(&ue, &a), elem(&ue, &b));
        prop_assert_eq!(ue.delta(&ue.mul(&x, &y)), mul_tensor(&ue, &x, &y));
    }

    #[test]
    fn antipode_axiom(a in terms()) {
        let ue = UEnvelope::new(examples::sl2());
        let x = elem(&ue, &a);
        let mut lhs = Combo::zero();
        for ((m1, m2), c) in ue.delta(&x).iter() {
            let s = ue.antipode(&Combo::basis(m1.clone()));
            lhs.add_scaled(&ue.mul(&s, &Combo::basis(m2.clone())), c);
        }
        prop_assert_eq!(lhs, ue.unit().scaled(&ue.counit(&x)));
    }

    #[test]
    fn utau_unit_and_counit(i in 0usize..20) {
        let u = build_utau(&examples::heisenberg_tilted(), 4).unwrap();
        let basis = u.basis(3);
        let x = Combo::basis(basis[i % basis.len()].clone());
        prop_assert_eq!(u.mul(&u.one(), &x), x.clone());
        prop_assert_eq!(u.mul(&x, &u.one()), x.clone());
        let expected: Q = if x == u.one() { q(1) } else { q(0) };
        prop_assert_eq!(u.counit(&x), expected);
    }
}
