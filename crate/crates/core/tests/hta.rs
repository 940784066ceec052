use nahopf::error::Error;
use nahopf::examples;
use nahopf::hta::{envelope_e, hta_from_triple, integrate_hta, sabinin_tables, BaseVariant, SabininOps};
use nahopf::rational::{q, Q};
use proptest::prelude::*;

#[test]
fn class2_envelope_is_heisenberg() {
    let env = envelope_e(&examples::class2_hta(), 4).unwrap();
    assert_eq!(env.presented.dims_per_degree(), vec![2, 1, 0, 0]);
}

#[test]
fn sl2_hta_collapses() {
    let t = examples::sl2_reductive();
    let a = hta_from_triple(&t, t.s_basis()).unwrap();
    assert!(matches!(envelope_e(&a, 4), Err(Error::Collapse(_))));
}

#[test]
fn class2_first_brackets() {
    let a = examples::class2_hta();
    let rows = sabinin_tables(&a, BaseVariant::StarInOrder, 3);
    let base = rows.iter().find(|(w, y, z, _)| w.is_empty() && *y == 0 && *z == 1).unwrap();
    // <1;a,b> = -a∗b - a·b = -a
    assert_eq!(base.3, vec![q(-1), q(0)]);
    let (_, u) = integrate_hta(&a, 4).unwrap();
    assert_eq!(u.k(), 2);
}

fn vec2() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-4i64..5).prop_map(q), 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sabinin_brackets_are_bilinear_and_skew(y in vec2(), z in vec2(), w in vec2(), word in prop::collection::vec(0usize..2, 0..3)) {
        let a = examples::class2_hta();
        let mut ops = SabininOps::new(&a, BaseVariant::StarInOrder);
        let yz = ops.bracket(&word, &y, &z);
        let zy = ops.bracket(&word, &z, &y);
        prop_assert_eq!(yz.iter().zip(&zy).map(|(p, q)| p + q).collect::<Vec<_>>(), vec![q(0), q(0)]);
        let sum: Vec<Q> = y.iter().zip(&w).map(|(p, q)| p + q).collect();
        let lhs = ops.bracket(&word, &sum, &z);
        let rhs: Vec<Q> = yz.iter().zip(ops.bracket(&word, &w, &z)).map(|(p, q)| p + q).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
