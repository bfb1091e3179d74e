use lode_diffop::{
    exp_product, gauge_inverse, gauge_transform, pullback, symmetric_power_order, LinODE, RatFun,
};
use proptest::prelude::*;

const SEED: u64 = 0x6c6f6465;

fn small_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..=max_deg + 1)
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (small_poly(2), prop::sample::select(vec![vec![1i64], vec![0, 1], vec![-1, 1], vec![0, -1, 1], vec![2, 0, 1]]))
        .prop_map(|(n, d)| RatFun::from_i64(&n, &d))
}

fn nonconstant() -> impl Strategy<Value = RatFun> {
    ratfun().prop_filter("nonconstant", |f| !f.is_constant())
}

fn operator(order: usize) -> impl Strategy<Value = LinODE> {
    prop::collection::vec(ratfun(), order).prop_map(LinODE::new)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 40,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        rng_seed: proptest::test_runner::RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn pullback_by_inversion_is_involutive(l in operator(2)) {
        let inv = RatFun::from_i64(&[1], &[0, 1]);
        let back = pullback(&pullback(&l, &inv).unwrap(), &inv).unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn exp_product_round_trip(l in operator(2), f in nonconstant(), lam in 1u32..4) {
        prop_assume!(!f.is_zero());
        let m = exp_product(&l, &f, lam).unwrap();
        let back = exp_product(&m, &f.inv().unwrap(), lam).unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn gauge_round_trip(l in operator(2), f0 in ratfun(), f1 in ratfun()) {
        let f = [f0, f1];
        if let Ok(m) = gauge_transform(&l, &f) {
            let g = gauge_inverse(&l, &f).unwrap();
            prop_assert_eq!(gauge_transform(&m, &g).unwrap(), l);
        }
    }

    #[test]
    fn pullback_commutes_with_gauge_of_constants(l in operator(2), h in nonconstant(), c in 1i64..5) {
        let scaled = gauge_transform(&l, &[RatFun::from_int(c), RatFun::zero()]).unwrap();
        prop_assert_eq!(pullback(&scaled, &h).unwrap(), pullback(&l, &h).unwrap());
    }

    #[test]
    fn sympower_order_invariant_under_gauge(l in operator(2), f0 in ratfun(), f1 in ratfun(), d in 2u32..4) {
        if let Ok(m) = gauge_transform(&l, &[f0, f1]) {
            prop_assert_eq!(symmetric_power_order(&m, d).unwrap(), symmetric_power_order(&l, d).unwrap());
        }
    }
}
