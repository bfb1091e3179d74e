use lode_exactnum::cyclo::{cyclotomic_polynomial, roots, totient};
use lode_exactnum::{rat, Cyclo, ExactError, Rat};
use num_traits::Zero;
use proptest::prelude::*;

const SEED: u64 = 0x6c6f6465;

const CONDUCTORS: [u32; 6] = [3, 5, 7, 9, 15, 21];

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn arb_cyclo(m: u32) -> impl Strategy<Value = Cyclo> {
    proptest::collection::vec(arb_rat(), totient(m)).prop_map(move |c| Cyclo::from_coeffs(m, &c))
}

fn arb_triple() -> impl Strategy<Value = (Cyclo, Cyclo, Cyclo)> {
    proptest::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|m| (arb_cyclo(m), arb_cyclo(m), arb_cyclo(m)))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 1000,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        rng_seed: proptest::test_runner::RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn field_axioms((x, y, z) in arb_triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if !x.is_zero() {
            prop_assert_eq!(&(&x * &y) * &x.inv().unwrap(), y.clone());
        }
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn embedding_is_a_ring_map((x, y, _z) in arb_triple(), k in 2u32..4) {
        let m2 = x.conductor() * k;
        let ex = x.embed(m2).unwrap();
        let ey = y.embed(m2).unwrap();
        prop_assert_eq!((&x * &y).embed(m2).unwrap(), &ex * &ey);
        prop_assert_eq!((&x + &y).embed(m2).unwrap(), &ex + &ey);
    }

    #[test]
    fn coefficient_vector_has_length_phi((x, _y, _z) in arb_triple()) {
        prop_assert_eq!(x.coeffs().len(), totient(x.conductor()));
    }
}

#[test]
fn cyclotomic_relations_hold_for_catalog_conductors() {
    for m in CONDUCTORS {
        let z = Cyclo::zeta(m);
        let mut acc = Cyclo::zero();
        for (k, c) in cyclotomic_polynomial(m).iter().enumerate() {
            acc = acc + z.pow(k as i64).scale(&rat(*c, 1));
        }
        assert!(acc.is_zero(), "Phi_{m}(zeta_{m}) != 0");
        assert!(z.pow(m as i64).is_one());
    }
}

#[test]
fn golden_ratio_constants() {
    let xi = |k| Cyclo::zeta_pow(5, k);
    let s = xi(3) + xi(2);
    let t = xi(4) + xi(1);
    let d = &t - &s;
    assert_eq!(d.square(), Cyclo::from_int(5));
    assert_eq!(d.inv().unwrap(), d.scale(&rat(1, 5)));
    assert_eq!(d, roots::sqrt5());
}

#[test]
fn seventh_root_gauss_sum() {
    let b = |k| Cyclo::zeta_pow(7, k);
    let g = b(6) + b(5) + b(3) - b(4) - b(2) - b(1);
    assert_eq!(g.square(), Cyclo::from_int(-7));
}

#[test]
fn lambda_constants() {
    // (-1 +- sqrt(15) i)/4 with sqrt(15) i = sqrt(-15)
    let r = roots::sqrt_minus15();
    assert_eq!(r.square(), Cyclo::from_int(-15));
    let l1 = (Cyclo::from_int(-1) + r.clone()).scale(&rat(1, 4));
    let l2 = (Cyclo::from_int(-1) - r).scale(&rat(1, 4));
    assert_eq!(&l1 * &l2, Cyclo::from_int(1));
    assert_eq!(&l1 + &l2, Cyclo::from_rat(&rat(-1, 2)));
}

#[test]
fn omega_in_ninth_roots() {
    // omega = zeta_3^2 maps to -1 - eps^3 for eps = zeta_9
    let omega = Cyclo::zeta_pow(3, 2);
    let eps = Cyclo::zeta(9);
    assert_eq!(omega.embed(9).unwrap(), Cyclo::from_int(-1) - eps.pow(3));
}

#[test]
fn errors() {
    assert_eq!(Cyclo::zero().inv(), Err(ExactError::DivisionByZero));
    assert_eq!(
        Cyclo::zeta(5).try_mul(&Cyclo::zeta(7)),
        Err(ExactError::ConductorMismatch(5, 7))
    );
    assert!(matches!(
        Cyclo::zeta(9).embed(15),
        Err(ExactError::EmbedUnsupported { from: 9, to: 15 })
    ));
    assert!(Rat::zero().numer().is_zero());
}
