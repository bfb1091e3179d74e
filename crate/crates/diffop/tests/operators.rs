use lode_diffop::{
    exp_product, gauge_inverse, gauge_transform, pullback, symmetric_power, symmetric_power_kills_one,
    symmetric_power_order, DiffopError, LinODE, RatFun,
};
use lode_exactnum::rat;

fn rf(num: &[i64], den: &[i64]) -> RatFun {
    RatFun::from_i64(num, den)
}

fn d2() -> LinODE {
    LinODE::pure_derivative(2)
}

#[test]
fn gauge_examples() {
    let m = gauge_transform(&d2(), &[RatFun::t(), RatFun::one()]).unwrap();
    let expected = LinODE::new(vec![rf(&[2], &[-1, 0, 1]), rf(&[0, -2], &[-1, 0, 1])]);
    assert_eq!(m, expected);
    assert_eq!(gauge_transform(&d2(), &[RatFun::zero(), RatFun::one()]), Err(DiffopError::DegenerateGauge));
    assert_eq!(gauge_transform(&d2(), &[RatFun::one()]), Err(DiffopError::Shape { expected: 2, got: 1 }));
    // scaling by a constant changes nothing
    assert_eq!(gauge_transform(&expected, &[RatFun::from_int(5), RatFun::zero()]).unwrap(), expected);
}

#[test]
fn pullback_examples() {
    let t2 = rf(&[0, 0, 1], &[1]);
    assert_eq!(pullback(&d2(), &t2).unwrap(), LinODE::new(vec![RatFun::zero(), rf(&[-1], &[0, 1])]));
    assert_eq!(pullback(&d2(), &RatFun::from_int(3)), Err(DiffopError::ConstantPullback));
    let inv = rf(&[1], &[0, 1]);
    let l = LinODE::new(vec![rf(&[1], &[0, 1]), rf(&[3, 1], &[0, -1, 1])]);
    assert_eq!(pullback(&pullback(&l, &inv).unwrap(), &inv).unwrap(), l);
}

#[test]
fn exp_product_examples() {
    let d = LinODE::pure_derivative(1);
    assert_eq!(exp_product(&d, &RatFun::t(), 1).unwrap(), LinODE::new(vec![rf(&[-1], &[0, 1])]));
    assert_eq!(exp_product(&d, &RatFun::zero(), 1), Err(DiffopError::ZeroScale));
    assert_eq!(exp_product(&d, &RatFun::t(), 0), Err(DiffopError::ZeroExponent));
    // t^(1/2) solves D - 1/(2t)
    assert_eq!(exp_product(&d, &RatFun::t(), 2).unwrap(), LinODE::new(vec![rf(&[-1], &[0, 2])]));
}

#[test]
fn apply_to_solutions() {
    let m = gauge_transform(&d2(), &[RatFun::t(), RatFun::one()]).unwrap();
    // y = 1 gives x = t; y = t gives x = t^2 + 1
    assert!(m.apply(&RatFun::t()).is_zero());
    assert!(m.apply(&rf(&[1, 0, 1], &[1])).is_zero());
    assert!(!m.apply(&RatFun::one()).is_zero());
}

#[test]
fn symmetric_power_examples() {
    assert_eq!(symmetric_power(&d2(), 2).unwrap(), LinODE::pure_derivative(3));
    assert_eq!(symmetric_power(&d2(), 5).unwrap(), LinODE::pure_derivative(6));
    let l = LinODE::new(vec![rf(&[1], &[0, 1]), rf(&[3, 1], &[0, -1, 1])]);
    assert_eq!(symmetric_power(&l, 1).unwrap(), l);
    assert_eq!(symmetric_power(&l, 0), Err(DiffopError::ZeroExponent));
    // D^2 - 1/t D has solutions 1, t^2; squares span 1, t^2, t^4
    let e = LinODE::new(vec![RatFun::zero(), rf(&[-1], &[0, 1])]);
    let s2 = symmetric_power(&e, 2).unwrap();
    assert_eq!(s2.order(), 3);
    for k in [0, 2, 4] {
        let mut num = vec![0; k + 1];
        num[k] = 1;
        assert!(s2.apply(&rf(&num, &[1])).is_zero());
    }
    assert!(symmetric_power_kills_one(&e, 3).unwrap());
}

#[test]
fn symmetric_power_of_reducible_square() {
    // solutions of a second order operator whose solutions are y1 = t, y2 = t^3:
    // D^2 - 3/t D + 3/t^2
    let l = LinODE::new(vec![rf(&[3], &[0, 0, 1]), rf(&[-3], &[0, 1])]);
    let s3 = symmetric_power(&l, 3).unwrap();
    assert_eq!(s3.order(), 4);
    for k in [3, 5, 7, 9] {
        let mut num = vec![0; k + 1];
        num[k] = 1;
        assert!(s3.apply(&rf(&num, &[1])).is_zero(), "t^{k}");
    }
    assert!(!symmetric_power_kills_one(&l, 3).unwrap());
    assert_eq!(symmetric_power_order(&l, 3).unwrap(), 4);
}

#[test]
fn symmetric_power_of_order_three() {
    // D^3: solutions 1, t, t^2; S^2 has order 5 (degree <= 4 polynomials)
    let s = symmetric_power(&LinODE::pure_derivative(3), 2).unwrap();
    assert_eq!(s, LinODE::pure_derivative(5));
    let s = symmetric_power(&LinODE::pure_derivative(3), 3).unwrap();
    assert_eq!(s, LinODE::pure_derivative(7));
}

#[test]
fn gauge_inverse_round_trip() {
    let l = LinODE::new(vec![rf(&[1], &[0, 1]), rf(&[3, 1], &[0, -1, 1])]);
    let f = [rf(&[1, 2], &[1]), rf(&[0, 1], &[1, 1])];
    let m = gauge_transform(&l, &f).unwrap();
    let g = gauge_inverse(&l, &f).unwrap();
    assert_eq!(gauge_transform(&m, &g).unwrap(), l);
}

#[test]
fn cleared_form() {
    let l = LinODE::new(vec![rf(&[1], &[0, 2]), rf(&[3, 1], &[0, -1, 1])]);
    let c = l.cleared();
    // 2t(t-1) D^2 + 2(3+t) D + (t-1)
    let as_i64: Vec<Vec<i64>> =
        c.iter().map(|p| p.0.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
    assert_eq!(as_i64, vec![vec![-1, 1], vec![6, 2], vec![0, -2, 2]]);
    assert!(l.is_ordinary_point(&rat(2, 1)));
    assert!(!l.is_ordinary_point(&rat(0, 1)));
}

#[test]
fn serde_round_trip() {
    let l = LinODE::new(vec![rf(&[1], &[0, 2]), rf(&[3, 1], &[0, -1, 1])]);
    let s = serde_json::to_string(&l).unwrap();
    assert_eq!(
        s,
        r#"{"order":2,"coeffs":[{"num":["1/2"],"den":["0","1"]},{"num":["3","1"],"den":["0","-1","1"]}]}"#
    );
    let back: LinODE = serde_json::from_str(&s).unwrap();
    assert_eq!(back, l);
    assert!(serde_json::from_str::<LinODE>(r#"{"order":2,"coeffs":[]}"#).is_err());
    assert!(serde_json::from_str::<RatFun>(r#"{"num":["1"],"den":["0"]}"#).is_err());
}
