use lode_diffop::{LinODE, RatFun};
use lode_exactnum::{rat, QPoly, Rat};
use lode_series::{
    hyp3f2_series, hypergeometric_series, monomial_membership, residual, series_solutions, span_membership,
    span_membership_report, SeriesError, TruncSeries,
};
use num_traits::Zero;

fn rf(num: &[i64], den: &[i64]) -> RatFun {
    RatFun::from_i64(num, den)
}

fn scaled(f: RatFun, c: Rat) -> RatFun {
    f.scale(&c)
}

/// Third order operator with branch type 2,7,7.
fn vdpu() -> LinODE {
    // t(t-1), t^2(t-1)^2, t^3(t-1)^3
    let d1 = [0, -1, 1];
    let d2 = [0, 0, 1, -2, 1];
    let d3 = [0, 0, 0, -1, 3, -3, 1];
    LinODE::new(vec![
        scaled(rf(&[-686, 343, -5273, 6336], &d3), rat(1, 2744)),
        scaled(rf(&[-7, -161, 288], &d2), rat(1, 28)),
        rf(&[-2, 7], &d1),
    ])
}

fn klein() -> LinODE {
    let d = [0, 0, -1, 1];
    LinODE::new(vec![
        scaled(rf(&[1], &d), rat(-85, 74088)),
        scaled(rf(&[-56, 387], &d), rat(1, 252)),
        scaled(rf(&[-4, 7], &[0, -1, 1]), rat(1, 2)),
    ])
}

#[test]
fn solutions_of_second_derivative() {
    let sols = series_solutions(&LinODE::pure_derivative(2), &rat(0, 1), 10).unwrap();
    assert_eq!(sols[0], TruncSeries::from_poly(&QPoly::one(), &rat(0, 1), 10));
    assert_eq!(sols[1], TruncSeries::from_poly(&QPoly::t(), &rat(0, 1), 10));
}

#[test]
fn unit_triangular_initial_data() {
    let sols = series_solutions(&vdpu(), &rat(2, 1), 12).unwrap();
    for (j, y) in sols.iter().enumerate() {
        let mut d = y.clone();
        for i in 0..3 {
            let expected = if i == j { 1 } else { 0 };
            assert_eq!(d.coeff(0), rat(expected, 1), "y_{j}^({i})");
            d = d.derivative();
        }
    }
}

#[test]
fn residuals_vanish_on_the_window() {
    let l = vdpu();
    for y in series_solutions(&l, &rat(2, 1), 60).unwrap() {
        let r = residual(&l, &y);
        assert_eq!(r.order(), 57);
        assert!(r.is_zero());
    }
    // a perturbed series leaves a residual
    let y = &series_solutions(&l, &rat(2, 1), 20).unwrap()[0];
    let mut c = y.coeffs().to_vec();
    c[10] += rat(1, 1);
    assert!(!residual(&l, &TruncSeries::new(rat(2, 1), c)).is_zero());
}

#[test]
fn singular_expansion_point() {
    assert_eq!(
        series_solutions(&klein(), &rat(0, 1), 10),
        Err(SeriesError::SingularExpansionPoint(rat(0, 1)))
    );
    assert!(series_solutions(&klein(), &rat(1, 1), 10).is_err());
}

#[test]
fn hypergeometric_coefficients() {
    let (a1, a2, a3, b1, b2) = (rat(-1, 42), rat(5, 42), rat(17, 42), rat(1, 3), rat(2, 3));
    let s = hyp3f2_series([&a1, &a2, &a3], [&b1, &b2], 5).unwrap();
    assert_eq!(s.coeff(0), rat(1, 1));
    assert_eq!(s.coeff(1), rat(-85, 16464));
    assert_eq!(
        hyp3f2_series([&a1, &a2, &a3], [&rat(-2, 1), &b2], 5),
        Err(SeriesError::InvalidParameter(rat(-2, 1)))
    );
    assert!(hyp3f2_series([&a1, &a2, &a3], [&rat(0, 1), &b2], 5).is_err());
    // the Klein series satisfies the Klein operator at its singular point
    let s = hyp3f2_series([&a1, &a2, &a3], [&b1, &b2], 63).unwrap();
    assert!(residual(&klein(), &s).is_zero());
    // 2F1(1,1;2|t) = -log(1-t)/t
    let s = hypergeometric_series(&[rat(1, 1), rat(1, 1)], &[rat(2, 1)], 6).unwrap();
    assert_eq!(s.coeff(4), rat(1, 5));
}

#[test]
fn series_arithmetic() {
    let t0 = rat(2, 1);
    let f = rf(&[1, 1], &[-1, 1]);
    let s = TruncSeries::from_ratfun(&f, &t0, 12).unwrap();
    let inv = TruncSeries::from_ratfun(&f.inv().unwrap(), &t0, 12).unwrap();
    assert_eq!(s.mul(&inv), TruncSeries::from_poly(&QPoly::one(), &t0, 12));
    assert_eq!(s.derivative(), TruncSeries::from_ratfun(&f.derivative(), &t0, 11).unwrap());
    assert_eq!(s.eval_polynomial(&rat(0, 1)), rat(3, 1));
    assert_eq!(
        TruncSeries::from_ratfun(&rf(&[1], &[-2, 1]), &t0, 3),
        Err(SeriesError::PoleAtBasePoint(t0.clone()))
    );
}

#[test]
fn membership_examples() {
    let t0 = rat(0, 1);
    let one = TruncSeries::from_poly(&QPoly::one(), &t0, 8);
    let t = TruncSeries::from_poly(&QPoly::t(), &t0, 8);
    let t2 = t.mul(&t);
    assert!(span_membership(&[one.clone(), t.clone()], &t).unwrap());
    assert!(span_membership(&[one.clone(), t.clone()], &t.scale(&rat(-3, 7)).add(&one)).unwrap());
    assert!(!span_membership(&[one.clone(), t.clone()], &t2).unwrap());
    assert_eq!(
        span_membership(&[one.clone(), t.clone()], &t.truncate(6)),
        Err(SeriesError::Mismatch)
    );
    let short = one.truncate(2);
    assert_eq!(
        span_membership(&[short.clone(), t.truncate(2)], &short),
        Err(SeriesError::InconclusiveTruncation { rows: 3, cols: 2 })
    );
    let r = span_membership_report(&[one, t], &t2).unwrap();
    assert!(r.certified && !r.member && r.rank == 2);
}

#[test]
fn modular_membership_for_monomials() {
    // D^2 - (1/t) D has solutions 1, t^2; at t0 = 1 the basis is unit
    // triangular, and squares span 1, t^2, t^4
    let l = LinODE::new(vec![RatFun::zero(), rf(&[-1], &[0, 1])]);
    let t0 = rat(1, 1);
    let basis = series_solutions(&l, &t0, 20).unwrap();
    let t4 = TruncSeries::from_poly(&QPoly::from_i64(&[0, 0, 0, 0, 1]), &t0, 20);
    let t3 = TruncSeries::from_poly(&QPoly::from_i64(&[0, 0, 0, 1]), &t0, 20);
    let yes = monomial_membership(&basis, 2, &t4).unwrap();
    assert!(yes.member && yes.certified);
    assert_eq!(yes.rank, 3);
    let no = monomial_membership(&basis, 2, &t3).unwrap();
    assert!(!no.member);
    // products of the solutions of a generic operator
    let v = vdpu();
    let basis = series_solutions(&v, &rat(2, 1), 30).unwrap();
    let cand = basis[0].mul(&basis[1]).scale(&rat(5, 3)).sub(&basis[2].mul(&basis[2]));
    assert!(monomial_membership(&basis, 2, &cand).unwrap().member);
    assert!(!monomial_membership(&basis, 2, &basis[0]).unwrap().member);
    assert!(Rat::zero().is_zero());
}
