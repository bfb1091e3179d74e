use lode_catalog::{
    all_standard_equations, alternative_readings, hyp2f1_operator, hypergeometric_operator, standard_equation,
    verify_standard, Argument, CatalogError, Checks, Status,
};
use lode_diffop::symmetric_power;
use lode_exactnum::rat;
use lode_groups::GroupId;

fn series_only() -> Checks {
    Checks { series: true, unit: false, curve: false, stretch: false }
}

#[test]
fn records() {
    let k = standard_equation(GroupId::G168).unwrap();
    assert_eq!(k.hyp_params.upper, vec![rat(-1, 42), rat(5, 42), rat(17, 42)]);
    assert_eq!(k.hyp_params.lower, vec![rat(1, 3), rat(2, 3)]);
    assert_eq!(standard_equation(GroupId::H216SL3).unwrap().argument, Argument::InvT);
    assert_eq!(standard_equation(GroupId::H72SL3), Err(CatalogError::NoHypergeometricStandard("h72")));
    assert_eq!(standard_equation(GroupId::G168xC3).unwrap(), k);
    assert_eq!(standard_equation(GroupId::A5xC3).unwrap(), standard_equation(GroupId::A5).unwrap());
    for eq in all_standard_equations() {
        assert_eq!(eq.unit_invariant.degree, eq.lambda);
        assert_eq!(eq.operator.order(), 3);
    }
}

#[test]
fn operators_from_parameters() {
    for eq in all_standard_equations() {
        let built = hypergeometric_operator(&eq.hyp_params.upper, &eq.hyp_params.lower, eq.argument);
        assert_eq!(built == eq.operator, eq.group != GroupId::H216SL3, "{:?}", eq.group);
    }
    let alt = &alternative_readings(GroupId::H216SL3)[0];
    assert_eq!(hypergeometric_operator(&alt.hyp_params.upper, &alt.hyp_params.lower, alt.argument), alt.operator);
    // the printed Hessian operator agrees with the argument-t operator except in a0
    let printed = standard_equation(GroupId::H216SL3).unwrap().operator;
    assert_eq!(printed.coeffs()[1..], alt.operator.coeffs()[1..]);
}

#[test]
fn symmetric_square_of_two_f_one() {
    let s = symmetric_power(&hyp2f1_operator(&rat(-1, 60), &rat(11, 60), &rat(2, 3)), 2).unwrap();
    assert_eq!(s, standard_equation(GroupId::A5).unwrap().operator);
}

#[test]
fn series_residuals() {
    for eq in all_standard_equations() {
        let r = verify_standard(&eq, &series_only());
        assert_eq!(r.check("parameter-product").unwrap().status, Status::Pass);
        let s = r.check("series").unwrap();
        if eq.group == GroupId::H216SL3 {
            assert_eq!(s.status, Status::Fail);
            assert!(s.witness.as_ref().unwrap().starts_with("residual coefficient of order 0"));
        } else {
            assert_eq!(s.status, Status::Pass, "{:?}", eq.group);
        }
    }
    let alt = &alternative_readings(GroupId::H216SL3)[0];
    assert!(verify_standard(alt, &series_only()).passed());
}

#[test]
fn curve_and_unit_checks_for_klein() {
    let r = verify_standard(&standard_equation(GroupId::G168).unwrap(), &Checks::all());
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.check("unit:S^6").unwrap().status, Status::Pass);
    assert_eq!(r.check("curve:ratsol(S^4)").unwrap().status, Status::Pass);
    assert_eq!(r.check("hauptmodul").unwrap().status, Status::Skipped);
    let a6 = verify_standard(&standard_equation(GroupId::A6SL3).unwrap(), &Checks { curve: false, ..Checks::all() });
    assert_eq!(a6.check("unit:S^12").unwrap().status, Status::Skipped);
}

#[test]
fn check_lists() {
    let c = Checks::parse("series, curve").unwrap();
    assert!(c.series && c.curve && !c.unit && !c.stretch);
    assert!(Checks::parse("series,bogus").is_err());
}

#[test]
fn serde_round_trip() {
    for eq in all_standard_equations() {
        let s = serde_json::to_string(&eq).unwrap();
        assert_eq!(serde_json::from_str::<lode_catalog::StandardEquation>(&s).unwrap(), eq);
    }
    let s = serde_json::to_string(&standard_equation(GroupId::F36SL3).unwrap()).unwrap();
    assert!(s.contains("\"argument\":\"1/t\""));
}
