//! Exact verification of a standard-equation record.

use crate::{hyp2f1_operator, Argument, Check, StandardEquation};
use lode_diffop::{pullback, symmetric_power, symmetric_power_kills_one, RatFun};
use lode_exactnum::{rat, rat_to_string, Rat};
use lode_groups::GroupId;
use lode_ratsol::rational_solutions;
use lode_series::{hypergeometric_series, residual};
use num_traits::{One, Zero};
use serde::Serialize;

/// Highest order at which the series residual is required to vanish.
pub const SERIES_ORDER: usize = 60;

/// Which families of checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub series: bool,
    pub unit: bool,
    pub curve: bool,
    /// Also run unit checks of symmetric powers above the ninth.
    pub stretch: bool,
}

impl Checks {
    pub fn all() -> Checks {
        Checks { series: true, unit: true, curve: true, stretch: false }
    }

    /// Parses a comma-separated list such as `series,unit,curve`.
    pub fn parse(s: &str) -> Result<Checks, String> {
        let mut c = Checks { series: false, unit: false, curve: false, stretch: false };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "series" => c.series = true,
                "unit" => c.unit = true,
                "curve" => c.curve = true,
                "stretch" => c.stretch = true,
                other => return Err(format!("unknown check `{other}`")),
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardReport {
    pub group: GroupId,
    pub reading: String,
    pub checks: Vec<Check>,
}

impl StandardReport {
    /// No check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != crate::Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `a_0 = c / (t^e (t - 1))` with `c` the product of the upper parameters.
fn parameter_product(eq: &StandardEquation) -> Check {
    let a0 = eq.operator.coeff(0);
    let prod = eq.hyp_params.upper.iter().fold(Rat::one(), |acc, a| acc * a);
    let shape = a0.num().degree() == Some(0) && {
        let d = a0.den();
        let e = d.degree().unwrap_or(0).saturating_sub(1);
        let mut expect = vec![0i64; e];
        expect.extend([-1, 1]);
        *d == lode_exactnum::QPoly::from_i64(&expect)
    };
    Check::from_result("parameter-product", shape && a0.num().coeff(0) == prod, || {
        format!("a0 = {a0}, product of upper parameters {}", rat_to_string(&prod))
    })
}

fn series_check(eq: &StandardEquation) -> Check {
    let n = eq.operator.order();
    let y = match hypergeometric_series(&eq.hyp_params.upper, &eq.hyp_params.lower, SERIES_ORDER + n) {
        Ok(y) => y,
        Err(e) => return Check::fail("series", e.to_string()),
    };
    let op = match eq.argument {
        Argument::T => eq.operator.clone(),
        Argument::InvT => match pullback(&eq.operator, &RatFun::from_i64(&[1], &[0, 1])) {
            Ok(op) => op,
            Err(e) => return Check::fail("series", e.to_string()),
        },
    };
    let r = residual(&op, &y);
    let first = r.coeffs().iter().position(|c| !c.is_zero());
    Check::from_result("series", first.is_none(), || {
        let i = first.unwrap();
        format!("residual coefficient of order {i} is {}", rat_to_string(&r.coeffs()[i]))
    })
    .with_note(format!("residual through order {}", r.coeffs().len().saturating_sub(1)))
}

fn unit_check(eq: &StandardEquation, stretch: bool) -> Check {
    let name = format!("unit:S^{}", eq.lambda);
    if eq.lambda > 9 && !stretch {
        return Check::skipped(name, "stretch check, not requested");
    }
    match symmetric_power_kills_one(&eq.operator, eq.lambda) {
        Ok(ok) => Check::from_result(name, ok, || format!("S^{} does not annihilate 1", eq.lambda)),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

fn curve_check(eq: &StandardEquation) -> Check {
    let d = eq.curve.degree;
    let name = format!("curve:ratsol(S^{d})");
    let sols = symmetric_power(&eq.operator, d).map_err(|e| e.to_string()).and_then(|s| {
        rational_solutions(&s).map_err(|e| e.to_string())
    });
    match sols {
        Ok(b) => Check::from_result(name, b.is_empty(), || {
            format!("rational solutions {}", b.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "))
        }),
        Err(e) => Check::fail(name, e),
    }
}

fn symmetric_square_check(eq: &StandardEquation) -> Check {
    let base = hyp2f1_operator(&rat(-1, 60), &rat(11, 60), &rat(2, 3));
    match symmetric_power(&base, 2) {
        Ok(s) => Check::from_result("symmetric-square", s == eq.operator, || {
            format!("S^2 of the 2F1 operator is {s}")
        }),
        Err(e) => Check::fail("symmetric-square", e.to_string()),
    }
}

pub fn verify_standard(eq: &StandardEquation, checks: &Checks) -> StandardReport {
    let mut out = vec![parameter_product(eq)];
    if checks.series {
        out.push(series_check(eq));
        if eq.group == GroupId::A5 {
            out.push(symmetric_square_check(eq));
        }
    }
    if checks.unit {
        out.push(unit_check(eq, checks.stretch));
    }
    if checks.curve {
        out.push(curve_check(eq));
    }
    out.push(Check::skipped(
        "hauptmodul",
        format!("{} = t takes values outside Q(t) here; checked on the worked example", eq.hauptmodul),
    ));
    StandardReport { group: eq.group, reading: eq.reading.clone(), checks: out }
}
