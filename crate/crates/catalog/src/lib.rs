//! Standard hypergeometric equations attached to the primitive groups, with
//! their unit invariants, hauptmoduls and invariant curves.

mod report;
mod verify;

pub use report::{Check, Status};
pub use verify::{verify_standard, Checks, StandardReport};

use lode_diffop::{LinODE, RatFun};
use lode_exactnum::{parse_rat, rat, rat_to_string, QPoly, Rat};
use lode_groups::GroupId;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("there is no hypergeometric standard equation for group {0}")]
    NoHypergeometricStandard(&'static str),
}

/// Variable in which the hypergeometric series is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Argument {
    #[serde(rename = "t")]
    T,
    #[serde(rename = "1/t")]
    InvT,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypParams {
    #[serde(with = "rats")]
    pub upper: Vec<Rat>,
    #[serde(with = "rats")]
    pub lower: Vec<Rat>,
}

mod rats {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rat_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|x| parse_rat(x).map_err(serde::de::Error::custom)).collect()
    }
}

/// A named invariant with its degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedInvariant {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardEquation {
    pub group: GroupId,
    /// `"printed"` or a description of an alternative reading.
    pub reading: String,
    pub operator: LinODE,
    pub hyp_params: HypParams,
    pub argument: Argument,
    /// Invariant taking the value 1 on a suitable solution basis.
    pub unit_invariant: NamedInvariant,
    /// Invariant expression whose value is `t`.
    pub hauptmodul: String,
    /// Invariant vanishing on the Schwarz image.
    pub curve: NamedInvariant,
    pub lambda: u32,
}

/// `c * num(t) / (t^e (t - 1))`.
fn coeff(c: Rat, num: &[i64], e: usize) -> RatFun {
    let mut den = vec![0i64; e];
    den.extend([-1, 1]);
    RatFun::from_i64(num, &den).scale(&c)
}

fn params(upper: [Rat; 3], lower: [Rat; 2]) -> HypParams {
    HypParams { upper: upper.to_vec(), lower: lower.to_vec() }
}

fn inv(name: &str, degree: u32) -> NamedInvariant {
    NamedInvariant { name: name.into(), degree }
}

fn klein() -> StandardEquation {
    StandardEquation {
        group: GroupId::G168,
        reading: "printed".into(),
        operator: LinODE::new(vec![
            coeff(rat(-85, 74088), &[1], 2),
            coeff(rat(1, 252), &[-56, 387], 2),
            coeff(rat(1, 2), &[-4, 7], 1),
        ]),
        hyp_params: params([rat(-1, 42), rat(5, 42), rat(17, 42)], [rat(1, 3), rat(2, 3)]),
        argument: Argument::T,
        unit_invariant: inv("F6", 6),
        hauptmodul: "F14^3/(1728*F6^7)".into(),
        curve: inv("F4", 4),
        lambda: 6,
    }
}

fn h216() -> StandardEquation {
    StandardEquation {
        group: GroupId::H216SL3,
        reading: "printed".into(),
        operator: LinODE::new(vec![
            coeff(rat(-17, 5832), &[1], 3),
            coeff(rat(1, 432), &[-96, 757], 2),
            coeff(rat(1, 3), &[-6, 11], 1),
        ]),
        hyp_params: params([rat(17, 36), rat(2, 9), rat(-1, 36)], [rat(1, 3), rat(2, 3)]),
        argument: Argument::InvT,
        unit_invariant: inv("R", 9),
        hauptmodul: "6^6*R^4/Phi12^3".into(),
        curve: inv("F6", 6),
        lambda: 9,
    }
}

fn f36() -> StandardEquation {
    StandardEquation {
        group: GroupId::F36SL3,
        reading: "printed".into(),
        operator: LinODE::new(vec![
            coeff(rat(-5, 864), &[1], 3),
            coeff(rat(5, 48), &[-5, 21], 2),
            coeff(rat(1, 2), &[-5, 8], 1),
        ]),
        hyp_params: params([rat(-1, 12), rat(1, 6), rat(5, 12)], [rat(1, 4), rat(3, 4)]),
        argument: Argument::InvT,
        unit_invariant: inv("F6", 6),
        hauptmodul: "F6^3/(F6^3-432*R^2)".into(),
        curve: inv("F3", 3),
        lambda: 6,
    }
}

fn a6() -> StandardEquation {
    StandardEquation {
        group: GroupId::A6SL3,
        reading: "printed".into(),
        operator: LinODE::new(vec![
            coeff(rat(-77, 43200), &[1], 2),
            coeff(rat(1, 1200), &[-450, 2213], 2),
            coeff(rat(3, 4), &[-3, 5], 1),
        ]),
        hyp_params: params([rat(-1, 60), rat(11, 60), rat(7, 12)], [rat(1, 2), rat(3, 4)]),
        argument: Argument::T,
        unit_invariant: inv("F12", 12),
        hauptmodul: "3*F30^2/(8*F12^5)".into(),
        curve: inv("F6", 6),
        lambda: 12,
    }
}

fn a5() -> StandardEquation {
    StandardEquation {
        group: GroupId::A5,
        reading: "printed".into(),
        operator: LinODE::new(vec![
            coeff(rat(-11, 5400), &[1], 2),
            coeff(rat(1, 900), &[-200, 1389], 2),
            coeff(rat(1, 2), &[-4, 7], 1),
        ]),
        hyp_params: params([rat(-1, 30), rat(1, 6), rat(11, 30)], [rat(1, 3), rat(2, 3)]),
        argument: Argument::T,
        unit_invariant: inv("F6", 6),
        hauptmodul: "F10^3/(1728*F6^5)".into(),
        curve: inv("F2", 2),
        lambda: 6,
    }
}

/// The printed standard equation of a group. Groups differing only by the
/// scalar factor `C3` share the record of their projective image.
pub fn standard_equation(id: GroupId) -> Result<StandardEquation, CatalogError> {
    match id {
        GroupId::G168 | GroupId::G168xC3 => Ok(klein()),
        GroupId::H216SL3 => Ok(h216()),
        GroupId::F36SL3 => Ok(f36()),
        GroupId::A6SL3 => Ok(a6()),
        GroupId::A5 | GroupId::A5xC3 => Ok(a5()),
        GroupId::H72SL3 => Err(CatalogError::NoHypergeometricStandard(id.key())),
    }
}

/// The five records, in catalog order.
pub fn all_standard_equations() -> Vec<StandardEquation> {
    vec![klein(), h216(), f36(), a6(), a5()]
}

/// Alternative readings of a printed record that is not internally
/// consistent. The Hessian record prints `t^3 (t - 1)` in the last
/// denominator together with the argument `1/t`; the operator built from its
/// parameters in the argument `t` differs only by `t^2 (t - 1)` there.
pub fn alternative_readings(id: GroupId) -> Vec<StandardEquation> {
    match id {
        GroupId::H216SL3 => {
            let mut eq = h216();
            eq.reading = "argument t with t^2(t-1) in the last denominator".into();
            eq.argument = Argument::T;
            let mut c = eq.operator.coeffs().to_vec();
            c[0] = coeff(rat(-17, 5832), &[1], 2);
            eq.operator = LinODE::new(c);
            vec![eq]
        }
        _ => vec![],
    }
}

/// Stirling numbers of the second kind, `theta^k = sum_j S(k, j) t^j D^j`.
fn stirling2(n: usize) -> Vec<Vec<i64>> {
    let mut s = vec![vec![0i64; n + 1]; n + 1];
    s[0][0] = 1;
    for k in 1..=n {
        for j in 1..=k {
            s[k][j] = j as i64 * s[k - 1][j] + s[k - 1][j - 1];
        }
    }
    s
}

/// `prod (sign * theta + r)` as a polynomial in `theta`.
fn theta_product(roots: &[Rat], sign: &Rat) -> QPoly {
    roots.iter().fold(QPoly::one(), |acc, r| acc.mul(&QPoly::new(vec![r.clone(), sign.clone()])))
}

/// The monic operator annihilating `pFq(upper; lower | z)` with `z = t` or
/// `z = 1/t`, from `theta prod(theta + b - 1) - z prod(theta + a)`.
pub fn hypergeometric_operator(upper: &[Rat], lower: &[Rat], argument: Argument) -> LinODE {
    assert_eq!(upper.len(), lower.len() + 1, "expected p = q + 1 parameters");
    let n = upper.len();
    let sign = match argument {
        Argument::T => Rat::one(),
        Argument::InvT => -Rat::one(),
    };
    let mut shifted = vec![Rat::zero()];
    shifted.extend(lower.iter().map(|b| b - Rat::one()));
    let p = theta_product(&shifted, &sign);
    let q = theta_product(upper, &sign);
    // multipliers of P(theta) and Q(theta) after clearing 1/t
    let (mp, mq) = match argument {
        Argument::T => (QPoly::one(), QPoly::from_i64(&[0, -1])),
        Argument::InvT => (QPoly::t(), QPoly::from_i64(&[-1])),
    };
    let s = stirling2(n);
    let coeffs: Vec<QPoly> = (0..=n)
        .map(|j| {
            let cp = (j..=n).fold(Rat::zero(), |acc, k| acc + p.coeff(k) * Rat::from_integer(s[k][j].into()));
            let cq = (j..=n).fold(Rat::zero(), |acc, k| acc + q.coeff(k) * Rat::from_integer(s[k][j].into()));
            mp.scale(&cp).add(&mq.scale(&cq)).mul(&QPoly::t().pow(j as u32))
        })
        .collect();
    let lead = RatFun::from_poly(coeffs[n].clone());
    LinODE::new(coeffs[..n].iter().map(|c| &RatFun::from_poly(c.clone()) / &lead).collect())
}

/// The `2F1(a, b; c | t)` operator.
pub fn hyp2f1_operator(a: &Rat, b: &Rat, c: &Rat) -> LinODE {
    hypergeometric_operator(&[a.clone(), b.clone()], &[c.clone()], Argument::T)
}
