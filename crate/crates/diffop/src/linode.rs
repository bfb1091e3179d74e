//! Monic linear differential operators `D^n + a_{n-1} D^{n-1} + ... + a_0`
//! with `D = d/dt`.

use crate::ratfun::RatFun;
use crate::DiffopError;
use lode_exactnum::{QPoly, Rat, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinODE {
    coeffs: Vec<RatFun>,
}

impl LinODE {
    /// Operator with coefficients `a_0, ..., a_{n-1}`.
    pub fn new(coeffs: Vec<RatFun>) -> LinODE {
        assert!(!coeffs.is_empty(), "order must be positive");
        LinODE { coeffs }
    }

    /// `D^n`.
    pub fn pure_derivative(n: usize) -> LinODE {
        LinODE::new(vec![RatFun::zero(); n])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RatFun {
        &self.coeffs[i]
    }

    /// `L(r)` for a rational function `r`.
    pub fn apply(&self, r: &RatFun) -> RatFun {
        let mut d = r.clone();
        let mut acc = RatFun::zero();
        for a in &self.coeffs {
            if !a.is_zero() && !d.is_zero() {
                acc = &acc + &(a * &d);
            }
            d = d.derivative();
        }
        &acc + &d
    }

    /// Integer polynomial form `p_n D^n + ... + p_0` with `p_n` the least
    /// common denominator (positive leading coefficient) and all `p_k`
    /// jointly primitive.
    pub fn cleared(&self) -> Vec<ZPoly> {
        let q = RatFun::common_denominator(&self.coeffs);
        let mut ps: Vec<QPoly> = self.coeffs.iter().map(|a| a.times_poly(&q).unwrap()).collect();
        ps.push(q);
        let mut den = BigInt::one();
        for p in &ps {
            den = den.lcm(&p.to_zpoly().1);
        }
        let zs: Vec<ZPoly> = ps
            .iter()
            .map(|p| {
                let scaled = p.scale(&Rat::from_integer(den.clone()));
                ZPoly::new(scaled.0.iter().map(|c| c.to_integer()).collect())
            })
            .collect();
        let mut g = BigInt::from(0);
        for z in &zs {
            g = g.gcd(&z.content());
        }
        zs.iter().map(|z| if g.is_one() { z.clone() } else { ZPoly::new(z.0.iter().map(|c| c / &g).collect()) }).collect()
    }

    /// Rebuilds the monic operator from polynomial coefficients `p_0..p_n`.
    pub fn from_polys(ps: &[QPoly]) -> Result<LinODE, DiffopError> {
        let (lead, rest) = ps.split_last().ok_or(DiffopError::ZeroLeading)?;
        if lead.is_zero() || rest.is_empty() {
            return Err(DiffopError::ZeroLeading);
        }
        Ok(LinODE::new(rest.iter().map(|p| RatFun::new(p.clone(), lead.clone())).collect()))
    }

    /// Monic multiple-free finite singular points: the monic least common
    /// denominator of the coefficients.
    pub fn singular_polynomial(&self) -> QPoly {
        RatFun::common_denominator(&self.coeffs)
    }

    pub fn is_ordinary_point(&self, t0: &Rat) -> bool {
        self.coeffs.iter().all(|a| a.eval(t0).is_some())
    }
}

impl fmt::Display for LinODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.order())?;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if !a.is_zero() {
                write!(f, " + [{a}] D^{k}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LinODERepr {
    order: usize,
    coeffs: Vec<RatFun>,
}

impl Serialize for LinODE {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LinODERepr { order: self.order(), coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinODE {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<LinODE, D::Error> {
        let r = LinODERepr::deserialize(d)?;
        if r.order == 0 || r.coeffs.len() != r.order {
            return Err(D::Error::custom(format!("expected {} coefficients, got {}", r.order, r.coeffs.len())));
        }
        Ok(LinODE::new(r.coeffs))
    }
}
