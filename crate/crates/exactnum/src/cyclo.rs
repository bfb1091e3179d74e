//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! Elements are stored as an integer coefficient vector over the power basis
//! `1, z, ..., z^(phi(m)-1)` (with `z = zeta_m`) and one positive common
//! denominator, always reduced modulo the cyclotomic polynomial `Phi_m`.
//! The representation is canonical, so equality is structural.
//!
//! Rational elements may be combined with elements of any conductor; two
//! non-rational elements must share a conductor (use [`Cyclo::embed`] first).

use crate::error::ExactError;
use crate::linalg::solve_rat;
use crate::rat::{big_gcd, parse_rat, rat_to_string, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Per-conductor data: `Phi_m` and reduction rules for `z^k`.
#[derive(Debug)]
pub struct CycloCtx {
    m: u32,
    phi: usize,
    phi_poly: Vec<i64>,
    /// `red[k]` = `z^k mod Phi_m` as sparse `(index, coefficient)` pairs.
    red: Vec<Vec<(usize, i64)>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    if r.len() < den.len() {
        return vec![0];
    }
    let mut q = vec![0i64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                r[i + j] -= c * d;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

fn cyclotomic_poly(m: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let pd = cyclotomic_poly(d, memo);
            p = poly_div_exact(&p, &pd);
        }
    }
    memo.insert(m, p.clone());
    p
}

impl CycloCtx {
    fn build(m: u32) -> CycloCtx {
        assert!(m >= 1, "conductor must be positive");
        let mut memo = HashMap::new();
        let phi_poly = cyclotomic_poly(m, &mut memo);
        let phi = phi_poly.len() - 1;
        let top = (2 * phi).max(m as usize + 1);
        let mut red = Vec::with_capacity(top);
        let mut cur = vec![0i128; phi];
        cur[0] = 1;
        for _ in 0..top {
            red.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, i64::try_from(c).expect("reduction table overflow")))
                    .collect(),
            );
            // multiply by z and reduce
            let carry = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if carry != 0 {
                for i in 0..phi {
                    cur[i] -= carry * phi_poly[i] as i128;
                }
            }
            if phi == 1 {
                // z^k for Q: z = -phi_poly[0]
                cur[0] = -carry * phi_poly[0] as i128;
            }
        }
        CycloCtx { m, phi, phi_poly, red }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Phi_m`, ascending.
    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.phi_poly
    }

    fn reduce_power(&self, k: usize) -> &[(usize, i64)] {
        let k = if k < self.red.len() { k } else { k % self.m as usize };
        &self.red[k]
    }
}

fn ctx(m: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut g = cache.lock().unwrap();
    g.entry(m).or_insert_with(|| Arc::new(CycloCtx::build(m))).clone()
}

/// Integer-level arithmetic in `Z[zeta_m]`, for hot loops that clear
/// denominators once instead of per operation.
#[derive(Clone, Debug)]
pub struct CycloRing {
    ctx: Arc<CycloCtx>,
}

impl CycloRing {
    pub fn new(m: u32) -> CycloRing {
        CycloRing { ctx: ctx(m) }
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.m
    }

    pub fn phi(&self) -> usize {
        self.ctx.phi
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.ctx.phi]
    }

    /// Reduces an integer polynomial in `z` of any length.
    pub fn reduce(&self, poly: &[BigInt]) -> Vec<BigInt> {
        let mut out = self.zero();
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, r) in self.ctx.reduce_power(k) {
                out[i] += c * r;
            }
        }
        out
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let phi = self.ctx.phi;
        if phi == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        let mut any = false;
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
                any = true;
            }
        }
        if !any {
            return self.zero();
        }
        let mut out: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for &(i, r) in self.ctx.reduce_power(k) {
                out[i] += c * r;
            }
        }
        out
    }

    pub fn add_assign(&self, a: &mut [BigInt], b: &[BigInt]) {
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// Splits `x` (lifted to this conductor if rational) into integer
    /// numerator vector and positive denominator.
    pub fn split(&self, x: &Cyclo) -> Result<(Vec<BigInt>, BigInt), ExactError> {
        let x = x.lift_to(self.ctx.m)?;
        Ok((x.num, x.den))
    }

    pub fn join(&self, num: Vec<BigInt>, den: BigInt) -> Cyclo {
        Cyclo::from_raw(self.ctx.clone(), num, den)
    }
}

#[derive(Clone)]
pub struct Cyclo {
    ctx: Arc<CycloCtx>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    fn from_raw(ctx: Arc<CycloCtx>, mut num: Vec<BigInt>, mut den: BigInt) -> Cyclo {
        assert!(!den.is_zero(), "zero denominator");
        if num.iter().all(|x| x.is_zero()) {
            return Cyclo { ctx, num, den: BigInt::one() };
        }
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -&*x;
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for x in num.iter() {
                if g.is_one() {
                    break;
                }
                if !x.is_zero() {
                    g = big_gcd(&g, x);
                }
            }
            if !g.is_one() {
                for x in num.iter_mut() {
                    *x = &*x / &g;
                }
                den = den / g;
            }
        }
        Cyclo { ctx, num, den }
    }

    /// Element of `Q(zeta_m)` from power-basis rational coefficients of any
    /// length; higher powers are reduced.
    pub fn from_coeffs(m: u32, coeffs: &[Rat]) -> Cyclo {
        let c = ctx(m);
        let mut den = BigInt::one();
        for r in coeffs {
            den = den.lcm(r.denom());
        }
        let ints: Vec<BigInt> = coeffs.iter().map(|r| r.numer() * (&den / r.denom())).collect();
        let ring = CycloRing { ctx: c.clone() };
        let num = ring.reduce(&ints);
        Cyclo::from_raw(c, num, den)
    }

    pub fn from_rat(r: &Rat) -> Cyclo {
        Cyclo::rational_in(1, r)
    }

    pub fn from_int(n: i64) -> Cyclo {
        Cyclo::from_rat(&Rat::from_integer(BigInt::from(n)))
    }

    pub fn rational_in(m: u32, r: &Rat) -> Cyclo {
        let c = ctx(m);
        let mut num = vec![BigInt::zero(); c.phi];
        num[0] = r.numer().clone();
        Cyclo::from_raw(c, num, r.denom().clone())
    }

    pub fn zero() -> Cyclo {
        Cyclo::from_int(0)
    }

    pub fn one() -> Cyclo {
        Cyclo::from_int(1)
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(m: u32, k: i64) -> Cyclo {
        let c = ctx(m);
        let e = k.rem_euclid(m as i64) as usize;
        let mut num = vec![BigInt::zero(); c.phi];
        for &(i, r) in c.reduce_power(e) {
            num[i] += BigInt::from(r);
        }
        Cyclo::from_raw(c, num, BigInt::one())
    }

    pub fn zeta(m: u32) -> Cyclo {
        Cyclo::zeta_pow(m, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.m
    }

    pub fn ring(&self) -> CycloRing {
        CycloRing { ctx: self.ctx.clone() }
    }

    /// Power-basis coefficients, length `phi(m)`.
    pub fn coeffs(&self) -> Vec<Rat> {
        self.num.iter().map(|x| Rat::new(x.clone(), self.den.clone())).collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.den.is_one() && self.num[0].is_one()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(Rat::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Image under `zeta_m -> zeta_m2^(m2/m)`; requires `m | m2`.
    pub fn embed(&self, m2: u32) -> Result<Cyclo, ExactError> {
        let m = self.ctx.m;
        if m2 == 0 || m2 % m != 0 {
            return Err(ExactError::EmbedUnsupported { from: m, to: m2 });
        }
        if m2 == m {
            return Ok(self.clone());
        }
        let step = (m2 / m) as usize;
        let c2 = ctx(m2);
        let mut num = vec![BigInt::zero(); c2.phi];
        for (j, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(i, r) in c2.reduce_power(j * step) {
                num[i] += x * r;
            }
        }
        Ok(Cyclo::from_raw(c2, num, self.den.clone()))
    }

    fn lift_to(&self, m: u32) -> Result<Cyclo, ExactError> {
        if self.ctx.m == m {
            Ok(self.clone())
        } else if self.is_rational() {
            Ok(Cyclo::rational_in(m, &Rat::new(self.num[0].clone(), self.den.clone())))
        } else {
            Err(ExactError::ConductorMismatch(self.ctx.m, m))
        }
    }

    fn common(a: &Cyclo, b: &Cyclo) -> Result<u32, ExactError> {
        let (ma, mb) = (a.ctx.m, b.ctx.m);
        if ma == mb {
            Ok(ma)
        } else if b.is_rational() {
            Ok(ma)
        } else if a.is_rational() {
            Ok(mb)
        } else {
            Err(ExactError::ConductorMismatch(ma, mb))
        }
    }

    pub fn try_add(&self, other: &Cyclo) -> Result<Cyclo, ExactError> {
        self.add_sub(other, false)
    }

    pub fn try_sub(&self, other: &Cyclo) -> Result<Cyclo, ExactError> {
        self.add_sub(other, true)
    }

    fn add_sub(&self, other: &Cyclo, sub: bool) -> Result<Cyclo, ExactError> {
        let m = Cyclo::common(self, other)?;
        let a = self.lift_to(m)?;
        let b = other.lift_to(m)?;
        let num: Vec<BigInt>;
        let den: BigInt;
        if a.den == b.den {
            num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if sub { x - y } else { x + y })
                .collect();
            den = a.den.clone();
        } else {
            num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| {
                    let l = x * &b.den;
                    let r = y * &a.den;
                    if sub {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect();
            den = &a.den * &b.den;
        }
        Ok(Cyclo::from_raw(a.ctx, num, den))
    }

    pub fn try_mul(&self, other: &Cyclo) -> Result<Cyclo, ExactError> {
        if self.is_rational() && other.is_rational() && self.ctx.m != other.ctx.m {
            let m = self.ctx.m.max(other.ctx.m);
            let r = self.to_rat().unwrap() * other.to_rat().unwrap();
            return Ok(Cyclo::rational_in(m, &r));
        }
        let m = Cyclo::common(self, other)?;
        if self.ctx.m != m {
            return Ok(other.scale(&self.to_rat().unwrap()));
        }
        if other.ctx.m != m {
            return Ok(self.scale(&other.to_rat().unwrap()));
        }
        let ring = self.ring();
        let num = ring.mul(&self.num, &other.num);
        Ok(Cyclo::from_raw(self.ctx.clone(), num, &self.den * &other.den))
    }

    pub fn scale(&self, r: &Rat) -> Cyclo {
        let num = self.num.iter().map(|x| x * r.numer()).collect();
        Cyclo::from_raw(self.ctx.clone(), num, &self.den * r.denom())
    }

    pub fn try_div(&self, other: &Cyclo) -> Result<Cyclo, ExactError> {
        self.try_mul(&other.inv()?)
    }

    /// Multiplicative inverse; `DivisionByZero` for zero.
    pub fn inv(&self) -> Result<Cyclo, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_rational() {
            let r = Rat::new(self.den.clone(), self.num[0].clone());
            return Ok(Cyclo::rational_in(self.ctx.m, &r));
        }
        let phi = self.ctx.phi;
        let ring = self.ring();
        // columns: z^j * num
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut zj = vec![BigInt::zero(); phi];
            zj[j] = BigInt::one();
            cols.push(ring.mul(&zj, &self.num));
        }
        let mat: Vec<Vec<Rat>> = (0..phi)
            .map(|i| (0..phi).map(|j| Rat::from_integer(cols[j][i].clone())).collect())
            .collect();
        let mut rhs = vec![Rat::zero(); phi];
        rhs[0] = Rat::from_integer(self.den.clone());
        let sol = solve_rat(mat, rhs).ok_or(ExactError::DivisionByZero)?;
        let mut den = BigInt::one();
        for r in &sol {
            den = den.lcm(r.denom());
        }
        let num = sol.iter().map(|r| r.numer() * (&den / r.denom())).collect();
        Ok(Cyclo::from_raw(self.ctx.clone(), num, den))
    }

    pub fn pow(&self, e: i64) -> Cyclo {
        if e < 0 {
            return self.inv().expect("inverse of zero").pow(-e);
        }
        let mut result = Cyclo::rational_in(self.ctx.m, &Rat::one());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Galois automorphism `zeta -> zeta^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> Cyclo {
        let m = self.ctx.m as i64;
        assert_eq!(num_integer::gcd(k, m), 1, "k must be a unit mod m");
        let ring = self.ring();
        let mut poly = vec![BigInt::zero(); self.ctx.m as usize];
        for (j, x) in self.num.iter().enumerate() {
            let e = ((j as i64) * k).rem_euclid(m) as usize;
            poly[e] += x;
        }
        let num = ring.reduce(&poly);
        Cyclo::from_raw(self.ctx.clone(), num, self.den.clone())
    }

    /// Image under the ring map `Z[zeta_m] -> F_p` sending `zeta_m` to `w`
    /// (a primitive `m`-th root of unity mod `p`); `None` if `p` divides the
    /// denominator.
    pub fn reduce_mod(&self, p: u64, w: u64) -> Option<u64> {
        let den = crate::modp::big_to_mod(&self.den, p);
        let dinv = crate::modp::invmod(den, p)?;
        let mut acc = 0u64;
        let mut wk = 1u64;
        for x in &self.num {
            let v = crate::modp::big_to_mod(x, p);
            acc = crate::modp::addmod(acc, crate::modp::mulmod(v, wk, p), p);
            wk = crate::modp::mulmod(wk, w, p);
        }
        Some(crate::modp::mulmod(acc, dinv, p))
    }

    /// Complex conjugate (under any embedding, since the field is abelian).
    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    pub fn square(&self) -> Cyclo {
        self * self
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.ctx.m == other.ctx.m {
            return self.den == other.den && self.num == other.num;
        }
        self.is_rational() && other.is_rational() && self.den == other.den && self.num[0] == other.num[0]
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        if self.is_rational() {
            0u32.hash(state);
            self.num[0].hash(state);
        } else {
            self.ctx.m.hash(state);
            self.num.hash(state);
        }
        self.den.hash(state);
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.ctx.m, self)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", rat_to_string(&self.to_rat().unwrap()));
        }
        let mut parts = Vec::new();
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let c = rat_to_string(&Rat::new(x.clone(), self.den.clone()));
            parts.push(match i {
                0 => c,
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a> $tr<&'a Cyclo> for &'a Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                self.$f(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$f(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$f(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            conductor: self.ctx.m,
            coeffs: self.coeffs().iter().map(rat_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Cyclo, D::Error> {
        let r = CycloRepr::deserialize(d)?;
        if r.conductor == 0 {
            return Err(serde::de::Error::custom("conductor must be positive"));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        let phi = ctx(r.conductor).phi;
        if coeffs.len() != phi {
            return Err(serde::de::Error::custom(format!(
                "expected {phi} coefficients for conductor {}",
                r.conductor
            )));
        }
        Ok(Cyclo::from_coeffs(r.conductor, &coeffs))
    }
}

/// Euler's totient.
pub fn totient(m: u32) -> usize {
    ctx(m).phi
}

/// Coefficients of `Phi_m`, ascending.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    ctx(m).phi_poly.clone()
}

/// Named square roots built from roots of unity.
pub mod roots {
    use super::*;

    /// `sqrt(5) = z + z^4 - z^2 - z^3` in `Q(zeta_5)`.
    pub fn sqrt5() -> Cyclo {
        let z = |k| Cyclo::zeta_pow(5, k);
        z(1) + z(4) - z(2) - z(3)
    }

    /// `z^6 + z^5 + z^3 - z^4 - z^2 - z` in `Q(zeta_7)`; squares to `-7`.
    pub fn sqrt_minus7() -> Cyclo {
        let z = |k| Cyclo::zeta_pow(7, k);
        z(6) + z(5) + z(3) - z(4) - z(2) - z(1)
    }

    /// `sqrt(-3) = 2 w + 1` with `w = zeta_3`, in conductor `m` (3 | m).
    pub fn sqrt_minus3(m: u32) -> Cyclo {
        let w = Cyclo::zeta_pow(m, (m / 3) as i64);
        &w * &Cyclo::from_int(2) + Cyclo::from_int(1)
    }

    /// `sqrt(-15) = sqrt(5) * sqrt(-3)` in `Q(zeta_15)`.
    pub fn sqrt_minus15() -> Cyclo {
        sqrt5().embed(15).unwrap() * sqrt_minus3(15)
    }

    /// `sqrt(3) = -i sqrt(-3)` in `Q(zeta_12)`-containing conductor `m`
    /// (12 | m).
    pub fn sqrt3(m: u32) -> Cyclo {
        let i = Cyclo::zeta_pow(m, (m / 4) as i64);
        -(i * sqrt_minus3(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        for m in [1, 2, 3, 4, 5, 7, 9, 12, 15, 21, 36] {
            let p = cyclotomic_polynomial(m);
            let z = Cyclo::zeta(m);
            let mut acc = Cyclo::zero();
            for (k, c) in p.iter().enumerate() {
                acc = acc + z.pow(k as i64).scale(&rat(*c, 1));
            }
            assert!(acc.is_zero(), "Phi_{m}(zeta) != 0");
            assert!(z.pow(m as i64).is_one());
        }
    }

    #[test]
    fn zeta5_times_zeta5_4() {
        assert!((Cyclo::zeta_pow(5, 1) * Cyclo::zeta_pow(5, 4)).is_one());
    }

    #[test]
    fn gauss_sums() {
        let s5 = roots::sqrt5();
        assert_eq!(s5.square(), Cyclo::from_int(5));
        assert_eq!(roots::sqrt_minus7().square(), Cyclo::from_int(-7));
        assert_eq!(roots::sqrt_minus3(9).square(), Cyclo::from_int(-3));
        assert_eq!(roots::sqrt_minus15().square(), Cyclo::from_int(-15));
        assert_eq!(roots::sqrt3(36).square(), Cyclo::from_int(3));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Cyclo::zeta(7).inv().unwrap(), Cyclo::zeta_pow(7, 6));
        let s5 = roots::sqrt5();
        assert_eq!(s5.inv().unwrap(), s5.scale(&rat(1, 5)));
        assert_eq!(Cyclo::from_int(2).inv().unwrap(), Cyclo::from_rat(&rat(1, 2)));
        assert_eq!(Cyclo::zero().inv(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn embeddings() {
        assert_eq!(Cyclo::from_int(3).embed(15).unwrap(), Cyclo::from_int(3));
        assert_eq!(Cyclo::zeta(5).embed(15).unwrap(), Cyclo::zeta_pow(15, 3));
        let omega = Cyclo::zeta(3).embed(9).unwrap();
        let eps = Cyclo::zeta(9);
        assert_eq!(omega, eps.pow(3));
        assert_eq!(Cyclo::from_int(-1) - eps.pow(3), eps.pow(6));
        assert!(matches!(Cyclo::zeta(5).embed(7), Err(ExactError::EmbedUnsupported { .. })));
    }

    #[test]
    fn mismatch_is_reported() {
        assert_eq!(
            Cyclo::zeta(5).try_add(&Cyclo::zeta(7)),
            Err(ExactError::ConductorMismatch(5, 7))
        );
        // rationals mix freely
        assert_eq!(Cyclo::zeta(5).try_add(&Cyclo::from_int(1)).unwrap().conductor(), 5);
    }

    #[test]
    fn serde_roundtrip() {
        let x = Cyclo::zeta(15).scale(&rat(-2, 3)) + Cyclo::from_rat(&rat(1, 7));
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.contains("\"conductor\":15"));
        let y: Cyclo = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn galois_conjugation() {
        let z = Cyclo::zeta(7);
        assert_eq!(z.conj(), Cyclo::zeta_pow(7, 6));
        let s = roots::sqrt_minus7();
        assert_eq!(s.conj(), -s.clone());
    }
}
