//! Dense univariate polynomials over `Z` and `Q`.

use crate::fpoly::FpPoly;
use crate::modp::{big_to_mod, Crt, PrimeStream};
use crate::rat::{big_gcd, rat_to_string, Rat};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial with integer coefficients, ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly(pub Vec<BigInt>);

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

/// Packs signed coefficients at `limbs` 32-bit digits each.
fn kron_pack(a: &[BigInt], limbs: usize) -> BigInt {
    let mut pos = vec![0u32; a.len() * limbs];
    let mut neg = vec![0u32; a.len() * limbs];
    for (i, x) in a.iter().enumerate() {
        let (s, d) = x.to_u32_digits();
        let tgt = if s == Sign::Minus { &mut neg } else { &mut pos };
        tgt[i * limbs..i * limbs + d.len()].copy_from_slice(&d);
    }
    BigInt::from_biguint(Sign::Plus, BigUint::new(pos)) - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
}

fn kron_unpack(v: &BigInt, limbs: usize, n: usize) -> Vec<BigInt> {
    let (s, d) = v.to_u32_digits();
    let half = BigInt::one() << (32 * limbs - 1);
    let full = BigInt::one() << (32 * limbs);
    let mut out = Vec::with_capacity(n);
    let mut carry = false;
    for i in 0..n {
        let lo = (i * limbs).min(d.len());
        let hi = ((i + 1) * limbs).min(d.len());
        let mut c = BigInt::from_biguint(Sign::Plus, BigUint::new(d[lo..hi].to_vec()));
        if carry {
            c += 1;
        }
        if c >= half {
            c -= &full;
            carry = true;
        } else {
            carry = false;
        }
        out.push(if s == Sign::Minus { -c } else { c });
    }
    out
}

/// Product of integer coefficient vectors (Kronecker substitution for
/// large inputs).
pub fn mul_int_vec(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let n = a.len() + b.len() - 1;
    if a.len().min(b.len()) < 12 {
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        return out;
    }
    let ba = a.iter().map(|x| x.bits()).max().unwrap_or(0);
    let bb = b.iter().map(|x| x.bits()).max().unwrap_or(0);
    if ba == 0 || bb == 0 {
        return vec![BigInt::zero(); n];
    }
    let lenbits = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
    let bits = ba + bb + lenbits + 2;
    let limbs = bits.div_ceil(32) as usize;
    let pa = kron_pack(a, limbs);
    let pb = kron_pack(b, limbs);
    kron_unpack(&(pa * pb), limbs, n)
}

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> ZPoly {
        trim(&mut c);
        ZPoly(c)
    }

    pub fn from_i64(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> ZPoly {
        ZPoly(vec![])
    }

    pub fn one() -> ZPoly {
        ZPoly(vec![BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly(self.0.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        ZPoly::new(mul_int_vec(&self.0, &o.0))
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        ZPoly::new(self.0.iter().map(|x| x * k).collect())
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        let mut r = ZPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::new(self.0.iter().enumerate().skip(1).map(|(i, x)| x * i).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut r = BigInt::zero();
        for c in self.0.iter().rev() {
            r = r * x + c;
        }
        r
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut r = Rat::zero();
        for c in self.0.iter().rev() {
            r = r * x + Rat::from_integer(c.clone());
        }
        r
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = big_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        ZPoly(self.0.iter().map(|x| x / &c).collect())
    }

    pub fn to_mod(&self, p: u64) -> FpPoly {
        FpPoly::new(p, self.0.iter().map(|x| big_to_mod(x, p)).collect())
    }

    /// Exact quotient, `None` if `d` does not divide `self` over `Z`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.0.len() <= dd {
            return None;
        }
        let lc = d.lc();
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            if r[i + dd].is_zero() {
                continue;
            }
            let (c, rem) = r[i + dd].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, b) in d.0.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] -= &c * b;
                }
            }
            q[i] = c;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(ZPoly::new(q))
    }

    /// Gcd with positive leading coefficient (modular algorithm).
    pub fn gcd(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return o.primitive().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let c = big_gcd(&self.content(), &o.content());
        let a = self.primitive();
        let b = o.primitive();
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return ZPoly(vec![c]);
        }
        let glc = big_gcd(&a.lc(), &b.lc());
        let mut best_deg = usize::MAX;
        let mut crt: Option<Crt> = None;
        let mut last: Option<ZPoly> = None;
        for p in PrimeStream::below(1 << 61) {
            if big_to_mod(&a.lc(), p) == 0 || big_to_mod(&b.lc(), p) == 0 {
                continue;
            }
            let gp = a.to_mod(p).gcd(&b.to_mod(p));
            let d = gp.degree().unwrap();
            if d == 0 {
                return ZPoly(vec![c]);
            }
            if d > best_deg {
                continue;
            }
            let gp = gp.scale(big_to_mod(&glc, p));
            let mut res = gp.c.clone();
            res.resize(d + 1, 0);
            if d < best_deg {
                best_deg = d;
                crt = Some(Crt::new(p, &res));
                last = None;
            } else {
                crt.as_mut().unwrap().add(p, &res);
            }
            let cand = ZPoly::new(crt.as_ref().unwrap().integers()).primitive();
            if last.as_ref() == Some(&cand) {
                if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                    return cand.scale(&c);
                }
            }
            last = Some(cand);
        }
        unreachable!("prime supply exhausted")
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.0.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    /// Squarefree part (primitive).
    pub fn squarefree(&self) -> ZPoly {
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g.primitive()).unwrap().primitive()
    }
}

/// Polynomial with rational coefficients, ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly(pub Vec<Rat>);

impl QPoly {
    pub fn new(mut c: Vec<Rat>) -> QPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn from_i64(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn constant(r: Rat) -> QPoly {
        QPoly::new(vec![r])
    }

    pub fn zero() -> QPoly {
        QPoly(vec![])
    }

    pub fn one() -> QPoly {
        QPoly(vec![Rat::one()])
    }

    /// The variable `t`.
    pub fn t() -> QPoly {
        QPoly::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `(z, d)` with `self = z / d`, `d > 0` minimal.
    pub fn to_zpoly(&self) -> (ZPoly, BigInt) {
        let mut d = BigInt::one();
        for c in &self.0 {
            d = d.lcm(c.denom());
        }
        let z = self.0.iter().map(|c| c.numer() * (&d / c.denom())).collect();
        (ZPoly::new(z), d)
    }

    pub fn from_zpoly(z: &ZPoly, d: &BigInt) -> QPoly {
        QPoly::new(z.0.iter().map(|c| Rat::new(c.clone(), d.clone())).collect())
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, k: &Rat) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        if self.0.len() == 1 {
            return o.scale(&self.0[0]);
        }
        if o.0.len() == 1 {
            return self.scale(&o.0[0]);
        }
        let (a, da) = self.to_zpoly();
        let (b, db) = o.to_zpoly();
        QPoly::from_zpoly(&a.mul(&b), &(da * db))
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut r = QPoly::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * Rat::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut r = Rat::zero();
        for c in self.0.iter().rev() {
            r = r * x + c;
        }
        r
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    pub fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        if self.0.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.0.clone();
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            if r[i + dd].is_zero() {
                continue;
            }
            let c = &r[i + dd] * &inv;
            for (j, b) in d.0.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] -= &c * b;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    /// Exact quotient; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let (a, _) = self.to_zpoly();
        let (b, _) = d.to_zpoly();
        if b.is_zero() {
            return None;
        }
        if a.is_zero() {
            return Some(QPoly::zero());
        }
        // work on primitive parts to keep integer division exact
        let pa = a.primitive();
        let pb = b.primitive();
        let q = if let Some(q) = pa.div_exact(&pb) {
            q
        } else {
            let (q, r) = self.divrem(d);
            return if r.is_zero() { Some(q) } else { None };
        };
        // self = ca * pa, d = cb * pb
        let ca = &self.lc() / Rat::from_integer(pa.lc());
        let cb = &d.lc() / Rat::from_integer(pb.lc());
        Some(q.to_qpoly().scale(&(ca / cb)))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        let (a, _) = self.to_zpoly();
        let (b, _) = o.to_zpoly();
        a.gcd(&b).to_qpoly().monic()
    }

    /// `self(q)`.
    pub fn compose(&self, q: &QPoly) -> QPoly {
        let mut r = QPoly::zero();
        for c in self.0.iter().rev() {
            r = r.mul(q).add(&QPoly::constant(c.clone()));
        }
        r
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = rat_to_string(c);
            parts.push(match i {
                0 => cs,
                1 if c.is_one() => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if c.is_one() => format!("{var}^{i}"),
                _ => format!("{cs}*{var}^{i}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn kronecker_matches_schoolbook() {
        let a: Vec<BigInt> = (0..40).map(|i| BigInt::from((i * 7919 - 1234567) as i64) << (i % 5 * 20)).collect();
        let b: Vec<BigInt> = (0..30).map(|i| BigInt::from(((i * i) as i64 - 300) * 99991)).collect();
        let fast = mul_int_vec(&a, &b);
        let mut slow = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                slow[i + j] += x * y;
            }
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn integer_gcd() {
        let f = ZPoly::from_i64(&[-7, 19]);
        let g = ZPoly::from_i64(&[1, 0, 3]);
        let h = ZPoly::from_i64(&[2, -5, 1]);
        let a = f.mul(&g).scale(&BigInt::from(6));
        let b = f.mul(&h).scale(&BigInt::from(4));
        assert_eq!(a.gcd(&b), f.scale(&BigInt::from(2)));
        assert_eq!(g.gcd(&h), ZPoly::one());
    }

    #[test]
    fn rational_division() {
        let a = QPoly::new(vec![rat(1, 2), rat(3, 4), rat(1, 1)]);
        let b = QPoly::new(vec![rat(-1, 3), rat(2, 1)]);
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        let (q, r) = p.add(&QPoly::one()).divrem(&b);
        assert_eq!(q.mul(&b).add(&r), p.add(&QPoly::one()));
        assert_eq!(p.gcd(&b.mul(&QPoly::t())), b.monic());
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_i64(&[-7, 19]).to_string(), "19*t - 7");
    }
}
