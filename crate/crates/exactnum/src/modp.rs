//! Word-size prime field arithmetic, CRT and rational reconstruction.

use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime; `None` for zero.
pub fn invmod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(powmod(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Descending sequence of primes just below `2^62`.
pub struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    pub fn new() -> PrimeStream {
        PrimeStream { next: (1u64 << 62) - 1 }
    }

    /// Starts the search below `start`, so that independent callers can use
    /// disjoint primes.
    pub fn below(start: u64) -> PrimeStream {
        PrimeStream { next: start - 1 }
    }
}

impl Default for PrimeStream {
    fn default() -> Self {
        PrimeStream::new()
    }
}

impl Iterator for PrimeStream {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 2 {
            let c = self.next;
            self.next -= 1;
            if is_prime(c) {
                return Some(c);
            }
        }
        None
    }
}

pub fn big_to_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

/// Image of a rational modulo `p`; `None` when `p` divides the denominator.
pub fn rat_to_mod(x: &Rat, p: u64) -> Option<u64> {
    let n = big_to_mod(x.numer(), p);
    let d = big_to_mod(x.denom(), p);
    invmod(d, p).map(|di| mulmod(n, di, p))
}

/// Symmetric representative of `a` modulo `m`.
pub fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Rational `n/d` with `n/d = a mod m`, `|n|, d <= sqrt(m/2)`.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// Running Chinese remainder accumulator over a vector of residues.
#[derive(Clone, Debug)]
pub struct Crt {
    pub modulus: BigInt,
    pub values: Vec<BigInt>,
}

impl Crt {
    pub fn new(p: u64, residues: &[u64]) -> Crt {
        Crt {
            modulus: BigInt::from(p),
            values: residues.iter().map(|&r| BigInt::from(r)).collect(),
        }
    }

    pub fn add(&mut self, p: u64, residues: &[u64]) {
        assert_eq!(residues.len(), self.values.len());
        let m_mod_p = big_to_mod(&self.modulus, p);
        let inv = invmod(m_mod_p, p).expect("repeated prime in CRT");
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let vp = big_to_mod(v, p);
            let k = mulmod(submod(r % p, vp, p), inv, p);
            if k != 0 {
                *v += &self.modulus * k;
            }
        }
        self.modulus *= p;
    }

    /// Rational reconstruction of every entry.
    pub fn rationals(&self) -> Option<Vec<Rat>> {
        self.values
            .iter()
            .map(|v| rational_reconstruct(v, &self.modulus))
            .collect()
    }

    /// Rational reconstruction assuming a common denominator: the entries
    /// are lifted one at a time, multiplying through by the running
    /// denominator, which keeps the reconstruction cheap for large vectors.
    pub fn rationals_common(&self) -> Option<Vec<Rat>> {
        let mut den = BigInt::one();
        let mut out = Vec::with_capacity(self.values.len());
        let half = &self.modulus / 2u32;
        for v in &self.values {
            let scaled = (v * &den).mod_floor(&self.modulus);
            let sym = if scaled > half { scaled - &self.modulus } else { scaled };
            if sym.bits() * 2 + 2 < self.modulus.bits() {
                out.push(Rat::new(sym, den.clone()));
                continue;
            }
            let r = rational_reconstruct(&scaled_mod(v, &den, &self.modulus), &self.modulus)?;
            let r = r / Rat::from_integer(den.clone());
            den = den.lcm(r.denom());
            out.push(r);
        }
        Some(out)
    }

    /// Symmetric integer lift of every entry.
    pub fn integers(&self) -> Vec<BigInt> {
        self.values.iter().map(|v| symmetric(v, &self.modulus)).collect()
    }
}

fn scaled_mod(v: &BigInt, d: &BigInt, m: &BigInt) -> BigInt {
    (v * d).mod_floor(m)
}

/// A primitive `m`-th root of unity modulo the prime `p`, if `m | p - 1`.
pub fn primitive_root_of_unity(m: u64, p: u64) -> Option<u64> {
    if (p - 1) % m != 0 {
        return None;
    }
    let mut primes = Vec::new();
    let mut r = m;
    let mut q = 2;
    while q * q <= r {
        if r % q == 0 {
            primes.push(q);
            while r % q == 0 {
                r /= q;
            }
        }
        q += 1;
    }
    if r > 1 {
        primes.push(r);
    }
    for g in 2..p {
        let w = powmod(g, (p - 1) / m, p);
        if primes.iter().all(|&q| powmod(w, m / q, p) != 1) {
            return Some(w);
        }
    }
    None
}

/// Primes `p = 1 mod m` below `2^62`, descending.
pub fn primes_one_mod(m: u64) -> impl Iterator<Item = u64> {
    PrimeStream::new().filter(move |p| (p - 1) % m == 0)
}

/// `x mod p` for a signed machine integer.
pub fn i64_to_mod(x: i64, p: u64) -> u64 {
    let r = x.rem_euclid(p as i64);
    r as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn primes() {
        assert!(is_prime(2));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        let ps: Vec<u64> = PrimeStream::new().take(3).collect();
        assert!(ps.iter().all(|&p| p < (1 << 62) && is_prime(p)));
        assert!(ps[0] > ps[1] && ps[1] > ps[2]);
    }

    #[test]
    fn crt_and_reconstruction() {
        let target = rat(-12345, 678);
        let mut crt: Option<Crt> = None;
        for p in PrimeStream::new().take(2) {
            let r = rat_to_mod(&target, p).unwrap();
            match crt.as_mut() {
                None => crt = Some(Crt::new(p, &[r])),
                Some(c) => c.add(p, &[r]),
            }
        }
        let c = crt.unwrap();
        assert_eq!(c.rationals().unwrap(), vec![target.clone()]);
        assert_eq!(c.rationals_common().unwrap(), vec![target]);
    }

    #[test]
    fn inverse() {
        let p = 101;
        for a in 1..p {
            assert_eq!(mulmod(a, invmod(a, p).unwrap(), p), 1);
        }
        assert_eq!(invmod(0, p), None);
    }
}
