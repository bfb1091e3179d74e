//! Exact truncated products of integer coefficient vectors by Kronecker
//! substitution: pack each vector into one big integer, multiply once, and
//! unpack the balanced windows.

use lode_exactnum::{BigInt, Rat};
use num_bigint::{BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Series with coefficients `nums[m] / den`.
#[derive(Clone, Debug)]
pub(crate) struct Scaled {
    pub nums: Vec<BigInt>,
    pub den: BigInt,
}

impl Scaled {
    pub fn from_rats(c: &[Rat]) -> Scaled {
        let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let nums = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        Scaled { nums, den }
    }

    pub fn mul(&self, o: &Scaled) -> Scaled {
        let len = self.nums.len().min(o.nums.len());
        let nums = convolve(&self.nums[..len], &o.nums[..len], len);
        let mut s = Scaled { nums, den: &self.den * &o.den };
        s.reduce();
        s
    }

    fn reduce(&mut self) {
        let mut g = self.den.clone();
        for x in &self.nums {
            if g.is_one() {
                return;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if !g.is_one() {
            for x in self.nums.iter_mut() {
                *x = &*x / &g;
            }
            self.den = &self.den / &g;
        }
    }
}

fn pack(a: &[BigInt], wbytes: usize) -> BigInt {
    let mut pos = vec![0u8; a.len() * wbytes];
    let mut neg = vec![0u8; a.len() * wbytes];
    for (m, x) in a.iter().enumerate() {
        let bytes = x.magnitude().to_bytes_le();
        let dst = if x.is_negative() { &mut neg } else { &mut pos };
        dst[m * wbytes..m * wbytes + bytes.len()].copy_from_slice(&bytes);
    }
    BigInt::from_biguint(Sign::Plus, BigUint::from_bytes_le(&pos))
        - BigInt::from_biguint(Sign::Plus, BigUint::from_bytes_le(&neg))
}

/// First `len` coefficients of the product of two integer polynomials.
pub(crate) fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let bits = |v: &[BigInt]| v.iter().map(|x| x.bits()).max().unwrap_or(0);
    let log_len = (usize::BITS - len.max(1).leading_zeros()) as u64;
    let w = bits(a) + bits(b) + log_len + 2;
    let wbytes = w.div_ceil(8) as usize;
    let wbits = 8 * wbytes as u64;
    let z = pack(a, wbytes) * pack(b, wbytes);
    let bytes = z.to_signed_bytes_le();
    let fill = if z.is_negative() { 0xffu8 } else { 0 };
    let half = BigInt::one() << (wbits - 1);
    let full = BigInt::one() << wbits;
    let mut carry = BigInt::zero();
    let mut out = Vec::with_capacity(len);
    let mut window = vec![0u8; wbytes];
    for m in 0..len {
        for (k, byte) in window.iter_mut().enumerate() {
            *byte = bytes.get(m * wbytes + k).copied().unwrap_or(fill);
        }
        let mut v = BigInt::from_biguint(Sign::Plus, BigUint::from_bytes_le(&window)) + &carry;
        if v >= half {
            v -= &full;
            carry = BigInt::one();
        } else {
            carry = BigInt::zero();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
        (0..len).map(|m| (0..=m).map(|i| &a[i] * &b[m - i]).sum()).collect()
    }

    #[test]
    fn matches_schoolbook() {
        let big = BigInt::from(3).pow(200);
        let a: Vec<BigInt> = (0..17).map(|i| if i % 3 == 0 { -&big * i } else { BigInt::from(i * i - 40) }).collect();
        let b: Vec<BigInt> = (0..17).map(|i| if i % 2 == 0 { BigInt::from(-7 * i) } else { &big + i }).collect();
        assert_eq!(convolve(&a, &b, 17), naive(&a, &b, 17));
        let z = vec![BigInt::zero(); 5];
        assert_eq!(convolve(&z, &b[..5], 5), z);
        let neg: Vec<BigInt> = (0..9).map(|i| BigInt::from(-1 - i)).collect();
        assert_eq!(convolve(&neg, &neg, 9), naive(&neg, &neg, 9));
    }
}
