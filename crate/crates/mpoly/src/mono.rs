//! Packed monomials: up to 8 variables, 16-bit exponents.

use std::fmt;

pub const MAX_VARS: usize = 8;
const BITS: u32 = 16;
const MASK: u128 = 0xffff;

/// Exponent vector. The derived order compares total degree first and then
/// the exponents lexicographically (`X1` most significant), i.e. graded lex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono {
    deg: u32,
    packed: u128,
}

#[inline]
fn shift(i: usize) -> u32 {
    BITS * (MAX_VARS - 1 - i) as u32
}

impl Mono {
    pub fn one() -> Mono {
        Mono::default()
    }

    pub fn from_exps(e: &[u32]) -> Mono {
        assert!(e.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut packed = 0u128;
        let mut deg = 0;
        for (i, &x) in e.iter().enumerate() {
            assert!(x <= MASK as u32, "exponent too large");
            packed |= (x as u128) << shift(i);
            deg += x;
        }
        Mono { deg, packed }
    }

    pub fn var(i: usize) -> Mono {
        Mono { deg: 1, packed: 1u128 << shift(i) }
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        ((self.packed >> shift(i)) & MASK) as u32
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn mul(self, o: Mono) -> Mono {
        Mono { deg: self.deg + o.deg, packed: self.packed + o.packed }
    }

    /// `self * X_i^k`.
    #[inline]
    pub fn mul_var(self, i: usize, k: u32) -> Mono {
        Mono { deg: self.deg + k, packed: self.packed + ((k as u128) << shift(i)) }
    }

    /// `self` with the exponent of `X_i` set to zero.
    #[inline]
    pub fn drop_var(self, i: usize) -> Mono {
        let e = self.exp(i);
        Mono { deg: self.deg - e, packed: self.packed & !(MASK << shift(i)) }
    }

    /// `self / X_i` (exponent must be positive).
    #[inline]
    pub fn div_var(self, i: usize) -> Mono {
        debug_assert!(self.exp(i) > 0);
        Mono { deg: self.deg - 1, packed: self.packed - (1u128 << shift(i)) }
    }

    /// Exponent vector permuted so that `X_i` becomes `X_{perm[i]}`.
    pub fn permute(self, perm: &[usize]) -> Mono {
        let mut packed = 0u128;
        for (i, &j) in perm.iter().enumerate() {
            packed |= (self.exp(i) as u128) << shift(j);
        }
        Mono { deg: self.deg, packed }
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<u32> = (0..MAX_VARS).map(|i| self.exp(i)).collect();
        write!(f, "{e:?}")
    }
}
