//! Rational roots of univariate polynomials by Hensel lifting of roots
//! modulo a prime.

use lode_exactnum::fpoly::FpPoly;
use lode_exactnum::modp::{big_to_mod, PrimeStream};
use lode_exactnum::{BigInt, QPoly, Rat, ZPoly};
use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Distinct rational roots, ascending.
pub fn rational_roots(f: &QPoly) -> Vec<Rat> {
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let (z, _) = f.to_zpoly();
    let mut g = z.squarefree();
    let mut out = Vec::new();
    if g.coeff(0).is_zero() {
        out.push(Rat::zero());
        g = ZPoly::new(g.0[1..].to_vec());
    }
    if g.degree().unwrap_or(0) > 0 {
        out.extend(nonzero_roots(&g));
    }
    out.sort();
    out
}

fn nonzero_roots(g: &ZPoly) -> Vec<Rat> {
    let lc = g.lc();
    // a root a/b has b | lc and a | g(0), so lc * a / b is an integer of size
    // at most |lc g(0)|
    let bound: BigInt = 2 * (lc.abs() * g.coeff(0).abs()) + 1;
    let dg = g.derivative();
    for p in PrimeStream::new() {
        if big_to_mod(&lc, p) == 0 {
            continue;
        }
        let gp = g.to_mod(p);
        if gp.gcd(&gp.derivative()).degree() != Some(0) {
            continue;
        }
        let pb = BigInt::from(p);
        let mut out = Vec::new();
        for r in gp.roots() {
            let mut x = BigInt::from(r);
            let mut m = pb.clone();
            while m < bound {
                m = &m * &m;
                let fx = g.eval(&x).mod_floor(&m);
                let dx = dg.eval(&x).mod_floor(&m);
                let Some(inv) = modinv(&dx, &m) else { break };
                x = (&x - fx * inv).mod_floor(&m);
            }
            let c = (&x * &lc).mod_floor(&m);
            let c = if &c * 2 > m { c - &m } else { c };
            let cand = Rat::new(c, lc.clone());
            if g.eval_rat(&cand).is_zero() {
                out.push(cand);
            }
        }
        return out;
    }
    unreachable!()
}

/// Integer roots of a polynomial given modulo `p`, lifted to the symmetric
/// range.
pub(crate) fn integer_candidates(f: &FpPoly) -> Vec<BigInt> {
    let p = f.p;
    f.roots()
        .into_iter()
        .map(|r| if 2 * r > p { BigInt::from_biguint(Sign::Minus, (p - r).into()) } else { BigInt::from(r) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lode_exactnum::rat;

    #[test]
    fn finds_rational_roots() {
        // (3t - 2)(t + 5)^2 (t^2 + 1) t
        let f = QPoly::from_i64(&[-2, 3])
            .mul(&QPoly::from_i64(&[5, 1]).pow(2))
            .mul(&QPoly::from_i64(&[1, 0, 1]))
            .mul(&QPoly::t());
        assert_eq!(rational_roots(&f), vec![rat(-5, 1), rat(0, 1), rat(2, 3)]);
        assert!(rational_roots(&QPoly::from_i64(&[7])).is_empty());
        // large root needs lifting
        let big = Rat::new(BigInt::from(10).pow(40) + 7, BigInt::from(3));
        let f = QPoly::new(vec![-big.clone(), Rat::one()]).mul(&QPoly::from_i64(&[1, 0, 1]));
        assert_eq!(rational_roots(&f), vec![big]);
    }
}
