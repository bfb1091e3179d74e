//! Dense univariate polynomials over a prime field `F_p`, `p < 2^62`.

use crate::modp::{addmod, invmod, mulmod, powmod, submod};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    /// Ascending coefficients, no trailing zeros.
    pub c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> FpPoly {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn zero(p: u64) -> FpPoly {
        FpPoly { p, c: Vec::new() }
    }

    pub fn constant(p: u64, a: u64) -> FpPoly {
        FpPoly::new(p, vec![a])
    }

    pub fn x(p: u64) -> FpPoly {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut r = 0;
        for &a in self.c.iter().rev() {
            r = addmod(mulmod(r, x, self.p), a, self.p);
        }
        r
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| addmod(self.coeff(i), o.coeff(i), self.p)).collect();
        FpPoly::new(self.p, c)
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| submod(self.coeff(i), o.coeff(i), self.p)).collect();
        FpPoly::new(self.p, c)
    }

    pub fn scale(&self, a: u64) -> FpPoly {
        FpPoly::new(self.p, self.c.iter().map(|&x| mulmod(x, a, self.p)).collect())
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u128; self.c.len() + o.c.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                let s = out[i + j] + a as u128 * b as u128;
                out[i + j] = if s >= pp * pp { s - pp * pp } else { s };
            }
        }
        FpPoly::new(p, out.into_iter().map(|x| (x % pp) as u64).collect())
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, i as u64 % p, p))
            .collect();
        FpPoly::new(p, c)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lc(), self.p).unwrap();
        self.scale(inv)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        if self.c.len() <= dd {
            return (FpPoly::zero(p), self.clone());
        }
        let inv = invmod(d.lc(), p).unwrap();
        let mut r = self.c.clone();
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = mulmod(r[i + dd], inv, p);
            q[i] = c;
            if c != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[i + j] = submod(r[i + j], mulmod(c, b, p), p);
                }
            }
        }
        r.truncate(dd);
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut r = FpPoly::constant(self.p, 1).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        r
    }

    /// Newton interpolation through `(xs[i], ys[i])`, distinct `xs`.
    pub fn interpolate(p: u64, xs: &[u64], ys: &[u64]) -> FpPoly {
        let n = xs.len();
        let mut dd: Vec<u64> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = submod(dd[i], dd[i - 1], p);
                let den = submod(xs[i], xs[i - j], p);
                dd[i] = mulmod(num, invmod(den, p).expect("repeated node"), p);
            }
        }
        let mut poly = vec![0u64; n];
        // Horner on the Newton form
        let mut acc: Vec<u64> = vec![];
        for i in (0..n).rev() {
            // acc = acc * (x - xs[i]) + dd[i]
            let mut next = vec![0u64; acc.len() + 1];
            for (k, &a) in acc.iter().enumerate() {
                next[k + 1] = addmod(next[k + 1], a, p);
                next[k] = submod(next[k], mulmod(a, xs[i], p), p);
            }
            next[0] = addmod(next[0], dd[i], p);
            acc = next;
        }
        for (k, a) in acc.into_iter().enumerate() {
            poly[k] = a;
        }
        FpPoly::new(p, poly)
    }

    /// Rational function `n/d` with `n/d = self mod m`, `deg n <= nb`,
    /// `deg d <= db`, `d` monic. Requires `nb + db < deg m`.
    pub fn rational_reconstruct(&self, m: &FpPoly, nb: usize, db: usize) -> Option<(FpPoly, FpPoly)> {
        let p = self.p;
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::constant(p, 1));
        loop {
            match r1.degree() {
                None => break,
                Some(d) if d <= nb => break,
                _ => {}
            }
            let (q, r2) = r0.divrem(&r1);
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if t1.is_zero() || t1.degree().unwrap() > db {
            return None;
        }
        if t1.gcd(m).degree() != Some(0) {
            return None;
        }
        let inv = invmod(t1.lc(), p).unwrap();
        Some((r1.scale(inv), t1.scale(inv)))
    }

    /// Rational reconstruction without degree bounds: among the remainder
    /// sequence of the extended Euclidean algorithm picks the pair with the
    /// smallest total degree, accepted only when that total stays `guard`
    /// below `deg m`. Returns `(n, d)` with `d` monic.
    pub fn reconstruct_auto(&self, m: &FpPoly, guard: usize) -> Option<(FpPoly, FpPoly)> {
        let p = self.p;
        let dm = m.degree()?;
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::constant(p, 1));
        let mut best: Option<(usize, FpPoly, FpPoly)> = None;
        loop {
            let tot = r1.degree().map_or(0, |d| d) + t1.degree().unwrap_or(0);
            if r1.is_zero() {
                // self = 0 mod m
                if best.is_none() {
                    best = Some((t1.degree().unwrap_or(0), r1.clone(), t1.clone()));
                }
                break;
            }
            if best.as_ref().is_none_or(|b| tot < b.0) {
                best = Some((tot, r1.clone(), t1.clone()));
            }
            let (q, r2) = r0.divrem(&r1);
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let (tot, n, d) = best?;
        if tot + guard >= dm || d.is_zero() || d.gcd(m).degree() != Some(0) {
            return None;
        }
        let inv = invmod(d.lc(), p).unwrap();
        Some((n.scale(inv), d.scale(inv)))
    }

    /// Distinct roots in `F_p`, sorted.
    pub fn roots(&self) -> Vec<u64> {
        let p = self.p;
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let f = self.monic();
        let xp = FpPoly::x(p).powmod(p, &f);
        let g = xp.sub(&FpPoly::x(p)).gcd(&f);
        let mut out = Vec::new();
        split_linear(&g, &mut out, 1);
        out.sort_unstable();
        out
    }

    /// Resultant over `F_p`.
    pub fn resultant(&self, o: &FpPoly) -> u64 {
        let p = self.p;
        let (mut a, mut b) = (self.clone(), o.clone());
        if a.is_zero() || b.is_zero() {
            return 0;
        }
        let mut res = 1u64;
        loop {
            let da = a.degree().unwrap();
            let db = match b.degree() {
                None => return 0,
                Some(d) => d,
            };
            if db == 0 {
                return mulmod(res, powmod(b.lc(), da as u64, p), p);
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return 0;
            }
            let dr = r.degree().unwrap();
            // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
            if (da * db) % 2 == 1 {
                res = submod(0, res, p);
            }
            res = mulmod(res, powmod(b.lc(), (da - dr) as u64, p), p);
            // res(b, r) = (-1)^(db dr) res(r, b) handled by swapping roles
            a = b;
            b = r;
        }
    }
}

fn split_linear(g: &FpPoly, out: &mut Vec<u64>, mut seed: u64) {
    let p = g.p;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic();
            out.push(submod(0, m.c[0], p));
        }
        Some(_) => {
            if p == 2 {
                for x in 0..2 {
                    if g.eval(x) == 0 {
                        out.push(x);
                    }
                }
                return;
            }
            loop {
                let a = FpPoly::new(p, vec![seed % p, 1]);
                seed += 1;
                let h = a.powmod((p - 1) / 2, g).sub(&FpPoly::constant(p, 1));
                let d = h.gcd(g);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap() {
                    let (q, _) = g.divrem(&d);
                    split_linear(&d, out, seed);
                    split_linear(&q, out, seed + 7);
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 1_000_000_007;

    #[test]
    fn divrem_roundtrip() {
        let a = FpPoly::new(P, vec![3, 1, 4, 1, 5, 9, 2, 6]);
        let b = FpPoly::new(P, vec![2, 7, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn roots_of_product() {
        let mut f = FpPoly::constant(P, 1);
        for r in [2u64, 5, 11, 123456] {
            f = f.mul(&FpPoly::new(P, vec![P - r, 1]));
        }
        f = f.mul(&FpPoly::new(P, vec![1, 0, 1])); // x^2+1 has roots iff p = 1 mod 4
        let mut expect = vec![2, 5, 11, 123456];
        if P % 4 == 1 {
            let i = (1..P).find(|&x| mulmod(x, x, P) == P - 1).unwrap();
            expect.push(i);
            expect.push(P - i);
        }
        expect.sort();
        assert_eq!(f.roots(), expect);
    }

    #[test]
    fn interpolation() {
        let f = FpPoly::new(P, vec![7, 0, 3, 11]);
        let xs: Vec<u64> = (1..=4).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| f.eval(x)).collect();
        assert_eq!(FpPoly::interpolate(P, &xs, &ys), f);
    }

    #[test]
    fn rational_reconstruction() {
        let n = FpPoly::new(P, vec![1, 2]);
        let d = FpPoly::new(P, vec![3, 0, 1]);
        let xs: Vec<u64> = (10..20).collect();
        let ys: Vec<u64> = xs
            .iter()
            .map(|&x| mulmod(n.eval(x), invmod(d.eval(x), P).unwrap(), P))
            .collect();
        let mut m = FpPoly::constant(P, 1);
        for &x in &xs {
            m = m.mul(&FpPoly::new(P, vec![P - x, 1]));
        }
        let f = FpPoly::interpolate(P, &xs, &ys);
        let (rn, rd) = f.rational_reconstruct(&m, 4, 4).unwrap();
        assert_eq!(rn, n);
        assert_eq!(rd, d);
    }

    #[test]
    fn resultant_matches_root_product() {
        // res(x - a, g) = g(a)
        let g = FpPoly::new(P, vec![5, 3, 0, 2]);
        let a = 17;
        let f = FpPoly::new(P, vec![P - a, 1]);
        assert_eq!(f.resultant(&g), g.eval(a));
        // res((x-1)(x-2), (x-3)) = (1-3)(2-3) = 2
        let h = FpPoly::new(P, vec![2, P - 3, 1]);
        let l = FpPoly::new(P, vec![P - 3, 1]);
        assert_eq!(h.resultant(&l), 2);
    }
}
