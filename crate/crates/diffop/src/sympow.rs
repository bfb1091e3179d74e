//! Symmetric powers by cyclic-vector elimination.
//!
//! With `L` cleared to `q y^(n) = -sum p_j y^(j)` over `Z[t]`, the derivatives
//! of `y^d` live in the space of degree-`d` forms in `y, ..., y^(n-1)`. The
//! scaled vectors `w_k = q^k (y^d)^(k)` have polynomial entries and satisfy
//!
//! `w_{k+1} = q w_k' - k q' w_k + q Shift(w_k) - Red(w_k)`.
//!
//! The order is found as the first rank drop modulo a prime, the relation is
//! interpolated and lifted over several primes, and the result is accepted
//! only after the relation is checked over `Z[t]`.

use crate::linode::LinODE;
use crate::ratfun::RatFun;
use crate::DiffopError;
use lode_exactnum::fpoly::FpPoly;
use lode_exactnum::linalg::{rank_mod, rref_mod, solve_mod};
use lode_exactnum::modp::{invmod, mulmod, Crt, PrimeStream};
use lode_exactnum::{BigInt, QPoly, Rat, ZPoly};
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

const GUARD: usize = 6;
const MAX_PRIMES: usize = 400;

trait Ring: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn derivative(&self) -> Self;
    fn scale_int(&self, k: u64) -> Self;
}

impl Ring for ZPoly {
    fn is_zero(&self) -> bool {
        ZPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        ZPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ZPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ZPoly::mul(self, o)
    }
    fn derivative(&self) -> Self {
        ZPoly::derivative(self)
    }
    fn scale_int(&self, k: u64) -> Self {
        self.scale(&BigInt::from(k))
    }
}

impl Ring for FpPoly {
    fn is_zero(&self) -> bool {
        FpPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        FpPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        FpPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        FpPoly::mul(self, o)
    }
    fn derivative(&self) -> Self {
        FpPoly::derivative(self)
    }
    fn scale_int(&self, k: u64) -> Self {
        self.scale(k % self.p)
    }
}

/// Degree-`d` monomials in `n` variables with the transitions of the
/// derivation.
struct Basis {
    mons: Vec<Vec<u32>>,
    start: usize,
    /// `(target, multiplicity)` for `Y_i -> Y_{i+1}`, `i < n-1`.
    shift: Vec<Vec<(usize, u64)>>,
    /// `(j, target, multiplicity)` for `Y_{n-1} -> Y_j`.
    red: Vec<Vec<(usize, usize, u64)>>,
}

impl Basis {
    fn new(n: usize, d: u32) -> Basis {
        let mut mons = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(cur.clone());
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        rec(0, d, &mut cur, &mut mons);
        let index: HashMap<Vec<u32>, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut shift = Vec::with_capacity(mons.len());
        let mut red = Vec::with_capacity(mons.len());
        for m in &mons {
            let mut s = Vec::new();
            for i in 0..n - 1 {
                if m[i] > 0 {
                    let mut t = m.clone();
                    t[i] -= 1;
                    t[i + 1] += 1;
                    s.push((index[&t], m[i] as u64));
                }
            }
            let mut r = Vec::new();
            if m[n - 1] > 0 {
                for j in 0..n {
                    let mut t = m.clone();
                    t[n - 1] -= 1;
                    t[j] += 1;
                    r.push((j, index[&t], m[n - 1] as u64));
                }
            }
            shift.push(s);
            red.push(r);
        }
        let start = index[&{
            let mut v = vec![0u32; n];
            v[0] = d;
            v
        }];
        Basis { mons, start, shift, red }
    }

    fn len(&self) -> usize {
        self.mons.len()
    }
}

/// Cleared operator over a coefficient ring: `q` and `p_0..p_{n-1}`.
struct Cleared<P> {
    q: P,
    dq: P,
    ps: Vec<P>,
    zero: P,
}

impl<P: Ring> Cleared<P> {
    fn first(&self, basis: &Basis, one: P) -> Vec<P> {
        let mut w = vec![self.zero.clone(); basis.len()];
        w[basis.start] = one;
        w
    }

    fn step(&self, basis: &Basis, w: &[P], k: u64) -> Vec<P> {
        let nb = basis.len();
        let mut shifted = vec![self.zero.clone(); nb];
        let mut out: Vec<P> = Vec::with_capacity(nb);
        for (m, x) in w.iter().enumerate() {
            if x.is_zero() {
                out.push(self.zero.clone());
                continue;
            }
            let mut v = self.q.mul(&x.derivative());
            if k > 0 {
                v = v.sub(&self.dq.mul(x).scale_int(k));
            }
            out.push(v);
            for &(t, c) in &basis.shift[m] {
                shifted[t] = shifted[t].add(&x.scale_int(c));
            }
        }
        for (m, x) in w.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(j, t, c) in &basis.red[m] {
                if !self.ps[j].is_zero() {
                    out[t] = out[t].sub(&self.ps[j].mul(x).scale_int(c));
                }
            }
        }
        for (o, s) in out.iter_mut().zip(&shifted) {
            if !s.is_zero() {
                *o = o.add(&self.q.mul(s));
            }
        }
        out
    }
}

fn cleared_z(l: &LinODE) -> Cleared<ZPoly> {
    let mut ps = l.cleared();
    let q = ps.pop().unwrap();
    Cleared { dq: q.derivative(), q, ps, zero: ZPoly::zero() }
}

fn cleared_mod(cz: &Cleared<ZPoly>, p: u64) -> Option<Cleared<FpPoly>> {
    let q = cz.q.to_mod(p);
    if q.degree() != cz.q.degree() {
        return None;
    }
    Some(Cleared { dq: q.derivative(), q, ps: cz.ps.iter().map(|x| x.to_mod(p)).collect(), zero: FpPoly::zero(p) })
}

/// Values `v_k(tau) = w_k(tau) / q(tau)^k` for `k = 0..ws.len()`.
fn values_at(ws: &[Vec<FpPoly>], q: &FpPoly, tau: u64) -> Option<Vec<Vec<u64>>> {
    let p = q.p;
    let qinv = invmod(q.eval(tau), p)?;
    let mut scale = 1;
    let mut out = Vec::with_capacity(ws.len());
    for w in ws {
        out.push(w.iter().map(|x| mulmod(x.eval(tau), scale, p)).collect());
        scale = mulmod(scale, qinv, p);
    }
    Some(out)
}

struct Modular {
    basis: Basis,
    cz: Cleared<ZPoly>,
    rng: ChaCha8Rng,
    primes: PrimeStream,
}

impl Modular {
    fn new(l: &LinODE, d: u32) -> Modular {
        Modular {
            basis: Basis::new(l.order(), d),
            cz: cleared_z(l),
            rng: ChaCha8Rng::seed_from_u64(0x5eed_d1ff),
            primes: PrimeStream::new(),
        }
    }

    fn next_prime(&mut self) -> (u64, Cleared<FpPoly>) {
        loop {
            let p = self.primes.next().unwrap();
            if let Some(c) = cleared_mod(&self.cz, p) {
                return (p, c);
            }
        }
    }

    fn tau(&mut self, p: u64) -> u64 {
        self.rng.gen_range(1..p)
    }

    /// `w_0..w_r` modulo `p` and the order `r`, found as the first rank drop
    /// at a random point.
    fn order_mod(&mut self, c: &Cleared<FpPoly>) -> (usize, Vec<Vec<FpPoly>>) {
        let p = c.q.p;
        let nb = self.basis.len();
        let tau = loop {
            let t = self.tau(p);
            if c.q.eval(t) != 0 {
                break t;
            }
        };
        let mut ws = vec![c.first(&self.basis, FpPoly::constant(p, 1))];
        loop {
            let k = ws.len() - 1;
            let next = c.step(&self.basis, &ws[k], k as u64);
            ws.push(next);
            let rows = values_at(&ws, &c.q, tau).unwrap();
            if rank_mod(&rows, p) < ws.len() || ws.len() > nb {
                return (ws.len() - 1, ws);
            }
        }
    }

    /// Solves `v_r + sum a_k v_k = 0` at `tau` using the given rows.
    fn solve_at(ws: &[Vec<FpPoly>], q: &FpPoly, tau: u64, rows: &[usize]) -> Option<Vec<u64>> {
        let p = q.p;
        let r = ws.len() - 1;
        let vals = values_at(ws, q, tau)?;
        let a: Vec<Vec<u64>> = rows.iter().map(|&i| (0..r).map(|k| vals[k][i]).collect()).collect();
        let b: Vec<u64> = rows.iter().map(|&i| (p - vals[r][i]) % p).collect();
        if rank_mod(&a, p) < r {
            return None;
        }
        solve_mod(&a, &b, p)
    }

    fn pivot_rows(&mut self, ws: &[Vec<FpPoly>], q: &FpPoly) -> Vec<usize> {
        let p = q.p;
        let r = ws.len() - 1;
        loop {
            let tau = self.tau(p);
            if let Some(vals) = values_at(&ws[..r], q, tau) {
                let mut m = vals;
                let piv = rref_mod(&mut m, p);
                if piv.len() == r {
                    return piv;
                }
            }
        }
    }
}

/// Reconstructed relation modulo one prime: `D` monic and `P_k = D a_k`.
struct ModRelation {
    den: FpPoly,
    nums: Vec<FpPoly>,
}

fn reconstruct_mod(
    m: &mut Modular,
    c: &Cleared<FpPoly>,
    ws: &[Vec<FpPoly>],
    points_hint: usize,
) -> Option<(ModRelation, usize)> {
    let p = c.q.p;
    let r = ws.len() - 1;
    let rows = m.pivot_rows(ws, &c.q);
    let mut xs: Vec<u64> = Vec::new();
    let mut ys: Vec<Vec<u64>> = vec![Vec::new(); r];
    let mut target = points_hint.max(8);
    let mut tries = 0;
    loop {
        while xs.len() < target {
            let tau = m.tau(p);
            if xs.contains(&tau) {
                continue;
            }
            if let Some(sol) = Modular::solve_at(ws, &c.q, tau, &rows) {
                xs.push(tau);
                for (k, v) in sol.into_iter().enumerate() {
                    ys[k].push(v);
                }
            } else {
                tries += 1;
                if tries > 4 * target {
                    return None;
                }
            }
        }
        let modulus = xs.iter().fold(FpPoly::constant(p, 1), |acc, &x| acc.mul(&FpPoly::new(p, vec![p - x, 1])));
        let mut parts = Vec::with_capacity(r);
        for y in &ys {
            let f = FpPoly::interpolate(p, &xs, y);
            match f.reconstruct_auto(&modulus, GUARD) {
                Some(nd) => parts.push(nd),
                None => break,
            }
        }
        if parts.len() == r {
            let mut den = FpPoly::constant(p, 1);
            for (_, d) in &parts {
                let g = den.gcd(d);
                den = den.mul(&d.divrem(&g).0);
            }
            let den = den.monic();
            let nums = parts.iter().map(|(n, d)| n.mul(&den.divrem(d).0)).collect();
            return Some((ModRelation { den, nums }, target));
        }
        target *= 2;
    }
}

fn shape(rel: &ModRelation) -> Vec<usize> {
    std::iter::once(&rel.den).chain(&rel.nums).map(|x| x.c.len()).collect()
}

fn flatten(rel: &ModRelation, shape: &[usize]) -> Vec<u64> {
    let mut out = Vec::new();
    for (x, &len) in std::iter::once(&rel.den).chain(&rel.nums).zip(shape) {
        out.extend((0..len).map(|i| x.coeff(i)));
    }
    out
}

fn unflatten(vals: &[Rat], shape: &[usize]) -> Vec<QPoly> {
    let mut out = Vec::new();
    let mut at = 0;
    for &len in shape {
        out.push(QPoly::new(vals[at..at + len].to_vec()));
        at += len;
    }
    out
}

fn exact_ws(cz: &Cleared<ZPoly>, basis: &Basis, r: usize) -> Vec<Vec<ZPoly>> {
    let mut ws = vec![cz.first(basis, ZPoly::one())];
    for k in 0..r {
        let next = cz.step(basis, &ws[k], k as u64);
        ws.push(next);
    }
    ws
}

/// Checks `D w_r + sum_k P_k q^(r-k) w_k = 0` over `Z[t]`.
fn verify_exact(cz: &Cleared<ZPoly>, ws: &[Vec<ZPoly>], polys: &[QPoly]) -> bool {
    let r = ws.len() - 1;
    let mut den = BigInt::one();
    for p in polys {
        den = den.lcm(&p.to_zpoly().1);
    }
    let zs: Vec<ZPoly> = polys
        .iter()
        .map(|p| ZPoly::new(p.0.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect()))
        .collect();
    let (dz, pz) = zs.split_first().unwrap();
    // Horner in q: acc = P_0 w_0; acc = acc q + P_k w_k; ...; acc q + D w_r
    for i in 0..ws[0].len() {
        let mut acc = ZPoly::zero();
        for k in 0..=r {
            let coef = if k == r { dz } else { &pz[k] };
            if k > 0 {
                acc = acc.mul(&cz.q);
            }
            if !ws[k][i].is_zero() && !coef.is_zero() {
                acc = acc.add(&coef.mul(&ws[k][i]));
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Order of `S^d(L)`: rank of the cyclic vectors at a random point modulo a
/// large prime. Never exceeds the true order; equal to it unless the point
/// or prime is unlucky.
pub fn symmetric_power_order(l: &LinODE, d: u32) -> Result<usize, DiffopError> {
    if d == 0 {
        return Err(DiffopError::ZeroExponent);
    }
    let mut m = Modular::new(l, d);
    let (_, c) = m.next_prime();
    Ok(m.order_mod(&c).0)
}

/// The monic operator of minimal order annihilating all `d`-fold products
/// of solutions of `L`.
pub fn symmetric_power(l: &LinODE, d: u32) -> Result<LinODE, DiffopError> {
    if d == 0 {
        return Err(DiffopError::ZeroExponent);
    }
    if d == 1 {
        return Ok(l.clone());
    }
    let mut m = Modular::new(l, d);
    let (p0, c0) = m.next_prime();
    let (r, ws0) = m.order_mod(&c0);
    let exact = exact_ws(&m.cz, &m.basis, r);
    let (rel0, points) = reconstruct_mod(&mut m, &c0, &ws0, 16).ok_or(DiffopError::Reconstruction)?;
    let sh = shape(&rel0);
    let mut crt = Crt::new(p0, &flatten(&rel0, &sh));
    let mut last: Option<Vec<Rat>> = None;
    for _ in 0..MAX_PRIMES {
        if let Some(vals) = crt.rationals_common() {
            if last.as_ref() == Some(&vals) {
                let polys = unflatten(&vals, &sh);
                if verify_exact(&m.cz, &exact, &polys) {
                    return Ok(assemble(r, &polys));
                }
            }
            last = Some(vals);
        }
        let (p, c) = m.next_prime();
        let (rp, ws) = m.order_mod(&c);
        if rp != r {
            continue;
        }
        let Some((rel, _)) = reconstruct_mod(&mut m, &c, &ws, points) else { continue };
        if shape(&rel) != sh {
            continue;
        }
        crt.add(p, &flatten(&rel, &sh));
    }
    Err(DiffopError::Reconstruction)
}

/// `a_k = P_k / D`.
fn assemble(r: usize, polys: &[QPoly]) -> LinODE {
    let den = &polys[0];
    LinODE::new((0..r).map(|k| RatFun::new(polys[k + 1].clone(), den.clone())).collect())
}

/// Whether `S^d(L)` annihilates the constant `1`. When the symmetric power
/// has full order, a nonzero constant term at a point modulo a prime
/// already proves the answer is no; otherwise the operator is computed.
pub fn symmetric_power_kills_one(l: &LinODE, d: u32) -> Result<bool, DiffopError> {
    if d == 0 {
        return Err(DiffopError::ZeroExponent);
    }
    let mut m = Modular::new(l, d);
    let (_, c) = m.next_prime();
    let (r, ws) = m.order_mod(&c);
    if r == m.basis.len() {
        let rows = m.pivot_rows(&ws, &c.q);
        for _ in 0..8 {
            let tau = m.tau(c.q.p);
            if let Some(sol) = Modular::solve_at(&ws, &c.q, tau, &rows) {
                if sol[0] != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(symmetric_power(l, d)?.coeff(0).is_zero())
}
