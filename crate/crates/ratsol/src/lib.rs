//! Local exponents and rational solutions of monic operators over `Q(t)`.
//!
//! Singular points are handled through squarefree pieces of the leading
//! coefficient on which every coefficient has constant valuation, so
//! irrational singular points are treated through norms and never need to
//! be factored.

mod roots;

pub use roots::rational_roots;

use lode_diffop::{LinODE, RatFun};
use lode_exactnum::fpoly::FpPoly;
use lode_exactnum::linalg::rref_mod;
use lode_exactnum::modp::{rat_to_mod, Crt, PrimeStream};
use lode_exactnum::{BigInt, QPoly, Rat};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

const MAX_PRIMES: usize = 400;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RatsolError {
    #[error("modular reconstruction of rational solutions did not converge")]
    Reconstruction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(Rat),
    Infinity,
}

/// Roots of an indicial polynomial: the rational ones with multiplicity,
/// and the number of remaining roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndicialRoots {
    #[serde(serialize_with = "ser_rats")]
    pub rational: Vec<Rat>,
    pub other: usize,
}

fn ser_rats<S: serde::Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(lode_exactnum::rat_to_string))
}

/// A squarefree factor of the leading coefficient on which each `p_k` has a
/// constant valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPiece {
    pub factor: QPoly,
    /// Valuation of `p_k` along the piece; `None` when `p_k = 0`.
    pub valuations: Vec<Option<usize>>,
    /// Integer roots of the indicial equation at the roots of the piece.
    pub integer_exponents: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityData {
    pub pieces: Vec<SingularPiece>,
    /// Rational singular points with the multiplicity in the leading
    /// coefficient.
    pub rational_points: Vec<(Rat, usize)>,
    pub infinity: IndicialRoots,
}

fn cleared(l: &LinODE) -> Vec<QPoly> {
    l.cleared().iter().map(|z| z.to_qpoly()).collect()
}

/// Signed Stirling numbers of the first kind: `rho^(k falling) = sum s(k, j) rho^j`.
fn falling_poly(k: usize) -> QPoly {
    (0..k).fold(QPoly::one(), |acc, i| acc.mul(&QPoly::new(vec![Rat::from_integer(BigInt::from(-(i as i64))), Rat::one()])))
}

fn valuation(p: &QPoly, b: &QPoly) -> Option<usize> {
    if p.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut q = p.clone();
    while let Some(next) = q.div_exact(b) {
        q = next;
        v += 1;
    }
    Some(v)
}

/// Splits `b` into pieces on whose roots `p` has constant valuation.
fn split_by(b: &QPoly, p: &QPoly) -> Vec<QPoly> {
    if p.is_zero() {
        return vec![b.clone()];
    }
    let mut levels = vec![b.clone()];
    let mut d = p.clone();
    loop {
        let g = levels.last().unwrap().gcd(&d);
        if g.degree() == Some(0) {
            break;
        }
        levels.push(g);
        d = d.derivative();
    }
    let mut out = Vec::new();
    for w in levels.windows(2) {
        let piece = w[0].div_exact(&w[1]).unwrap();
        if piece.degree().unwrap_or(0) > 0 {
            out.push(piece.monic());
        }
    }
    let last = levels.last().unwrap();
    if last.degree().unwrap_or(0) > 0 {
        out.push(last.monic());
    }
    out
}

/// `I(t, rho)` reduced modulo the piece, as coefficients of `rho^j`.
fn indicial_form(ps: &[QPoly], b: &QPoly, vals: &[Option<usize>]) -> Vec<QPoly> {
    let shift = ps
        .iter()
        .enumerate()
        .filter_map(|(k, _)| vals[k].map(|v| v as i64 - k as i64))
        .min()
        .unwrap();
    let db = b.derivative();
    let mut out: Vec<QPoly> = Vec::new();
    for (k, p) in ps.iter().enumerate() {
        let Some(v) = vals[k] else { continue };
        if v as i64 - k as i64 != shift {
            continue;
        }
        let w = p.div_exact(&b.pow(v as u32)).unwrap().mul(&db.pow(v as u32)).divrem(b).1;
        for (j, c) in falling_poly(k).0.iter().enumerate() {
            if out.len() <= j {
                out.resize(j + 1, QPoly::zero());
            }
            out[j] = out[j].add(&w.scale(c));
        }
    }
    out
}

fn eval_rho(form: &[QPoly], rho: &Rat) -> QPoly {
    form.iter().rev().fold(QPoly::zero(), |acc, c| acc.scale(rho).add(c))
}

fn reduce_poly(p: &QPoly, m: u64) -> Option<FpPoly> {
    Some(FpPoly::new(m, p.0.iter().map(|c| rat_to_mod(c, m)).collect::<Option<Vec<_>>>()?))
}

/// Integer roots of `Res_t(b, I(t, rho))`, confirmed exactly.
fn integer_exponents(form: &[QPoly], b: &QPoly) -> Vec<BigInt> {
    if b.degree() == Some(1) {
        let alpha = -b.coeff(0) / b.coeff(1);
        let poly = QPoly::new(form.iter().map(|c| c.eval(&alpha)).collect());
        return rational_roots(&poly).into_iter().filter(|r| r.is_integer()).map(|r| r.to_integer()).collect();
    }
    let deg = b.degree().unwrap() * (form.len().max(1) - 1);
    for p in PrimeStream::new() {
        let Some(bp) = reduce_poly(b, p) else { continue };
        let Some(fp) = form.iter().map(|c| reduce_poly(c, p)).collect::<Option<Vec<_>>>() else { continue };
        let xs: Vec<u64> = (0..=deg as u64).collect();
        let ys: Vec<u64> = xs
            .iter()
            .map(|&x| {
                let it = fp.iter().rev().fold(FpPoly::zero(p), |acc, c| acc.scale(x).add(c));
                bp.resultant(&it)
            })
            .collect();
        let norm = FpPoly::interpolate(p, &xs, &ys);
        if norm.is_zero() {
            continue;
        }
        let mut out: Vec<BigInt> = roots::integer_candidates(&norm)
            .into_iter()
            .filter(|r| {
                let i = eval_rho(form, &Rat::from_integer(r.clone()));
                i.is_zero() || b.gcd(&i).degree().unwrap_or(0) > 0
            })
            .collect();
        out.sort();
        return out;
    }
    unreachable!()
}

/// Singular pieces of the leading coefficient with their exponents.
pub fn singularities(l: &LinODE) -> SingularityData {
    let ps = cleared(l);
    let n = l.order();
    let lead = &ps[n];
    let sqf = lead.div_exact(&lead.gcd(&lead.derivative())).unwrap().monic();
    let mut pieces = if sqf.degree().unwrap_or(0) > 0 { vec![sqf] } else { vec![] };
    for p in &ps[..n] {
        pieces = pieces.iter().flat_map(|b| split_by(b, p)).collect();
    }
    let mut out = Vec::new();
    let mut points = Vec::new();
    for b in pieces {
        let vals: Vec<Option<usize>> = ps.iter().map(|p| valuation(p, &b)).collect();
        let form = indicial_form(&ps, &b, &vals);
        for r in rational_roots(&b) {
            points.push((r, vals[n].unwrap()));
        }
        out.push(SingularPiece { integer_exponents: integer_exponents(&form, &b), factor: b, valuations: vals });
    }
    points.sort();
    SingularityData { pieces: out, rational_points: points, infinity: indicial_at_infinity(&ps) }
}

fn roots_of(poly: &QPoly) -> IndicialRoots {
    let mut rational = Vec::new();
    let mut rest = poly.clone();
    for r in rational_roots(poly) {
        let lin = QPoly::new(vec![-r.clone(), Rat::one()]);
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
            rational.push(r.clone());
        }
    }
    IndicialRoots { rational, other: rest.degree().unwrap_or(0) }
}

/// Indicial polynomial in `mu` for solutions behaving like `t^mu` at
/// infinity.
fn infinity_poly(ps: &[QPoly]) -> QPoly {
    let delta = ps.iter().enumerate().filter_map(|(k, p)| p.degree().map(|d| d as i64 - k as i64)).max().unwrap();
    ps.iter().enumerate().fold(QPoly::zero(), |acc, (k, p)| match p.degree() {
        Some(d) if d as i64 - k as i64 == delta => acc.add(&falling_poly(k).scale(&p.lc())),
        _ => acc,
    })
}

fn indicial_at_infinity(ps: &[QPoly]) -> IndicialRoots {
    // exponents in the local parameter 1/t: rho = -mu
    let mu = infinity_poly(ps);
    let rho = mu.compose(&QPoly::from_i64(&[0, -1]));
    roots_of(&rho)
}

/// Indicial polynomial at a point, in the local parameter `t - a` or `1/t`.
pub fn indicial_polynomial(l: &LinODE, point: &Point) -> QPoly {
    let ps = cleared(l);
    match point {
        Point::Infinity => infinity_poly(&ps).compose(&QPoly::from_i64(&[0, -1])),
        Point::Finite(a) => {
            let b = QPoly::new(vec![-a.clone(), Rat::one()]);
            let vals: Vec<Option<usize>> = ps.iter().map(|p| valuation(p, &b)).collect();
            let form = indicial_form(&ps, &b, &vals);
            QPoly::new(form.iter().map(|c| c.eval(a)).collect())
        }
    }
}

/// Roots of the indicial equation at a point (ordinary points give
/// `0, ..., n-1`). At infinity the exponents refer to the parameter `1/t`.
pub fn indicial_roots(l: &LinODE, point: &Point) -> IndicialRoots {
    roots_of(&indicial_polynomial(l, point))
}

/// Columns of the linear system `L(P/Q) = 0` for `P = sum c_j t^j`, modulo `p`.
fn system_mod(ps: &[QPoly], q: &QPoly, dp: usize, p: u64) -> Option<Vec<Vec<u64>>> {
    let n = ps.len() - 1;
    let psm: Vec<FpPoly> = ps.iter().map(|x| reduce_poly(x, p)).collect::<Option<_>>()?;
    let qm = reduce_poly(q, p)?;
    let dq = qm.derivative();
    // (1/Q)^(j) = w_j / Q^(j+1)
    let mut w = vec![FpPoly::constant(p, 1)];
    for j in 0..n {
        let next = w[j].derivative().mul(&qm).sub(&w[j].mul(&dq).scale((j as u64 + 1) % p));
        w.push(next);
    }
    let qpow: Vec<FpPoly> = std::iter::successors(Some(FpPoly::constant(p, 1)), |x| Some(x.mul(&qm))).take(n + 1).collect();
    let binom = |k: usize, i: usize| -> u64 {
        let mut c = 1u128;
        for x in 0..i {
            c = c * (k - x) as u128 / (x + 1) as u128;
        }
        (c % p as u128) as u64
    };
    let mut m = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = FpPoly::zero(p);
        for k in i..=n {
            if psm[k].is_zero() {
                continue;
            }
            acc = acc.add(&psm[k].mul(&w[k - i]).mul(&qpow[n - k + i]).scale(binom(k, i)));
        }
        m.push(acc);
    }
    let mut cols = Vec::with_capacity(dp + 1);
    for j in 0..=dp {
        let mut col = FpPoly::zero(p);
        for (i, mi) in m.iter().enumerate() {
            if i > j {
                break;
            }
            let mut f = 1u64;
            for x in 0..i {
                f = ((f as u128 * (j - x) as u128) % p as u128) as u64;
            }
            let mut sh = vec![0u64; j - i];
            sh.extend(mi.c.iter().map(|&c| ((c as u128 * f as u128) % p as u128) as u64));
            col = col.add(&FpPoly::new(p, sh));
        }
        cols.push(col);
    }
    let rows = cols.iter().map(|c| c.c.len()).max().unwrap_or(0);
    Some((0..rows.max(1)).map(|r| cols.iter().map(|c| c.coeff(r)).collect()).collect())
}

fn normalize(r: RatFun) -> RatFun {
    match r.num().0.iter().find(|c| !c.is_zero()) {
        Some(c) => r.scale(&c.recip()),
        None => r,
    }
}

/// A basis of the rational solutions of `L`, normalized so that the first
/// nonzero numerator coefficient is `1`.
pub fn rational_solutions(l: &LinODE) -> Result<Vec<RatFun>, RatsolError> {
    let data = singularities(l);
    let ps = cleared(l);
    let mut q = QPoly::one();
    for piece in &data.pieces {
        let low = piece.integer_exponents.iter().min().cloned().unwrap_or_else(BigInt::zero);
        if low < BigInt::zero() {
            let m = (-low).to_u32().expect("pole order bound");
            q = q.mul(&piece.factor.pow(m));
        }
    }
    let mu = rational_roots(&infinity_poly(&ps));
    let Some(mu_max) = mu.iter().filter(|r| r.is_integer()).map(|r| r.to_integer()).max() else {
        return Ok(vec![]);
    };
    let dp = BigInt::from(q.degree().unwrap()) + mu_max;
    if dp < BigInt::zero() {
        return Ok(vec![]);
    }
    let dp = dp.to_usize().expect("degree bound");
    let mut primes = PrimeStream::new();
    let mut best: Option<(Vec<usize>, Crt)> = None;
    let mut last: Option<Vec<Rat>> = None;
    for _ in 0..MAX_PRIMES {
        let p = primes.next().unwrap();
        let Some(mut m) = system_mod(&ps, &q, dp, p) else { continue };
        let piv = rref_mod(&mut m, p);
        let free: Vec<usize> = (0..=dp).filter(|c| !piv.contains(c)).collect();
        if free.is_empty() {
            return Ok(vec![]);
        }
        // nullspace vectors, one per free column, flattened
        let mut flat = Vec::with_capacity(free.len() * (dp + 1));
        for &f in &free {
            let mut v = vec![0u64; dp + 1];
            v[f] = 1;
            for (i, &pc) in piv.iter().enumerate() {
                v[pc] = (p - m[i][f]) % p;
            }
            flat.extend(v);
        }
        match &mut best {
            Some((bf, crt)) if *bf == free => crt.add(p, &flat),
            Some((bf, _)) if bf.len() <= free.len() => continue,
            _ => {
                best = Some((free, Crt::new(p, &flat)));
                last = None;
                continue;
            }
        }
        let (free, crt) = best.as_ref().unwrap();
        let Some(vals) = crt.rationals_common() else { continue };
        if last.as_ref() == Some(&vals) {
            let sols: Vec<RatFun> = vals
                .chunks(dp + 1)
                .map(|c| RatFun::new(QPoly::new(c.to_vec()), q.clone()))
                .collect();
            if sols.len() == free.len() && sols.iter().all(|r| l.apply(r).is_zero()) {
                return Ok(sols.into_iter().map(normalize).collect());
            }
        }
        last = Some(vals);
    }
    Err(RatsolError::Reconstruction)
}

/// Dimension of the rational solution space.
pub fn rational_solution_dimension(l: &LinODE) -> Result<usize, RatsolError> {
    rational_solutions(l).map(|b| b.len())
}
