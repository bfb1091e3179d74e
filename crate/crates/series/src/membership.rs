//! Exact tests of whether a series is a rational linear combination of
//! given series on their common truncation window.
//!
//! Small systems are decided by exact rank. Larger ones are solved modulo
//! primes; the combination is lifted by CRT and rational reconstruction and
//! a positive answer is returned only after exact re-substitution. A
//! negative answer at that size is the agreement of several primes.

use crate::kronecker::Scaled;
use crate::trunc::TruncSeries;
use crate::SeriesError;
use lode_exactnum::linalg::{rank_rat, rref_mod};
use lode_exactnum::modp::{mulmod, addmod, rat_to_mod, Crt, PrimeStream};
use lode_exactnum::{BigInt, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;

const EXACT_LIMIT: usize = 6000;
const MAX_PRIMES: usize = 3000;
const VOTES: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Proved by exact arithmetic (always the case for `member == true`).
    pub certified: bool,
    pub rank: usize,
    pub rows: usize,
    pub columns: usize,
    pub primes: usize,
    /// Number of columns used by the certified combination.
    pub support: usize,
}

/// Exponent vectors of all degree-`d` monomials in `n` variables, in
/// descending lexicographic order.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
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
    let mut out = Vec::new();
    if n > 0 {
        rec(0, d, &mut vec![0; n], &mut out);
    }
    out
}

/// Products of basis elements by balanced splitting, memoized.
fn build<T: Clone>(exps: &[Vec<u32>], basis: &[T], one: &T, mul: &dyn Fn(&T, &T) -> T) -> Vec<T> {
    fn go<T: Clone>(
        e: &[u32],
        basis: &[T],
        one: &T,
        mul: &dyn Fn(&T, &T) -> T,
        memo: &mut HashMap<Vec<u32>, T>,
    ) -> T {
        if let Some(v) = memo.get(e) {
            return v.clone();
        }
        let d: u32 = e.iter().sum();
        let v = if d == 0 {
            one.clone()
        } else if d == 1 {
            basis[e.iter().position(|&x| x == 1).unwrap()].clone()
        } else {
            let mut left = vec![0u32; e.len()];
            let mut need = d / 2;
            for (i, &x) in e.iter().enumerate() {
                let take = x.min(need);
                left[i] = take;
                need -= take;
            }
            let right: Vec<u32> = e.iter().zip(&left).map(|(a, b)| a - b).collect();
            let a = go(&left, basis, one, mul, memo);
            let b = go(&right, basis, one, mul, memo);
            mul(&a, &b)
        };
        memo.insert(e.to_vec(), v.clone());
        v
    }
    let mut memo = HashMap::new();
    exps.iter().map(|e| go(e, basis, one, mul, &mut memo)).collect()
}

fn conv_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().min(b.len());
    let mut c = vec![0u64; n];
    for (i, &x) in a.iter().take(n).enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().take(n - i).enumerate() {
            c[i + j] = addmod(c[i + j], mulmod(x, y, p), p);
        }
    }
    c
}

fn reduce(s: &TruncSeries, len: usize, p: u64) -> Option<Vec<u64>> {
    s.coeffs()[..len].iter().map(|x| rat_to_mod(x, p)).collect()
}

enum Columns<'a> {
    Explicit(&'a [TruncSeries]),
    Monomials { basis: &'a [TruncSeries], exps: Vec<Vec<u32>> },
}

impl Columns<'_> {
    fn count(&self) -> usize {
        match self {
            Columns::Explicit(v) => v.len(),
            Columns::Monomials { exps, .. } => exps.len(),
        }
    }

    fn modular(&self, len: usize, p: u64) -> Option<Vec<Vec<u64>>> {
        match self {
            Columns::Explicit(v) => v.iter().map(|s| reduce(s, len, p)).collect(),
            Columns::Monomials { basis, exps } => {
                let b: Vec<Vec<u64>> = basis.iter().map(|s| reduce(s, len, p)).collect::<Option<_>>()?;
                let mut one = vec![0u64; len];
                one[0] = 1;
                Some(build(exps, &b, &one, &|x, y| conv_mod(x, y, p)))
            }
        }
    }

    /// Exact check of `sum lambda_i col_i = cand` on the first `len` terms.
    fn verify(&self, lambda: &[Rat], cand: &TruncSeries, len: usize) -> bool {
        let support: Vec<usize> = (0..lambda.len()).filter(|&i| !lambda[i].is_zero()).collect();
        let cand = &cand.coeffs()[..len];
        match self {
            Columns::Explicit(v) => (0..len).all(|m| {
                let s: Rat = support.iter().map(|&i| &lambda[i] * &v[i].coeffs()[m]).sum();
                s == cand[m]
            }),
            Columns::Monomials { basis, exps } => {
                let b: Vec<Scaled> = basis.iter().map(|s| Scaled::from_rats(&s.coeffs()[..len])).collect();
                let mut one = vec![BigInt::zero(); len];
                one[0] = BigInt::one();
                let one = Scaled { nums: one, den: BigInt::one() };
                let chosen: Vec<Vec<u32>> = support.iter().map(|&i| exps[i].clone()).collect();
                let cols = build(&chosen, &b, &one, &|x, y| x.mul(y));
                // lambda_i = l_i / big_l, col_i = nums_i / den_i; compare over the
                // common denominator big_l * lcm(den_i)
                let big_l = support.iter().fold(BigInt::one(), |acc, &i| acc.lcm(lambda[i].denom()));
                let dall = cols.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.den));
                let weights: Vec<BigInt> = support
                    .iter()
                    .zip(&cols)
                    .map(|(&i, c)| lambda[i].numer() * (&big_l / lambda[i].denom()) * (&dall / &c.den))
                    .collect();
                let scale = &big_l * &dall;
                (0..len).all(|m| {
                    let lhs: BigInt = weights.iter().zip(&cols).map(|(w, c)| w * &c.nums[m]).sum();
                    lhs * cand[m].denom() == &scale * cand[m].numer()
                })
            }
        }
    }
}

fn common_len(series: &[&TruncSeries]) -> Result<usize, SeriesError> {
    let first = series[0];
    for s in series {
        if s.base_point() != first.base_point() || s.coeffs().len() != first.coeffs().len() {
            return Err(SeriesError::Mismatch);
        }
    }
    Ok(first.coeffs().len())
}

fn decide(cols: Columns<'_>, cand: &TruncSeries, len: usize) -> Result<Membership, SeriesError> {
    let ncols = cols.count();
    if len < 2 * ncols {
        return Err(SeriesError::InconclusiveTruncation { rows: len, cols: ncols });
    }
    if let Columns::Explicit(v) = &cols {
        if len * (ncols + 1) <= EXACT_LIMIT {
            let a: Vec<Vec<Rat>> = (0..len).map(|m| v.iter().map(|s| s.coeffs()[m].clone()).collect()).collect();
            let ab: Vec<Vec<Rat>> = a.iter().zip(cand.coeffs()).map(|(r, c)| {
                let mut r = r.clone();
                r.push(c.clone());
                r
            }).collect();
            let (ra, rab) = (rank_rat(&a), rank_rat(&ab));
            return Ok(Membership {
                member: ra == rab,
                certified: true,
                rank: ra,
                rows: len,
                columns: ncols,
                primes: 0,
                support: 0,
            });
        }
    }
    let mut primes = PrimeStream::new();
    let mut used = 0;
    let mut votes_out = 0;
    let mut votes_in = 0;
    let mut best: Option<(Vec<usize>, Crt)> = None;
    let mut last: Option<Vec<Rat>> = None;
    while used < MAX_PRIMES {
        let p = primes.next().unwrap();
        let (Some(colp), Some(bp)) = (cols.modular(len, p), reduce(cand, len, p)) else { continue };
        used += 1;
        let mut m: Vec<Vec<u64>> =
            (0..len).map(|r| colp.iter().map(|c| c[r]).chain([bp[r]]).collect()).collect();
        let piv = rref_mod(&mut m, p);
        if piv.last() == Some(&ncols) {
            votes_out += 1;
            if votes_out >= VOTES && votes_in == 0 {
                return Ok(Membership {
                    member: false,
                    certified: false,
                    rank: piv.len() - 1,
                    rows: len,
                    columns: ncols,
                    primes: used,
                    support: 0,
                });
            }
            continue;
        }
        votes_in += 1;
        let sol: Vec<u64> = (0..piv.len()).map(|i| m[i][ncols]).collect();
        match &mut best {
            Some((bp_, crt)) if *bp_ == piv => crt.add(p, &sol),
            Some((bp_, _)) if bp_.len() >= piv.len() => continue,
            _ => {
                best = Some((piv.clone(), Crt::new(p, &sol)));
                last = None;
                continue;
            }
        }
        let (piv, crt) = best.as_ref().unwrap();
        if let Some(vals) = crt.rationals_common() {
            if last.as_ref() == Some(&vals) {
                let mut lambda = vec![Rat::zero(); ncols];
                for (&c, v) in piv.iter().zip(&vals) {
                    lambda[c] = v.clone();
                }
                if cols.verify(&lambda, cand, len) {
                    return Ok(Membership {
                        member: true,
                        certified: true,
                        rank: piv.len(),
                        rows: len,
                        columns: ncols,
                        primes: used,
                        support: lambda.iter().filter(|x| !x.is_zero()).count(),
                    });
                }
            }
            last = Some(vals);
        }
    }
    Err(SeriesError::Reconstruction)
}

/// Whether `candidate` is a `Q`-linear combination of `products` on the
/// common truncation window.
pub fn span_membership(products: &[TruncSeries], candidate: &TruncSeries) -> Result<bool, SeriesError> {
    span_membership_report(products, candidate).map(|m| m.member)
}

pub fn span_membership_report(products: &[TruncSeries], candidate: &TruncSeries) -> Result<Membership, SeriesError> {
    let mut all: Vec<&TruncSeries> = products.iter().collect();
    all.push(candidate);
    let len = common_len(&all)?;
    decide(Columns::Explicit(products), candidate, len)
}

/// Membership of `candidate` in the span of all degree-`d` monomials in the
/// given series. The monomials are formed internally.
pub fn monomial_membership(basis: &[TruncSeries], d: u32, candidate: &TruncSeries) -> Result<Membership, SeriesError> {
    let mut all: Vec<&TruncSeries> = basis.iter().collect();
    all.push(candidate);
    let len = common_len(&all)?;
    decide(Columns::Monomials { basis, exps: monomials(basis.len(), d) }, candidate, len)
}
