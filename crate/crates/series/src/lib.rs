//! Truncated power series at rational base points: solutions of linear
//! operators at ordinary points, hypergeometric series, operator residuals
//! and exact span-membership tests.

mod kronecker;
pub mod membership;
pub mod trunc;

pub use membership::{monomial_membership, monomials, span_membership, span_membership_report, Membership};
pub use trunc::TruncSeries;

use lode_diffop::LinODE;
use lode_exactnum::{QPoly, Rat};
use num_traits::{One, Zero};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("{0} is a singular point of the operator")]
    SingularExpansionPoint(Rat),
    #[error("invalid hypergeometric parameter {0}")]
    InvalidParameter(Rat),
    #[error("truncation too short: {rows} coefficients for {cols} series")]
    InconclusiveTruncation { rows: usize, cols: usize },
    #[error("series disagree on base point or truncation order")]
    Mismatch,
    #[error("rational function has a pole at the base point {0}")]
    PoleAtBasePoint(Rat),
    #[error("modular reconstruction did not converge")]
    Reconstruction,
}

/// Cleared operator coefficients `p_0..p_n` shifted to the base point, in
/// powers of `s = t - t0`.
fn shifted_cleared(l: &LinODE, t0: &Rat) -> Vec<QPoly> {
    let shift = QPoly::new(vec![t0.clone(), Rat::one()]);
    l.cleared().iter().map(|p| p.to_qpoly().compose(&shift)).collect()
}

/// `m!/(m-k)!`.
fn falling(m: usize, k: usize) -> Rat {
    if k > m {
        return Rat::zero();
    }
    Rat::from_integer(((m + 1 - k)..=m).fold(1u64.into(), |acc: num_bigint::BigInt, x| acc * x))
}

/// Coefficient of `s^m` in `sum_k p_k(s) y^(k)(s)`, skipping the term that
/// involves `c[skip]` when given.
fn residual_coeff(ps: &[QPoly], c: &[Rat], m: usize, skip: Option<usize>) -> Rat {
    let mut acc = Rat::zero();
    for (k, p) in ps.iter().enumerate() {
        for (i, pki) in p.0.iter().enumerate() {
            if i > m + k || pki.is_zero() {
                continue;
            }
            let idx = m + k - i;
            if Some(idx) == skip || idx < k || idx >= c.len() || c[idx].is_zero() {
                continue;
            }
            acc += pki * &c[idx] * falling(idx, k);
        }
    }
    acc
}

/// `n` series solutions at the ordinary point `t0` with `y_j^(i)(t0) = [i = j]`,
/// truncated at order `big_n`.
pub fn series_solutions(l: &LinODE, t0: &Rat, big_n: usize) -> Result<Vec<TruncSeries>, SeriesError> {
    if !l.is_ordinary_point(t0) {
        return Err(SeriesError::SingularExpansionPoint(t0.clone()));
    }
    let n = l.order();
    let ps = shifted_cleared(l, t0);
    let lead = ps[n].coeff(0);
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut c = vec![Rat::zero(); big_n.max(n - 1) + 1];
        c[j] = falling(j, j).recip();
        for m in 0..=big_n.saturating_sub(n) {
            if m + n > big_n {
                break;
            }
            let r = residual_coeff(&ps, &c, m, Some(m + n));
            c[m + n] = -r / (&lead * falling(m + n, n));
        }
        c.truncate(big_n + 1);
        out.push(TruncSeries::new(t0.clone(), c));
    }
    Ok(out)
}

/// `L(y)` for the denominator-cleared operator, valid through order
/// `N - n` where `N` is the truncation order of `y`.
pub fn residual(l: &LinODE, y: &TruncSeries) -> TruncSeries {
    let n = l.order();
    let ps = shifted_cleared(l, y.base_point());
    let len = y.coeffs().len().saturating_sub(n);
    let coeffs = (0..len).map(|m| residual_coeff(&ps, y.coeffs(), m, None)).collect();
    TruncSeries::new(y.base_point().clone(), coeffs)
}

/// Generalized hypergeometric series `pFq(upper; lower | t)` at `0`,
/// through order `big_n`.
pub fn hypergeometric_series(upper: &[Rat], lower: &[Rat], big_n: usize) -> Result<TruncSeries, SeriesError> {
    for b in lower {
        if b.is_integer() && b <= &Rat::zero() {
            return Err(SeriesError::InvalidParameter(b.clone()));
        }
    }
    let mut c = Vec::with_capacity(big_n + 1);
    let mut cur = Rat::one();
    for k in 0..=big_n {
        c.push(cur.clone());
        let kk = Rat::from_integer(k.into());
        let num = upper.iter().fold(Rat::one(), |acc, a| acc * (a + &kk));
        let den = lower.iter().fold(&kk + Rat::one(), |acc, b| acc * (b + &kk));
        cur = cur * num / den;
    }
    Ok(TruncSeries::new(Rat::zero(), c))
}

/// `3F2(a1, a2, a3; b1, b2 | t)` through order `big_n`.
pub fn hyp3f2_series(a: [&Rat; 3], b: [&Rat; 2], big_n: usize) -> Result<TruncSeries, SeriesError> {
    let upper: Vec<Rat> = a.iter().map(|x| (*x).clone()).collect();
    let lower: Vec<Rat> = b.iter().map(|x| (*x).clone()).collect();
    hypergeometric_series(&upper, &lower, big_n)
}
