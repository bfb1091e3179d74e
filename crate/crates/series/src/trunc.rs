//! Truncated power series in `s = t - t0` with exact rational coefficients.

use crate::SeriesError;
use lode_diffop::RatFun;
use lode_exactnum::{QPoly, Rat};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    base_point: Rat,
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    /// Coefficients of `s^0 .. s^N`; the truncation order is `N`.
    pub fn new(base_point: Rat, coeffs: Vec<Rat>) -> TruncSeries {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least one coefficient");
        TruncSeries { base_point, coeffs }
    }

    pub fn base_point(&self) -> &Rat {
        &self.base_point
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Truncation order `N`: coefficients through `s^N` are known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        let mut c = self.coeffs.clone();
        c.truncate(order + 1);
        TruncSeries::new(self.base_point.clone(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Expansion of a polynomial in `t`.
    pub fn from_poly(p: &QPoly, t0: &Rat, order: usize) -> TruncSeries {
        let shifted = p.compose(&QPoly::new(vec![t0.clone(), Rat::one()]));
        let c = (0..=order).map(|i| shifted.coeff(i)).collect();
        TruncSeries::new(t0.clone(), c)
    }

    /// Expansion of a rational function in `t` at `t0`.
    pub fn from_ratfun(r: &RatFun, t0: &Rat, order: usize) -> Result<TruncSeries, SeriesError> {
        let num = TruncSeries::from_poly(r.num(), t0, order);
        let den = TruncSeries::from_poly(r.den(), t0, order);
        num.div(&den).ok_or_else(|| SeriesError::PoleAtBasePoint(t0.clone()))
    }

    fn check(&self, o: &TruncSeries) {
        assert_eq!(self.base_point, o.base_point, "series at different base points");
    }

    pub fn add(&self, o: &TruncSeries) -> TruncSeries {
        self.check(o);
        let n = self.coeffs.len().min(o.coeffs.len());
        TruncSeries::new(self.base_point.clone(), (0..n).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect())
    }

    pub fn sub(&self, o: &TruncSeries) -> TruncSeries {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> TruncSeries {
        TruncSeries::new(self.base_point.clone(), self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product, valid through the smaller truncation order.
    pub fn mul(&self, o: &TruncSeries) -> TruncSeries {
        self.check(o);
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut c = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        TruncSeries::new(self.base_point.clone(), c)
    }

    /// Quotient; `None` when the divisor vanishes at the base point.
    pub fn div(&self, o: &TruncSeries) -> Option<TruncSeries> {
        self.check(o);
        let d0 = o.coeffs[0].clone();
        if d0.is_zero() {
            return None;
        }
        let inv = d0.recip();
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut c: Vec<Rat> = Vec::with_capacity(n);
        for m in 0..n {
            let mut acc = self.coeffs[m].clone();
            for i in 1..=m {
                if !o.coeffs[i].is_zero() {
                    acc -= &o.coeffs[i] * &c[m - i];
                }
            }
            c.push(acc * &inv);
        }
        Some(TruncSeries::new(self.base_point.clone(), c))
    }

    /// Derivative in `t`; the truncation order drops by one.
    pub fn derivative(&self) -> TruncSeries {
        if self.coeffs.len() == 1 {
            return TruncSeries::new(self.base_point.clone(), vec![Rat::zero()]);
        }
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, x)| x * Rat::from_integer(i.into())).collect();
        TruncSeries::new(self.base_point.clone(), c)
    }

    /// Value at `t0 + s` of the truncated polynomial.
    pub fn eval_polynomial(&self, s: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * s + c)
    }
}
