//! Small square matrices over `Cyclo`.

use crate::MPolyError;
use lode_exactnum::{Cyclo, ExactError, Rat};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat {
    rows: Vec<Vec<Cyclo>>,
}

impl Mat {
    pub fn from_rows(rows: Vec<Vec<Cyclo>>) -> Result<Mat, MPolyError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MPolyError::ShapeMismatch { expected: n, got: rows.iter().map(|r| r.len()).max().unwrap_or(0) });
        }
        Ok(Mat { rows })
    }

    /// Matrix with integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Cyclo::from_int(x)).collect()).collect()).unwrap()
    }

    pub fn identity(n: usize) -> Mat {
        Mat::diag((0..n).map(|_| Cyclo::one()).collect())
    }

    pub fn diag(d: Vec<Cyclo>) -> Mat {
        let n = d.len();
        let rows = d
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                let mut r = vec![Cyclo::zero(); n];
                r[i] = x;
                r
            })
            .collect();
        Mat { rows }
    }

    pub fn scalar(n: usize, x: &Cyclo) -> Mat {
        Mat::diag(vec![x.clone(); n])
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Cyclo>] {
        &self.rows
    }

    /// Least common multiple of the conductors of non-rational entries.
    pub fn conductor(&self) -> u32 {
        self.rows
            .iter()
            .flatten()
            .filter(|x| !x.is_rational())
            .fold(1u32, |m, x| m.lcm(&x.conductor()))
    }

    pub fn embed(&self, m: u32) -> Result<Mat, ExactError> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| lift(x, m)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Mat { rows })
    }

    pub fn try_mul(&self, o: &Mat) -> Result<Mat, MPolyError> {
        let n = self.size();
        if o.size() != n {
            return Err(MPolyError::ShapeMismatch { expected: n, got: o.size() });
        }
        let m = self.conductor().lcm(&o.conductor());
        let a = self.embed(m)?;
        let b = o.embed(m)?;
        let mut rows = vec![vec![Cyclo::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclo::rational_in(m, &Rat::from_integer(0.into()));
                for k in 0..n {
                    if a.rows[i][k].is_zero() || b.rows[k][j].is_zero() {
                        continue;
                    }
                    acc = acc.try_add(&a.rows[i][k].try_mul(&b.rows[k][j])?)?;
                }
                rows[i][j] = acc;
            }
        }
        Ok(Mat { rows })
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut r = Mat::identity(self.size());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn scale(&self, c: &Cyclo) -> Mat {
        let m = self.conductor().lcm(&if c.is_rational() { 1 } else { c.conductor() });
        let a = self.embed(m).unwrap();
        let c = lift(c, m).unwrap();
        Mat { rows: a.rows.iter().map(|r| r.iter().map(|x| x * &c).collect()).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let n = self.size();
        Mat { rows: (0..n).map(|j| (0..n).map(|i| self.rows[i][j].clone()).collect()).collect() }
    }

    pub fn det(&self) -> Cyclo {
        let m = self.conductor();
        let a = self.embed(m).unwrap();
        det_rec(&a.rows)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inv(&self) -> Result<Mat, MPolyError> {
        let n = self.size();
        let m = self.conductor();
        let mut a = self.embed(m)?.rows;
        let mut b = Mat::identity(n).embed(m)?.rows;
        for c in 0..n {
            let pr = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(ExactError::DivisionByZero)?;
            a.swap(c, pr);
            b.swap(c, pr);
            let inv = a[c][c].inv()?;
            for j in 0..n {
                a[c][j] = &a[c][j] * &inv;
                b[c][j] = &b[c][j] * &inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..n {
                        a[i][j] = &a[i][j] - &(&f * &a[c][j]);
                        b[i][j] = &b[i][j] - &(&f * &b[c][j]);
                    }
                }
            }
        }
        Ok(Mat { rows: b })
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.rows[0][0].is_one()
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| if i == j { self.rows[i][j] == self.rows[0][0] } else { self.rows[i][j].is_zero() }))
    }

    pub fn trace(&self) -> Cyclo {
        let m = self.conductor();
        let mut acc = Cyclo::rational_in(m, &Rat::from_integer(0.into()));
        for i in 0..self.size() {
            acc = &acc + &lift(&self.rows[i][i], m).unwrap();
        }
        acc
    }

    /// If every row and column has exactly one nonzero entry, returns the
    /// column index of the nonzero entry in each row.
    pub fn monomial_pattern(&self) -> Option<Vec<usize>> {
        let n = self.size();
        let mut cols = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for r in &self.rows {
            let nz: Vec<usize> = (0..n).filter(|&j| !r[j].is_zero()).collect();
            if nz.len() != 1 || seen[nz[0]] {
                return None;
            }
            seen[nz[0]] = true;
            cols.push(nz[0]);
        }
        Some(cols)
    }
}

pub(crate) fn lift(x: &Cyclo, m: u32) -> Result<Cyclo, ExactError> {
    if x.conductor() == m {
        Ok(x.clone())
    } else if x.is_rational() {
        Ok(Cyclo::rational_in(m, &x.to_rat().unwrap()))
    } else {
        x.embed(m)
    }
}

fn det_rec(a: &[Vec<Cyclo>]) -> Cyclo {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    if n == 2 {
        return &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]);
    }
    let mut acc = Cyclo::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Cyclo>> = a[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = &a[0][j] * &det_rec(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", s.join(", "))?;
        }
        Ok(())
    }
}
