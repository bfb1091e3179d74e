//! Dense linear algebra over `Q` and over `F_p`.

use crate::modp::{invmod, mulmod, submod};
use crate::rat::Rat;
use num_traits::{One, Zero};

/// Reduced row echelon form over `Q`; returns pivot columns.
pub fn rref_rat(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (top, bottom) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for (x, y) in top.iter_mut().zip(bottom.iter()) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_rat(m: &[Vec<Rat>]) -> usize {
    let mut a = m.to_vec();
    rref_rat(&mut a).len()
}

/// Unique solution of a square system, `None` if singular.
pub fn solve_rat(mut a: Vec<Vec<Rat>>, b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = a.len();
    for (row, v) in a.iter_mut().zip(b) {
        row.push(v);
    }
    let piv = rref_rat(&mut a);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Any solution of `a x = b`, `None` if inconsistent.
pub fn solve_any_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let piv = rref_rat(&mut m);
    if piv.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// Basis of the right nullspace over `Q`.
pub fn nullspace_rat(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.to_vec();
    let piv = rref_rat(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !piv.contains(c)) {
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (i, &pc) in piv.iter().enumerate() {
            v[pc] = -a[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant over `Q` by elimination.
pub fn det_rat(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if pr != c {
            a.swap(pr, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let v = &f * &a[c][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Reduced row echelon form over `F_p`; returns pivot columns.
pub fn rref_mod(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = invmod(m[r][c], p).unwrap();
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if y != 0 {
                        *x = submod(*x, mulmod(f, y, p), p);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_mod(m: &[Vec<u64>], p: u64) -> usize {
    let mut a = m.to_vec();
    row_echelon_rank_mod(&mut a, p)
}

/// Rank by forward elimination only (cheaper than a full rref).
pub fn row_echelon_rank_mod(m: &mut [Vec<u64>], p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = invmod(m[r][c], p).unwrap();
        let pivot_row: Vec<u64> = m[r].iter().map(|&x| mulmod(x, inv, p)).collect();
        for row in m.iter_mut().skip(r + 1) {
            if row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if y != 0 {
                        *x = submod(*x, mulmod(f, y, p), p);
                    }
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right nullspace over `F_p`.
pub fn nullspace_mod(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.to_vec();
    let piv = rref_mod(&mut a, p);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !piv.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in piv.iter().enumerate() {
            v[pc] = submod(0, a[i][free], p);
        }
        basis.push(v);
    }
    basis
}

/// Any solution of `a x = b` over `F_p` (free variables zero).
pub fn solve_mod(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(r, &v)| {
            let mut r = r.clone();
            r.push(v);
            r
        })
        .collect();
    let piv = rref_mod(&mut m, p);
    if piv.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![0u64; cols];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = m[i][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn solve_and_det() {
        let a = q(&[&[2, 1], &[1, 3]]);
        assert_eq!(det_rat(&a), rat(5, 1));
        let x = solve_rat(a, vec![rat(3, 1), rat(5, 1)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        assert!(solve_rat(q(&[&[1, 2], &[2, 4]]), vec![rat(1, 1), rat(2, 1)]).is_none());
    }

    #[test]
    fn nullspaces() {
        let a = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace_rat(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s: Rat = a[0].iter().zip(v).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
        let p = 101;
        let am = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(rank_mod(&am, p), 1);
        let nm = nullspace_mod(&am, p);
        assert_eq!(nm.len(), 2);
    }
}
