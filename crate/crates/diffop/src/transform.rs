//! Gauge transforms, pullbacks and exp-products.

use crate::linode::LinODE;
use crate::ratfun::RatFun;
use crate::DiffopError;
use lode_exactnum::Rat;

/// `v -> nabla_L v` on coordinates in the basis `y, y', ..., y^(n-1)`.
fn nabla(l: &LinODE, v: &[RatFun]) -> Vec<RatFun> {
    let n = l.order();
    let mut out: Vec<RatFun> = v.iter().map(|c| c.derivative()).collect();
    for i in 1..n {
        out[i] = &out[i] + &v[i - 1];
    }
    let top = &v[n - 1];
    if !top.is_zero() {
        for (j, a) in l.coeffs().iter().enumerate() {
            if !a.is_zero() {
                out[j] = &out[j] - &(a * top);
            }
        }
    }
    out
}

/// Solves `A x = b` over `Q(t)`; `A` is given by columns. `None` if singular.
pub fn solve_ratfun(cols: &[Vec<RatFun>], b: &[RatFun]) -> Option<Vec<RatFun>> {
    let n = cols.len();
    let mut m: Vec<Vec<RatFun>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).chain([b[i].clone()]).collect()).collect();
    for c in 0..n {
        // prefer the simplest nonzero pivot
        let piv = (c..n)
            .filter(|&r| !m[r][c].is_zero())
            .min_by_key(|&r| m[r][c].num().0.len() + m[r][c].den().0.len())?;
        m.swap(c, piv);
        let inv = m[c][c].inv().unwrap();
        let row: Vec<RatFun> = m[c].iter().map(|x| x * &inv).collect();
        m[c] = row;
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..=n {
                    if !m[c][k].is_zero() {
                        m[r][k] = &m[r][k] - &(&f * &m[c][k]);
                    }
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// The monic operator annihilating `x = sum f_i y^(i)` for every solution
/// `y` of `L`.
pub fn gauge_transform(l: &LinODE, f: &[RatFun]) -> Result<LinODE, DiffopError> {
    let n = l.order();
    if f.len() != n {
        return Err(DiffopError::Shape { expected: n, got: f.len() });
    }
    if f.iter().all(|x| x.is_zero()) {
        return Err(DiffopError::DegenerateGauge);
    }
    let mut es = vec![f.to_vec()];
    for _ in 0..n {
        let next = nabla(l, es.last().unwrap());
        es.push(next);
    }
    let rhs: Vec<RatFun> = es[n].iter().map(|x| -x).collect();
    let b = solve_ratfun(&es[..n], &rhs).ok_or(DiffopError::DegenerateGauge)?;
    Ok(LinODE::new(b))
}

/// The monic operator annihilating `y(h(t))` for every solution `y` of `L`.
pub fn pullback(l: &LinODE, h: &RatFun) -> Result<LinODE, DiffopError> {
    if h.is_constant() {
        return Err(DiffopError::ConstantPullback);
    }
    let n = l.order();
    let dh = h.derivative();
    // Y^(k) = sum_j B[k][j] y^(j)(h)
    let mut b: Vec<Vec<RatFun>> = vec![vec![RatFun::zero(); n + 1]; n + 1];
    b[0][0] = RatFun::one();
    for k in 0..n {
        for j in 0..=k + 1 {
            let mut v = if j <= k { b[k][j].derivative() } else { RatFun::zero() };
            if j >= 1 && !b[k][j - 1].is_zero() {
                v = &v + &(&b[k][j - 1] * &dh);
            }
            b[k + 1][j] = v;
        }
    }
    let ah: Vec<RatFun> = l.coeffs().iter().map(|a| a.compose(h)).collect();
    // Y^(n) = sum_{j<n} (B[n][j] - B[n][n] a_j(h)) y^(j)(h)
    let rhs: Vec<RatFun> = (0..n).map(|j| -(&b[n][j] - &(&b[n][n] * &ah[j]))).collect();
    // solve sum_{k<n} c_k B[k][j] = rhs_j, upper triangular in (j, k)
    let mut c = vec![RatFun::zero(); n];
    for j in (0..n).rev() {
        let mut s = rhs[j].clone();
        for k in j + 1..n {
            if !b[k][j].is_zero() {
                s = &s - &(&c[k] * &b[k][j]);
            }
        }
        c[j] = &s / &b[j][j];
    }
    Ok(LinODE::new(c))
}

/// The monic operator annihilating `f^(1/lam) y` for every solution `y`.
pub fn exp_product(l: &LinODE, f: &RatFun, lam: u32) -> Result<LinODE, DiffopError> {
    if f.is_zero() {
        return Err(DiffopError::ZeroScale);
    }
    if lam == 0 {
        return Err(DiffopError::ZeroExponent);
    }
    let n = l.order();
    // y = g x with g'/g = u = -f'/(lam f); y^(k) = g sum_j P[k][j] x^(j)
    let u = (&f.derivative() / f).scale(&Rat::new((-1).into(), lam.into()));
    let mut p: Vec<Vec<RatFun>> = vec![vec![RatFun::zero(); n + 1]; n + 1];
    p[0][0] = RatFun::one();
    for k in 0..n {
        for j in 0..=k + 1 {
            let mut v = if j <= k { &p[k][j].derivative() + &(&u * &p[k][j]) } else { RatFun::zero() };
            if j >= 1 {
                v = &v + &p[k][j - 1];
            }
            p[k + 1][j] = v;
        }
    }
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut s = p[n][j].clone();
        for (k, a) in l.coeffs().iter().enumerate() {
            if !a.is_zero() && !p[k][j].is_zero() {
                s = &s + &(a * &p[k][j]);
            }
        }
        out.push(s);
    }
    Ok(LinODE::new(out))
}

/// Coefficients `g` with `y = sum g_k x^(k)` when `x = sum f_i y^(i)`, so that
/// `gauge_transform(gauge_transform(L, f), g) == L`.
pub fn gauge_inverse(l: &LinODE, f: &[RatFun]) -> Result<Vec<RatFun>, DiffopError> {
    let n = l.order();
    if f.len() != n {
        return Err(DiffopError::Shape { expected: n, got: f.len() });
    }
    let mut es = vec![f.to_vec()];
    for _ in 1..n {
        let next = nabla(l, es.last().unwrap());
        es.push(next);
    }
    // sum_k g_k e_k = (1, 0, ..., 0): columns are the e_k
    let mut unit = vec![RatFun::zero(); n];
    unit[0] = RatFun::one();
    solve_ratfun(&es, &unit).ok_or(DiffopError::DegenerateGauge)
}
