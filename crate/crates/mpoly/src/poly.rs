use crate::mat::{lift, Mat};
use crate::mono::{Mono, MAX_VARS};
use crate::MPolyError;
use lode_exactnum::modp::{mulmod, powmod};
use lode_exactnum::{Cyclo, CycloRing, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse polynomial in `X1..Xn` over cyclotomic fields.
///
/// Coefficients may come from different cyclotomic fields; arithmetic lifts
/// both operands to the least common multiple of their conductors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Mono, Cyclo>,
}

/// Integer form: `sum v_i m_i / den` with `v_i` in `Z[zeta_m]`.
struct IntForm {
    ring: CycloRing,
    den: BigInt,
    terms: Vec<(Mono, Vec<BigInt>)>,
}

type Acc = HashMap<Mono, Vec<BigInt>>;

fn acc_add(acc: &mut Acc, ring: &CycloRing, m: Mono, v: Vec<BigInt>) {
    match acc.get_mut(&m) {
        Some(x) => ring.add_assign(x, &v),
        None => {
            acc.insert(m, v);
        }
    }
}

fn is_rational_vec(v: &[BigInt]) -> bool {
    v.iter().skip(1).all(|x| x.is_zero())
}

/// `v * c` in `Z[zeta_m]`, with a shortcut for rational `c`.
fn ring_mul(ring: &CycloRing, v: &[BigInt], c: &[BigInt]) -> Vec<BigInt> {
    if is_rational_vec(c) {
        v.iter().map(|x| x * &c[0]).collect()
    } else if is_rational_vec(v) {
        c.iter().map(|x| x * &v[0]).collect()
    } else {
        ring.mul(v, c)
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        assert!(nvars >= 1 && nvars <= MAX_VARS);
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Cyclo) -> MPoly {
        MPoly::monomial(nvars, &vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> MPoly {
        MPoly::constant(nvars, Cyclo::one())
    }

    /// The variable `X_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> MPoly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(nvars, &e, Cyclo::one())
    }

    pub fn monomial(nvars: usize, exps: &[u32], c: Cyclo) -> MPoly {
        assert_eq!(exps.len(), nvars);
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono::from_exps(exps), c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Cyclo)>>(nvars: usize, terms: I) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            p = &p + &MPoly::monomial(nvars, &e, c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> MPoly {
        MPoly::from_terms(nvars, terms.iter().map(|(c, e)| (e.to_vec(), Cyclo::from_int(*c))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &Cyclo)> + '_ {
        self.terms.iter().rev().map(move |(m, c)| (m.exps(self.nvars), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Cyclo {
        self.terms.get(&Mono::from_exps(exps)).cloned().unwrap_or_else(Cyclo::zero)
    }

    /// Total degree (`None` for the zero polynomial).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(a), Some(b)) => a.degree() == b.degree(),
            _ => true,
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Least common multiple of the conductors of non-rational coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms.values().filter(|c| !c.is_rational()).fold(1u32, |m, c| m.lcm(&c.conductor()))
    }

    /// `true` if all coefficients are rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.is_rational())
    }

    fn int_form(&self, m: u32) -> IntForm {
        let ring = CycloRing::new(m);
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denominator());
        }
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let (num, d) = ring.split(c).expect("coefficient conductor divides m");
                let f = &den / d;
                (*mono, num.into_iter().map(|x| x * &f).collect())
            })
            .collect();
        IntForm { ring, den, terms }
    }

    fn from_acc(nvars: usize, ring: &CycloRing, acc: Acc, den: &BigInt) -> MPoly {
        let mut terms = BTreeMap::new();
        for (m, v) in acc {
            if ring.is_zero(&v) {
                continue;
            }
            terms.insert(m, ring.join(v, den.clone()));
        }
        MPoly { nvars, terms }
    }

    fn check_nvars(&self, o: &MPoly) {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
    }

    fn add_impl(&self, o: &MPoly, negate: bool) -> MPoly {
        self.check_nvars(o);
        let m = self.conductor().lcm(&o.conductor());
        let mut terms = self.terms.clone();
        for (mono, c) in &o.terms {
            let c = lift(c, m).unwrap();
            match terms.get_mut(mono) {
                Some(x) => {
                    let x2 = lift(x, m).unwrap();
                    let s = if negate { &x2 - &c } else { &x2 + &c };
                    if s.is_zero() {
                        terms.remove(mono);
                    } else {
                        *x = s;
                    }
                }
                None => {
                    terms.insert(*mono, if negate { -c } else { c });
                }
            }
        }
        MPoly { nvars: self.nvars, terms }
    }

    fn mul_impl(&self, o: &MPoly) -> MPoly {
        self.check_nvars(o);
        if self.is_zero() || o.is_zero() {
            return MPoly::zero(self.nvars);
        }
        if o.terms.len() == 1 {
            let (mo, c) = o.terms.iter().next().unwrap();
            return self.mul_term(*mo, c);
        }
        if self.terms.len() == 1 {
            let (mo, c) = self.terms.iter().next().unwrap();
            return o.mul_term(*mo, c);
        }
        let m = self.conductor().lcm(&o.conductor());
        let a = self.int_form(m);
        let b = o.int_form(m);
        let ring = a.ring.clone();
        let mut acc: Acc = HashMap::with_capacity(a.terms.len() * 2);
        for (ma, va) in &a.terms {
            for (mb, vb) in &b.terms {
                acc_add(&mut acc, &ring, ma.mul(*mb), ring_mul(&ring, va, vb));
            }
        }
        MPoly::from_acc(self.nvars, &ring, acc, &(&a.den * &b.den))
    }

    fn mul_term(&self, mo: Mono, c: &Cyclo) -> MPoly {
        let m = self.conductor().lcm(&if c.is_rational() { 1 } else { c.conductor() });
        let c = lift(c, m).unwrap();
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(mo), &lift(v, m).unwrap() * &c))
            .collect();
        MPoly { nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: &Cyclo) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        self.mul_term(Mono::one(), c)
    }

    pub fn scale_rat(&self, r: &Rat) -> MPoly {
        if r.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(k, v)| (*k, v.scale(r))).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut r = MPoly::one(self.nvars);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        r
    }

    /// Partial derivative with respect to `X_{i+1}`.
    pub fn diff(&self, i: usize) -> MPoly {
        assert!(i < self.nvars);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| (m.div_var(i), c.scale(&Rat::from_integer(m.exp(i).into()))))
            .collect();
        MPoly { nvars: self.nvars, terms }
    }

    pub fn gradient(&self) -> Vec<MPoly> {
        (0..self.nvars).map(|i| self.diff(i)).collect()
    }

    pub fn hessian(&self) -> Vec<Vec<MPoly>> {
        let g = self.gradient();
        g.iter().map(|gi| (0..self.nvars).map(|j| gi.diff(j)).collect()).collect()
    }

    pub fn eval(&self, point: &[Cyclo]) -> Result<Cyclo, MPolyError> {
        if point.len() != self.nvars {
            return Err(MPolyError::ShapeMismatch { expected: self.nvars, got: point.len() });
        }
        let mut powers: Vec<Vec<Cyclo>> = point.iter().map(|x| vec![Cyclo::one(), x.clone()]).collect();
        let mut acc = Cyclo::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().try_mul(&point[i])?;
                    pw.push(next);
                }
                if e > 0 {
                    t = t.try_mul(&pw[e])?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Evaluation through the ring map to `F_p` sending `zeta_m` to `w`.
    /// Every coefficient conductor must divide `m`. `None` if a coefficient
    /// denominator vanishes mod `p`.
    pub fn eval_mod(&self, point: &[u64], p: u64, m: u32, w: u64) -> Option<u64> {
        assert_eq!(point.len(), self.nvars);
        let mut acc = 0u64;
        let mut cache: HashMap<u32, u64> = HashMap::new();
        for (mono, c) in &self.terms {
            let cm = c.conductor();
            let wc = *cache.entry(cm).or_insert_with(|| {
                assert_eq!(m % cm, 0, "conductor {cm} does not divide {m}");
                powmod(w, (m / cm) as u64, p)
            });
            let mut t = c.reduce_mod(p, wc)?;
            for (i, &x) in point.iter().enumerate() {
                let e = mono.exp(i);
                if e > 0 {
                    t = mulmod(t, powmod(x, e as u64, p), p);
                }
            }
            acc = (acc + t) % p;
        }
        Some(acc)
    }

    /// Substitutes `X_j -> sum_i X_i g_ij`, i.e. returns `F(X g)` for the row
    /// vector `X`.
    pub fn substitute_linear(&self, g: &Mat) -> Result<MPoly, MPolyError> {
        let n = self.nvars;
        if g.size() != n {
            return Err(MPolyError::ShapeMismatch { expected: n, got: g.size() });
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let m = self.conductor().lcm(&g.conductor());
        let g = g.embed(m)?;
        if let Some(cols) = g.monomial_pattern() {
            return Ok(self.subst_monomial(&g, &cols, m));
        }
        let (perm, l, u) = plu(&g)?;
        let mut f = self.clone();
        for j in 0..n {
            let col: Vec<Cyclo> = (0..n).map(|i| u[i][j].clone()).collect();
            f = f.subst_slot(j, &col, m);
        }
        for j in (0..n).rev() {
            let col: Vec<Cyclo> = (0..n).map(|i| l[i][j].clone()).collect();
            f = f.subst_slot(j, &col, m);
        }
        Ok(f.permute_vars(&perm))
    }

    /// Relabels variables: `X_i -> X_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly {
        if perm.iter().enumerate().all(|(i, &j)| i == j) {
            return self.clone();
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect() }
    }

    fn subst_monomial(&self, g: &Mat, cols: &[usize], m: u32) -> MPoly {
        // (X g)_j = X_i g_ij where i is the row with its nonzero in column j
        let n = self.nvars;
        let mut row_of = vec![0usize; n];
        for (i, &j) in cols.iter().enumerate() {
            row_of[j] = i;
        }
        let mut powers: Vec<Vec<Cyclo>> = (0..n).map(|j| vec![Cyclo::rational_in(m, &Rat::one()), g.get(row_of[j], j).clone()]).collect();
        let mut terms = BTreeMap::new();
        for (mono, c) in &self.terms {
            let mut coef = lift(c, m).unwrap();
            let mut exps = vec![0u32; n];
            for j in 0..n {
                let e = mono.exp(j) as usize;
                exps[row_of[j]] = e as u32;
                if e > 0 {
                    let pw = &mut powers[j];
                    while pw.len() <= e {
                        let next = pw.last().unwrap() * &pw[1];
                        pw.push(next);
                    }
                    coef = &coef * &pw[e];
                }
            }
            terms.insert(Mono::from_exps(&exps), coef);
        }
        MPoly { nvars: n, terms }
    }

    /// Replaces `X_j` by `sum_i col[i] X_i`.
    fn subst_slot(&self, j: usize, col: &[Cyclo], m: u32) -> MPoly {
        let n = self.nvars;
        let trivial = (0..n).all(|i| if i == j { col[i].is_one() } else { col[i].is_zero() });
        if trivial {
            return self.clone();
        }
        let f = self.int_form(m);
        let ring = f.ring.clone();
        // clear denominators of the linear form
        let mut d = BigInt::one();
        for c in col {
            d = d.lcm(c.denominator());
        }
        let lin: Vec<(usize, Vec<BigInt>)> = col
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let (num, cd) = ring.split(c).unwrap();
                let k = &d / cd;
                (i, num.into_iter().map(|x| x * &k).collect())
            })
            .collect();
        let kmax = f.terms.iter().map(|(mo, _)| mo.exp(j)).max().unwrap_or(0);
        let mut groups: Vec<Vec<(Mono, Vec<BigInt>)>> = vec![Vec::new(); kmax as usize + 1];
        for (mo, v) in f.terms {
            groups[mo.exp(j) as usize].push((mo.drop_var(j), v));
        }
        let mut acc: Acc = HashMap::new();
        for (mo, v) in groups.pop().unwrap() {
            acc_add(&mut acc, &ring, mo, v);
        }
        let mut dpow = BigInt::one();
        for k in (0..kmax as usize).rev() {
            dpow *= &d;
            let mut next: Acc = HashMap::with_capacity(acc.len() * 2);
            for (mo, v) in &acc {
                for (i, c) in &lin {
                    acc_add(&mut next, &ring, mo.mul_var(*i, 1), ring_mul(&ring, v, c));
                }
            }
            for (mo, v) in std::mem::take(&mut groups[k]) {
                let scaled = if dpow.is_one() { v } else { v.into_iter().map(|x| x * &dpow).collect() };
                acc_add(&mut next, &ring, mo, scaled);
            }
            acc = next;
        }
        MPoly::from_acc(n, &ring, acc, &(&f.den * &dpow))
    }

    /// Substitutes polynomials for the variables: `self(args[0], ...)`.
    pub fn compose(&self, args: &[MPoly]) -> MPoly {
        assert_eq!(args.len(), self.nvars);
        let nv = args[0].nvars;
        let mut cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut acc = MPoly::zero(nv);
        for (mono, c) in self.terms.iter().rev() {
            let mut t = MPoly::constant(nv, c.clone());
            for (i, a) in args.iter().enumerate() {
                let e = mono.exp(i);
                if e == 0 {
                    continue;
                }
                let pw = power_cached(&mut cache, i, e, a);
                t = &t * &pw;
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Terms as `(exponents, coefficient)` in descending order, cloned.
    pub fn to_terms(&self) -> Vec<(Vec<u32>, Cyclo)> {
        self.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { names[i].to_string() } else { format!("{}^{}", names[i], x) })
                .collect();
            let (neg, cs) = match c.to_rat() {
                Some(r) if r < Rat::zero() => (true, lode_exactnum::rat_to_string(&-r)),
                Some(r) => (false, lode_exactnum::rat_to_string(&r)),
                None => (false, format!("({c})")),
            };
            out.push_str(match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            if mono.is_empty() {
                out.push_str(&cs);
            } else if cs == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", cs, mono.join("*")));
            }
        }
        out
    }
}

fn power_cached(cache: &mut HashMap<(usize, u32), MPoly>, i: usize, e: u32, a: &MPoly) -> MPoly {
    if let Some(p) = cache.get(&(i, e)) {
        return p.clone();
    }
    let p = if e == 1 {
        a.clone()
    } else {
        let half = power_cached(cache, i, e / 2, a);
        let sq = &half * &half;
        if e % 2 == 1 {
            &sq * a
        } else {
            sq
        }
    };
    cache.insert((i, e), p.clone());
    p
}

/// `g = P L U` with `P` the permutation matrix sending row `i` of `L U` to
/// row `perm[i]`; returned as `(perm, L, U)` with `L` unit lower triangular.
#[allow(clippy::type_complexity)]
fn plu(g: &Mat) -> Result<(Vec<usize>, Vec<Vec<Cyclo>>, Vec<Vec<Cyclo>>), MPolyError> {
    // singular matrices are fine: a zero pivot leaves U with a zero diagonal entry
    let n = g.size();
    let mut a: Vec<Vec<Cyclo>> = g.rows().to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut l = vec![vec![Cyclo::zero(); n]; n];
    for c in 0..n {
        // an all-zero column below the diagonal needs no elimination
        let Some(pr) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(c, pr);
        perm.swap(c, pr);
        l.swap(c, pr);
        let inv = a[c][c].inv()?;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for k in c..n {
                a[i][k] = &a[i][k] - &(&f * &a[c][k]);
            }
            l[i][c] = f;
        }
    }
    for (i, row) in l.iter_mut().enumerate() {
        row[i] = Cyclo::one();
    }
    // rows of LU are rows perm[0], perm[1], ... of g, i.e. g = P L U with
    // (P)_{perm[i], i} = 1. Substituting X -> X P sends slot i to slot perm[i].
    Ok((perm, l, a))
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("X{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.fmt_with(&refs))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &'a MPoly) -> MPoly {
        self.add_impl(o, false)
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &'a MPoly) -> MPoly {
        self.add_impl(o, true)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &'a MPoly) -> MPoly {
        self.mul_impl(o)
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, o: MPoly) -> MPoly {
        self.add_impl(&o, false)
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        self.add_impl(&o, true)
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        self.mul_impl(&o)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: Cyclo,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self.terms().map(|(exp, c)| TermRepr { exp, coeff: c.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<MPoly, D::Error> {
        let v: Vec<TermRepr> = Vec::deserialize(d)?;
        let nvars = v.first().map_or(3, |t| t.exp.len());
        if nvars == 0 || nvars > MAX_VARS || v.iter().any(|t| t.exp.len() != nvars) {
            return Err(serde::de::Error::custom("inconsistent exponent vectors"));
        }
        Ok(MPoly::from_terms(nvars, v.into_iter().map(|t| (t.exp, t.coeff))))
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion.
pub fn det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    let nv = m[0][0].nvars();
    match n {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            // expand along the row with most zeros
            let r = (0..n).max_by_key(|&i| m[i].iter().filter(|x| x.is_zero()).count()).unwrap();
            let mut acc = MPoly::zero(nv);
            for j in 0..n {
                if m[r][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly>> = (0..n)
                    .filter(|&i| i != r)
                    .map(|i| (0..n).filter(|&k| k != j).map(|k| m[i][k].clone()).collect())
                    .collect();
                let t = &m[r][j] * &det(&minor);
                acc = if (r + j) % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

/// Hessian matrix of `f` bordered by the gradient of `g`, with a zero corner.
pub fn bordered_hessian(f: &MPoly, g: &MPoly) -> Vec<Vec<MPoly>> {
    let n = f.nvars();
    let h = f.hessian();
    let dg = g.gradient();
    let mut rows: Vec<Vec<MPoly>> = h
        .into_iter()
        .zip(&dg)
        .map(|(mut r, gi)| {
            r.push(gi.clone());
            r
        })
        .collect();
    let mut last = dg;
    last.push(MPoly::zero(n));
    rows.push(last);
    rows
}

/// Jacobian matrix `[d f_i / d X_j]`.
pub fn jacobian(fs: &[&MPoly]) -> Vec<Vec<MPoly>> {
    fs.iter().map(|f| f.gradient()).collect()
}
