//! Rational functions in `t` over `Q`, kept reduced with a monic denominator.

use lode_exactnum::{parse_rat, rat_to_string, QPoly, Rat};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    /// `num / den`, reduced. Panics on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> RatFun {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = d.lc();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFun { num: n, den: d }
    }

    pub fn from_poly(p: QPoly) -> RatFun {
        RatFun { num: p, den: QPoly::one() }
    }

    pub fn constant(c: Rat) -> RatFun {
        RatFun::from_poly(QPoly::constant(c))
    }

    pub fn from_int(c: i64) -> RatFun {
        RatFun::constant(Rat::from_integer(c.into()))
    }

    pub fn zero() -> RatFun {
        RatFun { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> RatFun {
        RatFun::from_int(1)
    }

    pub fn t() -> RatFun {
        RatFun::from_poly(QPoly::t())
    }

    /// Builds `num / den` from integer coefficient lists (ascending).
    pub fn from_i64(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(QPoly::from_i64(num), QPoly::from_i64(den))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.degree() == Some(0) && self.num.degree().unwrap_or(0) == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn inv(&self) -> Option<RatFun> {
        if self.is_zero() {
            None
        } else {
            Some(RatFun::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> RatFun {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let k = e.unsigned_abs();
        RatFun { num: base.num.pow(k), den: base.den.pow(k) }
    }

    pub fn derivative(&self) -> RatFun {
        if self.is_polynomial() {
            return RatFun { num: self.num.derivative(), den: self.den.clone() };
        }
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RatFun::new(n, self.den.mul(&self.den))
    }

    /// `self(h(t))`.
    pub fn compose(&self, h: &RatFun) -> RatFun {
        let a = self.num.degree().unwrap_or(0);
        let b = self.den.degree().unwrap_or(0);
        let m = a.max(b);
        let (p, q) = (&h.num, &h.den);
        // homogenized evaluation: sum c_i p^i q^(m-i)
        let pp: Vec<QPoly> = std::iter::successors(Some(QPoly::one()), |x| Some(x.mul(p))).take(m + 1).collect();
        let qp: Vec<QPoly> = std::iter::successors(Some(QPoly::one()), |x| Some(x.mul(q))).take(m + 1).collect();
        let hom = |f: &QPoly| {
            f.0.iter().enumerate().fold(QPoly::zero(), |acc, (i, c)| acc.add(&pp[i].mul(&qp[m - i]).scale(c)))
        };
        RatFun::new(hom(&self.num), hom(&self.den))
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Lowest common denominator of a list, monic.
    pub fn common_denominator(fs: &[RatFun]) -> QPoly {
        fs.iter().fold(QPoly::one(), |acc, f| {
            let g = acc.gcd(&f.den);
            acc.mul(&f.den.div_exact(&g).unwrap())
        })
    }

    /// `self * d` when `d` is a multiple of the denominator.
    pub fn times_poly(&self, d: &QPoly) -> Option<QPoly> {
        d.div_exact(&self.den).map(|q| q.mul(&self.num))
    }

    /// Degree of the numerator minus the degree of the denominator.
    pub fn valuation_at_infinity(&self) -> Option<i64> {
        Some(self.den.degree()? as i64 - self.num.degree()? as i64)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, o: &RatFun) -> RatFun {
                let f: fn(&RatFun, &RatFun) -> RatFun = $body;
                f(self, o)
            }
        }
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                (&self).$m(&o)
            }
        }
    };
}

fn add_impl(a: &RatFun, b: &RatFun) -> RatFun {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        if a.den.is_one() {
            return RatFun::from_poly(a.num.add(&b.num));
        }
        return RatFun::new(a.num.add(&b.num), a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    RatFun::new(a.num.mul(&bd).add(&b.num.mul(&ad)), a.den.mul(&bd))
}

fn mul_impl(a: &RatFun, b: &RatFun) -> RatFun {
    if a.is_zero() || b.is_zero() {
        return RatFun::zero();
    }
    if a.is_polynomial() && b.is_polynomial() {
        return RatFun::from_poly(a.num.mul(&b.num).scale(&(a.den.lc() * b.den.lc()).recip()));
    }
    // cross-cancel before multiplying
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let an = a.num.div_exact(&g1).unwrap();
    let bd = b.den.div_exact(&g1).unwrap();
    let bn = b.num.div_exact(&g2).unwrap();
    let ad = a.den.div_exact(&g2).unwrap();
    let den = ad.mul(&bd);
    let lc = den.lc();
    RatFun { num: an.mul(&bn).scale(&lc.recip()), den: den.scale(&lc.recip()) }
}

binop!(Add, add, add_impl);
binop!(Sub, sub, |a, b| add_impl(a, &-b));
binop!(Mul, mul, mul_impl);
binop!(Div, div, |a, b| mul_impl(a, &b.inv().expect("division by zero rational function")));

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct RatFunRepr {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFunRepr {
            num: self.num.0.iter().map(rat_to_string).collect(),
            den: self.den.0.iter().map(rat_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<RatFun, D::Error> {
        let r = RatFunRepr::deserialize(d)?;
        let parse = |v: &[String]| -> Result<QPoly, D::Error> {
            Ok(QPoly::new(v.iter().map(|x| parse_rat(x)).collect::<Result<_, _>>().map_err(D::Error::custom)?))
        };
        let den = parse(&r.den)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(RatFun::new(parse(&r.num)?, den))
    }
}
