//! The invariant polynomials, built from their defining formulas.

use lode_exactnum::{rat, Cyclo};
use lode_groups::consts;
use lode_mpoly::{bordered_hessian, det, jacobian, MPoly};
use std::sync::OnceLock;

fn x(i: usize) -> MPoly {
    MPoly::var(3, i)
}

fn int_poly(terms: &[(i64, [u32; 3])]) -> MPoly {
    MPoly::from_terms(3, terms.iter().map(|(c, e)| (e.to_vec(), Cyclo::from_int(*c))))
}

#[derive(Clone, Debug)]
pub struct KleinForms {
    pub f4: MPoly,
    pub f6: MPoly,
    pub f14: MPoly,
    pub f21: MPoly,
}

pub fn klein() -> &'static KleinForms {
    static F: OnceLock<KleinForms> = OnceLock::new();
    F.get_or_init(|| {
        let f4 = int_poly(&[(1, [3, 1, 0]), (1, [0, 3, 1]), (1, [1, 0, 3])]);
        let f6 = det(&f4.hessian()).scale_rat(&rat(1, 54));
        let f14 = det(&bordered_hessian(&f4, &f6)).scale_rat(&rat(1, 9));
        let f21 = det(&jacobian(&[&f4, &f6, &f14])).scale_rat(&rat(1, 14));
        KleinForms { f4, f6, f14, f21 }
    })
}

#[derive(Clone, Debug)]
pub struct HessianForms {
    pub p: MPoly,
    pub s: MPoly,
    pub q: MPoly,
    pub r: MPoly,
    pub f6: MPoly,
    pub phi6: MPoly,
    pub f12: MPoly,
    pub phi12: MPoly,
    pub psi12: MPoly,
}

pub fn hessian() -> &'static HessianForms {
    static F: OnceLock<HessianForms> = OnceLock::new();
    F.get_or_init(|| {
        let c = |n: i64| MPoly::constant(3, Cyclo::from_int(n));
        let p = int_poly(&[(1, [1, 1, 1])]);
        let s = int_poly(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
        let q = int_poly(&[(1, [3, 3, 0]), (1, [3, 0, 3]), (1, [0, 3, 3])]);
        let cube = |i: usize| x(i).pow(3);
        let r = &(&(&cube(0) - &cube(1)) * &(&cube(0) - &cube(2))) * &(&cube(1) - &cube(2));
        let s2 = &s * &s;
        let p2 = &p * &p;
        let p3 = &p2 * &p;
        let s3 = &s2 * &s;
        let f6 = &s2 - &(&c(12) * &q);
        let phi6 = &(&s2 - &(&c(18) * &p2)) - &(&c(6) * &(&p * &s));
        let f12 = &(&s2 * &s2) + &(&c(216) * &(&p3 * &s));
        let phi12 = &p * &(&(&c(27) * &p3) - &s3);
        let psi12 = &(&(&p * &s3) + &(&c(3) * &(&p2 * &s2))) - &(&c(18) * &(&p3 * &s));
        HessianForms { p, s, q, r, f6, phi6, f12, phi12, psi12 }
    })
}

/// The degree-3 semi-invariants `F3 = 6 sqrt3 P + (sqrt3 + 3) S` and
/// `Phi3 = 6 sqrt3 P + (sqrt3 - 3) S`, over conductor 36.
pub fn hessian_cubics() -> (MPoly, MPoly) {
    let h = hessian();
    let r3 = consts::sqrt3();
    let six_r3 = r3.scale(&rat(6, 1));
    let f3 = &h.p.scale(&six_r3) + &h.s.scale(&(&r3 + &Cyclo::from_int(3)));
    let phi3 = &h.p.scale(&six_r3) + &h.s.scale(&(&r3 - &Cyclo::from_int(3)));
    (f3, phi3)
}

#[derive(Clone, Debug)]
pub struct A6Forms {
    pub f6: MPoly,
    pub f12: MPoly,
    pub f30: MPoly,
    pub f45: MPoly,
}

pub fn a6() -> &'static A6Forms {
    static F: OnceLock<A6Forms> = OnceLock::new();
    F.get_or_init(|| {
        let f6 = int_poly(&[
            (10, [3, 3, 0]),
            (9, [5, 0, 1]),
            (9, [0, 5, 1]),
            (-45, [2, 2, 2]),
            (-135, [1, 1, 4]),
            (27, [0, 0, 6]),
        ]);
        let f12 = det(&f6.hessian()).scale_rat(&rat(-1, 20250));
        let f30 = det(&bordered_hessian(&f6, &f12)).scale_rat(&rat(1, 24300));
        let f45 = det(&jacobian(&[&f6, &f12, &f30])).scale_rat(&rat(1, 4860));
        A6Forms { f6, f12, f30, f45 }
    })
}

#[derive(Clone, Debug)]
pub struct A5Forms {
    pub f2: MPoly,
    pub f6: MPoly,
    pub f10: MPoly,
    pub f15: MPoly,
}

pub fn a5() -> &'static A5Forms {
    static F: OnceLock<A5Forms> = OnceLock::new();
    F.get_or_init(|| {
        let c = |n: i64| MPoly::constant(3, Cyclo::from_int(n));
        let (x1, x2, x3) = (x(0), x(1), x(2));
        let f2 = &x1.pow(2) + &(&x2 * &x3);
        let s5 = &x2.pow(5) + &x3.pow(5);
        let d5 = &x2.pow(5) - &x3.pow(5);
        let f6 = int_poly(&[(8, [4, 1, 1]), (-2, [2, 2, 2]), (1, [0, 3, 3])]) - &x1 * &s5;
        let f10 = int_poly(&[
            (320, [6, 2, 2]),
            (-160, [4, 3, 3]),
            (20, [2, 4, 4]),
            (6, [0, 5, 5]),
            (1, [0, 10, 0]),
            (1, [0, 0, 10]),
        ]) - &(&c(4) * &(&x1 * &s5)) * &int_poly(&[(32, [4, 0, 0]), (-20, [2, 1, 1]), (5, [0, 2, 2])]);
        let inner = int_poly(&[
            (-1024, [10, 0, 0]),
            (3840, [8, 1, 1]),
            (-3840, [6, 2, 2]),
            (1200, [4, 3, 3]),
            (-100, [2, 4, 4]),
            (1, [0, 10, 0]),
            (1, [0, 0, 10]),
            (2, [0, 5, 5]),
        ]) + &(&x1 * &s5) * &int_poly(&[(352, [4, 0, 0]), (-160, [2, 1, 1]), (10, [0, 2, 2])]);
        let f15 = &d5 * &inner;
        A5Forms { f2, f6, f10, f15 }
    })
}
