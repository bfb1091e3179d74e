//! Named algebraic constants of the group catalog, realized in cyclotomic
//! fields with `zeta_m = exp(2 pi i / m)`.

use lode_exactnum::cyclo::roots;
use lode_exactnum::{rat, Cyclo};

/// Primitive 5th root of unity `xi`.
pub fn xi() -> Cyclo {
    Cyclo::zeta(5)
}

/// Primitive 7th root of unity `beta`.
pub fn beta() -> Cyclo {
    Cyclo::zeta(7)
}

/// Primitive 9th root of unity `eps`.
pub fn eps() -> Cyclo {
    Cyclo::zeta(9)
}

/// `omega = -1 - eps^3`, a primitive cube root of unity, realized in
/// conductor `m` (`3 | m`) as `zeta_m^(2m/3)`.
pub fn omega_in(m: u32) -> Cyclo {
    assert_eq!(m % 3, 0);
    Cyclo::zeta_pow(m, (2 * m / 3) as i64)
}

pub fn omega() -> Cyclo {
    omega_in(3)
}

/// `s = xi^3 + xi^2`.
pub fn s() -> Cyclo {
    Cyclo::zeta_pow(5, 3) + Cyclo::zeta_pow(5, 2)
}

/// `t = xi^4 + xi`.
pub fn t() -> Cyclo {
    Cyclo::zeta_pow(5, 4) + Cyclo::zeta_pow(5, 1)
}

/// `sqrt(5) = t - s`.
pub fn sqrt5() -> Cyclo {
    t() - s()
}

/// `sqrt(7) i = beta^6 + beta^5 + beta^3 - beta^4 - beta^2 - beta`.
pub fn sqrt7i() -> Cyclo {
    roots::sqrt_minus7()
}

pub fn a() -> Cyclo {
    Cyclo::zeta_pow(7, 4) - Cyclo::zeta_pow(7, 3)
}

pub fn b() -> Cyclo {
    Cyclo::zeta_pow(7, 2) - Cyclo::zeta_pow(7, 5)
}

pub fn c() -> Cyclo {
    Cyclo::zeta_pow(7, 1) - Cyclo::zeta_pow(7, 6)
}

/// `rho = 1 / (omega - omega^2)`.
pub fn rho() -> Cyclo {
    let w = omega();
    (&w - &w.square()).inv().unwrap()
}

/// `sqrt(15) i`, realized as `sqrt(5) sqrt(-3)` in conductor 15.
pub fn sqrt15i() -> Cyclo {
    sqrt5().embed(15).unwrap() * roots::sqrt_minus3(15)
}

/// `lambda_1 = (-1 + sqrt(15) i) / 4`.
pub fn lambda1() -> Cyclo {
    (Cyclo::from_int(-1) + sqrt15i()).scale(&rat(1, 4))
}

/// `lambda_2 = (-1 - sqrt(15) i) / 4`.
pub fn lambda2() -> Cyclo {
    (Cyclo::from_int(-1) - sqrt15i()).scale(&rat(1, 4))
}

/// `sqrt(3)` in conductor 36.
pub fn sqrt3() -> Cyclo {
    roots::sqrt3(36)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_relations() {
        assert_eq!(sqrt5().square(), Cyclo::from_int(5));
        assert_eq!(sqrt7i().square(), Cyclo::from_int(-7));
        assert_eq!(omega().embed(9).unwrap(), Cyclo::from_int(-1) - eps().pow(3));
        assert_eq!(lambda1() * lambda2(), Cyclo::one());
        assert_eq!(lambda1() + lambda2(), Cyclo::from_rat(&rat(-1, 2)));
        assert_eq!(rho().square(), Cyclo::from_rat(&rat(-1, 3)));
        assert_eq!(sqrt3().square(), Cyclo::from_int(3));
        assert!(omega_in(21).pow(3).is_one());
    }
}
