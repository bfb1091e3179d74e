//! Exact arithmetic kernels: rationals, cyclotomic fields `Q(zeta_m)`,
//! univariate polynomials over `Z`/`Q`, and word-size modular arithmetic used
//! by the multi-modular algorithms elsewhere in the workspace.

pub mod cyclo;
pub mod error;
pub mod fpoly;
pub mod linalg;
pub mod modp;
pub mod rat;
pub mod upoly;

pub use cyclo::{Cyclo, CycloRing};
pub use error::ExactError;
pub use rat::{parse_rat, rat, rat_to_string, Rat};
pub use upoly::{QPoly, ZPoly};

pub use num_bigint::BigInt;
