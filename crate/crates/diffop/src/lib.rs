//! Monic linear differential operators over `Q(t)`: gauge transforms,
//! pullbacks, exp-products and symmetric powers.

pub mod linode;
pub mod ratfun;
pub mod sympow;
pub mod transform;

pub use linode::LinODE;
pub use ratfun::RatFun;
pub use sympow::{symmetric_power, symmetric_power_kills_one, symmetric_power_order};
pub use transform::{exp_product, gauge_inverse, gauge_transform, pullback, solve_ratfun};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum DiffopError {
    #[error("gauge vector does not generate the solution space")]
    DegenerateGauge,
    #[error("pullback by a constant")]
    ConstantPullback,
    #[error("exp-product with zero scale function")]
    ZeroScale,
    #[error("exponent must be positive")]
    ZeroExponent,
    #[error("leading coefficient is zero")]
    ZeroLeading,
    #[error("expected {expected} gauge coefficients, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("modular reconstruction did not converge")]
    Reconstruction,
}
