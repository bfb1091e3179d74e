//! Sparse multivariate polynomials over cyclotomic fields, the linear
//! substitution action `X_j -> sum_i X_i g_ij`, and small polynomial
//! determinants.

mod mat;
mod mono;
mod poly;

pub use mat::Mat;
pub use mono::{Mono, MAX_VARS};
pub use poly::{bordered_hessian, det, jacobian, MPoly};

use lode_exactnum::ExactError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MPolyError {
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}
