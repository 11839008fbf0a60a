//! Divisor counting from the L-polynomial of a curve, and the numeric
//! thresholds and rate bounds derived from it.
//!
//! All counts are exact (`BigInt` / `BigRational`); floating point is used
//! only by [`thresholds`] and [`rates`].

mod counts;
mod lpoly;
pub mod rates;
pub mod thresholds;

use thiserror::Error;

pub use counts::{
    ah_from_mn, avg_code_size, closed_points, convolution_holds, degradation_expectation,
    euler_product, jacobian_size, l_eval, m_closed_form, mn_from_l, ClosedPoints, CountTables,
    DegradationExpectation,
};
pub use lpoly::LPolynomial;
pub use rates::{gv_rate, q_ary_entropy, RateBounds, RateRow};
pub use thresholds::{b1_rho, b_rho, b_rho_upper, rho0, rho1, ThresholdResult, TABLE_Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("InvalidL: {0}")]
    InvalidL(String),
    #[error("NegativePointCount: {0}")]
    NegativePointCount(String),
    #[error("NonIntegerResult: {0}")]
    NonIntegerResult(String),
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("InvalidSeries: {0}")]
    InvalidSeries(String),
    #[error("NotASquare: {0} is not a perfect square >= 4")]
    NotASquare(u64),
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
    #[error("BracketFailure: {0}")]
    BracketFailure(String),
    #[error("Json: {0}")]
    Json(String),
}

/// `sqrt(q)` when `q >= 4` is a perfect square.
pub fn square_root(q: u64) -> Result<u64, ZetaError> {
    let r = (q as f64).sqrt().round() as u64;
    if q >= 4 && r * r == q {
        Ok(r)
    } else {
        Err(ZetaError::NotASquare(q))
    }
}
