//! Asymptotic rate/distance comparisons for a square field size `q = q0^2`.

use super::{square_root, ZetaError};

/// `H_Q(delta)`, the `Q`-ary entropy.
pub fn q_ary_entropy(big_q: f64, delta: f64) -> f64 {
    if delta <= 0.0 {
        return 0.0;
    }
    let log = |x: f64| x.ln() / big_q.ln();
    let tail = if delta < 1.0 {
        -(1.0 - delta) * log(1.0 - delta)
    } else {
        0.0
    };
    delta * log(big_q - 1.0) - delta * log(delta) + tail
}

/// `1 - H_Q(delta)`, taken as 0 once `delta >= 1 - 1/Q`.
pub fn gv_rate(big_q: f64, delta: f64) -> f64 {
    if delta >= 1.0 - 1.0 / big_q {
        return 0.0;
    }
    (1.0 - q_ary_entropy(big_q, delta)).clamp(0.0, 1.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateRow {
    pub delta: f64,
    pub goppa: f64,
    pub goppa_q1: f64,
    pub new_rate: f64,
    pub gv: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RateBounds {
    pub q: u64,
    pub q0: u64,
    /// `1 - 1/(q0 - 1)`, bound on `R + delta` for `q`-ary Goppa codes.
    pub goppa_rhs: f64,
    /// `1 - 1/(sqrt(q+1) - 1)`, the same bound moved to alphabet size `q + 1`.
    pub extrapolated_rhs: f64,
    /// `log(q+1)/log q`, coefficient of `R` for the new codes.
    pub new_lhs_slope: f64,
    /// `log((q+1)/q)/log q`.
    pub new_rhs_gain: f64,
    /// Lower bound on `1 - R` above which the new codes beat the extrapolated bound.
    pub crossover_1m_r: f64,
    /// `sqrt q - 1`, the largest `N/g` ratio.
    pub dv_ratio: f64,
    pub rows: Vec<RateRow>,
}

impl RateBounds {
    pub fn new(q: u64, deltas: &[f64]) -> Result<Self, ZetaError> {
        let q0 = square_root(q)?;
        if let Some(d) = deltas.iter().find(|d| !(**d > 0.0 && **d < 1.0)) {
            return Err(ZetaError::InvalidArgument(format!(
                "delta {d} outside (0, 1)"
            )));
        }
        let qf = q as f64;
        let goppa_rhs = 1.0 - 1.0 / (q0 as f64 - 1.0);
        let extrapolated_rhs = 1.0 - 1.0 / ((qf + 1.0).sqrt() - 1.0);
        let new_lhs_slope = (qf + 1.0).ln() / qf.ln();
        let new_rhs_gain = ((qf + 1.0) / qf).ln() / qf.ln();
        let crossover_1m_r =
            (1.0 / (qf.sqrt() - 1.0) - 1.0 / ((qf + 1.0).sqrt() - 1.0)) / new_rhs_gain;
        let rows = deltas
            .iter()
            .map(|&delta| RateRow {
                delta,
                goppa: goppa_rhs,
                goppa_q1: extrapolated_rhs,
                new_rate: ((goppa_rhs + new_rhs_gain - delta) / new_lhs_slope).max(0.0),
                gv: gv_rate(qf + 1.0, delta),
            })
            .collect();
        Ok(RateBounds {
            q,
            q0,
            goppa_rhs,
            extrapolated_rhs,
            new_lhs_slope,
            new_rhs_gain,
            crossover_1m_r,
            dv_ratio: qf.sqrt() - 1.0,
            rows,
        })
    }
}
