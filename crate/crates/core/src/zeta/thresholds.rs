//! `B(rho)`, `B1(rho)` and the root `rho1(q)`.
//!
//! Both objectives are log-convex in `u = log r` on their intervals, so a
//! ternary search on `u` finds the minimum; the endpoints are compared as well.

use super::{square_root, ZetaError};

pub const TERNARY_ITERATIONS: usize = 200;
pub const BISECTION_ITERATIONS: usize = 100;
pub const RHO1_BRACKET: (f64, f64) = (1e-6, 16.0);
pub const B1_LOWER: f64 = 1e-12;

/// Field sizes of the reference `rho1` table.
pub const TABLE_Q: [u64; 10] = [4, 9, 16, 25, 49, 64, 81, 121, 169, 256];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdResult {
    pub value: f64,
    /// Location of the minimum in `r`; for `rho1` the minimizer of `B1(rho1)`.
    pub minimizer_r: f64,
    pub iterations: usize,
    pub tol: f64,
}

/// Minimum of `f(r)` over `[lo, hi]`, searching on `log r`.
fn minimize_log(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let g = |u: f64| f(u.exp());
    let (mut a, mut b) = (lo.ln(), hi.ln());
    for _ in 0..TERNARY_ITERATIONS {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        if g(m1) < g(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let mid = 0.5 * (a + b);
    [(g(mid), mid.exp()), (f(lo), lo), (f(hi), hi)]
        .into_iter()
        .fold(
            (f64::INFINITY, lo),
            |best, c| if c.0 < best.0 { c } else { best },
        )
}

/// Minimum of `f` over `n` points spaced evenly in `log r`.
pub fn grid_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| f((a + (b - a) * i as f64 / (n - 1) as f64).exp()))
        .fold(f64::INFINITY, f64::min)
}

fn result(value: f64, minimizer_r: f64) -> ThresholdResult {
    ThresholdResult {
        value,
        minimizer_r,
        iterations: TERNARY_ITERATIONS,
        tol: 1e-10,
    }
}

fn check(q: u64, rho: f64) -> Result<(), ZetaError> {
    if q < 2 || !(rho > 0.0 && rho.is_finite()) {
        return Err(ZetaError::InvalidArgument(format!("q = {q}, rho = {rho}")));
    }
    Ok(())
}

/// Objective of `B(rho)` at `r`.
pub fn b_objective(q: u64, rho: f64, r: f64) -> f64 {
    let q = q as f64;
    r.powf(-rho / 2.0) * (1.0 - r) / ((1.0 - 1.0 / q) * (1.0 - q * r))
}

pub fn b_interval(q: u64) -> (f64, f64) {
    let q = q as f64;
    (q.powi(-2), q.powf(-1.5))
}

/// `B(rho) = min_(q^-2 <= r <= q^-3/2) r^(-rho/2) (1 - r) / ((1 - 1/q)(1 - qr))`.
pub fn b_rho(q: u64, rho: f64) -> Result<ThresholdResult, ZetaError> {
    check(q, rho)?;
    let (lo, hi) = b_interval(q);
    let (value, r) = minimize_log(|r| b_objective(q, rho, r), lo, hi);
    Ok(result(value, r))
}

/// `q^rho (q + 1)/(q - 1)`, the value of the `B` objective at `r = q^-2`.
pub fn b_rho_upper(q: u64, rho: f64) -> f64 {
    let qf = q as f64;
    qf.powf(rho) * (qf + 1.0) / (qf - 1.0)
}

/// `2q / (q^2 - 1)`.
pub fn rho0(q: u64) -> f64 {
    let q = q as f64;
    2.0 * q / (q * q - 1.0)
}

fn kappa(q: u64) -> f64 {
    1.0 / ((q as f64).sqrt() - 1.0)
}

/// Objective of `B1(rho)` at `r`, without the constant prefactor.
pub fn b1_objective(q: u64, rho: f64, r: f64) -> f64 {
    let k = kappa(q);
    r.powf(-rho / 2.0) * (1.0 + r) * (1.0 + (q as f64 * r).sqrt()).powf(4.0 * k)
}

/// `(q-1)/q * q^kappa`, `kappa = 1/(sqrt q - 1)`.
pub fn b1_prefactor(q: u64) -> f64 {
    let qf = q as f64;
    (qf - 1.0) / qf * qf.powf(kappa(q))
}

pub fn b1_interval(q: u64) -> (f64, f64) {
    (B1_LOWER, (q as f64).powf(-0.5))
}

/// `B1(rho) = (q-1)/q q^kappa min_(r <= q^-1/2) r^(-rho/2) (1 + r)(1 + sqrt(qr))^(4 kappa)`.
pub fn b1_rho(q: u64, rho: f64) -> Result<ThresholdResult, ZetaError> {
    square_root(q)?;
    check(q, rho)?;
    let (lo, hi) = b1_interval(q);
    let (value, r) = minimize_log(|r| b1_objective(q, rho, r), lo, hi);
    Ok(result(b1_prefactor(q) * value, r))
}

fn rho1_gap(q: u64, rho: f64) -> Result<f64, ZetaError> {
    Ok(b1_rho(q, rho)?.value.ln() - b_rho_upper(q, rho).ln())
}

/// Root of `B1(rho) = q^rho (q+1)/(q-1)` on `[1e-6, 16]`.
///
/// Fails with `BracketFailure` unless the gap changes sign exactly once on a
/// 256-point scan of the bracket.
pub fn rho1(q: u64) -> Result<ThresholdResult, ZetaError> {
    square_root(q)?;
    let (lo, hi) = RHO1_BRACKET;
    const SCAN: usize = 256;
    let mut changes = Vec::new();
    let mut prev = (lo, rho1_gap(q, lo)?);
    for i in 1..=SCAN {
        let rho = lo + (hi - lo) * i as f64 / SCAN as f64;
        let gap = rho1_gap(q, rho)?;
        if (gap > 0.0) != (prev.1 > 0.0) {
            changes.push((prev.0, rho));
        }
        prev = (rho, gap);
    }
    let &[(mut a, mut b)] = changes.as_slice() else {
        return Err(ZetaError::BracketFailure(format!(
            "q = {q}: {} sign changes on [{lo}, {hi}]",
            changes.len()
        )));
    };
    let positive_below = rho1_gap(q, a)? > 0.0;
    for _ in 0..BISECTION_ITERATIONS {
        let m = 0.5 * (a + b);
        if (rho1_gap(q, m)? > 0.0) == positive_below {
            a = m;
        } else {
            b = m;
        }
    }
    let root = 0.5 * (a + b);
    if root <= rho0(q) {
        return Err(ZetaError::BracketFailure(format!(
            "q = {q}: root {root} not above 2q/(q^2-1) = {}",
            rho0(q)
        )));
    }
    Ok(ThresholdResult {
        value: root,
        minimizer_r: b1_rho(q, root)?.minimizer_r,
        iterations: BISECTION_ITERATIONS,
        tol: 1e-6,
    })
}
