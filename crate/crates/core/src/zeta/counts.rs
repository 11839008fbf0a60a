use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LPolynomial, ZetaError};

/// `M_0..M_nmax`: the number of effective divisors of each degree, read off
/// the power series `L(z) / ((1 - z)(1 - qz))`.
pub fn mn_from_l(l: &LPolynomial, nmax: usize) -> Vec<BigInt> {
    let q = BigInt::from(l.q());
    let mut out = Vec::with_capacity(nmax + 1);
    let mut prefix = BigInt::zero();
    let mut prev = BigInt::zero();
    for n in 0..=nmax {
        // divide by (1 - z): running sum of coefficients
        if let Some(c) = l.coeffs().get(n) {
            prefix += c;
        }
        // divide by (1 - qz): M_n = s_n + q M_(n-1)
        let m = &prefix + &q * &prev;
        out.push(m.clone());
        prev = m;
    }
    out
}

/// Rational-point counts `N_m` over GF(q^m) and closed-point counts `B_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedPoints {
    point_counts: Vec<BigInt>,
    degree_counts: Vec<BigInt>,
}

impl ClosedPoints {
    /// `N_m`, `m >= 1`.
    pub fn point_count(&self, m: usize) -> &BigInt {
        &self.point_counts[m - 1]
    }

    /// `B_d`, `d >= 1`.
    pub fn degree_count(&self, d: usize) -> &BigInt {
        &self.degree_counts[d - 1]
    }

    pub fn dmax(&self) -> usize {
        self.degree_counts.len()
    }
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Point counts from the eigenvalue power sums `S_m` (Newton's identities on
/// the coefficients of `L`), then Möbius inversion for closed points:
/// `N_m = q^m + 1 - S_m`, `B_d = (1/d) sum_(e|d) mu(d/e) N_e`.
pub fn closed_points(l: &LPolynomial, dmax: usize) -> Result<ClosedPoints, ZetaError> {
    let c = l.coeffs();
    let coeff = |i: usize| c.get(i).cloned().unwrap_or_default();
    let q = BigInt::from(l.q());
    // s[m] = sum_j lambda_j^m, from  m c_m = -sum_(i<m) c_i s_(m-i)
    let mut s = vec![BigInt::zero(); dmax + 1];
    for m in 1..=dmax {
        let mut acc = -BigInt::from(m) * coeff(m);
        for i in 1..m {
            acc -= coeff(i) * &s[m - i];
        }
        s[m] = acc;
    }
    let mut point_counts = Vec::with_capacity(dmax);
    for (m, sm) in s.iter().enumerate().skip(1) {
        let n: BigInt = q.pow(m as u32) + 1 - sm;
        if n.is_negative() {
            return Err(ZetaError::NegativePointCount(format!("N_{m} = {n}")));
        }
        point_counts.push(n);
    }
    let mut degree_counts = Vec::with_capacity(dmax);
    for d in 1..=dmax {
        let mut acc = BigInt::zero();
        for e in (1..=d).filter(|e| d % e == 0) {
            acc += mobius(d / e) * &point_counts[e - 1];
        }
        let (b, r) = acc.div_rem(&BigInt::from(d));
        if !r.is_zero() || b.is_negative() {
            return Err(ZetaError::NegativePointCount(format!(
                "B_{d} = {acc}/{d} is not a nonnegative integer"
            )));
        }
        degree_counts.push(b);
    }
    Ok(ClosedPoints {
        point_counts,
        degree_counts,
    })
}

/// Expands `prod_d (1 - z^d)^(-B_d)` to `z^nmax`. Needs `dmax >= nmax`.
pub fn euler_product(points: &ClosedPoints, nmax: usize) -> Vec<BigInt> {
    assert!(
        points.dmax() >= nmax,
        "closed points up to degree {nmax} needed"
    );
    let mut series = vec![BigInt::zero(); nmax + 1];
    series[0] = BigInt::one();
    for d in 1..=nmax {
        let b = points.degree_count(d);
        // (1 - z^d)^(-b) = sum_k C(b + k - 1, k) z^(dk)
        let mut factor = vec![BigInt::zero(); nmax / d + 1];
        factor[0] = BigInt::one();
        for k in 1..factor.len() {
            factor[k] = &factor[k - 1] * (b + BigInt::from(k - 1)) / BigInt::from(k);
        }
        let mut next = vec![BigInt::zero(); nmax + 1];
        for (i, si) in series.iter().enumerate() {
            if si.is_zero() {
                continue;
            }
            for (k, fk) in factor.iter().enumerate() {
                let idx = i + d * k;
                if idx > nmax {
                    break;
                }
                next[idx] += si * fk;
            }
        }
        series = next;
    }
    series
}

/// `A_h` from `sum A_h z^h = (sum M_n^2 z^n) / (sum M_n z^n)`.
pub fn ah_from_mn(m: &[BigInt]) -> Result<Vec<BigInt>, ZetaError> {
    if m.first().is_none_or(|m0| !m0.is_one()) {
        return Err(ZetaError::InvalidSeries("M_0 must be 1".into()));
    }
    let mut a: Vec<BigInt> = Vec::with_capacity(m.len());
    for n in 0..m.len() {
        let mut acc = &m[n] * &m[n];
        for h in 0..n {
            acc -= &m[n - h] * &a[h];
        }
        a.push(acc);
    }
    debug_assert!(convolution_holds(m, &a));
    Ok(a)
}

/// `M_n^2 = sum_(h<=n) M_(n-h) A_h` for every `n` covered by both series.
pub fn convolution_holds(m: &[BigInt], a: &[BigInt]) -> bool {
    (0..m.len().min(a.len())).all(|n| {
        let rhs: BigInt = (0..=n).map(|h| &m[n - h] * &a[h]).sum();
        rhs == &m[n] * &m[n]
    })
}

/// `M_n` and `A_h` up to a common horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTables {
    pub m: Vec<BigInt>,
    pub a: Vec<BigInt>,
}

impl CountTables {
    pub fn new(l: &LPolynomial, nmax: usize) -> Self {
        let m = mn_from_l(l, nmax);
        let a = ah_from_mn(&m).expect("M_0 = 1 for every L-polynomial");
        CountTables { m, a }
    }

    pub fn nmax(&self) -> usize {
        self.m.len() - 1
    }

    pub fn is_consistent(&self) -> bool {
        self.a.first().is_some_and(One::is_one)
            && self.m.iter().chain(&self.a).all(|x| !x.is_negative())
            && convolution_holds(&self.m, &self.a)
    }
}

fn to_integer(r: BigRational, what: &str) -> Result<BigInt, ZetaError> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(ZetaError::NonIntegerResult(format!("{what} = {r}")))
    }
}

/// `#J = q^g L(1/q)`.
pub fn jacobian_size(l: &LPolynomial) -> Result<BigInt, ZetaError> {
    let q = BigRational::from_integer(l.q().into());
    let at = l.eval_rational(&q.recip());
    let j = to_integer(at * q.pow(l.genus() as i32), "#J")?;
    if !j.is_positive() {
        return Err(ZetaError::NonIntegerResult(format!(
            "#J = {j} is not positive"
        )));
    }
    Ok(j)
}

/// `M_n = q/(q-1) L(1/q) (q^n - q^(g-1))`, valid for `n > 2g - 2`.
pub fn m_closed_form(l: &LPolynomial, n: usize) -> Result<BigInt, ZetaError> {
    let g = l.genus() as i64;
    if (n as i64) <= 2 * g - 2 {
        return Err(ZetaError::OutOfRange(format!(
            "closed form needs n > 2g - 2 = {}, got {n}",
            2 * g - 2
        )));
    }
    let q = BigRational::from_integer(l.q().into());
    let one = BigRational::one();
    let value =
        &q / (&q - &one) * l.eval_rational(&q.recip()) * (q.pow(n as i32) - q.pow(g as i32 - 1));
    to_integer(value, &format!("M_{n}"))
}

/// Average of `#C_D(h)` over divisor classes `D`:
/// `1 + (q - 1) (A_0 + ... + A_h) / #J`.
pub fn avg_code_size(l: &LPolynomial, h: usize) -> Result<BigRational, ZetaError> {
    let tables = CountTables::new(l, h);
    let total: BigInt = tables.a.iter().sum();
    let j = jacobian_size(l)?;
    Ok(BigRational::one() + BigRational::new(BigInt::from(l.q() - 1) * total, j))
}

/// `L` at `z = q^(-s)`.
pub fn l_eval(l: &LPolynomial, s: f64) -> f64 {
    l.eval_f64((l.q() as f64).powf(-s))
}

/// Expected survivors when one uniformly random letter is forbidden per
/// position: `(q/(q+1))^N * size`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegradationExpectation {
    pub exact: BigRational,
    pub approx: f64,
}

pub fn degradation_expectation(q: u64, n: usize, code_size: &BigInt) -> DegradationExpectation {
    let ratio = BigRational::new(q.into(), (q + 1).into());
    let exact = ratio.pow(n as i32) * BigRational::from_integer(code_size.clone());
    let approx =
        exact.numer().to_f64().unwrap_or(f64::NAN) / exact.denom().to_f64().unwrap_or(f64::NAN);
    DegradationExpectation { exact, approx }
}
