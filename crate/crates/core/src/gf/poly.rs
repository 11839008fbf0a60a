use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::{FieldSpec, GfError};

/// Univariate polynomial over a [`FieldSpec`], coefficients low-to-high.
///
/// The coefficient list never has trailing zeros; the zero polynomial is the
/// empty list and has no degree (`degree()` returns `None`).
///
/// Binary operations require both operands to share a field and panic
/// otherwise.
#[derive(Clone)]
pub struct Polynomial {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(spec: &FieldSpec, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|&c| c < spec.size()));
        Polynomial {
            spec: spec.clone(),
            coeffs,
        }
    }

    pub fn zero(spec: &FieldSpec) -> Self {
        Self::new(spec, Vec::new())
    }

    pub fn one(spec: &FieldSpec) -> Self {
        Self::constant(spec, 1)
    }

    pub fn constant(spec: &FieldSpec, c: u64) -> Self {
        Self::new(spec, vec![c])
    }

    /// `c * X^k`
    pub fn monomial(spec: &FieldSpec, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(spec, coeffs)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `deg <= bound`, with the zero polynomial admitted for every bound.
    pub fn degree_le(&self, bound: usize) -> bool {
        self.degree().is_none_or(|d| d <= bound)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn assert_same(&self, other: &Polynomial) {
        assert!(
            self.spec.same_as(&other.spec),
            "polynomial operands belong to different fields"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.spec.add(self.coeff(i), other.coeff(i)))
            .collect();
        Polynomial::new(&self.spec, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.spec.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Polynomial::new(&self.spec, coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|&c| self.spec.neg(c)).collect();
        Polynomial::new(&self.spec, coeffs)
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|&a| self.spec.mul(a, c)).collect();
        Polynomial::new(&self.spec, coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.spec);
        }
        let f = &self.spec;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Polynomial::new(f, out)
    }

    /// Euclidean division: `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), GfError> {
        self.assert_same(divisor);
        let dd = divisor.degree().ok_or(GfError::DivisionByZero)?;
        let f = &self.spec;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(f), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Polynomial::new(f, quot), Polynomial::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial, GfError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            0 | 1 => self.clone(),
            lc => self.scale(self.spec.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        self.assert_same(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u*self + v*other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        self.assert_same(other);
        let f = &self.spec;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Polynomial::one(f), Polynomial::zero(f));
        let (mut v0, mut v1) = (Polynomial::zero(f), Polynomial::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u);
            (v0, v1) = (v1, v);
        }
        match r0.leading() {
            0 | 1 => (r0, u0, v0),
            lc => {
                let s = f.inv(lc).expect("nonzero leading coefficient");
                (r0.scale(s), u0.scale(s), v0.scale(s))
            }
        }
    }

    /// Horner evaluation at a field element.
    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.spec;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Polynomial) -> Result<Polynomial, GfError> {
        let mut base = self.rem(modulus)?;
        let mut acc = Polynomial::one(&self.spec).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most half our own.
    pub fn is_irreducible_by_trial_division(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let q = self.spec.size();
        for d in 1..=n / 2 {
            let count = match q.checked_pow(d as u32) {
                Some(c) => c,
                None => return self.is_irreducible(),
            };
            for t in 0..count {
                let mut coeffs = self.spec_digits(t, d);
                coeffs.push(1);
                let g = Polynomial::new(&self.spec, coeffs);
                if self.rem(&g).expect("monic divisor").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn spec_digits(&self, mut t: u64, d: usize) -> Vec<u64> {
        let q = self.spec.size();
        (0..d)
            .map(|_| {
                let c = t % q;
                t /= q;
                c
            })
            .collect()
    }

    /// Rabin's irreducibility test: `X^(q^n) = X mod f` and
    /// `gcd(X^(q^(n/r)) - X, f) = 1` for each prime `r | n`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let f = self.monic();
        let q = self.spec.size();
        let x = Polynomial::monomial(&self.spec, 1, 1);
        // frob[k] = X^(q^k) mod f
        let mut frob = vec![x.rem(&f).expect("nonzero modulus")];
        for k in 0..n {
            let next = frob[k].pow_mod(q, &f).expect("nonzero modulus");
            frob.push(next);
        }
        if !frob[n].sub(&x).rem(&f).expect("nonzero modulus").is_zero() {
            return false;
        }
        prime_factors(n).into_iter().all(|r| {
            let h = frob[n / r].sub(&x);
            f.gcd(&h).degree() == Some(0)
        })
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.spec.same_as(&other.spec)
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
            .then_with(|| self.spec.modulus().cmp(other.spec.modulus()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

/// Renders in the variable `x` with coefficients written as element indices,
/// highest degree first: `x^2+2x+1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
