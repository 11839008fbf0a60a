//! Exact arithmetic in GF(p^alpha) and towers of extensions over it.
//!
//! Elements are addressed by their *index*: the coordinates of an element in
//! the polynomial basis over its ground field, read as base-`ground_size`
//! digits (lowest degree first). For GF(p^alpha) built over the prime field
//! this is `sum c_i * p^i`. Arithmetic on raw indices lives on [`FieldSpec`];
//! [`FieldElement`] pairs an index with its owning field for checked use.

mod extension;
mod matrix;
mod poly;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

pub use extension::ExtensionField;
pub use matrix::Matrix;
pub use poly::Polynomial;

/// Largest field accepted by [`FieldSpec::new`].
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("NotPrime: {0} is not a prime")]
    NotPrime(u64),
    #[error("InvalidDegree: extension degree must be at least 1, got {0}")]
    InvalidDegree(usize),
    #[error("InvalidModulus: {0}")]
    InvalidModulus(String),
    #[error("ReducibleModulus: supplied modulus factors over GF({0})")]
    ReducibleModulus(u64),
    #[error("FieldTooLarge: {0} elements exceeds the supported range")]
    FieldTooLarge(u128),
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("MixedFields: operands belong to different fields")]
    MixedFields,
    #[error("IndexOutOfRange: {index} is not below the field size {size}")]
    IndexOutOfRange { index: u64, size: u64 },
    #[error("ParseError: {0}")]
    Parse(String),
}

/// A finite field presented as `ground[X]/(modulus)`.
///
/// The ground is either the integers mod `p` or another `FieldSpec`, so the
/// same type describes GF(p^alpha) and the extensions GF(q^d) built on top of
/// it. Cloning is cheap.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    p: u64,
    ground: Option<FieldSpec>,
    // monic, low-to-high, entries are ground indices
    modulus: Vec<u64>,
    ground_size: u64,
    size: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^alpha).
    ///
    /// Without an explicit modulus the canonical one is used: the monic
    /// irreducible of degree `alpha` over GF(p) whose encoding `sum c_i p^i`
    /// is smallest. A supplied modulus must be monic of degree `alpha` and is
    /// checked for irreducibility by trial division.
    pub fn new(p: u64, alpha: u32, modulus: Option<&[u64]>) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if alpha == 0 {
            return Err(GfError::InvalidDegree(0));
        }
        let size = (p as u128).checked_pow(alpha).unwrap_or(u128::MAX);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(GfError::FieldTooLarge(size));
        }
        let prime = Self::prime(p)?;
        let modulus = match modulus {
            Some(m) => {
                let m = m.to_vec();
                if m.len() != alpha as usize + 1 || m.last() != Some(&1) {
                    return Err(GfError::InvalidModulus(format!(
                        "expected a monic polynomial of degree {alpha}"
                    )));
                }
                if let Some(&bad) = m.iter().find(|&&c| c >= p) {
                    return Err(GfError::InvalidModulus(format!(
                        "coefficient {bad} is not reduced mod {p}"
                    )));
                }
                let poly = Polynomial::new(&prime, m.clone());
                if !poly.is_irreducible_by_trial_division() {
                    return Err(GfError::ReducibleModulus(p));
                }
                m
            }
            None => canonical_irreducible(&prime, alpha as usize, |f| {
                f.is_irreducible_by_trial_division()
            }),
        };
        Ok(Self::from_parts(p, None, modulus))
    }

    /// The prime field GF(p), presented with modulus `X`.
    pub fn prime(p: u64) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if p > MAX_FIELD_SIZE {
            return Err(GfError::FieldTooLarge(p as u128));
        }
        Ok(Self::from_parts(p, None, vec![0, 1]))
    }

    /// `ground[X]/(modulus)`; the caller guarantees irreducibility.
    pub(crate) fn over(ground: &FieldSpec, modulus: Vec<u64>) -> Result<Self, GfError> {
        let degree = modulus.len() - 1;
        let size = (ground.size() as u128)
            .checked_pow(degree as u32)
            .filter(|&s| s < u64::MAX as u128)
            .ok_or(GfError::FieldTooLarge(u128::MAX))?;
        debug_assert!(size > 0);
        Ok(Self::from_parts(ground.p(), Some(ground.clone()), modulus))
    }

    fn from_parts(p: u64, ground: Option<FieldSpec>, modulus: Vec<u64>) -> Self {
        let ground_size = ground.as_ref().map_or(p, |g| g.size());
        let size = ground_size.pow(modulus.len() as u32 - 1);
        FieldSpec(Arc::new(Inner {
            p,
            ground,
            modulus,
            ground_size,
            size,
        }))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Degree over the prime field.
    pub fn alpha(&self) -> u32 {
        let own = self.degree() as u32;
        self.0.ground.as_ref().map_or(own, |g| g.alpha() * own)
    }

    /// Degree over the immediate ground field.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    /// Number of elements.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    pub fn ground(&self) -> Option<&FieldSpec> {
        self.0.ground.as_ref()
    }

    pub fn ground_size(&self) -> u64 {
        self.0.ground_size
    }

    /// Modulus coefficients, low-to-high, as ground indices.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// `sum m_i * ground_size^i` over the modulus coefficients.
    pub fn modulus_encoding(&self) -> u128 {
        let gs = self.ground_size() as u128;
        self.0
            .modulus
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * gs + c as u128)
    }

    pub fn element(&self, index: u64) -> Result<FieldElement, GfError> {
        self.check(index)?;
        Ok(FieldElement {
            spec: self.clone(),
            value: index,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |value| FieldElement {
            spec: self.clone(),
            value,
        })
    }

    pub fn check(&self, index: u64) -> Result<(), GfError> {
        if index < self.size() {
            Ok(())
        } else {
            Err(GfError::IndexOutOfRange {
                index,
                size: self.size(),
            })
        }
    }

    /// Polynomial-basis coordinates of an element, as ground indices.
    pub fn coords(&self, mut x: u64) -> Vec<u64> {
        let gs = self.ground_size();
        (0..self.degree())
            .map(|_| {
                let d = x % gs;
                x /= gs;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u64]) -> u64 {
        let gs = self.ground_size();
        coords.iter().rev().fold(0, |acc, &c| acc * gs + c)
    }

    fn g_add(&self, a: u64, b: u64) -> u64 {
        match &self.0.ground {
            None => (a + b) % self.0.p,
            Some(g) => g.add(a, b),
        }
    }

    fn g_sub(&self, a: u64, b: u64) -> u64 {
        match &self.0.ground {
            None => (a + self.0.p - b) % self.0.p,
            Some(g) => g.sub(a, b),
        }
    }

    fn g_mul(&self, a: u64, b: u64) -> u64 {
        match &self.0.ground {
            None => a * b % self.0.p,
            Some(g) => g.mul(a, b),
        }
    }

    fn digitwise(&self, mut a: u64, mut b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let gs = self.ground_size();
        let (mut out, mut place) = (0u64, 1u64);
        for i in 0..self.degree() {
            out += op(a % gs, b % gs) * place;
            a /= gs;
            b /= gs;
            if i + 1 < self.degree() {
                place *= gs;
            }
        }
        out
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.degree() == 1 {
            return self.g_add(a, b);
        }
        self.digitwise(a, b, |x, y| self.g_add(x, y))
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.degree() == 1 {
            return self.g_sub(a, b);
        }
        self.digitwise(a, b, |x, y| self.g_sub(x, y))
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let d = self.degree();
        if d == 1 {
            return self.g_mul(a, b);
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let (x, y) = (self.coords(a), self.coords(b));
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    prod[i + j] = self.g_add(prod[i + j], self.g_mul(xi, yj));
                }
            }
        }
        let m = &self.0.modulus;
        for top in (d..2 * d - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for j in 0..d {
                let t = self.g_mul(c, m[j]);
                prod[top - d + j] = self.g_sub(prod[top - d + j], t);
            }
        }
        self.from_coords(&prod[..d])
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64, GfError> {
        if a == 0 {
            return Err(GfError::DivisionByZero);
        }
        if self.degree() == 1 {
            return match &self.0.ground {
                None => Ok(mod_inverse(a, self.0.p)),
                Some(g) => g.inv(a),
            };
        }
        Ok(self.pow(a, self.size() - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Whether `other` describes the same field with the same presentation.
    pub fn same_as(&self, other: &FieldSpec) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.modulus == other.0.modulus
                && self.0.ground == other.0.ground)
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i64) as u64
}

/// First monic polynomial of degree `d` over `field`, in encoding order,
/// accepted by `irreducible`.
pub(crate) fn canonical_irreducible(
    field: &FieldSpec,
    d: usize,
    irreducible: impl Fn(&Polynomial) -> bool,
) -> Vec<u64> {
    let q = field.size();
    let mut t: u64 = 0;
    loop {
        let mut coeffs: Vec<u64> = Vec::with_capacity(d + 1);
        let mut rest = t;
        for _ in 0..d {
            coeffs.push(rest % q);
            rest /= q;
        }
        coeffs.push(1);
        if irreducible(&Polynomial::new(field, coeffs.clone())) {
            return coeffs;
        }
        // irreducibles of every degree exist, so this terminates before q^d
        t += 1;
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.ground {
            None => write!(f, "GF({})", self),
            Some(g) => write!(f, "{:?}[X]/{:?}", g, self.0.modulus),
        }
    }
}

/// `p^alpha/<modulus-encoding>` for fields over the prime field.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.ground {
            None => write!(
                f,
                "{}^{}/{}",
                self.0.p,
                self.degree(),
                self.modulus_encoding()
            ),
            Some(g) => write!(f, "({})[X]/{}", g, self.modulus_encoding()),
        }
    }
}

/// Accepts `p`, `p^alpha` (canonical modulus) and `p^alpha/<encoding>`.
impl FromStr for FieldSpec {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GfError::Parse(format!("expected p^alpha[/modulus], got {s:?}"));
        let (head, enc) = match s.trim().split_once('/') {
            Some((h, e)) => (h, Some(e)),
            None => (s.trim(), None),
        };
        let (p, alpha) = match head.split_once('^') {
            Some((p, a)) => (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                a.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => (head.parse::<u64>().map_err(|_| bad())?, 1),
        };
        match enc {
            None => FieldSpec::new(p, alpha, None),
            Some(e) => {
                let mut e = e.trim().parse::<u128>().map_err(|_| bad())?;
                let mut coeffs = Vec::new();
                while e > 0 {
                    coeffs.push((e % p as u128) as u64);
                    e /= p as u128;
                }
                FieldSpec::new(p, alpha, Some(&coeffs))
            }
        }
    }
}

/// An element together with the field it belongs to.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    value: u64,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn index(&self) -> u64 {
        self.value
    }

    /// Polynomial-basis coordinates over the ground field.
    pub fn coords(&self) -> Vec<u64> {
        self.spec.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn with(&self, value: u64) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }

    fn same(&self, other: &FieldElement) -> Result<(), GfError> {
        if self.spec.same_as(&other.spec) {
            Ok(())
        } else {
            Err(GfError::MixedFields)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same(other)?;
        Ok(self.with(self.spec.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same(other)?;
        Ok(self.with(self.spec.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same(other)?;
        Ok(self.with(self.spec.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.spec.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement, GfError> {
        Ok(self.with(self.spec.inv(self.value)?))
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        self.with(self.spec.pow(self.value, exp))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.value, self.spec)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn element_index(e: &FieldElement) -> u64 {
    e.index()
}

pub fn index_element(i: u64, spec: &FieldSpec) -> Result<FieldElement, GfError> {
    spec.element(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, alpha: u32) -> FieldSpec {
        FieldSpec::new(p, alpha, None).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(gf(2, 1).modulus(), &[0, 1]);
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]);
        // X^3+X+1 encodes to 11, X^3+X^2+1 to 13
        assert_eq!(gf(2, 3).modulus(), &[1, 1, 0, 1]);
        assert_eq!(gf(2, 3).modulus_encoding(), 11);
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(gf(2, 3).modulus(), gf(2, 3).modulus());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            FieldSpec::new(4, 1, None).unwrap_err(),
            GfError::NotPrime(4)
        );
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            GfError::ReducibleModulus(2)
        );
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 1])),
            Err(GfError::InvalidModulus(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 17, None),
            Err(GfError::FieldTooLarge(_))
        ));
        assert!(FieldSpec::new(2, 3, Some(&[1, 0, 1, 1])).is_ok());
    }

    #[test]
    fn small_arithmetic() {
        let f4 = gf(2, 2);
        assert_eq!(f4.mul(2, 2), 3); // t*t = t+1
        assert_eq!(f4.inv(1).unwrap(), 1);
        let f5 = gf(5, 1);
        assert_eq!(f5.inv(2).unwrap(), 3);
        assert_eq!(f5.inv(0), Err(GfError::DivisionByZero));
        assert_eq!(f4.element(2).unwrap().index(), 2);
        assert_eq!(f4.element(2).unwrap().coords(), vec![0, 1]);
        assert!(matches!(
            f4.element(4),
            Err(GfError::IndexOutOfRange { index: 4, size: 4 })
        ));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = gf(2, 2).element(1).unwrap();
        let b = gf(3, 1).element(1).unwrap();
        assert_eq!(a.add(&b), Err(GfError::MixedFields));
        assert_eq!(a.mul(&b), Err(GfError::MixedFields));
        let c = gf(2, 2).element(3).unwrap();
        assert_eq!(a.mul(&c).unwrap().index(), 3);
    }

    #[test]
    fn text_round_trip() {
        let f8 = gf(2, 3);
        assert_eq!(f8.to_string(), "2^3/11");
        let back: FieldSpec = "2^3/11".parse().unwrap();
        assert_eq!(back, f8);
        let alt: FieldSpec = "2^3/13".parse().unwrap();
        assert_ne!(alt, f8);
        assert_eq!("5".parse::<FieldSpec>().unwrap(), gf(5, 1));
        assert_eq!("3^2".parse::<FieldSpec>().unwrap().size(), 9);
        assert!("x^2".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, a) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (3, 3),
            (2, 5),
            (7, 2),
            (2, 6),
        ] {
            let f = gf(p, a);
            let q = f.size();
            for x in 0..q {
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.mul(x, 1), x);
                assert_eq!(f.add(x, f.neg(x)), 0);
                if x != 0 {
                    assert_eq!(f.mul(x, f.inv(x).unwrap()), 1, "GF({p}^{a}) inverse of {x}");
                }
                for y in 0..q {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in 0..q {
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn index_round_trip() {
        for (p, a) in [(2, 1), (2, 3), (3, 2), (2, 6)] {
            let f = gf(p, a);
            for e in f.elements() {
                assert_eq!(index_element(element_index(&e), &f).unwrap(), e);
                assert_eq!(f.from_coords(&e.coords()), e.index());
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        let f = gf(3, 3);
        for x in 1..f.size() {
            assert_eq!(f.pow(x, f.size() - 1), 1);
        }
    }
}
