use std::fmt;

use super::{CodeError, ProjectiveValue};
use crate::gf::{FieldSpec, Polynomial};

/// `num / den` in lowest terms with a monic denominator.
///
/// Every rational function over GF(q) has exactly one such representative,
/// so equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Divides out `gcd(num, den)` and scales the denominator to be monic.
    pub fn normalize(num: &Polynomial, den: &Polynomial) -> Result<Self, CodeError> {
        if den.is_zero() {
            return Err(CodeError::NotAFunction);
        }
        let g = num.gcd(den);
        let (a, _) = num.divmod(&g)?;
        let (b, _) = den.divmod(&g)?;
        let s = b.spec().inv(b.leading())?;
        Ok(RationalFunction {
            num: a.scale(s),
            den: b.scale(s),
        })
    }

    pub fn constant(spec: &FieldSpec, c: u64) -> Self {
        RationalFunction {
            num: Polynomial::constant(spec, c),
            den: Polynomial::one(spec),
        }
    }

    pub fn zero(spec: &FieldSpec) -> Self {
        Self::constant(spec, 0)
    }

    /// The identity function `x`.
    pub fn x(spec: &FieldSpec) -> Self {
        RationalFunction {
            num: Polynomial::monomial(spec, 1, 1),
            den: Polynomial::one(spec),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        self.num.spec()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// `max(deg num, deg den)`; the zero function has degree 0.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// Value at a point of P¹. At ∞ this is the ratio of the degree-`H`
    /// coefficients, `H` the degree of the function.
    pub fn evaluate(&self, point: ProjectiveValue) -> ProjectiveValue {
        let spec = self.spec();
        let (n, d) = match point {
            ProjectiveValue::Finite(x) => (self.num.eval(x), self.den.eval(x)),
            ProjectiveValue::Infinity => {
                let top = self.degree();
                (self.num.coeff(top), self.den.coeff(top))
            }
        };
        ProjectiveValue::from_pair(spec, n, d).expect("coprime numerator and denominator")
    }

    /// `theta * f`
    pub fn scale(&self, theta: u64) -> Self {
        if theta == 0 {
            return Self::zero(self.spec());
        }
        RationalFunction {
            num: self.num.scale(theta),
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// `a`, `a/b` or `(a)/(b)`, parenthesizing multi-term parts.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = |p: &Polynomial| p.coeffs().iter().filter(|&&c| c != 0).count();
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        if terms(&self.num) > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if terms(&self.den) > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ProjectiveValue::{Finite, Infinity};

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p, 1, None).unwrap()
    }

    fn poly(f: &FieldSpec, c: &[u64]) -> Polynomial {
        Polynomial::new(f, c.to_vec())
    }

    fn rf(f: &FieldSpec, a: &[u64], b: &[u64]) -> RationalFunction {
        RationalFunction::normalize(&poly(f, a), &poly(f, b)).unwrap()
    }

    #[test]
    fn normalization_examples() {
        let f3 = gf(3);
        let r = rf(&f3, &[2, 2], &[2]);
        assert_eq!(r.numerator().coeffs(), &[1, 1]);
        assert_eq!(r.denominator().coeffs(), &[1]);

        let f5 = gf(5);
        let r = rf(&f5, &[4, 0, 1], &[4, 1]);
        assert_eq!(r.numerator().coeffs(), &[1, 1]);
        assert_eq!(r.denominator().coeffs(), &[1]);

        let r = rf(&f5, &[], &[0, 1]);
        assert_eq!(r, RationalFunction::zero(&f5));
        assert_eq!(r.degree(), 0);

        assert_eq!(
            RationalFunction::normalize(&poly(&f5, &[1, 1]), &Polynomial::zero(&f5)),
            Err(CodeError::NotAFunction)
        );
        assert_eq!(
            RationalFunction::normalize(&Polynomial::zero(&f5), &Polynomial::zero(&f5)),
            Err(CodeError::NotAFunction)
        );
    }

    #[test]
    fn normalization_is_idempotent() {
        let f5 = gf(5);
        let r = rf(&f5, &[1, 3, 2], &[2, 0, 4]);
        assert_eq!(
            RationalFunction::normalize(r.numerator(), r.denominator()).unwrap(),
            r
        );
        assert!(r.denominator().is_monic());
        assert_eq!(r.numerator().gcd(r.denominator()).degree(), Some(0));
    }

    #[test]
    fn evaluation_examples() {
        let f5 = gf(5);
        let inv_x = rf(&f5, &[1], &[0, 1]);
        assert_eq!(inv_x.evaluate(Finite(0)), Infinity);
        assert_eq!(inv_x.evaluate(Infinity), Finite(0));
        assert_eq!(RationalFunction::x(&f5).evaluate(Infinity), Infinity);
        assert_eq!(rf(&f5, &[1, 1], &[0, 1]).evaluate(Infinity), Finite(1));
        assert_eq!(inv_x.evaluate(Finite(2)), Finite(3));
    }

    #[test]
    fn display() {
        let f5 = gf(5);
        assert_eq!(rf(&f5, &[1], &[0, 1]).to_string(), "1/x");
        assert_eq!(rf(&f5, &[1, 1], &[0, 1]).to_string(), "(x+1)/x");
        assert_eq!(rf(&f5, &[0, 1], &[1, 1]).to_string(), "x/(x+1)");
        assert_eq!(rf(&f5, &[3], &[1]).to_string(), "3");
        assert_eq!(RationalFunction::zero(&f5).to_string(), "0");
    }
}
