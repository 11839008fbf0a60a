//! Nonlinear codes of rational functions on the projective line.
//!
//! `C(h)` over GF(q) is the set of rational functions of degree at most `h`,
//! each written as its vector of values at the `N = q + 1` points of
//! P¹(GF(q)). Values live in the (q+1)-letter alphabet GF(q) ∪ {∞}.

mod brute;
mod code;
mod degrade;
mod rational;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gf::{FieldSpec, GfError};

pub use brute::{brute_force_code, BRUTE_FORCE_LIMIT};
pub use code::{Code, MessageSpace};
pub use degrade::{count_survivors, sample_forbidden};
pub use rational::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("InvalidParams: need 2h < N, got h = {h} with N = {n}")]
    InvalidParams { h: usize, n: usize },
    #[error("NotAFunction: denominator vanishes identically")]
    NotAFunction,
    #[error("MessageOutOfRange: {m} is not below {size}")]
    MessageOutOfRange { m: u64, size: u64 },
    #[error("DegreeTooLarge: degree {degree} exceeds {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("LengthMismatch: expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("RadiusTooLarge: need 2(h+e) < N, got h = {h}, e = {e}, N = {n}")]
    RadiusTooLarge { h: usize, e: usize, n: usize },
    #[error("NoSolution: the interpolation system has only the zero solution")]
    NoSolution,
    #[error("VerificationFailed: no codeword within distance {e}")]
    VerificationFailed { e: usize },
    #[error("TooLarge: {0} candidates exceeds the exhaustive-search limit")]
    TooLarge(u128),
    #[error("ParseError: {0}")]
    Parse(String),
}

/// A point of P¹(GF(q)): a finite element index or ∞.
///
/// This is the canonical form of a homogeneous pair `(num : den)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjectiveValue {
    Finite(u64),
    Infinity,
}

impl ProjectiveValue {
    /// Canonicalizes `(num : den)`; `(0 : 0)` is not a point.
    pub fn from_pair(spec: &FieldSpec, num: u64, den: u64) -> Option<Self> {
        match (num, den) {
            (0, 0) => None,
            (_, 0) => Some(ProjectiveValue::Infinity),
            (n, d) => Some(ProjectiveValue::Finite(spec.div(n, d).ok()?)),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjectiveValue::Infinity)
    }

    /// Parses a symbol token: `inf` or a decimal index below `q`.
    pub fn parse_symbol(token: &str, q: u64) -> Result<Self, CodeError> {
        let v: ProjectiveValue = token.parse()?;
        match v {
            ProjectiveValue::Finite(i) if i >= q => {
                Err(CodeError::Parse(format!("symbol {i} is not below q = {q}")))
            }
            v => Ok(v),
        }
    }
}

impl fmt::Display for ProjectiveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectiveValue::Finite(i) => write!(f, "{i}"),
            ProjectiveValue::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ProjectiveValue {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" => Ok(ProjectiveValue::Infinity),
            s => s
                .parse::<u64>()
                .map(ProjectiveValue::Finite)
                .map_err(|_| CodeError::Parse(format!("bad symbol {s:?}"))),
        }
    }
}

/// The points of P¹(GF(q)): finite points by ascending index, then ∞.
pub fn point_list(spec: &FieldSpec) -> Vec<ProjectiveValue> {
    (0..spec.size())
        .map(ProjectiveValue::Finite)
        .chain(std::iter::once(ProjectiveValue::Infinity))
        .collect()
}

/// Alphabet field, degree bound `h` and the derived length `N = q + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    spec: FieldSpec,
    h: usize,
}

impl CodeParams {
    pub fn new(spec: &FieldSpec, h: usize) -> Result<Self, CodeError> {
        let n = spec.size() as usize + 1;
        if 2 * h >= n {
            return Err(CodeError::InvalidParams { h, n });
        }
        Ok(CodeParams {
            spec: spec.clone(),
            h,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u64 {
        self.spec.size()
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// Code length `N = q + 1`.
    pub fn n(&self) -> usize {
        self.q() as usize + 1
    }

    /// Designed distance `N - 2h`.
    pub fn designed_distance(&self) -> usize {
        self.n() - 2 * self.h
    }

    /// Largest `e` with `2(h + e) < N`.
    pub fn correction_radius(&self) -> usize {
        (self.n() - 1) / 2 - self.h
    }
}

/// `q=<p>^<alpha> h=<h>`
impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}^{} h={}", self.spec.p(), self.spec.alpha(), self.h)
    }
}

impl FromStr for CodeParams {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CodeError::Parse(format!("expected `q=<p>^<alpha> h=<h>`, got {s:?}"));
        let mut spec = None;
        let mut h = None;
        for part in s.split_whitespace() {
            match part.split_once('=') {
                Some(("q", v)) => spec = Some(v.parse::<FieldSpec>()?),
                Some(("h", v)) => h = Some(v.parse::<usize>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        CodeParams::new(&spec.ok_or_else(bad)?, h.ok_or_else(bad)?)
    }
}

/// A word of length `N` over P¹(GF(q)), in [`point_list`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(Vec<ProjectiveValue>);

impl Codeword {
    pub fn new(symbols: Vec<ProjectiveValue>) -> Self {
        Codeword(symbols)
    }

    pub fn symbols(&self) -> &[ProjectiveValue] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses whitespace-separated symbols, checking length and range.
    pub fn parse(text: &str, params: &CodeParams) -> Result<Self, CodeError> {
        let symbols = text
            .split_whitespace()
            .map(|t| ProjectiveValue::parse_symbol(t, params.q()))
            .collect::<Result<Vec<_>, _>>()?;
        if symbols.len() != params.n() {
            return Err(CodeError::LengthMismatch {
                expected: params.n(),
                got: symbols.len(),
            });
        }
        Ok(Codeword(symbols))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Number of positions where the words differ.
pub fn hamming_distance(a: &Codeword, b: &Codeword) -> Result<usize, CodeError> {
    if a.len() != b.len() {
        return Err(CodeError::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ProjectiveValue::{Finite, Infinity};

    fn gf(p: u64, a: u32) -> FieldSpec {
        FieldSpec::new(p, a, None).unwrap()
    }

    #[test]
    fn points() {
        assert_eq!(point_list(&gf(2, 1)), vec![Finite(0), Finite(1), Infinity]);
        assert_eq!(
            point_list(&gf(3, 1)),
            vec![Finite(0), Finite(1), Finite(2), Infinity]
        );
        for (p, a) in [(2, 2), (5, 1), (7, 1)] {
            let f = gf(p, a);
            assert_eq!(point_list(&f).len() as u64, f.size() + 1);
        }
    }

    #[test]
    fn projective_pairs() {
        let f = gf(5, 1);
        assert_eq!(ProjectiveValue::from_pair(&f, 0, 0), None);
        assert_eq!(ProjectiveValue::from_pair(&f, 3, 0), Some(Infinity));
        assert_eq!(ProjectiveValue::from_pair(&f, 2, 4), Some(Finite(3)));
    }

    #[test]
    fn params() {
        let f = gf(2, 1);
        assert!(CodeParams::new(&f, 1).is_ok());
        assert_eq!(
            CodeParams::new(&f, 2).unwrap_err(),
            CodeError::InvalidParams { h: 2, n: 3 }
        );
        let p = CodeParams::new(&gf(7, 1), 1).unwrap();
        assert_eq!(
            (p.n(), p.designed_distance(), p.correction_radius()),
            (8, 6, 2)
        );
        let parsed: CodeParams = "q=5^1 h=2".parse().unwrap();
        assert_eq!(parsed.to_string(), "q=5^1 h=2");
        assert!("q=5^1".parse::<CodeParams>().is_err());
    }

    #[test]
    fn distances() {
        let w = |s: &[ProjectiveValue]| Codeword::new(s.to_vec());
        let a = w(&[Finite(0), Finite(1), Infinity]);
        assert_eq!(hamming_distance(&a, &a).unwrap(), 0);
        assert_eq!(
            hamming_distance(&a, &w(&[Finite(1), Finite(1), Infinity])).unwrap(),
            1
        );
        assert_eq!(
            hamming_distance(&a, &w(&[Finite(0), Finite(0), Finite(0)])).unwrap(),
            2
        );
        assert!(matches!(
            hamming_distance(&a, &w(&[Finite(0)])),
            Err(CodeError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn codeword_text() {
        let p = CodeParams::new(&gf(5, 1), 1).unwrap();
        let w = Codeword::parse("inf 0 3 2 4 0", &p).unwrap();
        assert_eq!(w.to_string(), "inf 0 3 2 4 0");
        assert!(matches!(
            Codeword::parse("inf 0 3", &p),
            Err(CodeError::LengthMismatch { .. })
        ));
        assert!(Codeword::parse("inf 0 3 2 4 5", &p).is_err());
        assert!(Codeword::parse("Inf 0 3 2 4 0", &p).is_err());
    }
}
