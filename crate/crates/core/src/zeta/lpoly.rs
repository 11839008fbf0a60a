use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ZetaError;

/// Numerator `L(z) = sum c_i z^i` of the zeta function of a genus-`g` curve
/// over GF(q), with `c_0 = 1` and `deg L = 2g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    q: u64,
    genus: usize,
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct LPolynomialFile {
    q: u64,
    genus: usize,
    coeffs: Vec<i64>,
}

impl LPolynomial {
    /// Checks the shape and the functional equation `c_(2g-i) = q^(g-i) c_i`.
    pub fn new(q: u64, genus: usize, coeffs: Vec<BigInt>) -> Result<Self, ZetaError> {
        if q < 2 {
            return Err(ZetaError::InvalidL(format!("field size {q} < 2")));
        }
        if coeffs.len() != 2 * genus + 1 {
            return Err(ZetaError::InvalidL(format!(
                "genus {genus} needs {} coefficients, got {}",
                2 * genus + 1,
                coeffs.len()
            )));
        }
        if !coeffs[0].is_one() {
            return Err(ZetaError::InvalidL("constant term must be 1".into()));
        }
        let qb = BigInt::from(q);
        for i in 0..=genus {
            let expect = &coeffs[i] * qb.pow((genus - i) as u32);
            if coeffs[2 * genus - i] != expect {
                return Err(ZetaError::InvalidL(format!(
                    "functional equation fails at z^{}: {} != q^{} * {}",
                    2 * genus - i,
                    coeffs[2 * genus - i],
                    genus - i,
                    coeffs[i]
                )));
            }
        }
        Ok(LPolynomial { q, genus, coeffs })
    }

    /// `L = 1`, the projective line.
    pub fn genus_zero(q: u64) -> Self {
        LPolynomial {
            q,
            genus: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    /// `1 - a z + q z^2` for an elliptic curve with `q + 1 - a` points.
    pub fn elliptic(q: u64, trace: i64) -> Result<Self, ZetaError> {
        Self::new(
            q,
            1,
            vec![BigInt::one(), BigInt::from(-trace), BigInt::from(q)],
        )
    }

    /// Parses `{"q": int, "genus": int, "coeffs": [int, ...]}`.
    pub fn from_json(text: &str) -> Result<Self, ZetaError> {
        let file: LPolynomialFile =
            serde_json::from_str(text).map_err(|e| ZetaError::Json(e.to_string()))?;
        Self::new(
            file.q,
            file.genus,
            file.coeffs.into_iter().map(BigInt::from).collect(),
        )
    }

    pub fn to_json(&self) -> Result<String, ZetaError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| ZetaError::Json(format!("coefficient {c} exceeds i64")))
            })
            .collect::<Result<_, _>>()?;
        serde_json::to_string(&LPolynomialFile {
            q: self.q,
            genus: self.genus,
            coeffs,
        })
        .map_err(|e| ZetaError::Json(e.to_string()))
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_rational(&self, z: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * z + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Complex roots of `L(z)` by Durand-Kerner iteration.
    pub fn roots(&self) -> Vec<Complex64> {
        let n = 2 * self.genus;
        if n == 0 {
            return Vec::new();
        }
        let lead = self.coeffs[n].to_f64().unwrap_or(f64::NAN);
        let monic: Vec<f64> = self
            .coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN) / lead)
            .collect();
        let eval = |z: Complex64| {
            monic
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
        };
        let radius = (self.q as f64).powf(-0.5);
        let seed = Complex64::new(0.4, 0.9);
        let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius).collect();
        for _ in 0..500 {
            let mut moved = 0.0f64;
            for i in 0..n {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        denom *= roots[i] - roots[j];
                    }
                }
                let step = eval(roots[i]) / denom;
                roots[i] -= step;
                moved = moved.max(step.norm());
            }
            if moved < 1e-15 {
                break;
            }
        }
        roots
    }

    /// Largest `| |z| - q^(-1/2) |` over the roots; zero for genus 0.
    pub fn riemann_hypothesis_deviation(&self) -> f64 {
        let radius = (self.q as f64).powf(-0.5);
        self.roots()
            .iter()
            .map(|z| (z.norm() - radius).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(LPolynomial::elliptic(2, 0).is_ok());
        assert!(LPolynomial::elliptic(5, -3).is_ok());
        let bad = LPolynomial::new(2, 1, vec![1.into(), 0.into(), 3.into()]);
        assert!(matches!(bad, Err(ZetaError::InvalidL(_))));
        let short = LPolynomial::new(2, 1, vec![1.into()]);
        assert!(matches!(short, Err(ZetaError::InvalidL(_))));
        let c0 = LPolynomial::new(2, 0, vec![2.into()]);
        assert!(matches!(c0, Err(ZetaError::InvalidL(_))));
    }

    #[test]
    fn json_round_trip() {
        let l = LPolynomial::from_json(r#"{"q": 5, "genus": 1, "coeffs": [1, 3, 5]}"#).unwrap();
        assert_eq!(l, LPolynomial::elliptic(5, -3).unwrap());
        assert_eq!(LPolynomial::from_json(&l.to_json().unwrap()).unwrap(), l);
        assert!(matches!(
            LPolynomial::from_json("{"),
            Err(ZetaError::Json(_))
        ));
    }

    #[test]
    fn roots_on_the_critical_circle() {
        for l in [
            LPolynomial::elliptic(2, 0).unwrap(),
            LPolynomial::elliptic(5, -3).unwrap(),
            LPolynomial::elliptic(7, 4).unwrap(),
            // (1 + 2z^2)(1 + z + 2z^2), a genus-2 shape over GF(2)
            LPolynomial::new(2, 2, vec![1.into(), 1.into(), 4.into(), 2.into(), 4.into()]).unwrap(),
        ] {
            assert!(l.riemann_hypothesis_deviation() < 1e-9, "{l:?}");
        }
        // satisfies the functional equation but violates the Hasse bound
        let off = LPolynomial::elliptic(2, 5).unwrap();
        assert!(off.riemann_hypothesis_deviation() > 1e-3);
        assert_eq!(
            LPolynomial::genus_zero(3).riemann_hypothesis_deviation(),
            0.0
        );
    }
}
