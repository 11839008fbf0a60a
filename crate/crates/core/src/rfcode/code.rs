use super::{
    hamming_distance, point_list, CodeError, CodeParams, Codeword, ProjectiveValue,
    RationalFunction,
};
use crate::gf::{ExtensionField, FieldSpec, Matrix, Polynomial};

/// Messages for `C(h)`: the elements of the degree-`(2h+1)` extension of the
/// alphabet field, addressed by index.
#[derive(Clone, Debug)]
pub struct MessageSpace {
    ext: ExtensionField,
    size: u64,
}

impl MessageSpace {
    pub fn new(spec: &FieldSpec, h: usize) -> Result<Self, CodeError> {
        let ext = ExtensionField::new(spec, 2 * h + 1)?;
        let size = ext.ext().size();
        Ok(MessageSpace { ext, size })
    }

    pub fn extension(&self) -> &ExtensionField {
        &self.ext
    }

    /// `q^(2h+1)`
    pub fn size(&self) -> u64 {
        self.size
    }
}

/// `C(h)` with its point enumeration and message space fixed.
#[derive(Clone, Debug)]
pub struct Code {
    params: CodeParams,
    points: Vec<ProjectiveValue>,
    messages: MessageSpace,
}

impl Code {
    pub fn new(params: &CodeParams) -> Result<Self, CodeError> {
        Ok(Code {
            params: params.clone(),
            points: point_list(params.spec()),
            messages: MessageSpace::new(params.spec(), params.h())?,
        })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn points(&self) -> &[ProjectiveValue] {
        &self.points
    }

    pub fn messages(&self) -> &MessageSpace {
        &self.messages
    }

    fn spec(&self) -> &FieldSpec {
        self.params.spec()
    }

    /// The word of values of `f` at every point.
    pub fn codeword(&self, f: &RationalFunction) -> Codeword {
        Codeword::new(self.points.iter().map(|&p| f.evaluate(p)).collect())
    }

    /// `iota(f) = f(x0)` as a message index.
    pub fn iota(&self, f: &RationalFunction) -> Result<u64, CodeError> {
        let bound = self.params.h();
        if f.degree() > bound {
            return Err(CodeError::DegreeTooLarge {
                degree: f.degree(),
                bound,
            });
        }
        let ext = self.messages.extension();
        let x0 = ext.generator();
        let a = ext.eval(f.numerator(), x0);
        let b = ext.eval(f.denominator(), x0);
        // deg b <= h < 2h+1, so b(x0) != 0
        Ok(ext.ext().div(a, b)?)
    }

    /// Inverse of [`Code::iota`]: the function of degree at most `h` whose
    /// value at `x0` is the message.
    ///
    /// Solves `a(x0) - x1 b(x0) = 0` for the `2h+2` coefficients of `a, b`,
    /// expanded on the power basis of the extension (`2h+1` equations).
    pub fn message_function(&self, m: u64) -> Result<RationalFunction, CodeError> {
        let size = self.messages.size();
        if m >= size {
            return Err(CodeError::MessageOutOfRange { m, size });
        }
        let h = self.params.h();
        let ext = self.messages.extension();
        let e = ext.ext();
        let (x0, x1) = (ext.generator(), m);
        let d = ext.degree();
        let mut system = Matrix::zeros(self.spec(), d, 2 * h + 2);
        let mut power = 1;
        for j in 0..=h {
            let a_col = ext.power_basis_coords(power);
            let b_col = ext.power_basis_coords(e.neg(e.mul(x1, power)));
            for r in 0..d {
                system.set(r, j, a_col[r]);
                system.set(r, h + 1 + j, b_col[r]);
            }
            power = e.mul(power, x0);
        }
        let v = system
            .nullspace()
            .into_iter()
            .next()
            .expect("2h+2 unknowns in 2h+1 equations");
        let (a, b) = v.split_at(h + 1);
        let f = RationalFunction::normalize(
            &Polynomial::new(self.spec(), a.to_vec()),
            &Polynomial::new(self.spec(), b.to_vec()),
        )
        .expect("b(x0) = 0 forces a = b = 0");
        Ok(f)
    }

    pub fn encode(&self, m: u64) -> Result<Codeword, CodeError> {
        Ok(self.codeword(&self.message_function(m)?))
    }

    /// All `(message, codeword)` pairs in message order.
    pub fn enumerate(&self) -> impl Iterator<Item = (u64, Codeword)> + '_ {
        (0..self.messages.size()).map(|m| (m, self.encode(m).expect("message in range")))
    }

    /// Interpolation system for numerator and denominator of degree at most
    /// `bound` agreeing with `w` at every point. Unknowns are
    /// `a_0..a_bound, b_0..b_bound`.
    fn interpolation_system(&self, w: &Codeword, bound: usize) -> Matrix {
        let f = self.spec();
        let cols = 2 * bound + 2;
        let mut system = Matrix::zeros(f, 0, cols);
        for (&p, &y) in self.points.iter().zip(w.symbols()) {
            let mut row = vec![0u64; cols];
            match (p, y) {
                (ProjectiveValue::Finite(x), ProjectiveValue::Finite(y)) => {
                    let mut power = 1;
                    for j in 0..=bound {
                        row[j] = power;
                        row[bound + 1 + j] = f.neg(f.mul(y, power));
                        power = f.mul(power, x);
                    }
                }
                (ProjectiveValue::Finite(x), ProjectiveValue::Infinity) => {
                    let mut power = 1;
                    for j in 0..=bound {
                        row[bound + 1 + j] = power;
                        power = f.mul(power, x);
                    }
                }
                (ProjectiveValue::Infinity, ProjectiveValue::Finite(y)) => {
                    row[bound] = 1;
                    row[cols - 1] = f.neg(y);
                }
                (ProjectiveValue::Infinity, ProjectiveValue::Infinity) => {
                    row[cols - 1] = 1;
                }
            }
            system.push_row(&row);
        }
        system
    }

    /// Dimension of the solution space of the degree-`bound` system.
    pub fn solution_dimension(&self, w: &Codeword, bound: usize) -> usize {
        self.interpolation_system(w, bound).nullspace().len()
    }

    fn solve(&self, w: &Codeword, bound: usize) -> Option<(Polynomial, Polynomial)> {
        let v = self
            .interpolation_system(w, bound)
            .nullspace()
            .into_iter()
            .next()?;
        let (a, b) = v.split_at(bound + 1);
        Some((
            Polynomial::new(self.spec(), a.to_vec()),
            Polynomial::new(self.spec(), b.to_vec()),
        ))
    }

    /// The function whose word is exactly `w`, if `w` is a codeword.
    pub fn recognize(&self, w: &Codeword) -> Option<RationalFunction> {
        if w.len() != self.params.n() {
            return None;
        }
        let (a, b) = self.solve(w, self.params.h())?;
        let f = RationalFunction::normalize(&a, &b).ok()?;
        (f.degree() <= self.params.h() && self.codeword(&f) == *w).then_some(f)
    }

    /// Corrects up to `e` errors with an error-locating polynomial: solves the
    /// interpolation system at degree `h + e`, reduces the solution and checks
    /// that it is within distance `e` of `w`.
    pub fn decode(&self, w: &Codeword, e: usize) -> Result<RationalFunction, CodeError> {
        let (h, n) = (self.params.h(), self.params.n());
        if w.len() != n {
            return Err(CodeError::LengthMismatch {
                expected: n,
                got: w.len(),
            });
        }
        if 2 * (h + e) >= n {
            return Err(CodeError::RadiusTooLarge { h, e, n });
        }
        let (a, b) = self.solve(w, h + e).ok_or(CodeError::NoSolution)?;
        let f =
            RationalFunction::normalize(&a, &b).map_err(|_| CodeError::VerificationFailed { e })?;
        if f.degree() > h || hamming_distance(&self.codeword(&f), w)? > e {
            return Err(CodeError::VerificationFailed { e });
        }
        Ok(f)
    }

    /// Codewords avoiding `forbidden[i]` at every position `i`.
    pub fn degrade(
        &self,
        forbidden: &[ProjectiveValue],
    ) -> Result<Vec<(u64, Codeword)>, CodeError> {
        if forbidden.len() != self.params.n() {
            return Err(CodeError::LengthMismatch {
                expected: self.params.n(),
                got: forbidden.len(),
            });
        }
        Ok(self
            .enumerate()
            .filter(|(_, w)| w.symbols().iter().zip(forbidden).all(|(s, f)| s != f))
            .collect())
    }
}
