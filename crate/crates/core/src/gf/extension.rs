use super::{canonical_irreducible, FieldSpec, GfError, Polynomial};

/// A degree-`d` extension `base[X]/(m)` with `m` the canonical monic
/// irreducible of degree `d` over `base` (smallest `sum idx(c_i) q^i`).
///
/// The generator `x0` is the class of `X`. Base elements embed as constants,
/// so the embedding is the identity on indices below `q`, and the element
/// with index `sum c_i q^i` is `sum c_i x0^i`.
#[derive(Clone, Debug)]
pub struct ExtensionField {
    base: FieldSpec,
    ext: FieldSpec,
    x0: u64,
}

impl ExtensionField {
    pub fn new(base: &FieldSpec, d: usize) -> Result<Self, GfError> {
        if d == 0 {
            return Err(GfError::InvalidDegree(0));
        }
        // fail early rather than search for a modulus we cannot use
        (base.size() as u128)
            .checked_pow(d as u32)
            .filter(|&s| s < u64::MAX as u128)
            .ok_or(GfError::FieldTooLarge(u128::MAX))?;
        let modulus = canonical_irreducible(base, d, Polynomial::is_irreducible);
        let x0 = if d == 1 {
            // X = -m_0 in base[X]/(X + m_0)
            base.neg(modulus[0])
        } else {
            base.size()
        };
        let ext = FieldSpec::over(base, modulus)?;
        Ok(ExtensionField {
            base: base.clone(),
            ext,
            x0,
        })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn ext(&self) -> &FieldSpec {
        &self.ext
    }

    pub fn degree(&self) -> usize {
        self.ext.degree()
    }

    /// The generator `x0`, as an index in `ext`.
    pub fn generator(&self) -> u64 {
        self.x0
    }

    pub fn embed(&self, c: u64) -> u64 {
        debug_assert!(c < self.base.size());
        c
    }

    /// Minimal polynomial of `x0` over the base.
    pub fn minimal_polynomial(&self) -> Polynomial {
        Polynomial::new(&self.base, self.ext.modulus().to_vec())
    }

    /// Evaluates a base-field polynomial at an element of the extension.
    pub fn eval(&self, poly: &Polynomial, x: u64) -> u64 {
        assert!(poly.spec().same_as(&self.base));
        let e = &self.ext;
        poly.coeffs()
            .iter()
            .rev()
            .fold(0, |acc, &c| e.add(e.mul(acc, x), self.embed(c)))
    }

    /// Coordinates of `x` in the power basis `1, x0, ..., x0^(d-1)`.
    pub fn power_basis_coords(&self, x: u64) -> Vec<u64> {
        if self.degree() == 1 {
            return vec![x];
        }
        self.ext.coords(x)
    }

    /// `x -> x^q`, the generator of Gal(ext/base).
    pub fn frobenius(&self, x: u64) -> u64 {
        self.ext.pow(x, self.base.size())
    }
}
