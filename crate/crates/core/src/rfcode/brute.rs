use std::collections::BTreeSet;

use super::{CodeError, CodeParams, RationalFunction};
use crate::gf::Polynomial;

/// Largest `q^(2h+2)` accepted by [`brute_force_code`].
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Every `a/b` with `deg a, deg b <= h`, `b` monic and `gcd(a, b) = 1`,
/// found by exhaustion. Independent of the linear-algebra encoder.
pub fn brute_force_code(params: &CodeParams) -> Result<BTreeSet<RationalFunction>, CodeError> {
    let q = params.q();
    let h = params.h();
    let work = (q as u128).saturating_pow(2 * h as u32 + 2);
    if work > BRUTE_FORCE_LIMIT {
        return Err(CodeError::TooLarge(work));
    }
    let spec = params.spec();
    let digits = |mut t: u64, len: usize| -> Vec<u64> {
        (0..len)
            .map(|_| {
                let c = t % q;
                t /= q;
                c
            })
            .collect()
    };
    let mut denominators = Vec::new();
    for deg in 0..=h {
        for t in 0..q.pow(deg as u32) {
            let mut c = digits(t, deg);
            c.push(1);
            denominators.push(Polynomial::new(spec, c));
        }
    }
    let mut out = BTreeSet::new();
    for t in 0..q.pow(h as u32 + 1) {
        let a = Polynomial::new(spec, digits(t, h + 1));
        for b in &denominators {
            if a.gcd(b).degree() == Some(0) {
                let f = RationalFunction::normalize(&a, b)?;
                debug_assert_eq!(f.numerator(), &a);
                out.insert(f);
            }
        }
    }
    Ok(out)
}
