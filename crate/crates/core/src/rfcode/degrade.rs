use rand::Rng;

use super::{point_list, CodeParams, Codeword, ProjectiveValue};

/// One forbidden letter per position, uniform over P¹(GF(q)).
pub fn sample_forbidden<R: Rng + ?Sized>(params: &CodeParams, rng: &mut R) -> Vec<ProjectiveValue> {
    let alphabet = point_list(params.spec());
    (0..params.n())
        .map(|_| alphabet[rng.random_range(0..alphabet.len())])
        .collect()
}

/// Number of words that avoid the forbidden letter at every position.
pub fn count_survivors(words: &[Codeword], forbidden: &[ProjectiveValue]) -> usize {
    words
        .iter()
        .filter(|w| w.symbols().iter().zip(forbidden).all(|(s, f)| s != f))
        .count()
}
