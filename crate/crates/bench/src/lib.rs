//! Shared fixtures for the benches: systems paired with their longest
//! element's reduced word.

use coxwords::classify::longest_element;
use coxwords::matrix::{Automorphism, CoxeterMatrix};
use coxwords::{CoxeterSystem, Word};

pub fn system_with_longest_word(matrix: CoxeterMatrix) -> (CoxeterSystem, Word) {
    let sys = CoxeterSystem::new(matrix);
    let all: Word = sys.matrix().generators().collect();
    let w0 = longest_element(&sys, &all).expect("finite fixture");
    let word = sys.word(w0);
    (sys, word)
}

pub fn identity_twist(sys: &CoxeterSystem) -> Automorphism {
    Automorphism::identity(sys.rank())
}

/// A deliberately non-reduced scramble: the longest word followed by its
/// reversal, exercising the full descent machinery on normalization.
pub fn scrambled(word: &Word) -> Word {
    let mut scrambled = word.clone();
    scrambled.extend(word.iter().rev().copied());
    scrambled
}
