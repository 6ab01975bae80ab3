//! The Artin braid group `B_n`.
//!
//! Strands are numbered `1..=n` from left to right and the positive
//! generator `σ_i` is the crossing in which strand `i` passes over strand
//! `i+1`. Words are read top to bottom.

mod conjugacy;
mod garside;
mod perm;
mod word;

pub use conjugacy::{
    conjugate_test, cycle_type, super_summit_set, to_super_summit, Conjugacy, ConjugacyBudget,
    NonConjugacyCertificate,
};
pub use garside::{
    all_simples, finishing_set, left_normal_form, simple_to_letters, starting_set, words_equal,
    NormalForm,
};
pub use perm::Permutation;
pub use word::{enumerate_words, parse_braid, BraidWord, Letter, Sign, WordStream};

pub(crate) use word::split_header;
