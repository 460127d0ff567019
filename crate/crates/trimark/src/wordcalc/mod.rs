//! Words in the generators, their canonical forms, and what can be read
//! off them: trace class, conjugacy representative, circulation code and
//! linking numbers.

mod canon;
mod classify;
mod code;
mod word;

pub use canon::{canonicalize, compose, invert, CanonicalForm, RELATIONS};
pub use classify::{classify, conjugacy_reduce, turbulence_from_displacements, Move, TraceClass};
pub use code::{code_to_word, linking_numbers, word_to_code, even_decomposition, CirculationCode, Turn, MAX_TURNS};
pub use word::{parse_word, phi, Gen, Syllable, Word, MAX_EXPONENT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("rewriting did not finish within {budget} steps")]
    RewriteFuelExceeded { budget: u64 },
    #[error("the class reverses orientation")]
    OrientationReversing,
    #[error("the class permutes the marked points")]
    NotPurePermutationTrivial,
    #[error("the code would have {letters} turns, more than {limit}")]
    TooLong { letters: u64, limit: u64 },
}

impl WordError {
    pub fn code(&self) -> &'static str {
        match self {
            WordError::Syntax { .. } => "syntax_error",
            WordError::RewriteFuelExceeded { .. } => "rewrite_fuel_exceeded",
            WordError::OrientationReversing => "orientation_reversing",
            WordError::NotPurePermutationTrivial => "not_pure_permutation_trivial",
            WordError::TooLong { .. } => "too_long",
        }
    }
}
