//! Shared error type.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::embedding::DomainTag;
use crate::profile::GridPoint;
use crate::sentiment::Sentiment;
use crate::transfer::ClassMode;

/// Errors produced by the lexicon-adaptation primitives.
///
/// Every variant names the offending word, label or dimension so that a
/// caller can report actionable messages without re-deriving context.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("word `{word}` is not in the {domain} embedding space")]
    OutOfVocabulary { word: String, domain: DomainTag },

    #[error("vector for `{word}` cannot be normalized")]
    DegenerateVector { word: String },

    #[error("embedding space has no usable vectors")]
    EmptySpace,

    #[error("`{word}` has no similarity candidates")]
    NoCandidate { word: String },

    #[error("vector for `{word}` has {actual} components, expected {expected}")]
    DimensionMismatch { word: String, expected: usize, actual: usize },

    #[error("vector for `{word}` contains a non-finite component")]
    NonFiniteComponent { word: String },

    #[error("duplicate entry for word `{word}`")]
    DuplicateWord { word: String },

    #[error("input is empty")]
    EmptyInput,

    #[error("token `{token}` is empty or contains whitespace")]
    InvalidToken { token: String },

    #[error("count for `{word}` must be positive")]
    ZeroCount { word: String },

    #[error("coverage must lie in (0, 1], got {value}")]
    InvalidCoverage { value: f64 },

    #[error("score {score} for `{word}` is outside [-5, 5]")]
    ScoreOutOfRange { word: String, score: i64 },

    #[error("`{word}` cannot be its own antonym")]
    SelfAntonym { word: String },

    #[error("duplicate verb pair `{first}` / `{second}`")]
    DuplicateVerbPair { first: String, second: String },

    #[error("threshold grid must be non-empty and strictly ascending")]
    InvalidGrid,

    /// No grid threshold reached the precision floor. The full precision
    /// table is carried along so callers can report it.
    #[error("no threshold in the {}-point grid reached precision 0.5", table.len())]
    CalibrationFailed { table: Vec<GridPoint> },

    #[error("no label for word `{word}`")]
    MissingLabel { word: String },

    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },

    #[error("no profile for word `{word}`")]
    MissingProfile { word: String },

    #[error("no sentiment assignment for word `{word}`")]
    MissingAssignment { word: String },

    #[error("word `{word}` was not expected in this input")]
    UnexpectedWord { word: String },

    #[error("no annotation for worklist word `{word}`")]
    MissingAnnotation { word: String },

    #[error("duplicate annotation for word `{word}`")]
    DuplicateAnnotation { word: String },

    #[error("gold lexicon has no label for `{word}`")]
    MissingGoldLabel { word: String },

    #[error("expected {expected} items, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("expected a {expected} dataset, got a {actual} dataset")]
    ClassModeMismatch { expected: ClassMode, actual: ClassMode },

    #[error("sentence has no part-of-speech tags")]
    MissingPosTags,

    #[error("no substitution map for the {sentiment} class")]
    MissingSubstitutionMap { sentiment: Sentiment },

    #[error("substitution for tag `{tag}` is empty")]
    EmptyReplacement { tag: String },
}
