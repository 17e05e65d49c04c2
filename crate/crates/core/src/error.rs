use thiserror::Error;

use crate::word::{Flavor, Letter};

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at token {position} ({token:?}): {reason}")]
    Syntax {
        position: usize,
        token: String,
        reason: &'static str,
    },
    #[error("letter {letter} is not allowed in {flavor}")]
    FlavorViolation { letter: Letter, flavor: Flavor },
    #[error("letter {letter} has index out of range for {flavor}")]
    IndexOutOfRange { letter: Letter, flavor: Flavor },
    #[error("flavor mismatch: {left} vs {right}")]
    FlavorMismatch { left: Flavor, right: Flavor },
    #[error("strand count {0} is too small")]
    TooFewStrands(usize),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("determinant of a {0}x{0} matrix exceeds the cofactor budget (n <= 8)")]
    DeterminantBudget(usize),
    #[error("evaluation point must be a unit of Z (t, s in {{-1, 1}}), got t={t}, s={s}")]
    EvaluationPoint { t: i64, s: i64 },
    #[error("expected a classical word, got {0}")]
    NotClassical(Flavor),
    #[error("expected a cylindrical word, got {0}")]
    NotCylindrical(Flavor),
    #[error("word is not a pure braid")]
    NotPure,
    #[error("distinguished strand k={k} is outside 1..={max}")]
    StrandOutOfRange { k: usize, max: usize },
    #[error("letter {letter} at position {position} has no image under p_{k} into {n} strands")]
    UnsupportedIndex {
        position: usize,
        letter: Letter,
        k: usize,
        n: usize,
    },
    #[error("stabilization degree must be positive, got {0}")]
    InvalidDegree(i64),
    #[error("parameter {name} must be positive, got {value}")]
    InvalidParameter { name: &'static str, value: i64 },
    #[error("Artin image length exceeded the budget of {0} letters")]
    ImageBudget(usize),
    #[error("handle reduction inconclusive after {0} steps")]
    HandleStepCap(usize),
    #[error("search budget exceeded: {0}")]
    SearchBudget(String),
    #[error("embedded witness failed its oracle check: {0}")]
    InvalidWitness(&'static str),
    #[error("malformed matrix data: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
