use thiserror::Error;

use crate::word::{Letter, OperatorLabel, Word};

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must satisfy n >= 2, got n = {n}")]
    RankTooSmall { n: u8 },

    #[error("letter {letter} out of range 1..={n}")]
    LetterOutOfRange { letter: Letter, n: u8 },

    #[error("parts {0:?} do not form a strict partition")]
    NotStrictPartition(Vec<u32>),

    #[error("graph would need {nodes} nodes, exceeding the budget of {budget}")]
    BudgetExceeded { nodes: u128, budget: usize },

    #[error("word {0} is not a highest weight vector")]
    NotHighestWeight(Word),

    #[error("component has {count} highest weight nodes, expected exactly one")]
    AmbiguousBasepoint { count: usize },

    #[error("component highest weight {0} is not a strict partition")]
    NotStrictHighestWeight(String),

    #[error("operator {label} ({direction:?}) maps {word} outside the node set, to {image}")]
    StabilityViolation {
        word: Word,
        label: OperatorLabel,
        direction: crate::word::Direction,
        image: Word,
    },

    #[error("shape has {rows} rows but only {n} letters are available")]
    TooManyRows { rows: usize, n: u8 },

    #[error("weight polynomials have different ranks ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },

    #[error("inconsistent decomposition: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}
