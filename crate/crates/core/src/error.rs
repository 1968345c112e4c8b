use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands belong to different quadratic fields (D = {0} and D = {1})")]
    MixedField(BigInt, BigInt),

    #[error("{0} is not a positive non-square integer")]
    BadDiscriminant(BigInt),

    #[error("matrix is not primitive: {0}")]
    NotPrimitive(String),

    #[error("invalid continued fraction: {0}")]
    BadCoefficients(String),

    #[error("malformed slope {input:?}: {reason}")]
    BadSlope { input: String, reason: String },

    #[error("unknown letter {0:?}")]
    UnknownLetter(String),

    #[error("duplicate letter {0:?} in alphabet")]
    DuplicateLetter(String),

    #[error("empty word")]
    EmptyWord,

    #[error("not a constant gap sequence: letter {letter:?} recurs at gaps {first} and {second}")]
    NotConstantGap {
        letter: String,
        first: usize,
        second: usize,
    },

    #[error("alphabets overlap on letter {0:?}")]
    OverlappingAlphabets(String),

    #[error("shift {shift} out of range for period {per}")]
    BadShift { shift: usize, per: usize },

    #[error("{0:?} is not a factor")]
    NotAFactor(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("short factor: {0}")]
    ShortFactor(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}
