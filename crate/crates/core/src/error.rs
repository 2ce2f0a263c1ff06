use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Every variant corresponds to a precondition violation that callers can
/// trigger with bad input; internal invariant failures panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("element length {length} exceeds the bound {bound}")]
    LengthBoundExceeded { length: usize, bound: usize },
    #[error("Weyl group of {cartan} has order {order}, above the guard {guard}")]
    GroupTooLarge {
        cartan: String,
        order: u64,
        guard: u64,
    },
    #[error("word does not contain a reduced subword for the target element")]
    TargetNotContained,
    #[error("w is not below x in Bruhat order")]
    NotBelow,
    #[error("root {0:?} is not a member of the given set")]
    NotMember(Vec<i32>),
    #[error("exponent {0:?} lies outside the negated integer cone of the weights")]
    ExponentOutsideCone(Vec<i32>),
    #[error("weight {0:?} is not positive")]
    NonPositiveWeight(Vec<i32>),
    #[error("coefficient of exponent {exponent:?} requested beyond truncation height {bound}")]
    BeyondTruncation { exponent: Vec<i32>, bound: u32 },
    #[error("operation requires a root system of type A, got {0}")]
    WrongType(String),
    #[error("element is not a minimal coset representative for the parabolic {0:?}")]
    NotMinimalCosetRep(Vec<usize>),
    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("word of length {length} exceeds the enumeration guard {bound}")]
    WordTooLong { length: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidCartanType(_) => "InvalidCartanType",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::NotReduced(_) => "NotReduced",
            Error::LengthBoundExceeded { .. } => "LengthBoundExceeded",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::TargetNotContained => "TargetNotContained",
            Error::NotBelow => "NotBelow",
            Error::NotMember(_) => "NotMember",
            Error::ExponentOutsideCone(_) => "ExponentOutsideCone",
            Error::NonPositiveWeight(_) => "NonPositiveWeight",
            Error::BeyondTruncation { .. } => "BeyondTruncation",
            Error::WrongType(_) => "WrongType",
            Error::NotMinimalCosetRep(_) => "NotMinimalCosetRep",
            Error::PositionOutOfRange { .. } => "PositionOutOfRange",
            Error::WordTooLong { .. } => "WordTooLong",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
