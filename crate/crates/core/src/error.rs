use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("letter {letter} does not belong to the alphabet {alphabet}")]
    LetterOutOfAlphabet { letter: i32, alphabet: String },

    #[error("not semistandard: {0}")]
    NotSemistandard(String),

    #[error("crystal index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("padding d = {d} is smaller than the first row length {first_row}")]
    PaddingTooSmall { d: u32, first_row: u32 },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("word {word:?} is not a reduced word adapted to the quiver: {reason}")]
    NotAdapted { word: Vec<usize>, reason: String },

    #[error("invalid (P, Q) pair: {0}")]
    InvalidPair(String),

    #[error("supports overlap at root ({0}, {1})")]
    OverlappingSupport(usize, usize),

    #[error("datum lives on quiver ({0}), expected ({1})")]
    QuiverMismatch(String, String),

    #[error("crystal graph exceeded the node limit of {0}")]
    NodeLimit(usize),

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidShape(_) => "invalid_shape",
            Error::LetterOutOfAlphabet { .. } => "letter_out_of_alphabet",
            Error::NotSemistandard(_) => "not_semistandard",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::PaddingTooSmall { .. } => "padding_too_small",
            Error::InvalidQuiver(_) => "invalid_quiver",
            Error::NotAdapted { .. } => "not_adapted",
            Error::InvalidPair(_) => "invalid_pair",
            Error::OverlappingSupport(..) => "overlapping_support",
            Error::QuiverMismatch(..) => "quiver_mismatch",
            Error::NodeLimit(_) => "node_limit",
            Error::Reconstruction(_) => "reconstruction",
            Error::Malformed(_) => "malformed",
        }
    }
}
