use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A letter of a word lies outside `1..=arity`.
    #[error("letter {letter} at position {position} is outside 1..={arity}")]
    OutOfRange {
        letter: u8,
        position: usize,
        arity: usize,
    },

    /// A word misses some value of `1..=arity`.
    #[error("word is not surjective onto 1..={arity}: value {missing} never occurs")]
    NotSurjective { arity: usize, missing: u8 },

    /// A word or vertex tuple repeats adjacently.
    #[error("degenerate: positions {position} and {} coincide", position + 1)]
    Degenerate { position: usize },

    /// Arity zero or otherwise unusable.
    #[error("invalid arity {0}: arity must be at least 1")]
    InvalidArity(usize),

    /// Two objects that must share an arity do not.
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    /// Face or degeneracy index outside the simplex.
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    /// Requested occurrence of a value does not exist.
    #[error("value {value} has no occurrence number {index}")]
    NoSuchOccurrence { value: u8, index: usize },

    /// A prism vertex coordinate violates `0 <= x_k <= d_k - 1`.
    #[error("coordinate {coord} for value {value} exceeds bound {max}")]
    CoordOutOfRange {
        value: u8,
        coord: usize,
        max: usize,
    },

    /// A lattice path does not match the multiplicities of its surjection.
    #[error("lattice path invalid: {0}")]
    PathInvalid(String),

    /// A prism factor of dimension zero admits no face.
    #[error("prism factor for value {0} is a point and has no faces")]
    FactorIsPoint(u8),

    /// A chain self-map returned a chain of the wrong degree.
    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    /// Unknown verification suite name.
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    /// An enumeration or matrix computation exceeds the configured bound.
    #[error("resource guard: {0}")]
    ResourceExceeded(String),

    /// Text decoding failure; `position` is the byte offset in the input.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
