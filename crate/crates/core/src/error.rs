use std::fmt;

/// Errors raised by the arithmetic, construction and analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of an all-zero list is undefined")]
    GcdOfZeros,

    #[error("block length must satisfy 1 <= n <= {max}, got {n}")]
    InvalidLength { n: usize, max: usize },

    #[error("modulus mismatch: S_{left} vs S_{right}")]
    ModulusMismatch { left: usize, right: usize },

    #[error("vector of length {len} cannot be split into blocks of index {l}")]
    IndivisibleLength { len: usize, l: usize },

    #[error("parse error at offset {offset}: {kind}")]
    Parse { offset: usize, kind: ParseErrorKind },

    #[error("invalid recipe: {0}")]
    Recipe(String),

    /// A family precondition failed; the payload names the condition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "enumeration of 2^{needed} codewords exceeds the guard 2^{limit}; use the cardinality 2^k or force enumeration"
    )]
    EnumerationGuard { needed: usize, limit: usize },

    #[error("oracle enumeration needs n <= {limit}, got n = {n}")]
    OracleGuard { n: usize, limit: usize },

    #[error("the code is zero; minimum distance is undefined")]
    ZeroCode,

    #[error("search space is empty")]
    EmptySearchSpace,
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    ExpectedExponent,
    UnexpectedChar(char),
    DuplicateExponent(usize),
    ExponentOverflow,
    UnclosedParen,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty input"),
            ParseErrorKind::ExpectedExponent => write!(f, "expected an exponent after '^'"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::DuplicateExponent(k) => write!(f, "exponent {k} appears twice"),
            ParseErrorKind::ExponentOverflow => write!(f, "exponent too large"),
            ParseErrorKind::UnclosedParen => write!(f, "missing closing ')'"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
