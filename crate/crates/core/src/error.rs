use std::fmt;

use thiserror::Error;

/// What went wrong while reading a document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Malformed text or an inconsistent declaration.
    Syntax,
    /// A payoff line whose key set differs from the player's closed neighbourhood.
    Locality,
    /// A formula mentions a player the graph does not declare.
    Scope,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Syntax => "parse error",
            ParseErrorKind::Locality => "locality error",
            ParseErrorKind::Scope => "scope error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// 1-based.
    pub line: usize,
    /// 1-based; 1 when the error concerns a whole line.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind,
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Self::new(ParseErrorKind::Syntax, line, 1, message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid player name `{0}`")]
    InvalidPlayerName(String),

    #[error("unknown player `{0}`")]
    UnknownPlayer(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("invalid payoff `{0}`")]
    InvalidPayoff(String),

    #[error("game has {count} strategy profiles, above the cap of {cap}")]
    TooManyProfiles { count: u128, cap: u128 },

    #[error("graph has {count} vertices; the prover handles at most {max}")]
    TooManyVertices { count: usize, max: usize },

    #[error("graph has {count} vertices; at most {max} are supported")]
    GraphTooLarge { count: usize, max: usize },

    #[error("set {0} is not sparse")]
    NotSparse(String),

    #[error("unknown built-in `{0}`")]
    UnknownBuiltin(String),

    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
