use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: usize,
        reason: &'static str,
    },

    #[error("H({a},{b},{c}) is degenerate: column {column} has weight {weight}, expected 2")]
    DegenerateShape {
        a: usize,
        b: usize,
        c: usize,
        column: usize,
        weight: usize,
    },

    #[error("slope sequence has {got} entries but the mother matrix has {expected} block columns")]
    LengthMismatch { expected: usize, got: usize },

    #[error("column {column} has weight {weight}; only column-weight-2 matrices are supported")]
    UnsupportedStructure { column: usize, weight: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("broken walk: step {step} does not start at the vertex the previous step ended on")]
    BrokenWalk { step: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("matrix has no rows or no columns")]
    EmptyMatrix,

    #[error("alist line {line}: {message}")]
    Alist { line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error(
        "target girth {target} exceeds g_max = {gmax} for H({a},{b},{c}); \
         no lift of this mother matrix can reach it"
    )]
    InfeasibleTarget {
        target: usize,
        gmax: usize,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("search result failed re-verification: girth {achieved} below target {target}")]
    VerificationFailed { achieved: String, target: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
