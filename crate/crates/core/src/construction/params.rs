use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The shape triple `(a, b, c)` of a double-cylinder mother matrix.
///
/// `a` is the cylinder block size, `b` the number of cylinders around the
/// ring and `c` the number of two-row chain columns between consecutive
/// cylinders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct CodeParams {
    a: usize,
    b: usize,
    c: usize,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    a: usize,
    b: usize,
    c: usize,
}

impl TryFrom<RawParams> for CodeParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        CodeParams::new(raw.a, raw.b, raw.c)
    }
}

impl From<CodeParams> for RawParams {
    fn from(p: CodeParams) -> Self {
        RawParams {
            a: p.a,
            b: p.b,
            c: p.c,
        }
    }
}

impl CodeParams {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidParameter {
                name: "a",
                value: a,
                reason: "cylinder size must be at least 2",
            });
        }
        if b < 1 {
            return Err(Error::InvalidParameter {
                name: "b",
                value: b,
                reason: "at least one cylinder is required",
            });
        }
        if b == 1 && c == 0 {
            return Err(Error::InvalidParameter {
                name: "c",
                value: c,
                reason: "c = 0 with a single cylinder folds the wrap column onto the cylinder",
            });
        }
        if (a + c - 1) * b < 2 {
            return Err(Error::InvalidParameter {
                name: "b",
                value: b,
                reason: "fewer than two block rows",
            });
        }
        Ok(CodeParams { a, b, c })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// Block rows per cylinder period, `a + c - 1`.
    pub fn rows_per_period(&self) -> usize {
        self.a + self.c - 1
    }

    /// Block columns per cylinder period, `a + c`.
    pub fn cols_per_period(&self) -> usize {
        self.a + self.c
    }

    pub fn block_rows(&self) -> usize {
        self.rows_per_period() * self.b
    }

    pub fn block_cols(&self) -> usize {
        self.cols_per_period() * self.b
    }

    /// Design rate `1 / (a + c)`, which equals `1 - block_rows / block_cols`.
    pub fn design_rate(&self) -> Ratio<usize> {
        Ratio::new(1, self.cols_per_period())
    }

    pub fn code_length(&self, m: usize) -> Result<usize> {
        if m == 0 {
            return Err(Error::InvalidParameter {
                name: "m",
                value: m,
                reason: "lifting size must be at least 1",
            });
        }
        Ok(m * self.block_cols())
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{})", self.a, self.b, self.c)
    }
}

/// Length `m·(a+c)·b` of the code obtained by lifting `H(a,b,c)` with `m×m` circulants.
pub fn code_length(params: &CodeParams, m: usize) -> Result<usize> {
    params.code_length(m)
}
