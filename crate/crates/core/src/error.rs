use std::fmt;

use thiserror::Error;

/// Which structural check a matrix failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixCheck {
    /// Largest `|m[j][k] - conj(m[k][j])|` over all index pairs.
    NotHermitian {
        deviation: f64,
    },
    TraceNotUnit {
        trace: f64,
    },
}

impl fmt::Display for MatrixCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixCheck::NotHermitian { deviation } => {
                write!(f, "not Hermitian (max deviation {deviation:e})")
            }
            MatrixCheck::TraceNotUnit { trace } => write!(f, "trace is {trace}, expected 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter {name} is not finite ({value})")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(MatrixCheck),

    #[error("case {case} takes {expected} slot values, got {got}")]
    ArityMismatch {
        case: String,
        expected: usize,
        got: usize,
    },

    #[error("no printed {normalization} form of inequality {index} for {case}")]
    NoPrintedForm {
        case: String,
        index: u8,
        normalization: &'static str,
    },

    #[error("unknown cluster case: {0}")]
    UnknownCase(String),

    #[error("invalid scan range: {0}")]
    InvalidRange(String),

    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(String),

    #[error("rejection sampler stalled after {0} attempts")]
    SamplerStall(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
