use std::fmt;

use thiserror::Error;

/// Which half of an obscure amplitude a diagnostic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    Quantum,
    Membership,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sector::Quantum => f.write_str("quantum"),
            Sector::Membership => f.write_str("membership"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{sector} amplitudes are not normalized (sum of squares = {sum})")]
    Normalization { sector: Sector, sum: f64 },

    #[error("{what} = {value} lies outside [{min}, {max}]")]
    Range {
        what: String,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("arity mismatch: expected {expected} qubit(s), found {found}")]
    Arity { expected: usize, found: usize },

    #[error("gate {0} has complex entries and cannot act on membership amplitudes")]
    Realness(String),

    #[error("unknown gate name {0:?}")]
    UnknownGate(String),

    #[error("{0} block is not unitary")]
    NotUnitary(Sector),

    #[error("operator mixes the quantum and membership blocks")]
    NotBlockDiagonal,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn range(what: impl Into<String>, value: f64, min: f64, max: f64) -> Self {
        Error::Range {
            what: what.into(),
            value,
            min,
            max,
        }
    }
}
