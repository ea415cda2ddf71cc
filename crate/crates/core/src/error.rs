//! Error taxonomy shared by every module.
//!
//! `Structural` covers malformed inputs (wrong sizes, bad labels, broken
//! invariants); `Guard` covers refusals of combinatorially explosive
//! requests; `Singularity` covers evaluation at points where a formula is
//! undefined; `DegenerateRefusal` covers operations whose contract requires
//! a non-degenerate configuration.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("{what}: requested {requested} exceeds supported bound {limit}")]
    Guard {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("singular configuration: {0}")]
    Singularity(String),

    #[error("degenerate configuration refused: {0}")]
    DegenerateRefusal(String),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn guard(what: &'static str, requested: usize, limit: usize) -> Self {
        Error::Guard {
            what,
            requested,
            limit,
        }
    }
}
