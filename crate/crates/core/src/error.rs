use thiserror::Error;

use crate::tract::Tract;

/// Errors raised by the tract, matroid and flag operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tract mismatch: expected {expected}, found {found}")]
    TractMismatch { expected: Tract, found: Tract },
    #[error("ground set mismatch: {0} vs {1} elements")]
    GroundMismatch(usize, usize),
    #[error("{0} is not a finite tract")]
    InfiniteTract(Tract),
    #[error("{0} is not a perfect tract")]
    NotPerfect(Tract),
    #[error("finite field modulus {0} must be a prime at most 97")]
    BadModulus(u32),
    #[error("rank order violated: quotient of rank {quotient} over rank {over}")]
    RankOrder { quotient: usize, over: usize },
    #[error("bounds exceeded: {0}")]
    Bounds(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a Grassmann-Pluecker function: {0}")]
    NotGp(String),
}

pub type Result<T> = std::result::Result<T, Error>;
