//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid exponent p = {0}; p must satisfy p >= 1")]
    InvalidExponent(f64),

    #[error("element is not positive: min eigenvalue {0:.3e}")]
    NotPositive(f64),

    #[error("element is not a state: trace = {0}")]
    NotAState(String),

    #[error("element is not hermitian: ||x - x*|| = {0:.3e}")]
    NotHermitian(f64),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("modulus-one set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("invalid quantum group data: {0}")]
    InvalidQuantumGroup(String),

    #[error("element is not a channel density: {0}")]
    NotChannelDensity(String),

    #[error("channel is not completely positive")]
    NotCompletelyPositive,

    #[error("channel is not trace preserving")]
    NotTracePreserving,

    #[error("channel is not a Markov map: {0}")]
    NotMarkov(String),

    #[error("trace weights are not rationally commensurate: ratio {0} has no small rational approximation")]
    IncommensurateWeights(f64),

    #[error("subalgebra basis is not closed under {0}")]
    NotASubalgebra(String),

    #[error("representation is not irreducible: commutant dimension {0}")]
    NotIrreducible(usize),

    #[error("stochastic matrix is invalid: {0}")]
    NotStochastic(String),

    #[error("dimension cap exceeded: ambient dimension {0} > {1}")]
    DimensionCap(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown builtin: {0}")]
    UnknownBuiltin(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
