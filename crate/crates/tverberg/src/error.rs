//! Error type shared across the crate.

use std::fmt;

/// Errors produced by the geometry kernel and the partition algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A point, flat or certificate does not match the expected dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// Gaussian elimination could not certify a null vector within tolerance.
    NumericallySingular,
    /// Requested selection rank outside `1..=len`.
    RankOutOfRange { rank: usize, len: usize },
    /// An operation that needs at least one point received none.
    EmptyInput,
    /// A witness violates its invariants (support, sign or sum).
    InvalidWitness(String),
    /// A flat's basis is not orthonormal or has inconsistent dimensions.
    InvalidFlat(String),
    /// Parameters outside their documented range.
    ParamsOutOfRange(String),
    /// A combine step referenced a center that is not an inner certificate's.
    CenterMismatch,
    /// Instance larger than the brute-force enumeration cap.
    CapExceeded { n: usize, cap: usize },
    /// No partition of the requested size has intersecting hulls.
    Infeasible,
    /// Input data contained NaN or infinite coordinates.
    NonFinite,
    /// Malformed points file or certificate file.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NumericallySingular => {
                write!(f, "elimination could not certify a null vector within tolerance")
            }
            Error::RankOutOfRange { rank, len } => {
                write!(f, "rank {rank} out of range for {len} values")
            }
            Error::EmptyInput => write!(f, "empty input"),
            Error::InvalidWitness(msg) => write!(f, "invalid witness: {msg}"),
            Error::InvalidFlat(msg) => write!(f, "invalid flat: {msg}"),
            Error::ParamsOutOfRange(msg) => write!(f, "parameters out of range: {msg}"),
            Error::CenterMismatch => {
                write!(f, "outer certificate references a point that is not an inner center")
            }
            Error::CapExceeded { n, cap } => {
                write!(f, "instance size {n} exceeds brute-force cap {cap}")
            }
            Error::Infeasible => write!(f, "no feasible partition"),
            Error::NonFinite => write!(f, "non-finite coordinate"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
