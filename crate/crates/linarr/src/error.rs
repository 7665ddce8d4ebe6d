//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input file (or inline text) could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A coefficient triple does not define a projective line.
    #[error("lines[{index}] is the zero triple and does not define a line")]
    ZeroLine { index: usize },

    /// A coefficient string in an arrangement file is malformed.
    #[error("lines[{index}][{axis}]: {message}")]
    InvalidCoefficient {
        index: usize,
        axis: usize,
        message: String,
    },

    /// Two entries of an arrangement are the same projective line.
    #[error("lines[{second}] duplicates lines[{first}]: identical projective lines")]
    DuplicateLine { first: usize, second: usize },

    /// Intersection of a line with itself was requested.
    #[error("cannot intersect a projective line with itself")]
    IdenticalLines,

    /// Vector lengths disagree in a linear-algebra operation.
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A line index does not exist in the arrangement.
    #[error("line index {index} out of range for an arrangement of {len} lines")]
    IndexOutOfRange { index: usize, len: usize },

    /// Random generation could not produce enough distinct lines.
    #[error("could not generate {d} distinct lines with coefficients in [-{bound}, {bound}]")]
    CannotGenerate { d: usize, bound: i64 },

    /// A stated operation precondition was violated by the caller.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Syzygy generators may exist beyond the search cap.
    #[error("syzygy generator search truncated at degree {r_max}; raise r_max")]
    Truncated { r_max: usize },

    /// The Milnor algebra dimensions did not agree at the probe degrees.
    #[error("Milnor algebra dimensions {values:?} at degrees {degrees:?} did not stabilize")]
    NonStabilized {
        degrees: [usize; 3],
        values: [usize; 3],
    },

    /// Two routes that must agree disagreed; this signals a bug, not bad input.
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),

    /// Profile enumeration was requested above the supported cap.
    #[error("enumeration cap exceeded: d = {d} is above the cap {cap}")]
    CapExceeded { d: usize, cap: usize },

    /// An invalid d range was supplied.
    #[error("invalid range: d_min = {d_min} exceeds d_max = {d_max}")]
    InvalidRange { d_min: usize, d_max: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
