//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Text input could not be parsed; `position` is a byte offset.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Arithmetic mixing operator-ring and dual-ring polynomials.
    #[error("cannot combine polynomials from the operator and dual alphabets")]
    MixedAlphabets,

    /// An argument has the wrong length or shape.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A square matrix was required.
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    /// A graded degree lies outside the range supported by the algebra.
    #[error("degree {degree} out of range (socle degree {socle})")]
    DegreeOutOfRange { degree: usize, socle: usize },

    /// A Hessian order outside `1..=s/2`.
    #[error("Hessian order {order} out of range (socle degree {socle})")]
    OrderOutOfRange { order: usize, socle: usize },

    /// A zero polynomial or linear form where a nonzero one is required.
    #[error("a nonzero form is required")]
    ZeroForm,

    /// The degree-`socle` inverse system of the given ideal is not a line.
    #[error(
        "ideal does not determine a Gorenstein socle in degree {socle}: \
         its inverse system there has dimension {kernel_dim}, expected 1"
    )]
    NotGorensteinSocle { socle: usize, kernel_dim: usize },

    /// A Betti table whose alternating Hilbert series does not terminate
    /// in a nonnegative polynomial.
    #[error("Betti table is inconsistent: {0}")]
    InconsistentTable(String),

    /// Any other invalid argument.
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
