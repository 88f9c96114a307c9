use std::fmt;

/// Errors raised by tropical element and matrix operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes are incompatible with the requested operation.
    /// Carries the shape the operation required and the shape it received.
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A construction was given dimensions that do not describe a matrix
    /// (a zero extent, or an entry buffer of the wrong length).
    InvalidShape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    /// The exact sum inside a tropical product does not fit in a signed
    /// 64-bit integer. Results are never wrapped or saturated.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::DimensionMismatch { expected, got } => write!(
                f,
                "dimension mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::InvalidShape { rows, cols, len } => {
                write!(f, "{len} entries do not form a {rows}x{cols} matrix")
            }
            Error::Overflow => write!(f, "integer overflow in tropical product"),
        }
    }
}

impl std::error::Error for Error {}
