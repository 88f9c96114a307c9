//! Dense linear algebra over the max-plus (tropical) semiring.
//!
//! The carrier is the integers extended with an absorbing zero ε: addition is
//! `max` (with ε as identity) and multiplication is ordinary `+` (with ε
//! absorbing). On matrices this gives entrywise sums, a matrix product whose
//! inner reduction is a running maximum of sums, scalar products, matrix
//! powers, and the recurrent system `X(k+1) = A ⊗ X(k)` used to time
//! discrete-event networks.
//!
//! All arithmetic is exact: finite parts are `i64` and a product whose sum
//! leaves the 64-bit range is reported as an error rather than wrapped. The
//! matrix operations are generic over the semiring ([`MaxPlus`] by default,
//! [`MinPlus`] as the dual), and values parse from and print to a plain text
//! format where ε is written `E` (see [`io`]).
//!
//! ```
//! use tropical::{io, Matrix};
//!
//! let a: Matrix = "2 1 -1 4\nE 0 5 -3\n-4 -2 E 6\n".parse().unwrap();
//! let b: Matrix = "5 0 1\n7 4 E\n-5 9 2\n8 -6 1\n".parse().unwrap();
//! let product = a.mul(&b).unwrap();
//! assert_eq!(io::format_matrix(&product), "12 8 5\n7 14 7\n14 2 7\n");
//! ```
//!
//! With the `parallel` feature (enabled by default) large matrix products
//! run on a rayon pool; results are bit-identical to the sequential kernel.

pub mod error;
pub mod io;
pub mod matrix;
pub mod recurrence;
pub mod semiring;

pub use error::Error;
pub use matrix::Matrix;
pub use recurrence::RecurrenceProblem;
pub use semiring::{MaxPlus, MinPlus, Semiring, TropicalValue};
