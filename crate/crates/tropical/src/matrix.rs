//! Dense matrices over a tropical semiring.
//!
//! Entries are stored row-major. All operations are pure: they borrow their
//! operands and return fresh matrices, so values can be shared freely across
//! threads. The semiring is a type parameter defaulting to [`MaxPlus`], which
//! is the algebra every command-line operation uses; `Matrix<MinPlus>`
//! gives the dual algebra with the same code.
//!
//! With the `parallel` feature (on by default) [`Matrix::mul`] distributes
//! output rows across a rayon pool once the work is large enough. The
//! per-entry reduction is the same left-to-right fold either way, so the
//! parallel product is bit-identical to the sequential one.

use std::fmt;
use std::marker::PhantomData;
use std::ops::Index;

use crate::error::Error;
use crate::semiring::{MaxPlus, Semiring, TropicalValue};

/// Scalar-op count (`rows · inner · cols`) above which [`Matrix::mul`]
/// switches to the rayon kernel. Below this the spawn overhead dominates.
#[cfg(feature = "parallel")]
const PARALLEL_MUL_THRESHOLD: usize = 32 * 32 * 32;

/// A dense matrix with [`TropicalValue`] entries, at least 1×1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<S: Semiring = MaxPlus> {
    rows: usize,
    cols: usize,
    entries: Vec<TropicalValue>,
    semiring: PhantomData<S>,
}

impl<S: Semiring> Matrix<S> {
    /// Builds a matrix from row-major entries.
    ///
    /// Fails with [`Error::InvalidShape`] when either extent is zero or the
    /// buffer length is not `rows · cols`.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<TropicalValue>,
    ) -> Result<Self, Error> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
            semiring: PhantomData,
        })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<TropicalValue>>) -> Result<Self, Error> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if height == 0 || width == 0 || rows.iter().any(|row| row.len() != width) {
            let len = rows.iter().map(Vec::len).sum();
            return Err(Error::InvalidShape {
                rows: height,
                cols: width,
                len,
            });
        }
        let entries = rows.into_iter().flatten().collect();
        Self::from_entries(height, width, entries)
    }

    /// Builds a matrix by evaluating `entry` at every (row, column) index.
    ///
    /// Panics if either extent is zero; use [`Matrix::from_entries`] when the
    /// shape is not known to be valid.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> TropicalValue,
    ) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix extents must be at least 1");
        let entries = (0..rows * cols)
            .map(|idx| entry(idx / cols, idx % cols))
            .collect();
        Self {
            rows,
            cols,
            entries,
            semiring: PhantomData,
        }
    }

    /// The all-ε matrix: the additive identity of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    /// The multiplicative identity: semiring one on the diagonal, ε elsewhere.
    pub fn identity(order: usize) -> Self {
        Self::from_fn(
            order,
            order,
            |i, j| if i == j { S::one() } else { S::zero() },
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(rows, cols)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at `(row, col)` (0-based). Panics when out of bounds.
    pub fn get(&self, row: usize, col: usize) -> TropicalValue {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds for {}x{} matrix",
            self.rows,
            self.cols
        );
        self.entries[row * self.cols + col]
    }

    /// Row `i` as a contiguous slice.
    pub fn row(&self, i: usize) -> &[TropicalValue] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// All entries in row-major order.
    pub fn entries(&self) -> &[TropicalValue] {
        &self.entries
    }

    /// Entrywise semiring sum. Shapes must match exactly.
    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                expected: self.shape(),
                got: rhs.shape(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| S::plus(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
            semiring: PhantomData,
        })
    }

    /// Multiplies every entry by the scalar `alpha` on the left.
    ///
    /// `alpha = ε` yields the all-ε matrix of the same shape.
    pub fn scale(&self, alpha: TropicalValue) -> Result<Self, Error> {
        let entries = self
            .entries
            .iter()
            .map(|&x| S::times(alpha, x))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
            semiring: PhantomData,
        })
    }

    /// Semiring matrix product: entry `(i, k)` is the ⊕-fold over `j` of
    /// `self(i, j) ⊗ rhs(j, k)`.
    ///
    /// Picks the rayon kernel for large inputs when the `parallel` feature is
    /// enabled; the result is identical to [`Matrix::mul_sequential`] in every
    /// case, including which error is reported.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        #[cfg(feature = "parallel")]
        if self.rows > 1 && self.rows * self.cols * rhs.cols >= PARALLEL_MUL_THRESHOLD {
            return self.mul_parallel(rhs);
        }
        self.mul_sequential(rhs)
    }

    /// [`Matrix::mul`] on the single-threaded kernel, regardless of features.
    pub fn mul_sequential(&self, rhs: &Self) -> Result<Self, Error> {
        self.require_inner_match(rhs)?;
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            Self::mul_row_into(self.row(i), rhs, &mut entries)?;
        }
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols,
            entries,
            semiring: PhantomData,
        })
    }

    /// [`Matrix::mul`] with output rows distributed across the rayon pool.
    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, rhs: &Self) -> Result<Self, Error> {
        use rayon::prelude::*;

        self.require_inner_match(rhs)?;
        let rows: Vec<Vec<TropicalValue>> = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut row = Vec::with_capacity(rhs.cols);
                Self::mul_row_into(self.row(i), rhs, &mut row)?;
                Ok(row)
            })
            .collect::<Result<_, Error>>()?;
        let entries = rows.into_iter().flatten().collect();
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols,
            entries,
            semiring: PhantomData,
        })
    }

    /// One output row of a product; shared by both kernels so the reduction
    /// order (left-to-right over the inner index) is fixed.
    fn mul_row_into(
        lhs_row: &[TropicalValue],
        rhs: &Self,
        out: &mut Vec<TropicalValue>,
    ) -> Result<(), Error> {
        for k in 0..rhs.cols {
            let mut acc = S::zero();
            for (j, &a) in lhs_row.iter().enumerate() {
                acc = S::plus(acc, S::times(a, rhs.entries[j * rhs.cols + k])?);
            }
            out.push(acc);
        }
        Ok(())
    }

    fn require_inner_match(&self, rhs: &Self) -> Result<(), Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, rhs.cols),
                got: rhs.shape(),
            });
        }
        Ok(())
    }

    /// `k`-fold product of a square matrix with itself, by binary
    /// exponentiation. `k = 0` is the identity, `k = 1` the matrix itself.
    ///
    /// Associativity makes this equal to the naive left-to-right product.
    pub fn pow(&self, k: u64) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut remaining = k;
        while remaining > 0 {
            if remaining & 1 == 1 {
                result = result.mul(&base)?;
            }
            remaining >>= 1;
            if remaining > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }
}

impl<S: Semiring> Index<(usize, usize)> for Matrix<S> {
    type Output = TropicalValue;

    fn index(&self, (row, col): (usize, usize)) -> &TropicalValue {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[row * self.cols + col]
    }
}

/// Renders the canonical text form; see [`crate::io`].
impl<S: Semiring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::format_matrix(self))
    }
}
