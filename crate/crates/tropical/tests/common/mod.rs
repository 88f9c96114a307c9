//! Shared test helpers: a brute-force product oracle and literal builders.
//!
//! The oracle works on plain `Option<i128>` grids and never calls into the
//! matrix kernels, so it stays an independent check of the product and of
//! everything built on it.

use tropical::{Matrix, Semiring, TropicalValue};

/// `None` is ε; finite parts are widened to `i128` so the oracle itself can
/// never overflow on 64-bit inputs.
pub type Cell = Option<i128>;

pub fn grid_of<S: Semiring>(matrix: &Matrix<S>) -> Vec<Vec<Cell>> {
    (0..matrix.rows())
        .map(|i| {
            matrix
                .row(i)
                .iter()
                .map(|value| value.finite().map(i128::from))
                .collect()
        })
        .collect()
}

/// Textbook triple loop: out(i, k) = max over j of lhs(i, j) + rhs(j, k).
pub fn grid_mul(lhs: &[Vec<Cell>], rhs: &[Vec<Cell>]) -> Vec<Vec<Cell>> {
    let inner = rhs.len();
    let width = rhs[0].len();
    lhs.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..width)
                .map(|k| {
                    let mut best: Cell = None;
                    for (j, &a) in row.iter().enumerate() {
                        let term = match (a, rhs[j][k]) {
                            (Some(x), Some(y)) => Some(x + y),
                            _ => None,
                        };
                        best = match (best, term) {
                            (None, t) => t,
                            (b, None) => b,
                            (Some(b), Some(t)) => Some(b.max(t)),
                        };
                    }
                    best
                })
                .collect()
        })
        .collect()
}

pub fn matches_grid<S: Semiring>(matrix: &Matrix<S>, grid: &[Vec<Cell>]) -> bool {
    grid_of(matrix) == grid
}

/// Builds a max-plus matrix from integer literals, with `E` standing for ε.
/// The sentinel exists only in this test shorthand, never in library values.
pub const E: i64 = i64::MIN;

pub fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        if v == E {
                            TropicalValue::Epsilon
                        } else {
                            TropicalValue::Finite(v)
                        }
                    })
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

pub fn col(values: &[i64]) -> Matrix {
    Matrix::from_rows(
        values
            .iter()
            .map(|&v| {
                vec![if v == E {
                    TropicalValue::Epsilon
                } else {
                    TropicalValue::Finite(v)
                }]
            })
            .collect(),
    )
    .unwrap()
}
