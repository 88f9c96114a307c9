//! The recurrent linear system `X(k+1) = A ⊗ X(k)`.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::semiring::{MaxPlus, Semiring};

/// A recurrence `X(k+1) = A ⊗ X(k)`: a square transition matrix, an initial
/// column state and a horizon.
///
/// In the discrete-event reading, `X(k)` holds the k-th firing epochs of the
/// system's events and the transition matrix holds the delays between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceProblem<S: Semiring = MaxPlus> {
    transition: Matrix<S>,
    initial: Matrix<S>,
    horizon: u64,
}

impl<S: Semiring> RecurrenceProblem<S> {
    /// Validates that `transition` is square and `initial` is a conformable
    /// column vector.
    pub fn new(transition: Matrix<S>, initial: Matrix<S>, horizon: u64) -> Result<Self, Error> {
        if !transition.is_square() {
            return Err(Error::NotSquare {
                rows: transition.rows(),
                cols: transition.cols(),
            });
        }
        if initial.shape() != (transition.rows(), 1) {
            return Err(Error::DimensionMismatch {
                expected: (transition.rows(), 1),
                got: initial.shape(),
            });
        }
        Ok(Self {
            transition,
            initial,
            horizon,
        })
    }

    pub fn transition(&self) -> &Matrix<S> {
        &self.transition
    }

    pub fn initial(&self) -> &Matrix<S> {
        &self.initial
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// The terminal state `X(k)`, computed as `A^(k) ⊗ X(0)`.
    ///
    /// One matrix power plus one product: O(n³ log k) instead of the O(k·n²)
    /// iteration, with the same result by associativity.
    pub fn evolve(&self) -> Result<Matrix<S>, Error> {
        self.transition.pow(self.horizon)?.mul(&self.initial)
    }

    /// Every state `[X(0), X(1), …, X(k)]`, by iterated products.
    ///
    /// The last element equals [`RecurrenceProblem::evolve`].
    pub fn trajectory(&self) -> Result<Vec<Matrix<S>>, Error> {
        let mut states = Vec::with_capacity((self.horizon as usize).saturating_add(1));
        states.push(self.initial.clone());
        for _ in 0..self.horizon {
            let next = self.transition.mul(states.last().expect("non-empty"))?;
            states.push(next);
        }
        Ok(states)
    }
}
