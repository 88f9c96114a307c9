//! Element arithmetic of the max-plus and min-plus semirings.
//!
//! The carrier is [`TropicalValue`]: either the absorbing zero ε or a finite
//! 64-bit integer. In the max-plus semiring ε plays −∞, addition is `max` and
//! multiplication is ordinary `+`; in the min-plus semiring ε plays +∞ and
//! addition is `min`. Both share the multiplicative identity 0.
//!
//! ε is a tagged variant rather than a sentinel integer, so no guard is ever
//! needed before arithmetic and no finite bit pattern can be mistaken for it.

use std::fmt;

use crate::error::Error;

/// A tropical scalar: the semiring zero ε or a finite integer.
///
/// `Epsilon` is declared first so the derived ordering places ε below every
/// finite value; finite values compare as ordinary integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropicalValue {
    /// The semiring zero: identity for ⊕ and absorbing for ⊗.
    Epsilon,
    /// An exact finite value.
    Finite(i64),
}

impl TropicalValue {
    /// The semiring zero ε.
    pub const fn epsilon() -> Self {
        TropicalValue::Epsilon
    }

    /// The multiplicative identity: the number 0.
    pub const fn one() -> Self {
        TropicalValue::Finite(0)
    }

    pub const fn is_epsilon(self) -> bool {
        matches!(self, TropicalValue::Epsilon)
    }

    /// The finite part, if any.
    pub const fn finite(self) -> Option<i64> {
        match self {
            TropicalValue::Epsilon => None,
            TropicalValue::Finite(value) => Some(value),
        }
    }

    /// Max-plus addition: the larger operand, with ε as identity.
    pub fn oplus(self, rhs: Self) -> Self {
        match (self, rhs) {
            (TropicalValue::Epsilon, other) | (other, TropicalValue::Epsilon) => other,
            (TropicalValue::Finite(a), TropicalValue::Finite(b)) => TropicalValue::Finite(a.max(b)),
        }
    }

    /// Tropical multiplication: exact integer sum, with ε absorbing.
    ///
    /// A sum that leaves the 64-bit range is reported as [`Error::Overflow`];
    /// it never wraps or saturates.
    pub fn otimes(self, rhs: Self) -> Result<Self, Error> {
        match (self, rhs) {
            (TropicalValue::Epsilon, _) | (_, TropicalValue::Epsilon) => Ok(TropicalValue::Epsilon),
            (TropicalValue::Finite(a), TropicalValue::Finite(b)) => a
                .checked_add(b)
                .map(TropicalValue::Finite)
                .ok_or(Error::Overflow),
        }
    }
}

impl From<i64> for TropicalValue {
    fn from(value: i64) -> Self {
        TropicalValue::Finite(value)
    }
}

/// Operation table of an idempotent semiring over [`TropicalValue`].
///
/// Implementors are zero-sized markers selecting how ⊕ and ⊗ behave; the
/// matrix operations are generic over this choice. Required laws: ⊕ is
/// associative, commutative and idempotent with identity [`zero`]; ⊗ is
/// associative with identity [`one`] and distributes over ⊕; [`zero`]
/// absorbs under ⊗.
///
/// [`zero`]: Semiring::zero
/// [`one`]: Semiring::one
pub trait Semiring: Copy + Eq + fmt::Debug + Send + Sync {
    fn zero() -> TropicalValue;
    fn one() -> TropicalValue;
    fn plus(a: TropicalValue, b: TropicalValue) -> TropicalValue;
    fn times(a: TropicalValue, b: TropicalValue) -> Result<TropicalValue, Error>;
}

/// The max-plus semiring: ⊕ = max, ⊗ = +, ε = −∞, identity 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MaxPlus;

impl Semiring for MaxPlus {
    fn zero() -> TropicalValue {
        TropicalValue::Epsilon
    }

    fn one() -> TropicalValue {
        TropicalValue::one()
    }

    fn plus(a: TropicalValue, b: TropicalValue) -> TropicalValue {
        a.oplus(b)
    }

    fn times(a: TropicalValue, b: TropicalValue) -> Result<TropicalValue, Error> {
        a.otimes(b)
    }
}

/// The min-plus semiring: ⊕ = min, ⊗ = +, ε = +∞, identity 0.
///
/// ε is still [`TropicalValue::Epsilon`]; here it denotes +∞, so it loses
/// every `min` and absorbs every product, exactly dual to [`MaxPlus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MinPlus;

impl Semiring for MinPlus {
    fn zero() -> TropicalValue {
        TropicalValue::Epsilon
    }

    fn one() -> TropicalValue {
        TropicalValue::one()
    }

    fn plus(a: TropicalValue, b: TropicalValue) -> TropicalValue {
        match (a, b) {
            (TropicalValue::Epsilon, other) | (other, TropicalValue::Epsilon) => other,
            (TropicalValue::Finite(x), TropicalValue::Finite(y)) => TropicalValue::Finite(x.min(y)),
        }
    }

    fn times(a: TropicalValue, b: TropicalValue) -> Result<TropicalValue, Error> {
        a.otimes(b)
    }
}

#[cfg(test)]
mod tests {
    use super::TropicalValue::{Epsilon, Finite};
    use super::*;

    #[test]
    fn oplus_takes_the_maximum() {
        assert_eq!(Finite(3).oplus(Finite(9)), Finite(9));
        assert_eq!(Finite(9).oplus(Finite(3)), Finite(9));
    }

    #[test]
    fn epsilon_is_the_additive_identity() {
        assert_eq!(Epsilon.oplus(Finite(5)), Finite(5));
        assert_eq!(Finite(5).oplus(Epsilon), Finite(5));
        assert_eq!(Epsilon.oplus(Epsilon), Epsilon);
    }

    #[test]
    fn oplus_is_idempotent() {
        assert_eq!(Finite(-7).oplus(Finite(-7)), Finite(-7));
    }

    #[test]
    fn otimes_adds_finite_parts() {
        assert_eq!(Finite(2).otimes(Finite(5)), Ok(Finite(7)));
        assert_eq!(Finite(-4).otimes(Finite(4)), Ok(Finite(0)));
    }

    #[test]
    fn epsilon_absorbs_products() {
        assert_eq!(Epsilon.otimes(Finite(42)), Ok(Epsilon));
        assert_eq!(Finite(42).otimes(Epsilon), Ok(Epsilon));
        assert_eq!(Epsilon.otimes(Epsilon), Ok(Epsilon));
    }

    #[test]
    fn one_is_the_multiplicative_identity() {
        assert_eq!(TropicalValue::one().otimes(Finite(11)), Ok(Finite(11)));
        assert_eq!(Finite(11).otimes(TropicalValue::one()), Ok(Finite(11)));
    }

    #[test]
    fn otimes_reports_overflow() {
        assert_eq!(Finite(i64::MAX).otimes(Finite(1)), Err(Error::Overflow));
        assert_eq!(Finite(i64::MIN).otimes(Finite(-1)), Err(Error::Overflow));
        // The extremes are still fine when the sum fits.
        assert_eq!(Finite(i64::MAX).otimes(Finite(0)), Ok(Finite(i64::MAX)));
    }

    #[test]
    fn epsilon_sorts_below_every_finite_value() {
        assert!(Epsilon < Finite(i64::MIN));
        assert!(Finite(-1) < Finite(0));
        assert_eq!(Finite(3).max(Epsilon), Finite(3));
    }

    #[test]
    fn min_plus_takes_the_minimum() {
        assert_eq!(MinPlus::plus(Finite(3), Finite(9)), Finite(3));
        assert_eq!(MinPlus::plus(Epsilon, Finite(1)), Finite(1));
        assert_eq!(MinPlus::times(Epsilon, Finite(1)), Ok(Epsilon));
        assert_eq!(MinPlus::times(Finite(2), Finite(5)), Ok(Finite(7)));
    }
}
