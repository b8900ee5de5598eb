//! Coordinate arithmetic in the two supported modes.
//!
//! Everything downstream is generic over [`Scalar`]: exact rationals
//! ([`Rational`]) for the solver and for formula identities with rational
//! inputs, and `f64` for irrational closed forms and the minimax search.

use core::cmp::Ordering;
use core::fmt::{Debug, Display};
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision rational, the exact coordinate mode.
pub type Rational = num_rational::BigRational;

/// Slack allowed when checking float coordinates against the unit interval.
pub const FLOAT_UNIT_TOL: f64 = 1e-12;

/// A coordinate value in `[0, 1]`, exact or floating.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// True when arithmetic is exact (no rounding anywhere).
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(value: i64) -> Self {
        Self::from_ratio(value, 1)
    }

    fn to_f64(&self) -> f64;

    /// Total order. Values are always finite, so this never panics for
    /// coordinates produced by this crate.
    fn cmp_total(&self, other: &Self) -> Ordering;

    /// Membership in `[0, 1]`, with mode-appropriate tolerance.
    fn in_unit_interval(&self) -> bool;

    fn pow_u(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    fn abs_val(self) -> Self {
        if self.cmp_total(&Self::zero()) == Ordering::Less {
            -self
        } else {
            self
        }
    }

    fn max_val(self, other: Self) -> Self {
        if self.cmp_total(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    fn min_val(self, other: Self) -> Self {
        if self.cmp_total(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Fall back to component-wise conversion for huge terms.
            self.numer().to_f64().unwrap_or(f64::MAX) / self.denom().to_f64().unwrap_or(f64::MAX)
        })
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        Ord::cmp(self, other)
    }

    fn in_unit_interval(&self) -> bool {
        *self >= Rational::zero() && *self <= Rational::one()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        f64::total_cmp(self, other)
    }

    fn in_unit_interval(&self) -> bool {
        self.is_finite() && *self >= -FLOAT_UNIT_TOL && *self <= 1.0 + FLOAT_UNIT_TOL
    }
}

/// Nearest rational to `value` with denominator at most `max_den`,
/// by continued-fraction convergents.
pub fn approximate_rational(value: f64, max_den: u64) -> Rational {
    assert!(value.is_finite());
    let negative = value < 0.0;
    let mut x = if negative { -value } else { value };

    // Convergents p/q of the continued fraction of x.
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::from(1), BigInt::from(0), BigInt::from(0), BigInt::from(1));
    let limit = BigInt::from(max_den);
    for _ in 0..64 {
        let a = num_traits::Float::floor(x);
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p0 + &p1;
        let q2 = &ai * &q0 + &q1;
        if q2 > limit {
            break;
        }
        p1 = core::mem::replace(&mut p0, p2);
        q1 = core::mem::replace(&mut q0, q2);
        let frac = x - a;
        if frac < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    let mut out = Rational::new(p0, q0);
    if negative {
        out = -out;
    }
    out
}
