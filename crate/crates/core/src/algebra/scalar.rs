//! Mode-polymorphic scalars: exact [`FieldElement`] or `f64`.
//!
//! All linear algebra and the whole symmetry pipeline are generic over [`Scalar`], so a
//! computation is monomorphized entirely in one mode; mixing modes is a type error.

use core::fmt::{Debug, Display};
use core::ops::{Add, Mul, Neg, Sub};

use super::field::FieldElement;
use crate::EPS_REL;

#[cfg(not(feature = "std"))]
#[inline]
fn f64_abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[cfg(feature = "std")]
#[inline]
fn f64_abs(x: f64) -> f64 {
    x.abs()
}

#[cfg(not(feature = "std"))]
#[inline]
pub(crate) fn f64_sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[cfg(feature = "std")]
#[inline]
pub(crate) fn f64_sqrt(x: f64) -> f64 {
    x.sqrt()
}

/// Errors from scalar and matrix arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraError {
    DivisionByZero,
    /// A required square root does not exist inside ℚ(√2,√3).
    SqrtOutsideField,
    NegativeSqrt,
    Singular,
}

impl core::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
            AlgebraError::SqrtOutsideField => {
                write!(f, "square root does not lie in Q(sqrt2, sqrt3)")
            }
            AlgebraError::NegativeSqrt => write!(f, "square root of a negative value"),
            AlgebraError::Singular => write!(f, "matrix is singular"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AlgebraError {}

/// Scalar operations needed by the elimination, lattice and symmetry code.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True for exact arithmetic; selects exact zero tests over tolerance tests.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    /// Embed an exact constant (used to materialize catalog data in either mode).
    fn from_field(x: &FieldElement) -> Self;
    /// Embed a finite float (exact: every finite `f64` is a dyadic rational).
    fn from_f64(x: f64) -> Self;
    fn sqrt2() -> Self;

    fn is_zero(&self) -> bool;
    /// Rank-decision zero test: exact zero in exact mode, `|x| <= EPS_REL * scale` in
    /// numeric mode (`scale` is the max-abs entry of the row at elimination time).
    fn negligible(&self, scale: f64) -> bool;
    /// Approximate equality at the same relative tolerance (exact equality in exact mode).
    fn eq_approx(&self, other: &Self) -> bool;
    /// True when the value is (approximately, in numeric mode) an integer.
    fn is_integral(&self) -> bool;
    /// Exact positivity in exact mode, plain `> 0` in numeric mode.
    fn is_positive(&self) -> bool;

    fn abs_f64(&self) -> f64;
    fn to_f64(&self) -> f64;
    fn inv(&self) -> Result<Self, AlgebraError>;
    fn sqrt(&self) -> Result<Self, AlgebraError>;
}

impl Scalar for FieldElement {
    const EXACT: bool = true;

    fn zero() -> Self {
        FieldElement::zero()
    }

    fn one() -> Self {
        FieldElement::one()
    }

    fn from_int(n: i64) -> Self {
        FieldElement::from_int(n)
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        FieldElement::from_ratio(n, d)
    }

    fn from_field(x: &FieldElement) -> Self {
        x.clone()
    }

    fn from_f64(x: f64) -> Self {
        let r = crate::algebra::Rational::from_float(x)
            .expect("finite float converts to a rational exactly");
        FieldElement::from_rational(r)
    }

    fn sqrt2() -> Self {
        FieldElement::sqrt2()
    }

    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }

    fn negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn eq_approx(&self, other: &Self) -> bool {
        self == other
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    fn abs_f64(&self) -> f64 {
        f64_abs(self.to_f64())
    }

    fn to_f64(&self) -> f64 {
        FieldElement::to_f64(self)
    }

    fn inv(&self) -> Result<Self, AlgebraError> {
        FieldElement::inv(self)
    }

    fn sqrt(&self) -> Result<Self, AlgebraError> {
        if self.sign() < 0 {
            return Err(AlgebraError::NegativeSqrt);
        }
        FieldElement::sqrt(self).ok_or(AlgebraError::SqrtOutsideField)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "rational literal with zero denominator");
        n as f64 / d as f64
    }

    fn from_field(x: &FieldElement) -> Self {
        x.to_f64()
    }

    fn from_f64(x: f64) -> Self {
        x
    }

    fn sqrt2() -> Self {
        core::f64::consts::SQRT_2
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn negligible(&self, scale: f64) -> bool {
        f64_abs(*self) <= EPS_REL * scale
    }

    fn eq_approx(&self, other: &Self) -> bool {
        let scale = 1.0_f64.max(f64_abs(*self)).max(f64_abs(*other));
        f64_abs(self - other) <= EPS_REL * scale
    }

    fn is_integral(&self) -> bool {
        #[cfg(feature = "std")]
        let rounded = self.round();
        #[cfg(not(feature = "std"))]
        let rounded = libm::round(*self);
        f64_abs(self - rounded) <= EPS_REL * 1.0_f64.max(f64_abs(*self))
    }

    fn is_positive(&self) -> bool {
        *self > 0.0
    }

    fn abs_f64(&self) -> f64 {
        f64_abs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn inv(&self) -> Result<Self, AlgebraError> {
        if *self == 0.0 {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }

    fn sqrt(&self) -> Result<Self, AlgebraError> {
        if *self < 0.0 {
            Err(AlgebraError::NegativeSqrt)
        } else {
            Ok(f64_sqrt(*self))
        }
    }
}
