//! Scalar backends and the extended complex plane.
//!
//! Two backends are provided and never mixed inside one computation:
//!
//! - [`ExactComplex`]: Gaussian rationals over arbitrary-precision integers.
//!   Arithmetic is exact; no rounding ever occurs.
//! - [`FloatComplex`]: complex numbers over arbitrary-precision binary
//!   floats. Every elementary operation rounds to nearest, ties to even, at
//!   the declared precision. Operands of unequal precision are rejected.
//!
//! [`ExtComplex`] adjoins the single point at infinity of the Riemann
//! sphere, and [`chordal_sq`] / [`FloatComplex::chordal_distance`] implement
//! the chordal metric making infinity an ordinary point.

mod dec;
mod exact;
mod ext;
mod float;

pub use exact::ExactComplex;
pub use ext::{ext_div, ExtComplex};
pub use float::{FloatComplex, FloatReal, Precision};

use crate::error::Error;
use num_bigint::BigInt;
use std::fmt::{Debug, Display};

/// Backend construction context: empty for the exact backend, a working
/// precision for the float backend.
pub trait Context: Copy + Eq + Debug + Send + Sync + 'static {
    /// Context for the escalated run of the dual-precision protocol
    /// (same context when exact, +64 bits when float).
    fn escalated(self) -> Self;

    /// True when values in this context carry no rounding error.
    fn is_exact(self) -> bool;
}

impl Context for () {
    fn escalated(self) -> Self {}
    fn is_exact(self) -> bool {
        true
    }
}

/// A nonnegative-capable real number type used for magnitudes, squared
/// metrics and tolerances of one backend.
pub trait RealField:
    Clone + PartialEq + PartialOrd + Debug + Display + Send + Sync + 'static
{
    type Ctx: Context;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn from_i64(ctx: Self::Ctx, v: i64) -> Self;
    /// Exact `num/den`; `den` must be nonzero.
    fn from_ratio(ctx: Self::Ctx, num: i64, den: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `None` iff `rhs` is zero.
    fn div(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Self;

    fn is_zero(&self) -> bool;
    /// Approximate value for evidence reporting; never used in decisions
    /// that the backend can make exactly.
    fn to_f64(&self) -> f64;
    /// Approximate log2 of the absolute value; `None` for zero.
    fn log2_approx(&self) -> Option<f64>;
}

/// A complex scalar of one backend.
///
/// All values are immutable; operations are pure functions returning new
/// values, so scalars are freely shared across threads.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    type Real: RealField<Ctx = Self::Ctx>;
    type Ctx: Context;

    /// True when arithmetic in this backend is exact.
    const EXACT: bool;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn from_i64(ctx: Self::Ctx, v: i64) -> Self;
    /// Exact `num/den` as a real scalar; `den` must be nonzero.
    fn from_ratio(ctx: Self::Ctx, num: i64, den: i64) -> Self;
    fn from_bigint(ctx: Self::Ctx, v: &BigInt) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `None` iff `rhs` is zero.
    fn div(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Self;

    fn is_zero(&self) -> bool;
    /// Squared absolute value |z|^2 as a backend real. The exact backend
    /// exposes absolute values only in squared form, |z| being irrational
    /// in general.
    fn abs_sq(&self) -> Self::Real;
    /// z^n by binary exponentiation (n >= 0; z^0 = 1).
    fn pow_u(&self, n: u64) -> Self {
        let mut result = Self::one(self.ctx());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
    /// Multiply by 2^e. Exact in both backends.
    fn scale_pow2(&self, e: i32) -> Self;
    /// For the float backend: `Some(e)` when the value's magnitude calls for
    /// rescaling the convergent window (binary exponent above p/2).
    /// Always `None` for the exact backend.
    fn rescale_exponent(&self) -> Option<i32>;
    /// (re, im) as f64 for evidence reports.
    fn approx_parts(&self) -> (f64, f64);
}

/// Squared chordal distance on the Riemann sphere, available on both
/// backends:
///
/// d^2(w, z)   = |z - w|^2 / ((1 + |w|^2)(1 + |z|^2)) for finite w, z,
/// d^2(w, inf) = 1 / (1 + |w|^2),
/// d^2(inf, inf) = 0.
///
/// Exactly the square of the chordal metric, hence monotone-compatible with
/// it, and rational whenever the inputs are exact.
pub fn chordal_sq<S: Scalar>(ctx: S::Ctx, w: &ExtComplex<S>, z: &ExtComplex<S>) -> S::Real {
    match (w, z) {
        (ExtComplex::Infinity, ExtComplex::Infinity) => S::Real::zero(ctx),
        (ExtComplex::Finite(w), ExtComplex::Infinity)
        | (ExtComplex::Infinity, ExtComplex::Finite(w)) => {
            let one = S::Real::one(w.ctx());
            let den = one.add(&w.abs_sq());
            one.div(&den).expect("1 + |w|^2 > 0")
        }
        (ExtComplex::Finite(w), ExtComplex::Finite(z)) => {
            let one = S::Real::one(w.ctx());
            let num = z.sub(w).abs_sq();
            let den = one.add(&w.abs_sq()).mul(&one.add(&z.abs_sq()));
            num.div(&den).expect("(1+|w|^2)(1+|z|^2) > 0")
        }
    }
}

/// Validate that two float contexts agree, for operations whose contract
/// rejects mixed precision.
pub fn require_same_ctx<C: Context + PrecisionBits>(a: C, b: C) -> Result<(), Error> {
    if a == b {
        Ok(())
    } else {
        Err(Error::PrecisionMismatch {
            left: a.bits(),
            right: b.bits(),
        })
    }
}

/// Exposes the precision in bits of a context (0 for the exact backend).
pub trait PrecisionBits {
    fn bits(&self) -> u32;
}

impl PrecisionBits for () {
    fn bits(&self) -> u32 {
        0
    }
}
