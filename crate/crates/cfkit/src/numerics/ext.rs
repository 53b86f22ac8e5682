//! The extended complex plane (Riemann sphere).

use super::Scalar;
use crate::error::Error;
use std::fmt;

/// A point of the Riemann sphere: a finite scalar or the single point at
/// infinity. No signed or directional infinities, and no NaN-like poisoned
/// values: `0/0` is a domain error at the operation that produces it.
#[derive(Clone, PartialEq, Debug)]
pub enum ExtComplex<S> {
    Finite(S),
    Infinity,
}

impl<S> ExtComplex<S> {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtComplex::Finite(_))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }

    pub fn as_finite(&self) -> Option<&S> {
        match self {
            ExtComplex::Finite(v) => Some(v),
            ExtComplex::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<S> {
        match self {
            ExtComplex::Finite(v) => Some(v),
            ExtComplex::Infinity => None,
        }
    }
}

impl<S: Scalar> ExtComplex<S> {
    /// (re, im) as f64, or `None` for the infinity point.
    pub fn approx_parts(&self) -> Option<(f64, f64)> {
        self.as_finite().map(Scalar::approx_parts)
    }
}

/// Form `num/den` on the sphere: finite quotient when `den != 0`, the
/// infinity point when `den = 0, num != 0`, and a domain error for `0/0`
/// (a degenerate continued fraction, surfaced to callers).
pub fn ext_div<S: Scalar>(num: &S, den: &S) -> Result<ExtComplex<S>, Error> {
    if den.is_zero() {
        if num.is_zero() {
            Err(Error::IndeterminateForm)
        } else {
            Ok(ExtComplex::Infinity)
        }
    } else {
        Ok(ExtComplex::Finite(
            num.div(den).expect("nonzero denominator"),
        ))
    }
}

impl<S: fmt::Display> fmt::Display for ExtComplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtComplex::Finite(v) => write!(f, "{v}"),
            ExtComplex::Infinity => f.write_str("inf"),
        }
    }
}
