//! Exact Gaussian-rational scalars.

use super::{RealField, Scalar};
use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

impl RealField for BigRational {
    type Ctx = ();

    fn ctx(&self) -> Self::Ctx {}
    fn zero(_: ()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: ()) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(_: (), v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(_: (), num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Magnitude outside f64 range: fall back through the log.
            match self.log2_approx() {
                Some(l) if l > 0.0 => {
                    if self.is_negative() {
                        f64::NEG_INFINITY
                    } else {
                        f64::INFINITY
                    }
                }
                _ => 0.0,
            }
        })
    }

    fn log2_approx(&self) -> Option<f64> {
        if Zero::is_zero(self) {
            return None;
        }
        Some(bigint_log2(self.numer()) - bigint_log2(self.denom()))
    }
}

fn bigint_log2(v: &BigInt) -> f64 {
    let mag = v.magnitude();
    let bits = mag.bits();
    if bits <= 53 {
        return mag.to_f64().unwrap_or(1.0).log2();
    }
    // log2(m) = (bits - 53) + log2(top 53 bits)
    let top = (mag >> (bits - 53)).to_f64().unwrap_or(1.0);
    (bits - 53) as f64 + top.log2()
}

/// A Gaussian rational: exact complex number with arbitrary-precision
/// rational real and imaginary parts. Denominators are kept canonically
/// reduced (gcd 1, positive denominator) by the underlying rational type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactComplex {
    re: BigRational,
    im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactComplex { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        ExactComplex {
            re,
            im: Zero::zero(),
        }
    }

    /// Exact rational point `(rn/rd) + (in_/id) i`.
    pub fn from_ratios(rn: i64, rd: i64, in_: i64, id: i64) -> Self {
        ExactComplex {
            re: <BigRational as RealField>::from_ratio((), rn, rd),
            im: <BigRational as RealField>::from_ratio((), in_, id),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn conj(&self) -> Self {
        ExactComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Parse a complex literal (`3/2-1/4i`, `2`, `0.25i`); decimal parts are
    /// converted to exact rationals.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let (re, im) = super::dec::split_complex_literal(s)?;
        let part = |t: Option<String>| -> Result<BigRational, Error> {
            match t {
                Some(t) => {
                    let (num, den) = super::dec::parse_part_rational(&t)?;
                    Ok(BigRational::new(num, BigInt::from(den)))
                }
                None => Ok(Zero::zero()),
            }
        };
        Ok(ExactComplex {
            re: part(re)?,
            im: part(im)?,
        })
    }
}

impl Scalar for ExactComplex {
    type Real = BigRational;
    type Ctx = ();

    const EXACT: bool = true;

    fn ctx(&self) -> Self::Ctx {}
    fn zero(_: ()) -> Self {
        ExactComplex {
            re: Zero::zero(),
            im: Zero::zero(),
        }
    }
    fn one(_: ()) -> Self {
        ExactComplex {
            re: One::one(),
            im: Zero::zero(),
        }
    }
    fn from_i64(_: (), v: i64) -> Self {
        ExactComplex::from_real(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_ratio(_: (), num: i64, den: i64) -> Self {
        ExactComplex::from_real(<BigRational as RealField>::from_ratio((), num, den))
    }
    fn from_bigint(_: (), v: &BigInt) -> Self {
        ExactComplex::from_real(BigRational::from_integer(v.clone()))
    }

    fn add(&self, rhs: &Self) -> Self {
        ExactComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        ExactComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        ExactComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let den = rhs.abs_sq();
        let num = self.mul(&rhs.conj());
        Some(ExactComplex {
            re: num.re / &den,
            im: num.im / &den,
        })
    }
    fn neg(&self) -> Self {
        ExactComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }

    fn abs_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    fn scale_pow2(&self, e: i32) -> Self {
        let factor = if e >= 0 {
            BigRational::from_integer(BigInt::one() << e as usize)
        } else {
            BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
        };
        ExactComplex {
            re: &self.re * &factor,
            im: &self.im * &factor,
        }
    }

    fn rescale_exponent(&self) -> Option<i32> {
        None
    }

    fn approx_parts(&self) -> (f64, f64) {
        (
            RealField::to_f64(&self.re),
            RealField::to_f64(&self.im),
        )
    }
}

impl fmt::Display for ExactComplex {
    /// Wire format: rationals in lowest terms, `a`, `bi` or `a+bi`
    /// (`3/2-1/4i`, `2`, `-5i`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re_zero = Zero::is_zero(&self.re);
        let im_zero = Zero::is_zero(&self.im);
        if im_zero {
            return write!(f, "{}", self.re);
        }
        if re_zero {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
