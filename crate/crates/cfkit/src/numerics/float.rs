//! Arbitrary-precision binary floating-point scalars.
//!
//! [`FloatReal`] and [`FloatComplex`] carry an explicit working precision in
//! bits. Every elementary operation rounds to nearest, ties to even, at that
//! precision, so results are reproducible across platforms. Mixing operands
//! of different precisions is a contract violation: binary operations panic
//! on mismatch, and the fallible entry points that the contracts name
//! (e.g. [`FloatComplex::chordal_distance`]) return an error instead.

use super::dec;
use super::{Context, PrecisionBits, RealField, Scalar};
use crate::error::Error;
use astro_float::{BigFloat, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use std::cmp::Ordering;
use std::fmt;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision in bits of the float backend.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Precision(pub u32);

impl Precision {
    pub fn bits(self) -> u32 {
        self.0
    }
}

impl Context for Precision {
    fn escalated(self) -> Self {
        Precision(self.0 + 64)
    }
    fn is_exact(self) -> bool {
        false
    }
}

impl PrecisionBits for Precision {
    fn bits(&self) -> u32 {
        self.0
    }
}

/// A real number at a fixed working precision.
#[derive(Clone, Debug)]
pub struct FloatReal {
    x: BigFloat,
    prec: u32,
}

impl FloatReal {
    fn wrap(x: BigFloat, prec: u32) -> Self {
        debug_assert!(!x.is_nan() && !x.is_inf(), "non-finite float produced");
        FloatReal { x, prec }
    }

    pub fn precision_bits(&self) -> u32 {
        self.prec
    }

    pub fn from_f64(v: f64, ctx: Precision) -> Self {
        assert!(v.is_finite());
        FloatReal::wrap(BigFloat::from_f64(v, ctx.0 as usize), ctx.0)
    }

    /// Correctly rounded value of `num/den`.
    pub fn from_big_ratio(num: &BigInt, den: &BigInt, ctx: Precision) -> Self {
        FloatReal::wrap(dec::rational_to_bigfloat(num, den, ctx.0), ctx.0)
    }

    pub fn from_rational(r: &num_rational::BigRational, ctx: Precision) -> Self {
        FloatReal::from_big_ratio(r.numer(), r.denom(), ctx)
    }

    /// Parse a decimal or rational literal, correctly rounded.
    pub fn parse(s: &str, ctx: Precision) -> Result<Self, Error> {
        let (num, den) = dec::parse_part_rational(s)?;
        Ok(FloatReal::from_big_ratio(
            &num,
            &BigInt::from(den),
            ctx,
        ))
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.prec, rhs.prec,
            "precision mismatch: {} vs {} bits",
            self.prec, rhs.prec
        );
    }

    pub fn sqrt(&self) -> Self {
        debug_assert!(!self.x.is_negative());
        FloatReal::wrap(self.x.sqrt(self.prec as usize, RM), self.prec)
    }

    pub fn abs(&self) -> Self {
        let mut y = self.x.clone();
        y.set_sign(Sign::Pos);
        FloatReal::wrap(y, self.prec)
    }

    /// Exact widening to a larger precision (for dual-precision
    /// comparisons).
    pub fn widened(&self, ctx: Precision) -> Self {
        assert!(ctx.0 >= self.prec);
        let mut y = self.x.clone();
        y.set_precision(ctx.0 as usize, RM).expect("widening is exact");
        FloatReal::wrap(y, ctx.0)
    }

    pub fn cmp_values(&self, rhs: &Self) -> Ordering {
        match self.x.cmp(&rhs.x).expect("finite values") {
            d if d < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Binary exponent of the value (None for zero): the value lies in
    /// [2^(e-1), 2^e).
    pub fn bin_exponent(&self) -> Option<i32> {
        if self.x.is_zero() {
            None
        } else {
            self.x.exponent()
        }
    }

    pub(crate) fn inner(&self) -> &BigFloat {
        &self.x
    }

    pub(crate) fn from_inner(x: BigFloat, prec: u32) -> Self {
        FloatReal::wrap(x, prec)
    }
}

impl PartialEq for FloatReal {
    fn eq(&self, other: &Self) -> bool {
        self.prec == other.prec && self.x.cmp(&other.x) == Some(0)
    }
}

impl PartialOrd for FloatReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.prec != other.prec {
            return None;
        }
        Some(self.cmp_values(other))
    }
}

impl RealField for FloatReal {
    type Ctx = Precision;

    fn ctx(&self) -> Precision {
        Precision(self.prec)
    }
    fn zero(ctx: Precision) -> Self {
        FloatReal::wrap(BigFloat::from_u64(0, ctx.0 as usize), ctx.0)
    }
    fn one(ctx: Precision) -> Self {
        FloatReal::wrap(BigFloat::from_u64(1, ctx.0 as usize), ctx.0)
    }
    fn from_i64(ctx: Precision, v: i64) -> Self {
        FloatReal::wrap(BigFloat::from_i64(v, ctx.0 as usize), ctx.0)
    }
    fn from_ratio(ctx: Precision, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        FloatReal::from_big_ratio(&BigInt::from(num), &BigInt::from(den), ctx)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FloatReal::wrap(self.x.add(&rhs.x, self.prec as usize, RM), self.prec)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FloatReal::wrap(self.x.sub(&rhs.x, self.prec as usize, RM), self.prec)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FloatReal::wrap(self.x.mul(&rhs.x, self.prec as usize, RM), self.prec)
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        self.check(rhs);
        if rhs.x.is_zero() {
            return None;
        }
        Some(FloatReal::wrap(
            self.x.div(&rhs.x, self.prec as usize, RM),
            self.prec,
        ))
    }
    fn neg(&self) -> Self {
        FloatReal::wrap(self.x.neg(), self.prec)
    }

    fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    fn to_f64(&self) -> f64 {
        use num_traits::Zero;
        let (neg, m, e) = dec::bigfloat_to_mantissa_exp(&self.x);
        if m.is_zero() {
            return 0.0;
        }
        let bits = m.bits();
        let top: u64 = if bits <= 53 {
            let ds = m.to_u64_digits();
            ds[0]
        } else {
            let ds = (&m >> (bits - 53)).to_u64_digits();
            ds[0]
        };
        let shift = e + bits.max(53) as i64 - 53;
        let v = top as f64 * 2f64.powi(shift.clamp(i32::MIN as i64, i32::MAX as i64) as i32);
        if neg {
            -v
        } else {
            v
        }
    }

    fn log2_approx(&self) -> Option<f64> {
        let e = self.bin_exponent()?;
        // Refine with the top mantissa bits.
        let (_, m, _) = dec::bigfloat_to_mantissa_exp(&self.x);
        let bits = m.bits();
        let top = if bits <= 53 {
            m.to_u64_digits()[0] as f64 * 2f64.powi(-(bits as i32))
        } else {
            (&m >> (bits - 53)).to_u64_digits()[0] as f64 * 2f64.powi(-53)
        };
        Some(e as f64 + top.log2())
    }
}

impl fmt::Display for FloatReal {
    /// Shortest decimal string that round-trips at the declared precision.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&dec::shortest_roundtrip_decimal(&self.x, self.prec))
    }
}

/// A complex number over [`FloatReal`]; both parts carry the same working
/// precision.
#[derive(Clone, PartialEq, Debug)]
pub struct FloatComplex {
    re: FloatReal,
    im: FloatReal,
}

impl FloatComplex {
    pub fn new(re: FloatReal, im: FloatReal) -> Result<Self, Error> {
        if re.prec != im.prec {
            return Err(Error::PrecisionMismatch {
                left: re.prec,
                right: im.prec,
            });
        }
        Ok(FloatComplex { re, im })
    }

    pub fn from_real(re: FloatReal) -> Self {
        let im = FloatReal::zero(re.ctx());
        FloatComplex { re, im }
    }

    pub fn re(&self) -> &FloatReal {
        &self.re
    }

    pub fn im(&self) -> &FloatReal {
        &self.im
    }

    pub fn precision_bits(&self) -> u32 {
        self.re.prec
    }

    pub fn conj(&self) -> Self {
        FloatComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Exact widening of both parts (dual-precision comparisons).
    pub fn widened(&self, ctx: Precision) -> Self {
        FloatComplex {
            re: self.re.widened(ctx),
            im: self.im.widened(ctx),
        }
    }

    /// |z| via sqrt(re^2 + im^2), each step correctly rounded.
    pub fn abs(&self) -> FloatReal {
        self.abs_sq().sqrt()
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.re.prec, rhs.re.prec,
            "precision mismatch: {} vs {} bits",
            self.re.prec, rhs.re.prec
        );
    }

    /// Chordal distance on the Riemann sphere (the paper's two-case
    /// formula; non-squared metric, float backend only):
    /// d(w, z) = |z - w| / (sqrt(1+|w|^2) sqrt(1+|z|^2)), d(w, inf) =
    /// 1/sqrt(1+|w|^2). Symmetric, zero on the diagonal, bounded by 1.
    ///
    /// Errors on operands of unequal precision.
    pub fn chordal_distance(
        ctx: Precision,
        w: &super::ExtComplex<FloatComplex>,
        z: &super::ExtComplex<FloatComplex>,
    ) -> Result<FloatReal, Error> {
        use super::ExtComplex::*;
        let one = FloatReal::one(ctx);
        let prec_of = |v: &FloatComplex| v.re.prec;
        match (w, z) {
            (Infinity, Infinity) => Ok(FloatReal::zero(ctx)),
            (Finite(w), Infinity) | (Infinity, Finite(w)) => {
                if prec_of(w) != ctx.0 {
                    return Err(Error::PrecisionMismatch {
                        left: prec_of(w),
                        right: ctx.0,
                    });
                }
                let den = one.add(&w.abs_sq()).sqrt();
                Ok(one.div(&den).expect("positive denominator"))
            }
            (Finite(w), Finite(z)) => {
                if prec_of(w) != prec_of(z) || prec_of(w) != ctx.0 {
                    return Err(Error::PrecisionMismatch {
                        left: prec_of(w),
                        right: prec_of(z),
                    });
                }
                let num = z.sub(w).abs();
                let dw = one.add(&w.abs_sq()).sqrt();
                let dz = one.add(&z.abs_sq()).sqrt();
                Ok(num
                    .div(&dw)
                    .and_then(|t| t.div(&dz))
                    .expect("positive denominators"))
            }
        }
    }

    pub fn parse(s: &str, ctx: Precision) -> Result<Self, Error> {
        let (re, im) = dec::split_complex_literal(s)?;
        let re = match re {
            Some(t) => FloatReal::parse(&t, ctx)?,
            None => FloatReal::zero(ctx),
        };
        let im = match im {
            Some(t) => FloatReal::parse(&t, ctx)?,
            None => FloatReal::zero(ctx),
        };
        Ok(FloatComplex { re, im })
    }
}

impl Scalar for FloatComplex {
    type Real = FloatReal;
    type Ctx = Precision;

    const EXACT: bool = false;

    fn ctx(&self) -> Precision {
        Precision(self.re.prec)
    }
    fn zero(ctx: Precision) -> Self {
        FloatComplex {
            re: FloatReal::zero(ctx),
            im: FloatReal::zero(ctx),
        }
    }
    fn one(ctx: Precision) -> Self {
        FloatComplex {
            re: FloatReal::one(ctx),
            im: FloatReal::zero(ctx),
        }
    }
    fn from_i64(ctx: Precision, v: i64) -> Self {
        FloatComplex::from_real(FloatReal::from_i64(ctx, v))
    }
    fn from_ratio(ctx: Precision, num: i64, den: i64) -> Self {
        FloatComplex::from_real(FloatReal::from_ratio(ctx, num, den))
    }
    fn from_bigint(ctx: Precision, v: &BigInt) -> Self {
        FloatComplex::from_real(FloatReal::from_big_ratio(
            v,
            &BigInt::from(1),
            ctx,
        ))
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FloatComplex {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FloatComplex {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FloatComplex {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        self.check(rhs);
        if rhs.is_zero() {
            return None;
        }
        let den = rhs.abs_sq();
        let num = self.mul(&rhs.conj());
        Some(FloatComplex {
            re: num.re.div(&den).expect("nonzero |rhs|^2"),
            im: num.im.div(&den).expect("nonzero |rhs|^2"),
        })
    }
    fn neg(&self) -> Self {
        FloatComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn abs_sq(&self) -> FloatReal {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    fn scale_pow2(&self, e: i32) -> Self {
        let scale = |v: &FloatReal| {
            if v.is_zero() {
                return v.clone();
            }
            let mut y = v.x.clone();
            let e0 = y.exponent().expect("finite");
            y.set_exponent(e0.checked_add(e).expect("exponent in range"));
            FloatReal::wrap(y, v.prec)
        };
        FloatComplex {
            re: scale(&self.re),
            im: scale(&self.im),
        }
    }

    fn rescale_exponent(&self) -> Option<i32> {
        let threshold = (self.re.prec / 2) as i32;
        let e = self
            .re
            .bin_exponent()
            .into_iter()
            .chain(self.im.bin_exponent())
            .max()?;
        if e > threshold {
            Some(e)
        } else {
            None
        }
    }

    fn approx_parts(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for FloatComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.x.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.neg())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
