//! Exact conversions between big rationals, binary floats and decimal
//! strings.
//!
//! Binary-to-decimal goes through exact integer arithmetic (a binary float
//! always has a finite decimal expansion), and decimal/rational-to-binary is
//! correctly rounded to nearest, ties to even. The float serializer emits
//! the shortest decimal string that parses back to the identical value at
//! the declared precision.

use crate::error::Error;
use astro_float::{BigFloat, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Exact value of a nonzero unsigned integer as a `BigFloat`.
fn biguint_to_bigfloat_exact(m: &BigUint) -> BigFloat {
    debug_assert!(!m.is_zero());
    let words = m.to_u64_digits();
    let e = (words.len() as i64 * 64)
        .try_into()
        .expect("exponent fits i32");
    BigFloat::from_words(&words, Sign::Pos, e)
}

/// Correctly rounded (nearest, ties to even) conversion of `num/den` to a
/// `p`-bit binary float. `den` must be nonzero.
pub fn rational_to_bigfloat(num: &BigInt, den: &BigInt, p: u32) -> BigFloat {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return BigFloat::from_u64(0, p as usize);
    }
    let negative = num.is_negative() != den.is_negative();
    let mut n = num.magnitude().clone();
    let mut d = den.magnitude().clone();

    // Scale so the integer quotient carries p + 2 significant bits.
    let shift = p as i64 + 2 - (n.bits() as i64 - d.bits() as i64);
    if shift >= 0 {
        n <<= shift as u64;
    } else {
        d <<= (-shift) as u64;
    }
    let (q, r) = num_integer::Integer::div_rem(&n, &d);
    let qb = q.bits();
    debug_assert!(qb >= p as u64 + 1);
    let cut = qb - p as u64;

    let mut m = &q >> cut;
    let round_bit = q.bit(cut - 1);
    let low_mask = (BigUint::one() << (cut - 1)) - BigUint::one();
    let sticky = !(&q & low_mask).is_zero() || !r.is_zero();
    let mut exp = cut as i64 - shift;
    if round_bit && (sticky || m.bit(0)) {
        m += 1u32;
        if m.bits() > p as u64 {
            m >>= 1;
            exp += 1;
        }
    }

    let mut out = biguint_to_bigfloat_exact(&m);
    let e0 = out.exponent().expect("finite") as i64;
    out.set_exponent((e0 + exp).try_into().expect("exponent fits i32"));
    out.set_precision(p as usize, RoundingMode::ToEven)
        .expect("mantissa already fits");
    if negative {
        out.set_sign(Sign::Neg);
    }
    out
}

/// Decompose a finite float into `sign * mantissa * 2^exp` with an odd
/// mantissa (zero maps to `(false, 0, 0)`).
pub fn bigfloat_to_mantissa_exp(x: &BigFloat) -> (bool, BigUint, i64) {
    if x.is_zero() {
        return (false, BigUint::zero(), 0);
    }
    let (words, _, sign, e, _) = x.as_raw_parts().expect("finite value");
    let mut bytes = Vec::with_capacity(words.len() * 8);
    for w in words {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    let mut m = BigUint::from_bytes_le(&bytes);
    let mut exp = e as i64 - words.len() as i64 * 64;
    let tz = m.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        m >>= tz;
        exp += tz as i64;
    }
    (sign == Sign::Neg, m, exp)
}

/// Exact decimal expansion: `(negative, digits, e10)` with the value equal
/// to `digits * 10^e10` and `digits` free of trailing zeros.
pub fn bigfloat_exact_decimal(x: &BigFloat) -> (bool, String, i64) {
    let (neg, m, e) = bigfloat_to_mantissa_exp(x);
    if m.is_zero() {
        return (false, "0".to_string(), 0);
    }
    let (d, mut e10) = if e >= 0 {
        (&m << e as u64, 0i64)
    } else {
        let k = (-e) as u32;
        (&m * BigUint::from(5u32).pow(k), e)
    };
    let mut s = d.to_str_radix(10);
    let stripped = s.trim_end_matches('0');
    e10 += (s.len() - stripped.len()) as i64;
    s.truncate(stripped.len());
    (neg, s, e10)
}

/// Round a digit string to `keep` significant digits, half to even.
/// Returns the new digits (trailing zeros stripped) and the power-of-ten
/// adjustment relative to dropping `digits.len() - keep` places.
fn round_digits_half_even(digits: &str, keep: usize) -> (String, i64) {
    debug_assert!(keep >= 1 && keep < digits.len());
    let bytes = digits.as_bytes();
    let mut kept: Vec<u8> = bytes[..keep].to_vec();
    let first_dropped = bytes[keep];
    let sticky = bytes[keep + 1..].iter().any(|&b| b != b'0');
    let round_up = match first_dropped.cmp(&b'5') {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => sticky || (kept[keep - 1] - b'0') % 2 == 1,
    };
    let mut adjust = (digits.len() - keep) as i64;
    if round_up {
        let mut i = keep;
        loop {
            if i == 0 {
                // Carry ran off the front ("99" -> "100"); the result is a
                // one followed by zeros, renormalized by the strip below.
                kept.insert(0, b'1');
                break;
            }
            i -= 1;
            if kept[i] == b'9' {
                kept[i] = b'0';
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let mut s = String::from_utf8(kept).expect("digits");
    let stripped_len = s.trim_end_matches('0').len().max(1);
    adjust += (s.len() - stripped_len) as i64;
    s.truncate(stripped_len);
    (s, adjust)
}

/// Render `(negative, digits, e10)` deterministically: plain notation for
/// moderate exponents, scientific otherwise.
fn render_decimal(neg: bool, digits: &str, e10: i64) -> String {
    let sign = if neg { "-" } else { "" };
    if digits == "0" {
        return "0".to_string();
    }
    // k = position of the decimal point: value = 0.digits * 10^k
    let k = e10 + digits.len() as i64;
    if k > 0 && k <= 21 {
        let k = k as usize;
        if k >= digits.len() {
            let zeros = "0".repeat(k - digits.len());
            format!("{sign}{digits}{zeros}")
        } else {
            format!("{sign}{}.{}", &digits[..k], &digits[k..])
        }
    } else if k <= 0 && k > -6 {
        let zeros = "0".repeat((-k) as usize);
        format!("{sign}0.{zeros}{digits}")
    } else {
        let exp = k - 1;
        if digits.len() == 1 {
            format!("{sign}{digits}e{exp}")
        } else {
            format!("{sign}{}.{}e{}", &digits[..1], &digits[1..], exp)
        }
    }
}

/// Shortest decimal string that parses back (correctly rounded at `p` bits)
/// to exactly `x`.
pub fn shortest_roundtrip_decimal(x: &BigFloat, p: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let (neg, digits, e10) = bigfloat_exact_decimal(x);
    for keep in 1..digits.len() {
        let (cand, adjust) = round_digits_half_even(&digits, keep);
        let cand_e10 = e10 + adjust;
        let back = decimal_parts_to_bigfloat(neg, &cand, cand_e10, p);
        if back.cmp(x) == Some(0) {
            return render_decimal(neg, &cand, cand_e10);
        }
    }
    render_decimal(neg, &digits, e10)
}

/// Exact rational value of `sign * digits * 10^e10` converted to a `p`-bit
/// float with round-to-nearest-even.
fn decimal_parts_to_bigfloat(neg: bool, digits: &str, e10: i64, p: u32) -> BigFloat {
    let d: BigUint = digits.parse().expect("decimal digits");
    let mut num = BigInt::from(d);
    let mut den = BigInt::one();
    if e10 >= 0 {
        num *= BigInt::from(10u32).pow(e10 as u32);
    } else {
        den = BigInt::from(10u32).pow((-e10) as u32);
    }
    if neg {
        num = -num;
    }
    rational_to_bigfloat(&num, &den, p)
}

/// Parse a decimal literal (`-12.34e-5`) into an exact rational
/// `(numerator, denominator)`.
pub fn parse_decimal_rational(s: &str) -> Result<(BigInt, BigUint), Error> {
    let bad = |msg: &str| Error::InvalidInput {
        msg: format!("bad decimal literal {s:?}: {msg}"),
    };
    let (neg, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mantissa, exp_str) = match rest.find(['e', 'E']) {
        Some(i) => (&rest[..i], Some(&rest[i + 1..])),
        None => (rest, None),
    };
    let exp: i64 = match exp_str {
        Some(e) if !e.is_empty() => e
            .parse()
            .map_err(|_| bad("malformed exponent"))?,
        Some(_) => return Err(bad("empty exponent")),
        None => 0,
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad("no digits"));
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad("non-digit character"));
    }
    let digits: BigUint = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| bad("no digits"))?;
    let scale = exp - frac_part.len() as i64;
    let mut num = BigInt::from(digits);
    let mut den = BigUint::one();
    if scale >= 0 {
        num *= BigInt::from(10u32).pow(scale as u32);
    } else {
        den = BigUint::from(10u32).pow((-scale) as u32);
    }
    if neg {
        num = -num;
    }
    Ok((num, den))
}

/// Split a complex literal into real and imaginary part strings.
///
/// Accepted shapes: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, with each part a
/// rational (`3/2`) or decimal (`1.5e-3`) literal.
pub fn split_complex_literal(s: &str) -> Result<(Option<String>, Option<String>), Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidInput {
            msg: "empty complex literal".to_string(),
        });
    }
    if !s.ends_with('i') && !s.ends_with('I') {
        return Ok((Some(s.to_string()), None));
    }
    let body = &s[..s.len() - 1];
    // Find a '+'/'-' splitting re and im: not at position 0 and not an
    // exponent sign (preceded by 'e'/'E').
    let bytes = body.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    match split {
        Some(i) => {
            let re = body[..i].to_string();
            let im_sign = if bytes[i] == b'-' { "-" } else { "" };
            let im_body = &body[i + 1..];
            let im = if im_body.is_empty() {
                format!("{im_sign}1")
            } else {
                format!("{im_sign}{im_body}")
            };
            Ok((Some(re), Some(im)))
        }
        None => {
            let im = match body {
                "" => "1".to_string(),
                "-" => "-1".to_string(),
                "+" => "1".to_string(),
                other => other.to_string(),
            };
            Ok((None, Some(im)))
        }
    }
}

/// Parse one real part literal (rational `a/b` or decimal) into an exact
/// rational pair.
pub fn parse_part_rational(s: &str) -> Result<(BigInt, BigUint), Error> {
    let s = s.trim();
    if let Some(i) = s.find('/') {
        let num: BigInt = s[..i].parse().map_err(|_| Error::InvalidInput {
            msg: format!("bad rational literal {s:?}"),
        })?;
        let den: BigInt = s[i + 1..].parse().map_err(|_| Error::InvalidInput {
            msg: format!("bad rational literal {s:?}"),
        })?;
        if den.is_zero() {
            return Err(Error::InvalidInput {
                msg: format!("zero denominator in {s:?}"),
            });
        }
        let neg = num.is_negative() != den.is_negative();
        let mut n = BigInt::from(num.magnitude().clone());
        if neg {
            n = -n;
        }
        Ok((n, den.magnitude().clone()))
    } else {
        parse_decimal_rational(s)
    }
}
