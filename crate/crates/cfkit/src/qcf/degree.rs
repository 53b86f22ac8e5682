//! Degree-law validation for polynomial families.
//!
//! A family is admissible when the degrees of its coefficient polynomials
//! (as polynomials in `q`) grow in arithmetic progression across all
//! consecutive indices, including the seam from cycle position `k` to
//! position 1 of the next block, and when the asymptotic leading
//! coefficients agree.
//!
//! The check is exact and covers every index: degrees are verified
//! explicitly for all blocks up to the last exponent collision (beyond
//! which distinct terms of `f_s(q^n)` can no longer share an exponent), and
//! symbolically from there on via the term dominating the upper envelope of
//! the exponent functions `deg_q + n deg_x`.

use super::family::{FamilyForm, QFamily};
use super::poly::QPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Which coefficient sequence a violation concerns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeqKind {
    Numerator,
    Denominator,
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::Numerator => "a",
            SeqKind::Denominator => "b",
        })
    }
}

/// Structured report of the first place a family breaks the degree law.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DegreeViolation {
    /// A coefficient polynomial cancelled to zero at some index.
    ZeroCoefficientPolynomial { seq: SeqKind, index: u64 },
    /// Consecutive degrees do not step by the required constant.
    DegreeStep {
        seq: SeqKind,
        first: u64,
        second: u64,
        expected: i64,
        found: i64,
    },
    /// Leading coefficients differ (cycle positions named).
    LeadingCoefficient { seq: SeqKind, first: u32, second: u32 },
    /// The dominant x-degrees of two cycle positions differ, so no constant
    /// degree step can exist.
    EnvelopeSlope { seq: SeqKind, first: u32, second: u32 },
    /// The degree step is not a positive integer.
    NonPositiveStep { seq: SeqKind, step: i64 },
}

impl fmt::Display for DegreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeViolation::ZeroCoefficientPolynomial { seq, index } => {
                write!(f, "{seq}_{index}(q) is the zero polynomial")
            }
            DegreeViolation::DegreeStep {
                seq,
                first,
                second,
                expected,
                found,
            } => write!(
                f,
                "degree({seq}_{second}) - degree({seq}_{first}) = {found}, expected {expected}"
            ),
            DegreeViolation::LeadingCoefficient { seq, first, second } => write!(
                f,
                "leading coefficients of cycle positions {first} and {second} of the {seq}-sequence differ"
            ),
            DegreeViolation::EnvelopeSlope { seq, first, second } => write!(
                f,
                "dominant x-degrees of cycle positions {first} and {second} of the {seq}-sequence differ"
            ),
            DegreeViolation::NonPositiveStep { seq, step } => {
                write!(f, "degree step {step} of the {seq}-sequence is not positive")
            }
        }
    }
}

/// Validated degree data of a family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DegreeProfile {
    /// Unit-denominator law: `degree(a_{i+1}) = degree(a_i) + c3` for all
    /// `i >= 1`, equal asymptotic leading coefficients.
    UnitDenominator { c3: u32, leading: BigInt, r1: u64 },
    /// General law: numerator degrees step by `a`, denominator degrees by
    /// `b`, with `degree(a_1) = r1`, `degree(b_0) = r2` and fixed leading
    /// coefficients.
    General {
        a: u32,
        b: u32,
        r1: u64,
        r2: u64,
        leading_a: BigInt,
        leading_b: BigInt,
    },
}

/// The term of `poly` dominating `f(q^n)` for large `n`: maximal in
/// `(deg_x, deg_q)` order. Returns `(deg_q, deg_x, coefficient)`.
pub fn envelope(poly: &QPolynomial) -> Option<(u32, u32, BigInt)> {
    poly.terms()
        .map(|(dq, dx, c)| (dx, dq, c))
        .max_by_key(|&(dx, dq, _)| (dx, dq))
        .map(|(dx, dq, c)| (dq, dx, c.clone()))
}

struct CycleEnvelopes {
    seq: SeqKind,
    /// (deg_q, deg_x, coefficient) per cycle position.
    env: Vec<(u32, u32, BigInt)>,
}

impl CycleEnvelopes {
    fn build(seq: SeqKind, polys: &[QPolynomial]) -> Result<Self, DegreeViolation> {
        let mut env = Vec::with_capacity(polys.len());
        for (s, p) in polys.iter().enumerate() {
            match envelope(p) {
                Some(e) => env.push(e),
                None => {
                    return Err(DegreeViolation::ZeroCoefficientPolynomial {
                        seq,
                        index: s as u64 + 1,
                    })
                }
            }
        }
        Ok(CycleEnvelopes { seq, env })
    }

    /// Common slope `deg_x` of all envelope terms.
    fn slope(&self) -> Result<u32, DegreeViolation> {
        let d = self.env[0].1;
        for (s, e) in self.env.iter().enumerate().skip(1) {
            if e.1 != d {
                return Err(DegreeViolation::EnvelopeSlope {
                    seq: self.seq,
                    first: 1,
                    second: s as u32 + 1,
                });
            }
        }
        Ok(d)
    }

    /// Common leading coefficient of all envelope terms.
    fn leading(&self) -> Result<BigInt, DegreeViolation> {
        let l = self.env[0].2.clone();
        for (s, e) in self.env.iter().enumerate().skip(1) {
            if e.2 != l {
                return Err(DegreeViolation::LeadingCoefficient {
                    seq: self.seq,
                    first: 1,
                    second: s as u32 + 1,
                });
            }
        }
        Ok(l)
    }

    /// The constant asymptotic degree step, from within-block differences
    /// and the block seam.
    fn step(&self) -> Result<i64, DegreeViolation> {
        let d = self.slope()? as i64;
        let k = self.env.len();
        let dq = |s: usize| self.env[s].0 as i64;
        let step = if k == 1 { d } else { dq(1) - dq(0) };
        for s in 1..k {
            let found = dq(s) - dq(s - 1);
            if found != step {
                return Err(DegreeViolation::DegreeStep {
                    seq: self.seq,
                    first: s as u64,
                    second: s as u64 + 1,
                    expected: step,
                    found,
                });
            }
        }
        // Seam: position k of block n to position 1 of block n + 1.
        let seam = dq(0) + d - dq(k - 1);
        if seam != step {
            return Err(DegreeViolation::DegreeStep {
                seq: self.seq,
                first: k as u64,
                second: k as u64 + 1,
                expected: step,
                found: seam,
            });
        }
        Ok(step)
    }
}

/// Blocks to check explicitly: past the largest q-degree appearing in any
/// term, distinct terms of `f_s(q^n)` cannot collide in exponent, so the
/// envelope argument takes over.
fn explicit_blocks(polys: &[QPolynomial]) -> u64 {
    let max_dq = polys
        .iter()
        .flat_map(|p| p.terms().map(|(dq, _, _)| dq as u64))
        .max()
        .unwrap_or(0);
    max_dq + 2
}

/// Verify the arithmetic-progression degree law of one coefficient
/// sequence for every index, and return `(step, leading, first_degree)`.
fn check_sequence(
    seq: SeqKind,
    polys: &[QPolynomial],
    poly_at: impl Fn(u64) -> super::poly::UniPoly,
    first_index: u64,
) -> Result<(i64, BigInt, u64), DegreeViolation> {
    let envs = CycleEnvelopes::build(seq, polys)?;
    let step = envs.step()?;
    let leading = envs.leading()?;
    if step <= 0 {
        return Err(DegreeViolation::NonPositiveStep { seq, step });
    }
    let k = polys.len() as u64;
    let last = (explicit_blocks(polys) + 1) * k + first_index;
    let degree_of = |i: u64| -> Result<u64, DegreeViolation> {
        poly_at(i)
            .degree()
            .ok_or(DegreeViolation::ZeroCoefficientPolynomial { seq, index: i })
    };
    let mut prev = degree_of(first_index)?;
    let first_degree = prev;
    for i in first_index + 1..=last {
        let here = degree_of(i)?;
        let found = here as i64 - prev as i64;
        if found != step {
            return Err(DegreeViolation::DegreeStep {
                seq,
                first: i - 1,
                second: i,
                expected: step,
                found,
            });
        }
        prev = here;
    }
    Ok((step, leading, first_degree))
}

/// Validate a family against its degree law and report the profile, or the
/// first violation. Violations are values, not errors: every family has an
/// answer.
pub fn degree_profile(family: &QFamily) -> Result<DegreeProfile, DegreeViolation> {
    let (step_a, leading_a, r1) = check_sequence(
        SeqKind::Numerator,
        family.f(),
        |i| family.numerator_poly(i),
        1,
    )?;
    match family.form() {
        FamilyForm::UnitDenominator => Ok(DegreeProfile::UnitDenominator {
            c3: step_a as u32,
            leading: leading_a,
            r1,
        }),
        FamilyForm::General => {
            let (step_b, leading_b, r2) = check_sequence(
                SeqKind::Denominator,
                family.g(),
                |i| family.denominator_poly(i),
                0,
            )?;
            Ok(DegreeProfile::General {
                a: step_a as u32,
                b: step_b as u32,
                r1,
                r2,
                leading_a,
                leading_b,
            })
        }
    }
}

/// Smallest `n` from which the envelope term of `poly(q^n)` dominates the
/// sum of all other terms by a factor of at least 2, for every `|q| >=
/// gamma` (`gamma > 1` rational). Exact certificate by term-wise bounding:
///
/// sum over non-envelope terms of |c_j| gamma^(e_j(n) - e*(n)) <= 1/2.
pub fn dominance_tail(poly: &QPolynomial, gamma: &BigRational) -> Option<u64> {
    let one: BigRational = One::one();
    if *gamma <= one {
        return None;
    }
    let (dq_star, dx_star, c_star) = envelope(poly)?;
    let c_star_abs = BigRational::from_integer(c_star.abs());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let others: Vec<(i64, i64, BigRational)> = poly
        .terms()
        .filter(|&(dq, dx, _)| (dq, dx) != (dq_star, dx_star))
        .map(|(dq, dx, c)| {
            (
                dq as i64 - dq_star as i64,
                dx as i64 - dx_star as i64,
                BigRational::from_integer(c.abs()) / &c_star_abs,
            )
        })
        .collect();
    if others.is_empty() {
        return Some(0);
    }
    let gamma_pow = |e: i64| -> BigRational {
        let p = gamma.pow(e.unsigned_abs() as i32);
        if e >= 0 {
            p
        } else {
            one.clone() / p
        }
    };
    // Terms sharing the envelope's x-degree contribute a fixed amount for
    // every n; if that alone breaks the bound, no tail works.
    let floor_sum: BigRational = others
        .iter()
        .filter(|(_, ddx, _)| *ddx == 0)
        .map(|(ddq, _, c)| c * gamma_pow(*ddq))
        .sum();
    if floor_sum > half || (floor_sum == half && others.iter().any(|(_, ddx, _)| *ddx < 0)) {
        return None;
    }
    // Exponent gaps e_j(n) - e*(n) = (dq_j - dq*) + n (dx_j - dx*) decrease
    // strictly in n (dx_j < dx*, or dx equal and dq_j < dq*), so the bound
    // sum is eventually decreasing; scan upward.
    'outer: for n in 0..10_000u64 {
        let mut sum: BigRational = Zero::zero();
        for (ddq, ddx, c) in &others {
            let e = ddq + ddx * n as i64;
            if e >= 0 {
                continue 'outer;
            }
            sum += c * gamma_pow(e);
            if sum > half {
                continue 'outer;
            }
        }
        return Some(n);
    }
    None
}
