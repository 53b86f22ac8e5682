//! Built-in continued fractions.
//!
//! Polynomial families (periods and coefficient rules as printed in the
//! sources they come from):
//!
//! - `rogers-ramanujan`: `1 + q/1 + q^2/1 + q^3/1 + ...`
//! - `s1`, `s2`, `s3`: the three Ramanujan-Selberg fractions
//!   (`1 + q/1 + (q+q^2)/1 + q^3/1 + ...` and companions);
//! - `g1`: period-4 unit-denominator fraction with terms
//!   `q^{4n+1}+3q^{3n+1}+2q^{2n+1}, ...`;
//! - `goellnitz-gordon`: `1+q + q^2/(1+q^3) + q^4/(1+q^5) + ...`;
//! - `g2`: period-4 general fraction with numerator degrees stepping by 3
//!   and denominator degrees by 1.
//!
//! One rule-based source that is not a polynomial family:
//!
//! - `example2-g`: `2/1 + -1/2 + K a_n/b_n` with rational-in-n
//!   coefficients `a_{2n+1} = 1 + 1/(2n^2) + 1/n`, `b_{2n+1} = -1/(2n^3)`,
//!   `a_{2n+2} = 2(1+n)^3/(n(1+2n+2n^2))`, `b_{2n+2} = (1+n)/(1+2n+2n^2)`;
//!   its odd approximants tend to 1 and its even approximants to 3.

use super::family::{FamilyForm, QFamily};
use super::parse::parse_polynomial;
use crate::cf::{CoefficientSource, PartialQuotient};
use crate::error::Error;
use crate::numerics::Scalar;

/// A named entry: either a polynomial family (instantiate at a chosen `q`)
/// or the built-in rule source that needs no parameter.
#[derive(Clone, Debug)]
pub enum RegistryEntry {
    Family(QFamily),
    /// The rational-in-n example fraction; see [`example2_g`].
    Example2G,
}

/// Canonical registry names.
pub fn names() -> &'static [&'static str] {
    &[
        "rogers-ramanujan",
        "s1",
        "s2",
        "s3",
        "g1",
        "goellnitz-gordon",
        "g2",
        "example2-g",
    ]
}

/// Look a fraction up by name (case-insensitive; a few aliases accepted).
pub fn lookup(name: &str) -> Result<RegistryEntry, Error> {
    let unit = |name: &str, k: u32, f: &[&str]| -> RegistryEntry {
        let f = f
            .iter()
            .map(|s| parse_polynomial(s).expect("registry polynomial parses"))
            .collect();
        RegistryEntry::Family(
            QFamily::unit_denominator(name, k, f).expect("registry family is valid"),
        )
    };
    let general = |name: &str, k: u32, f: &[&str], g: &[&str]| -> RegistryEntry {
        let parse_all = |xs: &[&str]| {
            xs.iter()
                .map(|s| parse_polynomial(s).expect("registry polynomial parses"))
                .collect::<Vec<_>>()
        };
        RegistryEntry::Family(
            QFamily::general(name, k, parse_all(f), parse_all(g))
                .expect("registry family is valid"),
        )
    };
    match name.to_ascii_lowercase().as_str() {
        "rogers-ramanujan" | "rr" | "k" => Ok(unit("rogers-ramanujan", 1, &["q*x"])),
        "s1" => Ok(unit("s1", 2, &["q*x^2", "q*x + q^2*x^2"])),
        "s2" => Ok(unit("s2", 2, &["q*x^2 + q^2*x^4", "q^4*x^4"])),
        "s3" => Ok(unit("s3", 1, &["q*x + q^2*x^2"])),
        "g1" => Ok(unit(
            "g1",
            4,
            &[
                "q*x^4 + 3*q*x^3 + 2*q*x^2",
                "q^2*x^4 + 2*q^2*x^3 + 7*q*x^2",
                "q^3*x^4 + 5*q^2*x^3 + 2*q^3*x^2",
                "q^4*x^4 + 7*q^3*x^3 + 3*q*x^2 + 2*x",
            ],
        )),
        "goellnitz-gordon" | "gg" => Ok(general(
            "goellnitz-gordon",
            1,
            &["q^2*x^2"],
            &["q*x^2 + 1"],
        )),
        "g2" => Ok(general(
            "g2",
            4,
            &[
                "q^3*x^12 + 3*q^2*x^6 + 2*q^2*x^4",
                "q^6*x^12 + 2*q^4*x^6 + 7*q^2*x^4",
                "q^9*x^12 + 5*q^4*x^6 + 2*q^6*x^4",
                "q^12*x^12 + 7*q^6*x^6 + 3*q^2*x^4 + 2*x^2",
            ],
            &[
                "q*x^4 + x + 1",
                "q^2*x^4 + x^2 + 1",
                "q^3*x^4 + x^2 + 1",
                "q^4*x^4 + x^3 + 1",
            ],
        )),
        "example2-g" | "example2g" => Ok(RegistryEntry::Example2G),
        other => Err(Error::UnknownFamily {
            name: other.to_string(),
        }),
    }
}

/// The rule-based example fraction over either backend (`b_0 = 0`).
///
/// Its numerator and denominator convergents satisfy the closed forms
/// `A_{2n-1} = n+1`, `A_{2n} = n + 3n^2`, `B_{2n-1} = n`, `B_{2n} = n^2`.
pub fn example2_g<S: Scalar>(ctx: S::Ctx) -> CoefficientSource<S> {
    CoefficientSource::from_rule(S::zero(ctx), None, move |m| {
        let r = |num: i128, den: i128| -> Result<S, Error> {
            let num = i64::try_from(num).map_err(|_| Error::InvalidInput {
                msg: format!("coefficient overflow at index {m}"),
            })?;
            let den = i64::try_from(den).map_err(|_| Error::InvalidInput {
                msg: format!("coefficient overflow at index {m}"),
            })?;
            Ok(S::from_ratio(ctx, num, den))
        };
        let (a, b) = match m {
            1 => (r(2, 1)?, r(1, 1)?),
            2 => (r(-1, 1)?, r(2, 1)?),
            m if m % 2 == 1 => {
                let n = ((m - 1) / 2) as i128;
                (
                    r(2 * n * n + 2 * n + 1, 2 * n * n)?,
                    r(-1, 2 * n * n * n)?,
                )
            }
            m => {
                let n = ((m - 2) / 2) as i128;
                (
                    r(2 * (1 + n) * (1 + n) * (1 + n), n * (1 + 2 * n + 2 * n * n))?,
                    r(1 + n, 1 + 2 * n + 2 * n * n)?,
                )
            }
        };
        PartialQuotient::new(a, b)
    })
}

/// Convenience: does the entry take a `q` parameter?
impl RegistryEntry {
    pub fn family(&self) -> Option<&QFamily> {
        match self {
            RegistryEntry::Family(f) => Some(f),
            RegistryEntry::Example2G => None,
        }
    }

    /// Form of the underlying fraction for dispatching classification.
    pub fn form(&self) -> Option<FamilyForm> {
        self.family().map(QFamily::form)
    }
}
