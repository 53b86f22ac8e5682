//! Polynomial continued-fraction families and their instantiation.

use super::parse::parse_polynomial;
use super::poly::QPolynomial;
use crate::cf::{CoefficientSource, PartialQuotient};
use crate::error::Error;
use crate::numerics::Scalar;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::sync::{Arc, Mutex};

/// Whether every partial denominator is the constant 1 or follows its own
/// polynomial cycle.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FamilyForm {
    #[serde(rename = "unit-denominator")]
    UnitDenominator,
    #[serde(rename = "general")]
    General,
}

/// A polynomial q-continued-fraction family of period `k`:
///
/// - numerators cycle as `a_{nk+s}(q) = f_s(q^n)` for `n >= 0`,
///   `1 <= s <= k`;
/// - in general form, denominators cycle as `b_{nk+s-1}(q) = g_{s-1}(q^n)`
///   (so `b_0 = g_0(1)`); in unit-denominator form every `b_n` is 1.
#[derive(Clone, PartialEq, Debug)]
pub struct QFamily {
    name: String,
    form: FamilyForm,
    k: u32,
    b0: QPolynomial,
    f: Vec<QPolynomial>,
    g: Vec<QPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct FamilyDoc {
    name: String,
    form: FamilyForm,
    k: u32,
    b0: String,
    f: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    g: Vec<String>,
}

impl QFamily {
    pub fn new(
        name: impl Into<String>,
        form: FamilyForm,
        k: u32,
        b0: QPolynomial,
        f: Vec<QPolynomial>,
        g: Vec<QPolynomial>,
    ) -> Result<Self, Error> {
        let fam = QFamily {
            name: name.into(),
            form,
            k,
            b0,
            f,
            g,
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Unit-denominator family with `b_0 = 1`.
    pub fn unit_denominator(
        name: impl Into<String>,
        k: u32,
        f: Vec<QPolynomial>,
    ) -> Result<Self, Error> {
        QFamily::new(
            name,
            FamilyForm::UnitDenominator,
            k,
            QPolynomial::constant(BigInt::one()),
            f,
            Vec::new(),
        )
    }

    /// General family; `b_0` is derived as `g_0(1)`.
    pub fn general(
        name: impl Into<String>,
        k: u32,
        f: Vec<QPolynomial>,
        g: Vec<QPolynomial>,
    ) -> Result<Self, Error> {
        let b0 = g
            .first()
            .map(|g0| g0.subst_q_power(0).terms().fold(
                QPolynomial::zero(),
                |mut acc, (d, c)| {
                    acc.add_term(
                        u32::try_from(d).expect("q-degree fits u32"),
                        0,
                        c.clone(),
                    );
                    acc
                },
            ))
            .unwrap_or_else(QPolynomial::zero);
        QFamily::new(name, FamilyForm::General, k, b0, f, g)
    }

    fn validate(&self) -> Result<(), Error> {
        let fail = |msg: String| Err(Error::InvalidFamily { msg });
        if self.k == 0 {
            return fail("k must be at least 1".to_string());
        }
        if self.f.len() != self.k as usize {
            return fail(format!(
                "expected {} numerator polynomials, found {}",
                self.k,
                self.f.len()
            ));
        }
        for (i, f) in self.f.iter().enumerate() {
            if f.is_zero() {
                return fail(format!("numerator polynomial f_{} is zero", i + 1));
            }
        }
        if !self.b0.is_q_only() {
            return fail("b0 must be a polynomial in q only".to_string());
        }
        match self.form {
            FamilyForm::UnitDenominator => {
                if !self.g.is_empty() {
                    return fail(
                        "unit-denominator family must not carry denominator polynomials"
                            .to_string(),
                    );
                }
            }
            FamilyForm::General => {
                if self.g.len() != self.k as usize {
                    return fail(format!(
                        "expected {} denominator polynomials g_0..g_{}, found {}",
                        self.k,
                        self.k - 1,
                        self.g.len()
                    ));
                }
                // b_0 is g_0 at x = 1; a stated b0 must agree.
                let derived = self.g[0].subst_q_power(0);
                let stated = self.b0.subst_q_power(0);
                if derived != stated {
                    return fail("b0 does not equal g_0 evaluated at x = 1".to_string());
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn form(&self) -> FamilyForm {
        self.form
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn b0(&self) -> &QPolynomial {
        &self.b0
    }

    pub fn f(&self) -> &[QPolynomial] {
        &self.f
    }

    pub fn g(&self) -> &[QPolynomial] {
        &self.g
    }

    /// Numerator polynomial `a_m(q)` as a polynomial in `q`
    /// (`m = nk + s -> f_s(q^n)`).
    pub fn numerator_poly(&self, m: u64) -> super::poly::UniPoly {
        let (n, s) = self.numerator_cycle(m);
        self.f[s].subst_q_power(n)
    }

    /// Denominator polynomial `b_m(q)` as a polynomial in `q`
    /// (`m = nk + s - 1 -> g_{s-1}(q^n)`; constant 1 in unit-denominator
    /// form).
    pub fn denominator_poly(&self, m: u64) -> super::poly::UniPoly {
        match self.form {
            FamilyForm::UnitDenominator => {
                QPolynomial::constant(BigInt::one()).subst_q_power(0)
            }
            FamilyForm::General => {
                let (n, s1) = self.denominator_cycle(m);
                self.g[s1].subst_q_power(n)
            }
        }
    }

    /// `(n, s-1)` with `m = nk + s`, `1 <= s <= k` (numerator indexing).
    fn numerator_cycle(&self, m: u64) -> (u64, usize) {
        let k = self.k as u64;
        ((m - 1) / k, ((m - 1) % k) as usize)
    }

    /// `(n, s-1)` with `m = nk + (s-1)`, `1 <= s <= k` (denominator
    /// indexing).
    fn denominator_cycle(&self, m: u64) -> (u64, usize) {
        let k = self.k as u64;
        (m / k, (m % k) as usize)
    }

    /// Instantiate at a nonzero `q`: exact when `q` is a Gaussian rational,
    /// floating otherwise. A partial numerator vanishing at some index is
    /// reported lazily with that index.
    pub fn instantiate<S: Scalar>(&self, q: &S) -> Result<CoefficientSource<S>, Error> {
        if q.is_zero() {
            return Err(Error::QOutsideDomain {
                msg: "q must be nonzero".to_string(),
            });
        }
        let fam = self.clone();
        let q = q.clone();
        let ctx = q.ctx();
        let b0 = fam.b0.eval_q(&q);
        let powers = PowerCache::new(q.clone());
        Ok(CoefficientSource::from_rule(b0, None, move |m| {
            let (na, sa) = fam.numerator_cycle(m);
            let x = powers.power(na);
            let a = fam.f[sa].eval(&q, &x);
            if a.is_zero() {
                return Err(Error::ZeroPartialNumerator { index: m });
            }
            let b = match fam.form {
                FamilyForm::UnitDenominator => S::one(ctx),
                FamilyForm::General => {
                    let (nb, sb) = fam.denominator_cycle(m);
                    let xb = powers.power(nb);
                    fam.g[sb].eval(&q, &xb)
                }
            };
            PartialQuotient::new(a, b)
        }))
    }

    /// Serialize to the family JSON document.
    pub fn to_json(&self) -> String {
        let doc = FamilyDoc {
            name: self.name.clone(),
            form: self.form,
            k: self.k,
            b0: self.b0.to_string(),
            f: self.f.iter().map(QPolynomial::to_string).collect(),
            g: self.g.iter().map(QPolynomial::to_string).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("family document serializes")
    }

    /// Parse the family JSON document.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: FamilyDoc = serde_json::from_str(text).map_err(|e| Error::InvalidFamily {
            msg: format!("malformed family document: {e}"),
        })?;
        let f = doc
            .f
            .iter()
            .map(|s| parse_polynomial(s))
            .collect::<Result<Vec<_>, _>>()?;
        let g = doc
            .g
            .iter()
            .map(|s| parse_polynomial(s))
            .collect::<Result<Vec<_>, _>>()?;
        let b0 = parse_polynomial(&doc.b0)?;
        QFamily::new(doc.name, doc.form, doc.k, b0, f, g)
    }
}

/// Memoized consecutive powers `q^0, q^1, q^2, ...`.
struct PowerCache<S: Scalar> {
    q: S,
    cache: Mutex<Vec<S>>,
}

impl<S: Scalar> PowerCache<S> {
    fn new(q: S) -> Arc<Self> {
        let one = S::one(q.ctx());
        Arc::new(PowerCache {
            q,
            cache: Mutex::new(vec![one]),
        })
    }

    fn power(&self, n: u64) -> S {
        let mut cache = self.cache.lock().expect("power cache poisoned");
        while (cache.len() as u64) <= n {
            let next = cache.last().expect("nonempty").mul(&self.q);
            cache.push(next);
        }
        cache[n as usize].clone()
    }
}
