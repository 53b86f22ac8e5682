//! Bivariate polynomials over Z[q][x] and their q-specializations.

use crate::numerics::Scalar;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `q` and `x` with arbitrary-precision integer
/// coefficients. Terms are keyed by `(deg_x, deg_q)`; zero coefficients are
/// never stored, and display order is `(deg_x, deg_q)` descending.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = QPolynomial::zero();
        p.add_term(0, 0, c);
        p
    }

    /// The monomial `c * q^deg_q * x^deg_x`.
    pub fn monomial(c: BigInt, deg_q: u32, deg_x: u32) -> Self {
        let mut p = QPolynomial::zero();
        p.add_term(deg_q, deg_x, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Accumulate `c * q^deg_q * x^deg_x`, collecting like terms and
    /// dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, deg_q: u32, deg_x: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (deg_x, deg_q);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms as `(deg_q, deg_x, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(dx, dq), c)| (dq, dx, c))
    }

    pub fn coefficient(&self, deg_q: u32, deg_x: u32) -> BigInt {
        self.terms
            .get(&(deg_x, deg_q))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// True when no term involves `x`.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|&(dx, _)| dx == 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(dx, dq), c) in &rhs.terms {
            out.add_term(dq, dx, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = QPolynomial::zero();
        for (&(dx1, dq1), c1) in &self.terms {
            for (&(dx2, dq2), c2) in &rhs.terms {
                out.add_term(dq1 + dq2, dx1 + dx2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = QPolynomial::constant(BigInt::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `x = q^n`, producing a univariate polynomial in `q`.
    /// Colliding exponents are collected (and may cancel).
    pub fn subst_q_power(&self, n: u64) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(dx, dq), c) in &self.terms {
            out.add_term(dq as u64 + n * dx as u64, c.clone());
        }
        out
    }

    /// Evaluate at explicit scalar values of `q` and `x`.
    pub fn eval<S: Scalar>(&self, q: &S, x: &S) -> S {
        let ctx = q.ctx();
        let mut acc = S::zero(ctx);
        for (&(dx, dq), c) in &self.terms {
            let term = S::from_bigint(ctx, c)
                .mul(&q.pow_u(dq as u64))
                .mul(&x.pow_u(dx as u64));
            acc = acc.add(&term);
        }
        acc
    }

    /// Evaluate a q-only polynomial at `q`.
    pub fn eval_q<S: Scalar>(&self, q: &S) -> S {
        debug_assert!(self.is_q_only());
        self.eval(q, &S::one(q.ctx()))
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(dx, dq), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (dq == 0 && dx == 0) {
                factors.push(mag.to_string());
            }
            match dq {
                0 => {}
                1 => factors.push("q".to_string()),
                d => factors.push(format!("q^{d}")),
            }
            match dx {
                0 => {}
                1 => factors.push("x".to_string()),
                d => factors.push(format!("x^{d}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// A univariate polynomial in `q` over the integers, as produced by the
/// substitution `x = q^n`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u64, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn add_term(&mut self, deg: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(deg).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `q`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.iter().next_back().map(|(_, c)| c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn eval<S: Scalar>(&self, q: &S) -> S {
        let ctx = q.ctx();
        let mut acc = S::zero(ctx);
        for (&d, c) in &self.coeffs {
            acc = acc.add(&S::from_bigint(ctx, c).mul(&q.pow_u(d)));
        }
        acc
    }
}
