//! Continued-fraction representation and the convergent engine.
//!
//! A continued fraction `b_0 + K a_n/b_n` is a [`CoefficientSource`]: the
//! leading term `b_0` plus a deterministic rule producing the partial
//! quotient `(a_n, b_n)` for each 1-based index `n`. The numerator and
//! denominator convergents follow the three-term recurrence
//! `A_n = b_n A_{n-1} + a_n A_{n-2}`, `B_n = b_n B_{n-1} + a_n B_{n-2}`
//! carried by [`ConvergentState`] as a rolling window, together with the
//! running determinant `A_n B_{n-1} - A_{n-1} B_n = (-1)^(n-1) prod a_i`.

use crate::error::Error;
use crate::numerics::{ext_div, ExtComplex, Scalar};
use std::sync::{Arc, Mutex};

/// One partial quotient `(a_n, b_n)`. A zero partial numerator terminates
/// the fraction and is rejected at construction.
#[derive(Clone, PartialEq, Debug)]
pub struct PartialQuotient<S> {
    a: S,
    b: S,
}

impl<S: Scalar> PartialQuotient<S> {
    pub fn new(a: S, b: S) -> Result<Self, Error> {
        if a.is_zero() {
            return Err(Error::ZeroPartialNumerator { index: 0 });
        }
        Ok(PartialQuotient { a, b })
    }

    pub fn a(&self) -> &S {
        &self.a
    }

    pub fn b(&self) -> &S {
        &self.b
    }
}

type Rule<S> = Arc<dyn Fn(u64) -> Result<PartialQuotient<S>, Error> + Send + Sync>;

/// `b_0` plus a deterministic stream of partial quotients, finite or
/// unbounded. Repeated traversal yields identical coefficients; sources are
/// immutable and freely shared across threads.
pub struct CoefficientSource<S: Scalar> {
    b0: S,
    len: Option<u64>,
    rule: Rule<S>,
}

impl<S: Scalar> Clone for CoefficientSource<S> {
    fn clone(&self) -> Self {
        CoefficientSource {
            b0: self.b0.clone(),
            len: self.len,
            rule: Arc::clone(&self.rule),
        }
    }
}

impl<S: Scalar> std::fmt::Debug for CoefficientSource<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoefficientSource")
            .field("b0", &self.b0)
            .field("len", &self.len)
            .finish_non_exhaustive()
    }
}

impl<S: Scalar> CoefficientSource<S> {
    /// Rule-generated source. The rule receives the 1-based index and must
    /// be pure; a `None` length means unbounded.
    pub fn from_rule<F>(b0: S, len: Option<u64>, rule: F) -> Self
    where
        F: Fn(u64) -> Result<PartialQuotient<S>, Error> + Send + Sync + 'static,
    {
        CoefficientSource {
            b0,
            len,
            rule: Arc::new(rule),
        }
    }

    /// Finite source from explicit quotients.
    pub fn from_quotients(b0: S, quotients: Vec<PartialQuotient<S>>) -> Self {
        let len = quotients.len() as u64;
        CoefficientSource {
            b0,
            len: Some(len),
            rule: Arc::new(move |n| Ok(quotients[(n - 1) as usize].clone())),
        }
    }

    /// The constant fraction `b_0` (no partial quotients).
    pub fn constant(b0: S) -> Self {
        CoefficientSource {
            b0,
            len: Some(0),
            rule: Arc::new(|n| Err(Error::IndexOutOfRange { index: n, len: 0 })),
        }
    }

    pub fn b0(&self) -> &S {
        &self.b0
    }

    pub fn len(&self) -> Option<u64> {
        self.len
    }

    pub fn ctx(&self) -> S::Ctx {
        self.b0.ctx()
    }

    /// Partial quotient at 1-based index `n`.
    pub fn quotient(&self, n: u64) -> Result<PartialQuotient<S>, Error> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, len: 0 });
        }
        if let Some(len) = self.len {
            if n > len {
                return Err(Error::IndexOutOfRange { index: n, len });
            }
        }
        self.rule(n)
    }

    fn rule(&self, n: u64) -> Result<PartialQuotient<S>, Error> {
        let pq = (self.rule)(n)?;
        if pq.a.is_zero() {
            return Err(Error::ZeroPartialNumerator { index: n });
        }
        Ok(pq)
    }
}

/// Rolling window of the three-term recurrence: `(A_n, A_{n-1}, B_n,
/// B_{n-1})` plus the running determinant and, in float mode, the
/// accumulated power-of-two rescaling exponent.
///
/// Seeded at the standard `A_{-1} = 1, A_0 = b_0, B_{-1} = 0, B_0 = 1`, so
/// approximant indices match the convention `A_0 = b_0`.
#[derive(Clone, PartialEq, Debug)]
pub struct ConvergentState<S: Scalar> {
    n: u64,
    a_curr: S,
    a_prev: S,
    b_curr: S,
    b_prev: S,
    det: S,
    scale_exp: i64,
}

impl<S: Scalar> ConvergentState<S> {
    pub fn seed(b0: S) -> Self {
        let ctx = b0.ctx();
        ConvergentState {
            n: 0,
            a_prev: S::one(ctx),
            a_curr: b0,
            b_prev: S::zero(ctx),
            b_curr: S::one(ctx),
            det: S::from_i64(ctx, -1),
            scale_exp: 0,
        }
    }

    /// Apply one step of the recurrence. The index increments, the windows
    /// shift, and the determinant is multiplied by `-a`.
    ///
    /// In float mode, whenever a window component's magnitude exceeds
    /// `2^(p/2)`, the 4-tuple is rescaled by a power of two (an exact
    /// operation) and the exponent recorded; approximants and modified
    /// approximants are scale-invariant, and the determinant is adjusted by
    /// twice the exponent.
    pub fn advance(&self, pq: &PartialQuotient<S>) -> Self {
        let a_next = pq.b.mul(&self.a_curr).add(&pq.a.mul(&self.a_prev));
        let b_next = pq.b.mul(&self.b_curr).add(&pq.a.mul(&self.b_prev));
        let mut st = ConvergentState {
            n: self.n + 1,
            a_prev: self.a_curr.clone(),
            a_curr: a_next,
            b_prev: self.b_curr.clone(),
            b_curr: b_next,
            det: self.det.mul(&pq.a.neg()),
            scale_exp: self.scale_exp,
        };
        let e = [&st.a_curr, &st.a_prev, &st.b_curr, &st.b_prev]
            .into_iter()
            .filter_map(Scalar::rescale_exponent)
            .max();
        if let Some(e) = e {
            st.a_curr = st.a_curr.scale_pow2(-e);
            st.a_prev = st.a_prev.scale_pow2(-e);
            st.b_curr = st.b_curr.scale_pow2(-e);
            st.b_prev = st.b_prev.scale_pow2(-e);
            st.det = st.det.scale_pow2(-2 * e);
            st.scale_exp += e as i64;
        }
        st
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Numerator convergent `A_n` (up to the recorded rescaling).
    pub fn numerator(&self) -> &S {
        &self.a_curr
    }

    pub fn prev_numerator(&self) -> &S {
        &self.a_prev
    }

    /// Denominator convergent `B_n` (up to the recorded rescaling).
    pub fn denominator(&self) -> &S {
        &self.b_curr
    }

    pub fn prev_denominator(&self) -> &S {
        &self.b_prev
    }

    /// Running `(-1)^(n-1) prod a_i`, adjusted for rescaling.
    pub fn det_running(&self) -> &S {
        &self.det
    }

    /// Accumulated rescaling exponent: true convergents are the stored ones
    /// times `2^scale_exp`.
    pub fn scale_exp(&self) -> i64 {
        self.scale_exp
    }

    /// Undo the recorded rescaling of a window component (`None` when the
    /// exponent left i32 range).
    pub fn unscaled(&self, v: &S) -> Option<S> {
        let e = i32::try_from(self.scale_exp).ok()?;
        Some(v.scale_pow2(e))
    }

    /// Classical approximant `A_n / B_n`.
    pub fn approximant(&self) -> Result<ExtComplex<S>, Error> {
        ext_div(&self.a_curr, &self.b_curr).map_err(|e| e.at_index(self.n))
    }

    /// Modified approximant `S_n(w) = (A_n + w A_{n-1}) / (B_n + w B_{n-1})`;
    /// `S_n(0)` is the classical approximant and `S_n(inf) = A_{n-1}/B_{n-1}`.
    pub fn modified_approximant(&self, w: &ExtComplex<S>) -> Result<ExtComplex<S>, Error> {
        match w {
            ExtComplex::Finite(w) => {
                let num = self.a_curr.add(&w.mul(&self.a_prev));
                let den = self.b_curr.add(&w.mul(&self.b_prev));
                ext_div(&num, &den).map_err(|e| e.at_index(self.n))
            }
            ExtComplex::Infinity => {
                ext_div(&self.a_prev, &self.b_prev).map_err(|e| e.at_index(self.n))
            }
        }
    }

    /// Denominator ratio `r_n = B_n / B_{n-1}`.
    pub fn denominator_ratio(&self) -> Result<ExtComplex<S>, Error> {
        ext_div(&self.b_curr, &self.b_prev).map_err(|e| e.at_index(self.n))
    }
}

/// Drive the recurrence over `1..=depth`, invoking the visitor after every
/// step. `depth` must not exceed a finite source's length.
pub fn walk<S: Scalar>(
    cf: &CoefficientSource<S>,
    depth: u64,
    mut visit: impl FnMut(&ConvergentState<S>) -> Result<(), Error>,
) -> Result<(), Error> {
    let mut state = ConvergentState::seed(cf.b0().clone());
    for n in 1..=depth {
        let pq = cf.quotient(n)?;
        state = state.advance(&pq);
        visit(&state)?;
    }
    Ok(())
}

/// Approximants `A_n/B_n` for `n = 1..=depth`, in order.
///
/// Degenerate `0/0` forms are reported with the offending index.
pub fn evaluate<S: Scalar>(
    cf: &CoefficientSource<S>,
    depth: u64,
) -> Result<Vec<(u64, ExtComplex<S>)>, Error> {
    let mut out = Vec::with_capacity(depth as usize);
    walk(cf, depth, |st| {
        out.push((st.n(), st.approximant()?));
        Ok(())
    })?;
    Ok(out)
}

/// Memoizing view of a source's approximant sequence, indexed from 0
/// (`n = 0` is the value `b_0`). Used by lazy contractions that revisit
/// prefixes; interior mutability only caches deterministic values.
pub struct ApproximantCache<S: Scalar> {
    src: CoefficientSource<S>,
    inner: Mutex<CacheInner<S>>,
}

struct CacheInner<S: Scalar> {
    state: ConvergentState<S>,
    vals: Vec<ExtComplex<S>>,
}

impl<S: Scalar> ApproximantCache<S> {
    pub fn new(src: CoefficientSource<S>) -> Self {
        let state = ConvergentState::seed(src.b0().clone());
        let vals = vec![ExtComplex::Finite(src.b0().clone())];
        ApproximantCache {
            src,
            inner: Mutex::new(CacheInner { state, vals }),
        }
    }

    pub fn source(&self) -> &CoefficientSource<S> {
        &self.src
    }

    /// Approximant `A_n/B_n` (with `A_0/B_0 = b_0`).
    pub fn approximant(&self, n: u64) -> Result<ExtComplex<S>, Error> {
        let mut inner = self.inner.lock().expect("cache poisoned");
        while (inner.vals.len() as u64) <= n {
            let next = inner.state.n() + 1;
            let pq = self.src.quotient(next)?;
            inner.state = inner.state.advance(&pq);
            let val = inner.state.approximant()?;
            inner.vals.push(val);
        }
        Ok(inner.vals[n as usize].clone())
    }
}
