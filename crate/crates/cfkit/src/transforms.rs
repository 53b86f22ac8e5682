//! Structure-preserving rewrites of continued fractions.
//!
//! Equivalence transformations rescale `(a_n, b_n)` by factors `r_n r_{n-1}`
//! and `r_n` without changing any classical approximant. On top of them sit
//! the unit-numerator form `K 1/b'_n`, the unit-denominator form
//! `b_0 + K c_n/1`, and the odd/even parts, built through the
//! prescribed-approximant construction: the explicit continued fraction
//! whose approximant sequence equals a given sequence of pairwise-distinct
//! consecutive values.
//!
//! All transforms are lazy: output coefficient `n` is computed on demand
//! from input coefficients of index at most `2n + 2`, so unbounded sources
//! stay unbounded. Recursively defined factor sequences are memoized behind
//! a mutex; the cached values are deterministic.

use crate::cf::{ApproximantCache, CoefficientSource, PartialQuotient};
use crate::error::Error;
use crate::numerics::{ExtComplex, Scalar};
use std::sync::{Arc, Mutex};

/// Nonzero multipliers `r_n` (1-based) of an equivalence transformation,
/// with the implicit `r_0 = 1`.
pub struct EquivalenceFactors<S: Scalar> {
    rule: Arc<dyn Fn(u64) -> Result<S, Error> + Send + Sync>,
}

impl<S: Scalar> Clone for EquivalenceFactors<S> {
    fn clone(&self) -> Self {
        EquivalenceFactors {
            rule: Arc::clone(&self.rule),
        }
    }
}

impl<S: Scalar> EquivalenceFactors<S> {
    pub fn from_rule<F>(rule: F) -> Self
    where
        F: Fn(u64) -> Result<S, Error> + Send + Sync + 'static,
    {
        EquivalenceFactors {
            rule: Arc::new(rule),
        }
    }

    pub fn from_values(values: Vec<S>) -> Self {
        EquivalenceFactors {
            rule: Arc::new(move |n| {
                values
                    .get((n - 1) as usize)
                    .cloned()
                    .ok_or(Error::IndexOutOfRange {
                        index: n,
                        len: values.len() as u64,
                    })
            }),
        }
    }

    /// `r_n`, with `r_0 = 1`; zero factors are rejected here.
    pub fn factor(&self, ctx: S::Ctx, n: u64) -> Result<S, Error> {
        if n == 0 {
            return Ok(S::one(ctx));
        }
        let r = (self.rule)(n)?;
        if r.is_zero() {
            return Err(Error::ZeroEquivalenceFactor { index: n });
        }
        Ok(r)
    }
}

/// Equivalence transformation: `a'_n = r_n r_{n-1} a_n`, `b'_n = r_n b_n`,
/// `b'_0 = b_0`. Every classical approximant is preserved exactly.
pub fn apply_equivalence<S: Scalar>(
    cf: &CoefficientSource<S>,
    r: &EquivalenceFactors<S>,
) -> CoefficientSource<S> {
    let src = cf.clone();
    let r = r.clone();
    let ctx = cf.ctx();
    CoefficientSource::from_rule(cf.b0().clone(), cf.len(), move |n| {
        let pq = src.quotient(n)?;
        let rn = r.factor(ctx, n)?;
        let rn1 = r.factor(ctx, n - 1)?;
        PartialQuotient::new(rn.mul(&rn1).mul(pq.a()), rn.mul(pq.b()))
    })
}

/// Memoized recursive factor sequence `r_n = f(r_{n-1}, quotient_n)`.
struct RecursiveFactors<S: Scalar> {
    src: CoefficientSource<S>,
    cache: Mutex<Vec<S>>, // cache[k] = r_{k+1}
    step: fn(&S, &PartialQuotient<S>, u64) -> Result<S, Error>,
}

impl<S: Scalar> RecursiveFactors<S> {
    fn new(
        src: CoefficientSource<S>,
        step: fn(&S, &PartialQuotient<S>, u64) -> Result<S, Error>,
    ) -> Self {
        RecursiveFactors {
            src,
            cache: Mutex::new(Vec::new()),
            step,
        }
    }

    fn factor(&self, n: u64) -> Result<S, Error> {
        let ctx = self.src.ctx();
        if n == 0 {
            return Ok(S::one(ctx));
        }
        let mut cache = self.cache.lock().expect("factor cache poisoned");
        while (cache.len() as u64) < n {
            let k = cache.len() as u64 + 1;
            let prev = if k == 1 {
                S::one(ctx)
            } else {
                cache[(k - 2) as usize].clone()
            };
            let pq = self.src.quotient(k)?;
            let r = (self.step)(&prev, &pq, k)?;
            cache.push(r);
        }
        Ok(cache[(n - 1) as usize].clone())
    }
}

/// Equivalent fraction with every partial numerator equal to 1, realized by
/// the forced factors `r_n = 1/(a_n r_{n-1})`. Approximants are preserved.
pub fn to_unit_numerator<S: Scalar>(cf: &CoefficientSource<S>) -> CoefficientSource<S> {
    let ctx = cf.ctx();
    let factors = Arc::new(RecursiveFactors::new(cf.clone(), |prev, pq, k| {
        let ar = pq.a().mul(prev);
        S::one(ar.ctx())
            .div(&ar)
            .ok_or(Error::ZeroPartialNumerator { index: k })
    }));
    let src = cf.clone();
    CoefficientSource::from_rule(cf.b0().clone(), cf.len(), move |n| {
        let rn = factors.factor(n)?;
        let pq = src.quotient(n)?;
        PartialQuotient::new(S::one(ctx), rn.mul(pq.b()))
    })
}

/// Equivalent fraction with every partial denominator equal to 1:
/// `c_1 = a_1/b_1`, `c_n = a_n/(b_n b_{n-1})`. Errors lazily on a zero
/// partial denominator.
pub fn to_unit_denominator<S: Scalar>(cf: &CoefficientSource<S>) -> CoefficientSource<S> {
    let ctx = cf.ctx();
    let src = cf.clone();
    CoefficientSource::from_rule(cf.b0().clone(), cf.len(), move |n| {
        let pq = src.quotient(n)?;
        let bn = pq.b();
        if bn.is_zero() {
            return Err(Error::ZeroPartialDenominator { index: n });
        }
        let prev_b = if n == 1 {
            S::one(ctx)
        } else {
            let prev = src.quotient(n - 1)?;
            if prev.b().is_zero() {
                return Err(Error::ZeroPartialDenominator { index: n - 1 });
            }
            prev.b().clone()
        };
        let c = pq
            .a()
            .div(&bn.mul(&prev_b))
            .expect("checked nonzero denominators");
        PartialQuotient::new(c, S::one(ctx))
    })
}

/// The continued fraction whose approximant sequence is exactly the
/// prescribed values, from the classical construction:
///
/// `K_0 + (K_1-K_0)/1 + (K_1-K_2)/(K_2-K_0) + ...`, with
/// `a_n = (K_{n-2}-K_{n-3})(K_{n-1}-K_n)` and `b_n = K_n - K_{n-2}` for
/// `n >= 3`.
///
/// Requires consecutive values distinct (`K_i != K_{i-1}`); its
/// unit-denominator variant is reachable through [`to_unit_denominator`].
pub fn bernoulli_cf<S: Scalar>(values: &[S]) -> Result<CoefficientSource<S>, Error> {
    if values.is_empty() {
        return Err(Error::InvalidInput {
            msg: "prescribed approximant sequence is empty".to_string(),
        });
    }
    for i in 1..values.len() {
        if values[i] == values[i - 1] {
            return Err(Error::ConsecutiveEqualValues { index: i as u64 });
        }
    }
    let vals: Arc<Vec<S>> = Arc::new(values.to_vec());
    let len = (vals.len() - 1) as u64;
    let fetch = move |j: u64| -> Result<S, Error> {
        vals.get(j as usize)
            .cloned()
            .ok_or(Error::IndexOutOfRange {
                index: j,
                len: len + 1,
            })
    };
    Ok(bernoulli_rule(values[0].clone(), Some(len), fetch))
}

/// Lazy flavor of [`bernoulli_cf`]: `value(j)` yields `K_j` on demand.
/// The distinctness precondition is enforced as values are consumed.
pub fn bernoulli_rule<S, F>(k0: S, len: Option<u64>, value: F) -> CoefficientSource<S>
where
    S: Scalar,
    F: Fn(u64) -> Result<S, Error> + Send + Sync + 'static,
{
    let ctx = k0.ctx();
    let value = Arc::new(value);
    CoefficientSource::from_rule(k0, len, move |n| {
        let k = |j: u64| (value)(j);
        let distinct = |lo: &S, hi: &S, idx: u64| -> Result<(), Error> {
            if lo == hi {
                Err(Error::ConsecutiveEqualValues { index: idx })
            } else {
                Ok(())
            }
        };
        match n {
            1 => {
                let (k0, k1) = (k(0)?, k(1)?);
                distinct(&k0, &k1, 1)?;
                PartialQuotient::new(k1.sub(&k0), S::one(ctx))
            }
            2 => {
                let (k0, k1, k2) = (k(0)?, k(1)?, k(2)?);
                distinct(&k1, &k2, 2)?;
                PartialQuotient::new(k1.sub(&k2), k2.sub(&k0))
            }
            n => {
                let km3 = k(n - 3)?;
                let km2 = k(n - 2)?;
                let km1 = k(n - 1)?;
                let kn = k(n)?;
                distinct(&km3, &km2, n - 2)?;
                distinct(&km1, &kn, n)?;
                PartialQuotient::new(km2.sub(&km3).mul(&km1.sub(&kn)), kn.sub(&km2))
            }
        }
    })
}

fn finite_approximant<S: Scalar>(
    cache: &ApproximantCache<S>,
    n: u64,
) -> Result<S, Error> {
    match cache.approximant(n)? {
        ExtComplex::Finite(v) => Ok(v),
        ExtComplex::Infinity => Err(Error::InfiniteApproximant { index: n }),
    }
}

/// The even part: the continued fraction whose `n`-th approximant equals
/// `A_{2n}/B_{2n}` of the source wherever defined, built by the
/// prescribed-approximant construction on the even subsequence seeded at
/// `K_0 = b_0`.
///
/// Fails (lazily, with the subsequence index) on a repeated consecutive
/// even approximant or an even convergent passing through infinity.
pub fn even_part<S: Scalar>(cf: &CoefficientSource<S>) -> CoefficientSource<S> {
    let cache = Arc::new(ApproximantCache::new(cf.clone()));
    let len = cf.len().map(|l| l / 2);
    bernoulli_rule(cf.b0().clone(), len, move |j| {
        finite_approximant(&cache, 2 * j)
    })
}

/// The odd part: approximants equal to `A_{2n+1}/B_{2n+1}` of the source,
/// seeded at `K_0 = A_1/B_1` (which fixes the zero-th approximant the
/// definition prescribes).
///
/// Eagerly evaluates `A_1/B_1`; hence fallible up front, unlike
/// [`even_part`].
pub fn odd_part<S: Scalar>(cf: &CoefficientSource<S>) -> Result<CoefficientSource<S>, Error> {
    if cf.len() == Some(0) {
        return Err(Error::IndexOutOfRange { index: 1, len: 0 });
    }
    let cache = Arc::new(ApproximantCache::new(cf.clone()));
    let k0 = finite_approximant(&cache, 1)?;
    let len = cf.len().map(|l| (l - 1) / 2);
    Ok(bernoulli_rule(k0, len, move |j| {
        finite_approximant(&cache, 2 * j + 1)
    }))
}

/// Exact coefficient-wise equality of two unit-denominator fractions
/// through `depth` (the uniqueness statement for `K a_n/1` forms: equal
/// approximant sequences force equal coefficients).
///
/// Errors if either fraction has some `b_n != 1` within range.
pub fn unit_denominator_equal<S: Scalar>(
    cf1: &CoefficientSource<S>,
    cf2: &CoefficientSource<S>,
    depth: u64,
) -> Result<bool, Error> {
    let one1 = S::one(cf1.ctx());
    let one2 = S::one(cf2.ctx());
    for n in 1..=depth {
        let p1 = cf1.quotient(n)?;
        let p2 = cf2.quotient(n)?;
        if *p1.b() != one1 {
            return Err(Error::NotUnitDenominator { index: n });
        }
        if *p2.b() != one2 {
            return Err(Error::NotUnitDenominator { index: n });
        }
        if p1.a() != p2.a() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::evaluate;
    use crate::numerics::ExactComplex;
    use crate::qcf::registry;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int(n: i64) -> ExactComplex {
        ExactComplex::from_i64((), n)
    }

    fn q(n: i64, d: i64) -> ExactComplex {
        ExactComplex::from_ratio((), n, d)
    }

    fn rr_at(v: i64) -> CoefficientSource<ExactComplex> {
        registry::lookup("rogers-ramanujan")
            .unwrap()
            .family()
            .unwrap()
            .instantiate(&int(v))
            .unwrap()
    }

    fn approximants(
        cf: &CoefficientSource<ExactComplex>,
        depth: u64,
    ) -> Vec<ExtComplex<ExactComplex>> {
        evaluate(cf, depth).unwrap().into_iter().map(|(_, v)| v).collect()
    }

    #[test]
    fn equivalence_identity_and_rr_pattern() {
        let cf = rr_at(2);
        let id = EquivalenceFactors::from_rule(|_| Ok(int(1)));
        let same = apply_equivalence(&cf, &id);
        for n in 1..=10 {
            assert_eq!(same.quotient(n).unwrap(), cf.quotient(n).unwrap());
        }
        // r_{2n-1} = r_{2n} = q^{-n} turns a_n = q^n into all-ones
        // numerators with b' = (1/q, 1/q, 1/q^2, 1/q^2, ...).
        let r = EquivalenceFactors::from_rule(|n| {
            let k = n.div_ceil(2) as i64;
            Ok(q(1, 1 << k))
        });
        let hat = apply_equivalence(&cf, &r);
        for n in 1..=12u64 {
            let pq = hat.quotient(n).unwrap();
            let k = n.div_ceil(2) as i64;
            assert_eq!(pq.a(), &int(1), "a'_{n}");
            assert_eq!(pq.b(), &q(1, 1 << k), "b'_{n}");
        }
        assert_eq!(approximants(&hat, 8), approximants(&cf, 8));
    }

    #[test]
    fn equivalence_preserves_example_fraction_approximants() {
        let g = registry::example2_g::<ExactComplex>(());
        let r = EquivalenceFactors::from_rule(|n| Ok(q(((n % 5) + 1) as i64, 3)));
        let t = apply_equivalence(&g, &r);
        let vals = approximants(&t, 4);
        assert_eq!(
            vals,
            vec![
                ExtComplex::Finite(int(2)),
                ExtComplex::Finite(int(4)),
                ExtComplex::Finite(q(3, 2)),
                ExtComplex::Finite(q(7, 2)),
            ]
        );
    }

    #[test]
    fn unit_numerator_forces_rr_hat_coefficients() {
        // general q: b'_{2n-1} = b'_{2n} = q^{-n}, exactly.
        let cf = rr_at(3);
        let hat = to_unit_numerator(&cf);
        for n in 1..=40u64 {
            let pq = hat.quotient(n).unwrap();
            let k = n.div_ceil(2) as u32;
            assert_eq!(pq.a(), &int(1));
            assert_eq!(pq.b(), &q(1, 3i64.pow(k)));
        }
        // an already unit-numerator fraction is unchanged
        let unit = CoefficientSource::from_rule(int(0), None, |n| {
            PartialQuotient::new(int(1), q(1, n as i64))
        });
        let t = to_unit_numerator(&unit);
        for n in 1..=10 {
            assert_eq!(t.quotient(n).unwrap(), unit.quotient(n).unwrap());
        }
    }

    #[test]
    fn unit_numerator_of_example_fraction() {
        let g = registry::example2_g::<ExactComplex>(());
        let hat = to_unit_numerator(&g);
        let expect = [q(1, 2), int(-4), q(1, 10), q(-5, 8)];
        for (i, e) in expect.iter().enumerate() {
            let pq = hat.quotient(i as u64 + 1).unwrap();
            assert_eq!(pq.a(), &int(1));
            assert_eq!(pq.b(), e, "b'_{}", i + 1);
        }
        assert_eq!(approximants(&hat, 6), approximants(&g, 6));
    }

    #[test]
    fn unit_denominator_forms() {
        // b == 1 already: unchanged
        let cf = rr_at(2);
        let t = to_unit_denominator(&cf);
        for n in 1..=8 {
            assert_eq!(t.quotient(n).unwrap(), cf.quotient(n).unwrap());
        }
        // Goellnitz-Gordon at q = 2: c_1 = a_1/b_1 = 4/9
        let gg = registry::lookup("goellnitz-gordon")
            .unwrap()
            .family()
            .unwrap()
            .instantiate(&int(2))
            .unwrap();
        let t = to_unit_denominator(&gg);
        assert_eq!(t.quotient(1).unwrap().a(), &q(4, 9));
        assert_eq!(approximants(&t, 6), approximants(&gg, 6));
        // example fraction: c = (2, -1/2, -5/2, ...)
        let g = registry::example2_g::<ExactComplex>(());
        let t = to_unit_denominator(&g);
        assert_eq!(t.quotient(1).unwrap().a(), &int(2));
        assert_eq!(t.quotient(2).unwrap().a(), &q(-1, 2));
        assert_eq!(t.quotient(3).unwrap().a(), &q(-5, 2));
        assert_eq!(approximants(&t, 8), approximants(&g, 8));
        // a zero partial denominator is rejected with its index
        let bad = CoefficientSource::from_rule(int(0), None, |n| {
            PartialQuotient::new(int(1), int(if n == 3 { 0 } else { 1 }))
        });
        let t = to_unit_denominator(&bad);
        assert!(matches!(
            t.quotient(3),
            Err(Error::ZeroPartialDenominator { index: 3 })
        ));
    }

    #[test]
    fn bernoulli_matches_hand_construction() {
        let vals = [int(0), int(2), int(4), q(3, 2)];
        let cf = bernoulli_cf(&vals).unwrap();
        assert_eq!(cf.b0(), &int(0));
        assert_eq!(cf.len(), Some(3));
        let a: Vec<_> = (1..=3).map(|n| cf.quotient(n).unwrap().a().clone()).collect();
        let b: Vec<_> = (1..=3).map(|n| cf.quotient(n).unwrap().b().clone()).collect();
        assert_eq!(a, vec![int(2), int(-2), int(5)]);
        assert_eq!(b, vec![int(1), int(4), q(-1, 2)]);
        assert_eq!(
            approximants(&cf, 3),
            vec![
                ExtComplex::Finite(int(2)),
                ExtComplex::Finite(int(4)),
                ExtComplex::Finite(q(3, 2)),
            ]
        );
        // a single value is the constant fraction
        let c = bernoulli_cf(&[q(5, 3)]).unwrap();
        assert_eq!(c.len(), Some(0));
        assert_eq!(c.b0(), &q(5, 3));
        // consecutive equal values are rejected
        let err = bernoulli_cf(&[int(1), int(1)]).unwrap_err();
        assert!(matches!(err, Error::ConsecutiveEqualValues { index: 1 }));
    }

    #[test]
    fn bernoulli_roundtrips_example_fraction() {
        let g = registry::example2_g::<ExactComplex>(());
        let mut vals = vec![ExtComplex::Finite(g.b0().clone())];
        vals.extend(approximants(&g, 20));
        let finite: Vec<_> = vals
            .into_iter()
            .map(|v| v.into_finite().expect("finite approximants"))
            .collect();
        let re = bernoulli_cf(&finite).unwrap();
        assert_eq!(approximants(&re, 20), approximants(&g, 20));
    }

    #[test]
    fn even_part_of_example_fraction() {
        // even approximants are (n + 3n^2)/n^2: 4, 7/2, 10/3, ...
        let g = registry::example2_g::<ExactComplex>(());
        let even = even_part(&g);
        let vals = approximants(&even, 6);
        for (i, v) in vals.iter().enumerate() {
            let n = i as i64 + 1;
            assert_eq!(v, &ExtComplex::Finite(q(n + 3 * n * n, n * n)));
        }
    }

    #[test]
    fn odd_part_of_example_fraction() {
        // odd approximants are (n+1)/n, seeded at A_1/B_1 = 2.
        let g = registry::example2_g::<ExactComplex>(());
        let odd = odd_part(&g).unwrap();
        assert_eq!(odd.b0(), &int(2));
        let vals = approximants(&odd, 6);
        for (i, v) in vals.iter().enumerate() {
            let n = i as i64 + 2;
            assert_eq!(v, &ExtComplex::Finite(q(n + 1, n)));
        }
    }

    #[test]
    fn parts_match_subsequences_of_rr() {
        let cf = rr_at(2);
        let all = approximants(&cf, 14);
        let even = even_part(&cf);
        for (j, v) in approximants(&even, 6).into_iter().enumerate() {
            assert_eq!(v, all[2 * (j + 1) - 1], "even part at {}", j + 1);
        }
        let odd = odd_part(&cf).unwrap();
        assert_eq!(ExtComplex::Finite(odd.b0().clone()), all[0]);
        for (j, v) in approximants(&odd, 6).into_iter().enumerate() {
            assert_eq!(v, all[2 * (j + 1)], "odd part at {}", j + 1);
        }
    }

    #[test]
    fn parts_of_degenerate_shapes() {
        // constant fraction: even part is the same constant
        let c = CoefficientSource::constant(q(7, 3));
        let even = even_part(&c);
        assert_eq!(even.b0(), &q(7, 3));
        assert_eq!(even.len(), Some(0));
        // odd part of a constant fraction does not exist
        assert!(odd_part(&c).is_err());
        // single-quotient fraction: odd part is the constant A_1/B_1
        let single = CoefficientSource::from_quotients(
            int(1),
            vec![PartialQuotient::new(int(3), int(4)).unwrap()],
        );
        let odd = odd_part(&single).unwrap();
        assert_eq!(odd.len(), Some(0));
        assert_eq!(odd.b0(), &q(7, 4)); // (1*4 + 3)/4
        // repeated consecutive even approximant reported with its
        // subsequence index: prescribe A_2/B_2 = A_4/B_4 = 2.
        let osc = bernoulli_cf(&[int(0), int(1), int(2), int(3), int(2)]).unwrap();
        let even = even_part(&osc);
        let err = evaluate(&even, 2).unwrap_err();
        assert!(
            matches!(err, Error::ConsecutiveEqualValues { index: 2 }),
            "got {err:?}"
        );
    }

    #[test]
    fn unit_denominator_equality_examples() {
        let k2 = rr_at(2);
        let k3 = rr_at(3);
        assert!(unit_denominator_equal(&k2, &k2, 10).unwrap());
        assert!(!unit_denominator_equal(&k2, &k3, 10).unwrap());
        let g = registry::example2_g::<ExactComplex>(());
        assert!(matches!(
            unit_denominator_equal(&g, &g, 4),
            Err(Error::NotUnitDenominator { .. })
        ));
    }

    fn random_fraction(
        rng: &mut ChaCha8Rng,
        depth: u64,
        unit_safe: bool,
    ) -> CoefficientSource<ExactComplex> {
        let rat = |rng: &mut ChaCha8Rng, nonzero: bool| loop {
            let n = rng.gen_range(-9i64..=9);
            let d = rng.gen_range(1i64..=6);
            if !nonzero || n != 0 {
                return q(n, d);
            }
        };
        let quotients: Vec<_> = (0..depth)
            .map(|_| {
                PartialQuotient::new(rat(rng, true), rat(rng, unit_safe)).unwrap()
            })
            .collect();
        CoefficientSource::from_quotients(rat(rng, false), quotients)
    }

    #[test]
    fn random_fraction_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut lemma_checked = 0;
        for _ in 0..25 {
            let depth = rng.gen_range(3u64..40);
            let cf = random_fraction(&mut rng, depth, true);
            let base = match evaluate(&cf, depth) {
                Ok(v) => v,
                Err(_) => continue, // degenerate draw
            };

            // equivalence preserves approximants exactly
            let factors: Vec<_> = (0..depth)
                .map(|_| loop {
                    let n = rng.gen_range(-5i64..=5);
                    if n != 0 {
                        break q(n, rng.gen_range(1i64..=4));
                    }
                })
                .collect();
            let t = apply_equivalence(&cf, &EquivalenceFactors::from_values(factors));
            assert_eq!(evaluate(&t, depth).unwrap(), base);

            // contraction: parts equal the convergent subsequences
            let even = even_part(&cf);
            if let Ok(vals) = evaluate(&even, depth / 2) {
                for (j, v) in vals {
                    assert_eq!(v, base[(2 * j - 1) as usize].1, "even {j}");
                }
            }
            let values: Option<Vec<_>> = std::iter::once(Some(cf.b0().clone()))
                .chain(base.iter().map(|(_, v)| v.as_finite().cloned()))
                .collect();
            if let Some(values) = values {
                let distinct = values.windows(2).all(|w| w[0] != w[1]);
                if distinct {
                    // prescribed-approximant reconstruction and the
                    // unit-denominator uniqueness consequence
                    let re = bernoulli_cf(&values).unwrap();
                    assert_eq!(evaluate(&re, depth).unwrap(), base);
                    let u1 = to_unit_denominator(&re);
                    let u2 = to_unit_denominator(&cf);
                    match (evaluate(&u1, depth), evaluate(&u2, depth)) {
                        (Ok(v1), Ok(v2)) => {
                            assert_eq!(v1, v2);
                            assert!(unit_denominator_equal(&u1, &u2, depth).unwrap());
                            lemma_checked += 1;
                        }
                        _ => {}
                    }
                }
            }
        }
        assert!(lemma_checked >= 5, "too few non-degenerate draws: {lemma_checked}");
    }
}
