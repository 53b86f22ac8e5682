use super::registry;
use super::*;
use crate::numerics::{ExactComplex, FloatComplex, FloatReal, Precision, RealField, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn int(n: i64) -> ExactComplex {
    ExactComplex::from_i64((), n)
}

fn family(name: &str) -> QFamily {
    registry::lookup(name).unwrap().family().unwrap().clone()
}

#[test]
fn parse_g1_fourth_rule() {
    let p = parse_polynomial("q^4*x^4 + 7*q^3*x^3 + 3*q*x^2 + 2*x").unwrap();
    // at x = q^n: q^{4n+4} + 7 q^{3n+3} + 3 q^{2n+1} + 2 q^n
    for n in [0u64, 1, 2, 5] {
        let u = p.subst_q_power(n);
        let expect: Vec<(u64, i64)> = vec![(n, 2), (2 * n + 1, 3), (3 * n + 3, 7), (4 * n + 4, 1)];
        let got: Vec<(u64, BigInt)> = u.terms().map(|(d, c)| (d, c.clone())).collect();
        assert_eq!(
            got,
            expect
                .into_iter()
                .map(|(d, c)| (d, BigInt::from(c)))
                .collect::<Vec<_>>(),
            "n = {n}"
        );
    }
}

#[test]
fn parse_edge_cases() {
    assert!(parse_polynomial("0").unwrap().is_zero());
    let p = parse_polynomial("x + x").unwrap();
    assert_eq!(p.coefficient(0, 1), BigInt::from(2));
    let p = parse_polynomial("(q + 1)*(x + 2)").unwrap();
    assert_eq!(p.coefficient(1, 1), BigInt::from(1));
    assert_eq!(p.coefficient(1, 0), BigInt::from(2));
    assert_eq!(p.coefficient(0, 1), BigInt::from(1));
    assert_eq!(p.coefficient(0, 0), BigInt::from(2));
    // leading minus (display round-trip extension)
    let p = parse_polynomial("-3*q + x").unwrap();
    assert_eq!(p.coefficient(1, 0), BigInt::from(-3));
    // cancellation to zero
    assert!(parse_polynomial("q*x - q*x").unwrap().is_zero());
    // syntax errors carry a byte position
    match parse_polynomial("q^") {
        Err(crate::Error::PolynomialSyntax { pos, .. }) => assert_eq!(pos, 2),
        other => panic!("expected syntax error, got {other:?}"),
    }
    assert!(parse_polynomial("q + ").is_err());
    assert!(parse_polynomial("y").is_err());
    assert!(parse_polynomial("2**3").is_err());
    assert!(parse_polynomial("(q").is_err());
}

fn arb_poly() -> impl Strategy<Value = QPolynomial> {
    proptest::collection::vec((0u32..=12, 0u32..=12, -1_000_000i64..=1_000_000), 0..8).prop_map(
        |terms| {
            let mut p = QPolynomial::zero();
            for (dq, dx, c) in terms {
                p.add_term(dq, dx, BigInt::from(c));
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parser_print_roundtrip(p in arb_poly()) {
        let text = p.to_string();
        let back = parse_polynomial(&text).unwrap();
        prop_assert_eq!(back, p, "printed {}", text);
    }
}

/// The printed partial quotients of every registry family, as direct power
/// sums evaluated independently of the polynomial machinery.
fn printed_quotient(name: &str, m: u64, q: &ExactComplex) -> (ExactComplex, ExactComplex) {
    let pw = |e: u64| q.pow_u(e);
    let one = ExactComplex::one(());
    let a = match name {
        "rogers-ramanujan" => pw(m),
        "s1" => {
            if m % 2 == 1 {
                pw(m)
            } else {
                let n = m / 2 - 1;
                pw(n + 1).add(&pw(2 * n + 2))
            }
        }
        "s2" => {
            if m % 2 == 1 {
                let n = (m - 1) / 2;
                pw(2 * n + 1).add(&pw(4 * n + 2))
            } else {
                let n = m / 2 - 1;
                pw(4 * n + 4)
            }
        }
        "s3" => pw(m).add(&pw(2 * m)),
        "g1" => {
            let n = (m - 1) / 4;
            let mul = |c: i64, e: u64| int(c).mul(&pw(e));
            match (m - 1) % 4 {
                0 => pw(4 * n + 1).add(&mul(3, 3 * n + 1)).add(&mul(2, 2 * n + 1)),
                1 => pw(4 * n + 2).add(&mul(2, 3 * n + 2)).add(&mul(7, 2 * n + 1)),
                2 => pw(4 * n + 3).add(&mul(5, 3 * n + 2)).add(&mul(2, 2 * n + 3)),
                _ => pw(4 * n + 4)
                    .add(&mul(7, 3 * n + 3))
                    .add(&mul(3, 2 * n + 1))
                    .add(&mul(2, n)),
            }
        }
        "goellnitz-gordon" => pw(2 * m),
        "g2" => {
            let n = (m - 1) / 4;
            let mul = |c: i64, e: u64| int(c).mul(&pw(e));
            match (m - 1) % 4 {
                0 => pw(12 * n + 3).add(&mul(3, 6 * n + 2)).add(&mul(2, 4 * n + 2)),
                1 => pw(12 * n + 6).add(&mul(2, 6 * n + 4)).add(&mul(7, 4 * n + 2)),
                2 => pw(12 * n + 9).add(&mul(5, 6 * n + 4)).add(&mul(2, 4 * n + 6)),
                _ => pw(12 * n + 12)
                    .add(&mul(7, 6 * n + 6))
                    .add(&mul(3, 4 * n + 2))
                    .add(&mul(2, 2 * n)),
            }
        }
        other => panic!("no printed rule for {other}"),
    };
    let b = match name {
        "goellnitz-gordon" => one.add(&pw(2 * m + 1)),
        "g2" => {
            let n = m / 4;
            match m % 4 {
                0 => pw(4 * n + 1).add(&pw(n)).add(&one),
                1 => pw(4 * n + 2).add(&pw(2 * n)).add(&one),
                2 => pw(4 * n + 3).add(&pw(2 * n)).add(&one),
                _ => pw(4 * n + 4).add(&pw(3 * n)).add(&one),
            }
        }
        _ => one,
    };
    (a, b)
}

#[test]
fn instantiation_matches_printed_quotients() {
    let q2 = int(2);
    let qneg = ExactComplex::from_ratio((), -3, 1);
    for name in [
        "rogers-ramanujan",
        "s1",
        "s2",
        "s3",
        "g1",
        "goellnitz-gordon",
        "g2",
    ] {
        let fam = family(name);
        for q in [&q2, &qneg] {
            let cf = fam.instantiate(q).unwrap();
            for m in 1..=50u64 {
                let (ea, eb) = printed_quotient(name, m, q);
                let pq = cf.quotient(m).unwrap();
                assert_eq!(pq.a(), &ea, "{name} a_{m} at q={q}");
                assert_eq!(pq.b(), &eb, "{name} b_{m} at q={q}");
            }
        }
    }
}

#[test]
fn instantiation_spot_values() {
    // a-sequence of the period-2 family s1 at q = 2 starts 2, 6, 8, 20
    let cf = family("s1").instantiate(&int(2)).unwrap();
    let a: Vec<ExactComplex> = (1..=4).map(|m| cf.quotient(m).unwrap().a().clone()).collect();
    assert_eq!(a, vec![int(2), int(6), int(8), int(20)]);
    // rogers-ramanujan at q = 2: a = 2, 4, 8, 16; b = 1
    let cf = family("rogers-ramanujan").instantiate(&int(2)).unwrap();
    for m in 1..=4u64 {
        assert_eq!(cf.quotient(m).unwrap().a(), &int(1 << m));
        assert_eq!(cf.quotient(m).unwrap().b(), &int(1));
    }
    // goellnitz-gordon at q = 2: b_0 = 1 + q = 3, b_1 = 1 + q^3 = 9
    let gg = family("goellnitz-gordon");
    let cf = gg.instantiate(&int(2)).unwrap();
    assert_eq!(cf.b0(), &int(3));
    assert_eq!(cf.quotient(1).unwrap().b(), &int(9));
    // instantiation at q = 0 is rejected
    assert!(gg.instantiate(&int(0)).is_err());
}

#[test]
fn degree_profiles_of_registry_families() {
    match degree_profile(&family("g1")).unwrap() {
        DegreeProfile::UnitDenominator { c3, leading, r1 } => {
            assert_eq!(c3, 1);
            assert_eq!(leading, BigInt::from(1));
            assert_eq!(r1, 1);
        }
        other => panic!("unexpected profile {other:?}"),
    }
    match degree_profile(&family("g2")).unwrap() {
        DegreeProfile::General {
            a,
            b,
            r1,
            r2,
            leading_a,
            leading_b,
        } => {
            assert_eq!((a, b, r1, r2), (3, 1, 3, 1));
            assert_eq!(leading_a, BigInt::from(1));
            assert_eq!(leading_b, BigInt::from(1));
        }
        other => panic!("unexpected profile {other:?}"),
    }
    // every registry family passes its degree law
    for name in ["rogers-ramanujan", "s1", "s2", "s3", "goellnitz-gordon"] {
        assert!(degree_profile(&family(name)).is_ok(), "{name}");
    }
    match degree_profile(&family("rogers-ramanujan")).unwrap() {
        DegreeProfile::UnitDenominator { c3, .. } => assert_eq!(c3, 1),
        _ => unreachable!(),
    }
}

#[test]
fn degree_profile_violations() {
    // f_1 = x, f_2 = 3x: unequal leading coefficients
    let fam = QFamily::unit_denominator(
        "bad",
        2,
        vec![
            parse_polynomial("x").unwrap(),
            parse_polynomial("3*x").unwrap(),
        ],
    )
    .unwrap();
    match degree_profile(&fam).unwrap_err() {
        DegreeViolation::LeadingCoefficient { seq, .. } => {
            assert_eq!(seq, SeqKind::Numerator)
        }
        other => panic!("expected leading-coefficient violation, got {other:?}"),
    }
    // x + q^3 has envelope degree n but degree 3 for small n: the step law
    // breaks within the explicitly checked range.
    let fam =
        QFamily::unit_denominator("bad2", 1, vec![parse_polynomial("x + q^3").unwrap()]).unwrap();
    assert!(degree_profile(&fam).is_err());
}

#[test]
fn dominance_tail_bounds() {
    let gamma = BigRational::new(BigInt::from(3), BigInt::from(2));
    // single-term rule dominates immediately
    let f = parse_polynomial("q*x").unwrap();
    assert_eq!(dominance_tail(&f, &gamma), Some(0));
    // the period-4 rule f_1 needs a short tail
    let f = parse_polynomial("q*x^4 + 3*q*x^3 + 2*q*x^2").unwrap();
    let tail = dominance_tail(&f, &gamma).unwrap();
    assert!(tail > 0 && tail < 20, "tail {tail}");
    // at the certified index, sum of non-leading magnitudes is at most
    // half the leading magnitude: check with exact squares
    let q = ExactComplex::from_ratio((), 3, 2);
    let x = q.pow_u(tail);
    let lead_sq = q.mul(&x.pow_u(4)).abs_sq();
    let r1_sq = int(3).mul(&q).mul(&x.pow_u(3)).abs_sq();
    let r2_sq = int(2).mul(&q).mul(&x.pow_u(2)).abs_sq();
    // (|r1| + |r2|)^2 <= 2(|r1|^2 + |r2|^2); the certificate demands
    // |r1| + |r2| <= lead/2, i.e. squares comparison with slack 2.
    let two = BigRational::new(BigInt::from(2), BigInt::from(1));
    assert!(two * (r1_sq + r2_sq) <= lead_sq * BigRational::new(BigInt::from(1), BigInt::from(4)) * BigRational::new(BigInt::from(2), BigInt::from(1)));
    // gamma <= 1 yields no certificate
    assert_eq!(
        dominance_tail(&f, &BigRational::new(BigInt::from(1), BigInt::from(1))),
        None
    );
}

#[test]
fn family_json_roundtrip() {
    let fam = family("g2");
    let text = fam.to_json();
    let back = QFamily::from_json(&text).unwrap();
    assert_eq!(back, fam);
    assert!(text.contains("\"form\": \"general\""));

    // a stated b0 inconsistent with g_0(1) is rejected
    let bad = r#"{
        "name": "broken",
        "form": "general",
        "k": 1,
        "b0": "q + 7",
        "f": ["q^2*x^2"],
        "g": ["q*x^2 + 1"]
    }"#;
    assert!(matches!(
        QFamily::from_json(bad),
        Err(crate::Error::InvalidFamily { .. })
    ));
    // unknown registry name
    assert!(matches!(
        registry::lookup("nope"),
        Err(crate::Error::UnknownFamily { .. })
    ));
}

#[test]
fn ratio_of_consecutive_odd_even_terms_approaches_degree_growth() {
    // |a_{2i+1}(q)/a_{2i}(q)| / |q|^(d_{2i+1} - d_{2i}) -> 1 for |q| > 1.
    let p = Precision(128);
    for name in ["rogers-ramanujan", "s1", "s2", "s3", "g1"] {
        let fam = family(name);
        for qv in [1.5f64, 2.0, 3.0] {
            let q = FloatComplex::from_real(FloatReal::from_f64(qv, p));
            let cf = fam.instantiate(&q).unwrap();
            let i = 200u64;
            let a_hi = cf.quotient(2 * i + 1).unwrap();
            let a_lo = cf.quotient(2 * i).unwrap();
            let d_hi = fam.numerator_poly(2 * i + 1).degree().unwrap();
            let d_lo = fam.numerator_poly(2 * i).degree().unwrap();
            let growth = FloatReal::from_f64(qv, p);
            let mut scale = FloatReal::one(p);
            for _ in 0..(d_hi - d_lo) {
                scale = scale.mul(&growth);
            }
            let ratio = a_hi
                .a()
                .abs()
                .div(&a_lo.a().abs())
                .unwrap()
                .div(&scale)
                .unwrap();
            let err = (ratio.to_f64() - 1.0).abs();
            assert!(err < 1e-6, "{name} at q={qv}: ratio error {err}");
        }
    }
}
