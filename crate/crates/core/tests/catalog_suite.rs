//! Catalog records, parameter sampling and the verifier, including negative controls.

use std::collections::BTreeSet;

use appell_core::catalog::{
    admissibility, catalog_document, catalog_entries, find_record, sample_parameters, verify_identity, Domain,
    IdentityRecord, Mode, Outcome, Sides, SCHEMA_VERSION,
};
use appell_core::exactnum::{int, rat, Rational};
use appell_core::hyperseries::{appell_terminating_eval, AppellSpec, ParamMap};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn sample(pairs: &[(&str, Rational)]) -> ParamMap {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn with_rhs(mut r: IdentityRecord, rhs: &str) -> IdentityRecord {
    match &mut r.sides {
        Sides::Series { rhs: old, .. } => *old = rhs.to_string(),
        _ => panic!("{} is not a series record", r.id),
    }
    r
}

#[test]
fn records_are_unique_and_valid() {
    let all = catalog_entries();
    let ids: BTreeSet<&str> = all.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids.len(), all.len());
    for r in &all {
        r.validate().unwrap_or_else(|e| panic!("{e}"));
    }
    for mode in [Mode::Exact, Mode::Proportional, Mode::SameOde, Mode::SolvesSystem, Mode::ExpectFail] {
        assert!(all.iter().any(|r| r.mode == mode), "no {mode} record");
    }
}

#[test]
fn catalog_json_round_trips() {
    let all = catalog_entries();
    let doc = catalog_document(&all);
    assert_eq!(doc["schema_version"], SCHEMA_VERSION);
    let back: Vec<IdentityRecord> = serde_json::from_value(doc["records"].clone()).unwrap();
    assert_eq!(back, all);
}

#[test]
fn unknown_record_is_reported() {
    assert!(find_record("no-such-identity").is_err());
}

#[test]
fn sampling_is_deterministic_and_admissible() {
    for r in catalog_entries() {
        let a = sample_parameters(&r, 7, 3).unwrap();
        let b = sample_parameters(&r, 7, 3).unwrap();
        assert_eq!(a, b, "{}", r.id);
        for p in &a {
            admissibility(&r, p).unwrap_or_else(|e| panic!("{}: {e}", r.id));
            for decl in &r.params {
                let v = &p[&decl.name];
                match decl.domain {
                    Domain::Rational => {
                        assert!(v.numer().magnitude() <= &20u32.into() && v.denom() <= &20.into());
                        assert!(!v.is_integer());
                    }
                    Domain::Integer { min, max } => assert!(v.is_integer() && *v >= int(min) && *v <= int(max)),
                }
            }
        }
    }
}

#[test]
fn shared_declarations_give_shared_samples() {
    let wrong = find_record("f2x1-wrongformula").unwrap();
    let right = find_record("hpg32-line-one").unwrap();
    assert_eq!(sample_parameters(&wrong, 3, 10).unwrap(), sample_parameters(&right, 3, 10).unwrap());
}

#[test]
fn constraints_define_dependent_parameters() {
    let r = find_record("f4-f2-quadratic-y").unwrap();
    for p in sample_parameters(&r, 1, 5).unwrap() {
        assert_eq!(p["c"], &p["b"] * int(2));
    }
    let mut bad = sample_parameters(&r, 1, 1).unwrap().remove(0);
    bad.insert("c".into(), Rational::one());
    assert!(admissibility(&r, &bad).is_err());
}

#[test]
fn inadmissible_samples_are_degenerate() {
    let r = find_record("bailey-separation").unwrap();
    // a + b − c is an integer here.
    let rep = verify_identity(&r, &sample(&[("a", rat(1, 2)), ("b", rat(1, 3)), ("c", rat(-1, 6))]), None);
    assert_eq!(rep.outcome, Outcome::Degenerate);
}

#[test]
fn bailey_separation_at_a_fixed_point() {
    let r = find_record("bailey-separation").unwrap();
    let rep = verify_identity(&r, &sample(&[("a", rat(1, 2)), ("b", rat(1, 3)), ("c", rat(1, 5))]), None);
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.order, 8);
}

#[test]
fn f2_separation_at_a_fixed_point() {
    let r = find_record("f2-separation").unwrap();
    let rep = verify_identity(&r, &sample(&[("b1", rat(1, 3)), ("b2", rat(1, 4))]), None);
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn dih12_terminating_sums_have_four_terms() {
    let r = find_record("dih12").unwrap();
    let rep = verify_identity(&r, &sample(&[("a", rat(1, 3)), ("k", int(1)), ("l", int(1))]), None);
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.term_counts.len(), 50);
    assert!(rep.term_counts.iter().all(|&n| n == 4));
}

#[test]
fn perturbed_identities_fail() {
    let p = sample(&[("a", rat(1, 2)), ("b", rat(1, 3)), ("c", rat(1, 5))]);
    let bad = with_rhs(find_record("bailey-separation").unwrap(), "pFq([a, b], [c]; x) * pFq([a, b], [a+b-c+2]; y)");
    let rep = verify_identity(&bad, &p, None);
    assert_eq!(rep.outcome, Outcome::Fail);
    assert!(rep.detail.unwrap().contains("y^1"));

    let r = find_record("f1-solution-x-infinity").unwrap();
    let mut bad = r.clone();
    if let Sides::Solution { candidate, .. } = &mut bad.sides {
        *candidate = "u^a * F1(a, 1+a-c, b2, 2+a-b1; u, v)".into();
    }
    let p = sample_parameters(&r, 0, 1).unwrap().remove(0);
    assert!(verify_identity(&r, &p, None).passed());
    assert_eq!(verify_identity(&bad, &p, None).outcome, Outcome::Fail);
}

#[test]
fn perturbed_equations_fail() {
    let r = find_record("hpg32-line-zero").unwrap();
    let p = sample_parameters(&r, 0, 1).unwrap().remove(0);
    assert!(verify_identity(&r, &p, None).passed());
    let mut bad = r.clone();
    let text = serde_json::to_string(&bad.sides).unwrap().replace("\"c1\"]", "\"c1+1\"]");
    bad.sides = serde_json::from_str(&text).unwrap();
    assert_ne!(bad.sides, r.sides);
    let rep = verify_identity(&bad, &p, None);
    assert_eq!(rep.outcome, Outcome::Fail);
}

#[test]
fn proportional_records_report_the_ratio() {
    let r = find_record("f1-line-one-series").unwrap();
    let p = sample_parameters(&r, 0, 1).unwrap().remove(0);
    let rep = verify_identity(&r, &p, None);
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.ratio.is_some());
    let bad = with_rhs(r, "pFq([a, b1], [c]; x)");
    assert_eq!(verify_identity(&bad, &p, None).outcome, Outcome::Fail);
}

#[test]
fn wrong_formula_fails_through_divergence() {
    let r = find_record("f2x1-wrongformula").unwrap();
    for p in sample_parameters(&r, 0, 3).unwrap() {
        let rep = verify_identity(&r, &p, None);
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.detail.unwrap().contains("diverges"));
    }
}

/// Direct double sum of a terminating F2(a; −k, −l; −2k, −2l; x, y).
fn f2_reference(a: &Rational, k: i64, l: i64, x: &Rational, y: &Rational) -> Rational {
    let poch = |p: &Rational, n: i64| (0..n).fold(Rational::one(), |acc, j| acc * (p + int(j)));
    let mut s = Rational::zero();
    for m in 0..=k {
        for n in 0..=l {
            let num = poch(a, m + n) * poch(&int(-k), m) * poch(&int(-l), n);
            let den = poch(&int(-2 * k), m) * poch(&int(-2 * l), n) * poch(&int(1), m) * poch(&int(1), n);
            s += num / den * x.pow(m as i32) * y.pow(n as i32);
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn terminating_f2_matches_direct_sum(
        an in -20i64..=20, ad in 1i64..=20, k in 0i64..=3, l in 0i64..=3,
        xn in -9i64..=9, xd in 1i64..=9, yn in -9i64..=9, yd in 1i64..=9,
    ) {
        let a = rat(an, ad);
        // An integer `a ≤ 0` truncates the support further.
        prop_assume!(!a.is_integer());
        let (x, y) = (rat(xn, xd), rat(yn, yd));
        let spec = AppellSpec::f2(a.clone(), int(-k), int(-l), int(-2 * k), int(-2 * l));
        let v = appell_terminating_eval(&spec, &x, &y).unwrap();
        prop_assert_eq!(v.value, f2_reference(&a, k, l, &x, &y));
        prop_assert_eq!(v.terms as i64, (k + 1) * (l + 1));
    }

    #[test]
    fn samples_satisfy_constraints_for_any_seed(seed in any::<u64>()) {
        for id in ["f4-f2-quadratic-y", "f2-xy2", "dih32", "f1-line-one-series"] {
            let r = find_record(id).unwrap();
            for p in sample_parameters(&r, seed, 2).unwrap() {
                prop_assert!(admissibility(&r, &p).is_ok());
            }
        }
    }
}
