//! Elimination engine against equations derived by hand from the PDE systems.

use appell_core::appellpde::{minimal_ode, Curve, OdeOutcome, SearchBounds};
use appell_core::exactnum::{int, rat, RatFunc, Rational, UniPoly};
use appell_core::fuchsode::{annihilates, euler, hpg32, lode_equal, pullback_transform, symmetric_square, Lode, ThetaFactor};
use appell_core::hyperseries::{expand, parse_expression, AppellSpec, ParamMap};

fn poly(c: &[Rational]) -> RatFunc {
    RatFunc::from_poly(UniPoly::new(c.to_vec()))
}

fn t() -> RatFunc {
    RatFunc::t()
}

fn derive(spec: AppellSpec, x: RatFunc, y: RatFunc) -> Lode {
    match minimal_ode(&spec, &Curve::new(x, y).unwrap(), SearchBounds::default()).unwrap() {
        OdeOutcome::Found(l) => l,
        other => panic!("no equation: {other:?}"),
    }
}

fn quadratic_locus() -> (RatFunc, RatFunc) {
    (&t() * &t(), poly(&[int(1), int(-2), int(1)]))
}

#[test]
fn f2_on_singular_lines() {
    let (a, b1, b2, c1, c2) = (rat(1, 3), rat(2, 5), rat(-1, 7), rat(3, 4), rat(5, 6));
    let spec = || AppellSpec::f2(a.clone(), b1.clone(), b2.clone(), c1.clone(), c2.clone());
    let one = int(1);

    let l0 = derive(spec(), t(), RatFunc::zero());
    assert_eq!(l0.order(), 2);
    assert!(lode_equal(&l0, &euler(&a, &b1, &c1)));

    let l1 = derive(spec(), t(), RatFunc::one());
    assert_eq!(l1.order(), 3);
    assert!(lode_equal(&l1, &hpg32(&a, &b1, &(&a - &c2 + &one), &c1, &(&a + &b2 - &c2 + &one))));

    let l2 = derive(spec(), t(), poly(&[int(1), int(-1)]));
    assert_eq!(l2.order(), 3);
    let base = hpg32(&a, &(&c1 - &b1), &(&a - &c2 + &one), &c1, &(&a + &b2 - &c2 + &one));
    let phi = t().checked_div(&poly(&[int(-1), int(1)])).unwrap();
    let pulled = pullback_transform(&base, &phi, &[ThetaFactor::at(int(1), -a.clone())]).unwrap();
    assert!(lode_equal(&l2, &pulled));
}

#[test]
fn generic_f2_on_generic_curve_has_order_four() {
    let spec = AppellSpec::f2(rat(1, 3), rat(2, 5), rat(-1, 7), rat(3, 4), rat(5, 6));
    let l = derive(spec, t(), poly(&[rat(1, 2), int(3)]));
    assert_eq!(l.order(), 4);
}

#[test]
fn f4_quadratic_locus_second_order_case() {
    let (a, b, c1) = (rat(1, 3), rat(2, 5), rat(3, 7));
    let c2 = &a + &b - &c1 + rat(3, 2);
    let (x, y) = quadratic_locus();
    let l = derive(AppellSpec::f4(a.clone(), b.clone(), c1.clone(), c2), x, y);
    let two = int(2);
    assert!(lode_equal(&l, &euler(&(&two * &a), &(&two * &b), &(&two * &c1 - int(1)))));
}

#[test]
fn f4_symmetric_squares() {
    let (a, b, c) = (rat(1, 3), rat(2, 5), rat(3, 7));
    let (x, y) = quadratic_locus();
    let l = derive(AppellSpec::f4(a.clone(), b.clone(), c.clone(), &a + &b - &c + int(1)), x.clone(), y.clone());
    assert!(lode_equal(&l, &symmetric_square(&euler(&a, &b, &c)).unwrap()));

    let c = rat(2, 9);
    let half = rat(1, 2);
    let spec = AppellSpec::f4(int(2) * &c - &half, int(3) * &c - int(1), &c + &half, &c + &half);
    let l = derive(spec, x, y);
    let sq = symmetric_square(&euler(&c, &(int(3) * &c - int(1)), &(int(2) * &c))).unwrap();
    assert!(lode_equal(&l, &sq));
}

#[test]
fn f4_quadratic_locus_hpg32_case() {
    let (a, b, c) = (rat(1, 3), rat(2, 5), rat(3, 7));
    let half = rat(1, 2);
    let (x, y) = quadratic_locus();
    let l = derive(AppellSpec::f4(a.clone(), b.clone(), &c + &half, half.clone()), x, y);
    let two = int(2);
    let want = hpg32(&(&two * &a), &(&two * &b), &c, &(&a + &b + &half), &(&two * &c));
    assert!(lode_equal(&l, &want));
}

#[test]
fn f1_on_parabola() {
    let (a, b) = (rat(1, 3), rat(2, 7));
    let spec = AppellSpec::f1(a.clone(), int(2) * &b, &a - &b, &b + int(1));
    let l = derive(spec, t(), &t() * &t());
    assert_eq!(l.order(), 2);
    let params: ParamMap = [("a".to_string(), a), ("b".to_string(), b)].into_iter().collect();
    let e = parse_expression("(1-t)^(-2*a) * pFq([a, 1/2],[1+b]; -4*t/(t-1)^2)", &params, Some(&["t"])).unwrap();
    let s = expand(&e.expr, &["t".to_string()], 12).unwrap();
    assert!(annihilates(&l, &s, 10).unwrap());
}

#[test]
fn generic_f1_on_line_has_order_three() {
    let spec = AppellSpec::f1(rat(1, 3), rat(2, 5), rat(-1, 7), rat(3, 4));
    let l = derive(spec, t(), poly(&[rat(1, 3), rat(1, 2)]));
    assert_eq!(l.order(), 3);
}
