use appell_core::exactnum::{int, rat, RatFunc, Rational, UniPoly};
use appell_core::fuchsode::{
    euler, f2_antidiagonal, f2_separated, lode_equal, pullback_transform, symmetric_square, ThetaFactor,
};

fn rf(num: &[Rational], den: &[Rational]) -> RatFunc {
    RatFunc::new(UniPoly::new(num.to_vec()), UniPoly::new(den.to_vec())).unwrap()
}

#[test]
fn antidiagonal_equation_is_a_quadratic_pullback() {
    let (a, b1, b2) = (rat(2, 7), rat(1, 3), rat(-3, 5));
    let half = rat(1, 2);
    let l = euler(&(&a / int(2) + &half - &b2), &(&a / int(2)), &(&b1 + &half));
    let phi = rf(&[int(0), int(0), int(1)], &[int(4), int(-4), int(1)]);
    let pulled = pullback_transform(&l, &phi, &[ThetaFactor::at(int(2), -a.clone())]).unwrap();
    assert!(lode_equal(&pulled, &f2_antidiagonal(&a, &b1, &b2)));
}

#[test]
fn separated_equation_is_a_quadratic_pullback() {
    let (b1, b2, s) = (rat(1, 3), rat(2, 9), rat(5, 4));
    let half = rat(1, 2);
    let l = euler(&b2, &(&b1 + &b2 - &half), &(&b1 + &half));
    let k = (&s + int(1)) / (&s - int(1));
    let phi = rf(&[k.clone(), &k * int(2), k.clone()], &[int(1), int(-2), int(1)]);
    let theta = [ThetaFactor::at(int(1), int(1) - int(2) * &b1 - int(2) * &b2)];
    let pulled = pullback_transform(&l, &phi, &theta).unwrap();
    assert!(lode_equal(&pulled, &f2_separated(&b1, &b2, &s)));
}

#[test]
fn symmetric_square_is_basis_independent() {
    let l = euler(&rat(1, 3), &rat(2, 7), &rat(5, 4));
    let scaled = l.scale(&rf(&[int(3), int(1)], &[int(-2), int(0), int(1)])).unwrap();
    assert!(lode_equal(&symmetric_square(&l).unwrap(), &symmetric_square(&scaled).unwrap()));
}
