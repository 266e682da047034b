use num_traits::One;

use super::{FuchsError, Lode};
use crate::exactnum::{RatFunc, Rational, UniPoly};

pub const BUILTIN_NAMES: [&str; 5] = ["euler", "hpg32", "kato", "f2-antidiagonal", "f2-separated"];

fn poly(c: Vec<Rational>) -> RatFunc {
    RatFunc::from_poly(UniPoly::new(c))
}

fn r(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

/// `c / (t − p)^k`.
fn pole(c: Rational, p: Rational, k: u32) -> RatFunc {
    RatFunc::new(UniPoly::constant(c), UniPoly::linear_root(&p).pow(k)).expect("nonzero denominator")
}

/// Euler's hypergeometric equation `z(1−z)y'' + (C − (A+B+1)z)y' − ABy = 0`.
pub fn euler(a: &Rational, b: &Rational, c: &Rational) -> Lode {
    Lode::new(vec![
        poly(vec![-(a * b)]),
        poly(vec![c.clone(), -(a + b + r(1))]),
        poly(vec![r(0), r(1), r(-1)]),
    ])
    .expect("leading coefficient z(1−z)")
}

/// The third order equation of `3F2(A,B,C; D,E; x)`.
pub fn hpg32(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational) -> Lode {
    let s2 = a * b + a * c + b * c + a + b + c + r(1);
    Lode::new(vec![
        poly(vec![-(a * b * c)]),
        poly(vec![d * e, -s2]),
        poly(vec![r(0), d + e + r(1), -(a + b + c + r(3))]),
        poly(vec![r(0), r(0), r(1), r(-1)]),
    ])
    .expect("leading coefficient x²(1−x)")
}

/// The monic third order equation of `F4(a; b; c1, c2; t², (t−1)²)`.
pub fn kato(a: &Rational, b: &Rational, c1: &Rational, c2: &Rational) -> Lode {
    let (zero, one) = (Rational::from_integer(0.into()), Rational::one());
    let two = r(2);
    let d2 = &pole(a + b + &two * c1 - c2 + &one, zero.clone(), 1) + &pole(a + b - c1 + &two * c2 + &one, one.clone(), 1);
    let mixed = &two * (a + b - c1 - c2 + &one + &two * a * b + &two * c1 * c2);
    let t_tm1 = RatFunc::new(UniPoly::constant(mixed), UniPoly::from_ints(&[0, -1, 1])).expect("nonzero");
    let d1 = &(&pole((&two * c1 - &one) * (a + b - c2 + &one), zero.clone(), 2) + &t_tm1)
        + &pole((&two * c2 - &one) * (a + b - c1 + &one), one.clone(), 2);
    let num = UniPoly::new(vec![&two * a * b * (-(&two * c1) + &one), &two * a * b * &two * (c1 + c2 - &one)]);
    let den = &UniPoly::linear_root(&zero).pow(2) * &UniPoly::linear_root(&one).pow(2);
    let d0 = RatFunc::new(num, den).expect("nonzero");
    Lode::new(vec![d0, d1, d2, RatFunc::one()]).expect("monic")
}

/// The second order equation of `F2(a; b1, b2; 2b1, 2b2; x, 2−x)`.
pub fn f2_antidiagonal(a: &Rational, b1: &Rational, b2: &Rational) -> Lode {
    let zero = Rational::from_integer(0.into());
    let two = r(2);
    let d0 = (&pole(b1.clone(), zero.clone(), 1) + &pole(b2.clone(), two.clone(), 1)).scale(&-a);
    let d1 = &(&pole(&two * b1, zero, 1) - &pole(&two * b2, two, 1)) + &RatFunc::constant(-(a + b1 + b2 + r(1)));
    Lode::new(vec![d0, d1, poly(vec![r(1), r(-1)])]).expect("leading coefficient 1−x")
}

/// The monic second order equation of `F2(b1+b2−1/2; b1, b2; 2b1, 2b2; 1−t², 1−(t+s)²/(s²−1))`.
pub fn f2_separated(b1: &Rational, b2: &Rational, s: &Rational) -> Lode {
    let four = r(4);
    let q1 = UniPoly::from_ints(&[-1, 0, 1]);
    let q2 = UniPoly::new(vec![r(1), r(2) * s, r(1)]);
    let f = |c: Rational, n: UniPoly, d: &UniPoly| RatFunc::new(n.scale(&c), d.clone()).expect("nonzero");
    let d1 = &f(&four * b1, UniPoly::x(), &q1) + &f(&four * b2, UniPoly::new(vec![s.clone(), r(1)]), &q2);
    let base = &f(&four * b1, UniPoly::one(), &q1) + &f(&four * b2, UniPoly::one(), &q2);
    let d0 = base.scale(&(b1 + b2 - Rational::new(1.into(), 2.into())));
    Lode::new(vec![d0, d1, RatFunc::one()]).expect("monic")
}

/// Looks up a named builtin equation.
pub fn builtin_ode(name: &str, params: &[Rational]) -> Result<Lode, FuchsError> {
    let want = match name {
        "euler" => 3,
        "hpg32" => 5,
        "kato" => 4,
        "f2-antidiagonal" => 3,
        "f2-separated" => 3,
        _ => return Err(FuchsError::UnknownBuiltin(name.to_string())),
    };
    if params.len() != want {
        return Err(FuchsError::BuiltinArity { name: name.to_string(), expected: want, got: params.len() });
    }
    let p = params;
    Ok(match name {
        "euler" => euler(&p[0], &p[1], &p[2]),
        "hpg32" => hpg32(&p[0], &p[1], &p[2], &p[3], &p[4]),
        "kato" => kato(&p[0], &p[1], &p[2], &p[3]),
        "f2-antidiagonal" => f2_antidiagonal(&p[0], &p[1], &p[2]),
        _ => f2_separated(&p[0], &p[1], &p[2]),
    })
}
