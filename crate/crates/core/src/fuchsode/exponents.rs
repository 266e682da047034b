use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::transform::change_variable_at_infinity;
use super::{FuchsError, Lode};
use crate::exactnum::{format_rational, parse_rational, ExactError, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(p) => write!(f, "{}", format_rational(p)),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Point {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, ExactError> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Point::Infinity),
            other => parse_rational(other).map(Point::Finite),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentReport {
    pub point: Point,
    /// Indicial polynomial in `ρ`, monic.
    pub indicial: UniPoly,
    /// Rational roots with multiplicity, ascending.
    pub rational_roots: Vec<Rational>,
}

impl ExponentReport {
    /// True when the indicial polynomial splits over Q.
    pub fn is_complete(&self) -> bool {
        self.indicial.degree() == Some(self.rational_roots.len())
    }
}

/// Falling factorial `ρ(ρ−1)…(ρ−k+1)` as a polynomial in `ρ`.
fn falling(k: usize) -> UniPoly {
    let mut p = UniPoly::one();
    for j in 0..k {
        p = &p * &UniPoly::linear_root(&Rational::from_integer((j as i64).into()));
    }
    p
}

/// Indicial polynomial and its rational roots at a finite point or at infinity.
pub fn local_exponents(l: &Lode, point: &Point) -> Result<ExponentReport, FuchsError> {
    let (l, p) = match point {
        Point::Infinity => (change_variable_at_infinity(l)?, Rational::zero()),
        Point::Finite(p) => (l.clone(), p.clone()),
    };
    let m = l.monic();
    let r = m.order();
    let mut indicial = UniPoly::zero();
    for k in 0..=r {
        let q = m.coeff(k);
        let allowed = -((r - k) as i64);
        let Some(ord) = q.order_at(&p) else { continue };
        if ord < allowed {
            return Err(FuchsError::Irregular { point: point.to_string(), k, pole: -ord, allowed: -allowed });
        }
        let lc = q.laurent_coeff(&p, allowed);
        if !lc.is_zero() {
            indicial = &indicial + &falling(k).scale(&lc);
        }
    }
    let rational_roots = rational_roots(&indicial);
    Ok(ExponentReport { point: point.clone(), indicial, rational_roots })
}

/// Continued-fraction convergents of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..40 {
        if !v.is_finite() || v.abs() > 1e15 {
            break;
        }
        let a = v.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        out.push(Rational::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    out
}

/// Complex roots of a monic polynomial by simultaneous (Durand–Kerner) iteration.
fn approximate_roots(p: &UniPoly) -> Vec<Complex64> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let lead = p.leading();
    let c: Vec<f64> = p.coeffs().iter().map(|x| (x / &lead).to_f64().unwrap_or(f64::NAN)).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound.min(1e6) * 0.5).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    z
}

/// Rational roots of a polynomial with multiplicity, ascending.
///
/// Candidates come from floating-point approximations of the roots of the
/// square-free part; every reported root is confirmed by exact division.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    if p.is_zero() || p.degree() == Some(0) {
        return Vec::new();
    }
    let mut rest = p.monic();
    let mut out = Vec::new();
    let peel = |rest: &mut UniPoly, out: &mut Vec<Rational>, r: &Rational| {
        let lin = UniPoly::linear_root(r);
        while let Some(q) = rest.exact_div(&lin) {
            *rest = q;
            out.push(r.clone());
        }
    };
    peel(&mut rest, &mut out, &Rational::zero());
    // A second pass catches roots whose approximation was spoiled by a nearby cluster.
    for _ in 0..2 {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let sqfree = rest.exact_div(&rest.gcd(&rest.derivative())).expect("gcd divides");
        for z in approximate_roots(&sqfree) {
            if z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
                continue;
            }
            for c in convergents(z.re, 1_000_000_000) {
                if sqfree.eval(&c).is_zero() {
                    peel(&mut rest, &mut out, &c);
                    break;
                }
            }
        }
    }
    out.sort();
    out
}

/// Gaps between consecutive sorted exponents.
pub fn sorted_differences(roots: &[Rational]) -> Vec<Rational> {
    let mut d: Vec<Rational> = roots.windows(2).map(|w| (&w[1] - &w[0]).abs()).collect();
    d.sort();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, RatFunc};
    use crate::fuchsode::{euler, hpg32, kato};

    fn roots_of(rs: &[Rational]) -> UniPoly {
        rs.iter().fold(UniPoly::one(), |acc, r| &acc * &UniPoly::linear_root(r))
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let rs = vec![rat(-7, 3), rat(1, 2), rat(1, 2), int(0), rat(13, 17)];
        let p = &roots_of(&rs) * &UniPoly::from_ints(&[2, 0, 1]);
        let mut expected = rs.clone();
        expected.sort();
        assert_eq!(rational_roots(&p.scale(&rat(5, 3))), expected);
    }

    #[test]
    fn second_derivative_has_exponents_zero_one() {
        let l = Lode::new(vec![RatFunc::zero(), RatFunc::zero(), RatFunc::one()]).unwrap();
        let rep = local_exponents(&l, &Point::Finite(int(0))).unwrap();
        assert_eq!(rep.rational_roots, vec![int(0), int(1)]);
    }

    #[test]
    fn euler_exponents() {
        let (a, b, c) = (rat(1, 3), rat(2, 7), rat(5, 4));
        let l = euler(&a, &b, &c);
        let at = |p: Point| local_exponents(&l, &p).unwrap().rational_roots;
        assert_eq!(at(Point::Finite(int(0))), vec![rat(-1, 4), int(0)]);
        let mut one = vec![int(0), &c - &a - &b];
        one.sort();
        assert_eq!(at(Point::Finite(int(1))), one);
        assert_eq!(at(Point::Infinity), vec![b.clone(), a.clone()]);
    }

    #[test]
    fn hpg32_and_kato_at_infinity() {
        let l = hpg32(&rat(1, 3), &rat(1, 5), &rat(2, 7), &rat(3, 4), &rat(5, 6));
        assert_eq!(local_exponents(&l, &Point::Infinity).unwrap().rational_roots, vec![rat(1, 5), rat(2, 7), rat(1, 3)]);
        let k = kato(&rat(1, 3), &rat(1, 5), &rat(1, 7), &rat(1, 11));
        let mut want = vec![rat(2, 3), rat(2, 5), rat(1, 7) + rat(1, 11) - int(1)];
        want.sort();
        assert_eq!(local_exponents(&k, &Point::Infinity).unwrap().rational_roots, want);
    }

    #[test]
    fn irregular_point_is_rejected() {
        // y'' + y/t^3 has an irregular singularity at 0.
        let c0 = RatFunc::new(UniPoly::one(), UniPoly::from_ints(&[0, 0, 0, 1])).unwrap();
        let l = Lode::new(vec![c0, RatFunc::zero(), RatFunc::one()]).unwrap();
        assert!(matches!(local_exponents(&l, &Point::Finite(int(0))), Err(FuchsError::Irregular { k: 0, .. })));
    }

    #[test]
    fn point_parsing() {
        assert_eq!("inf".parse::<Point>().unwrap(), Point::Infinity);
        assert_eq!("-1/2".parse::<Point>().unwrap(), Point::Finite(rat(-1, 2)));
    }
}
