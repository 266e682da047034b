use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::series::TruncSeries1;
use super::unipoly::UniPoly;
use super::ExactError;

/// Element of Q(t) kept reduced with a monic denominator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = d.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self, ExactError> {
        if o.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn powi(&self, k: i32) -> Result<Self, ExactError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RatFunc::new(n, d).expect("denominator square is nonzero")
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &RatFunc) -> Result<Self, ExactError> {
        // Homogenize both polynomials at a common degree so the substitution stays polynomial.
        let m = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let hom = |p: &UniPoly| -> UniPoly {
            let mut acc = UniPoly::zero();
            for (k, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = &inner.num.pow(k as u32) * &inner.den.pow((m - k) as u32);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        RatFunc::new(hom(&self.num), hom(&self.den))
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Order of vanishing at `t = p` (negative for poles); `None` for zero.
    pub fn order_at(&self, p: &Rational) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let lin = UniPoly::linear_root(p);
        let count = |q: &UniPoly| {
            let mut q = q.clone();
            let mut k = 0i64;
            while let Some(next) = q.exact_div(&lin) {
                q = next;
                k += 1;
            }
            k
        };
        Some(count(&self.num) - count(&self.den))
    }

    /// Order at infinity: `deg den − deg num`.
    pub fn order_at_infinity(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.den.degree().unwrap() as i64 - self.num.degree().unwrap() as i64)
    }

    /// Coefficient of `(t−p)^k` in the Laurent expansion at `p`.
    pub fn laurent_coeff(&self, p: &Rational, k: i64) -> Rational {
        let Some(v) = self.order_at(p) else { return Rational::zero() };
        if k < v {
            return Rational::zero();
        }
        let shift = RatFunc::from_poly(UniPoly::new(vec![p.clone(), Rational::one()]));
        let moved = self.compose(&shift).expect("translation is invertible");
        let unit = if v >= 0 {
            RatFunc::new(moved.num.clone(), moved.den.shift_degree(v as usize))
        } else {
            RatFunc::new(moved.num.shift_degree((-v) as usize), moved.den.clone())
        }
        .expect("nonzero denominator");
        let idx = (k - v) as usize;
        unit.taylor(idx as i64).expect("unit is regular at 0").coeff(idx)
    }

    /// Taylor expansion at 0 through degree `n`.
    pub fn taylor(&self, n: i64) -> Result<TruncSeries1, ExactError> {
        let num = TruncSeries1::from_poly(&self.num, n);
        let den = TruncSeries1::from_poly(&self.den, n);
        if den.coeff(0).is_zero() {
            return Err(ExactError::NonUnitBase);
        }
        Ok(&num * &den.inverse()?)
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.den.is_constant() {
            self.num.to_string_var(var)
        } else {
            format!("({})/({})", self.num.to_string_var(var), self.den.to_string_var(var))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("t"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("t"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::new(n, &self.den * &o.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn normalize_examples() {
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f, RatFunc::from_poly(p(&[1, 1])));
        let z = RatFunc::new(UniPoly::zero(), p(&[3, 1])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.den(), &UniPoly::one());
        let g = RatFunc::new(p(&[0, 6, 2]), p(&[0, 2])).unwrap();
        assert_eq!(g, RatFunc::from_poly(p(&[3, 1])));
    }

    #[test]
    fn zero_denominator_rejected() {
        let e = RatFunc::new(p(&[1]), UniPoly::zero()).unwrap_err();
        assert_eq!(e.to_string(), "division by the zero rational function");
        assert!(RatFunc::one().checked_div(&RatFunc::zero()).is_err());
    }

    #[test]
    fn compose_and_orders() {
        let f = RatFunc::new(p(&[1]), p(&[-1, 1])).unwrap();
        let t2 = RatFunc::from_poly(p(&[0, 0, 1]));
        let g = f.compose(&t2).unwrap();
        assert_eq!(g, RatFunc::new(p(&[1]), p(&[-1, 0, 1])).unwrap());
        assert_eq!(g.order_at(&int(1)), Some(-1));
        assert_eq!(g.order_at_infinity(), Some(2));
        // 1/(t^2-1) near t=1: 1/(2(t-1)) - 1/4 + ...
        assert_eq!(g.laurent_coeff(&int(1), -1), rat(1, 2));
        assert_eq!(g.laurent_coeff(&int(1), 0), rat(-1, 4));
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = RatFunc::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        let expected = RatFunc::new(p(&[1]), p(&[1, 2, 1])).unwrap();
        assert_eq!(f.derivative(), expected);
    }
}
