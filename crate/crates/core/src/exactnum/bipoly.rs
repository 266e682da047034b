use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;

/// Sparse polynomial in `x, y` over Q; the key is the exponent pair `(i, j)` of `x^i y^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn x() -> Self {
        Self::from_terms([((1, 0), Rational::one())])
    }

    pub fn y() -> Self {
        Self::from_terms([((0, 1), Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(it: I) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            let e = terms.entry(k).or_insert_with(Rational::zero);
            *e += c;
        }
        terms.retain(|_, c: &mut Rational| !c.is_zero());
        BiPoly { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, *j), c * Rational::from_integer((*i).into()))),
        )
    }

    pub fn partial_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((*i, j - 1), c * Rational::from_integer((*j).into()))),
        )
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((i, j), c) in &self.terms {
            acc += c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize);
        }
        acc
    }

    /// Substitutes `x = X(t)`, `y = Y(t)` over a common denominator.
    pub fn eval_ratfunc(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dx = self.terms.keys().map(|k| k.0).max().unwrap();
        let dy = self.terms.keys().map(|k| k.1).max().unwrap();
        let mut num = UniPoly::zero();
        for ((i, j), c) in &self.terms {
            let term = &(&x.num().pow(*i) * &x.den().pow(dx - i)) * &(&y.num().pow(*j) * &y.den().pow(dy - j));
            num = &num + &term.scale(c);
        }
        let den = &x.den().pow(dx) * &y.den().pow(dy);
        RatFunc::new(num, den).expect("curve denominators are nonzero")
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| {
                let mut m = Vec::new();
                if *i == 1 {
                    m.push("x".to_string());
                } else if *i > 1 {
                    m.push(format!("x^{i}"));
                }
                if *j == 1 {
                    m.push("y".to_string());
                } else if *j > 1 {
                    m.push(format!("y^{j}"));
                }
                if m.is_empty() {
                    format!("({})", format_rational(c))
                } else if c.is_one() {
                    m.join("*")
                } else {
                    format!("({})*{}", format_rational(c), m.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().chain(o.terms.iter()).map(|(k, c)| (*k, c.clone())))
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        self + &(-o)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut out = Vec::with_capacity(self.terms.len() * o.terms.len());
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &o.terms {
                out.push(((i1 + i2, j1 + j2), c1 * c2));
            }
        }
        BiPoly::from_terms(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;

    #[test]
    fn arithmetic_and_partials() {
        let x = BiPoly::x();
        let y = BiPoly::y();
        let p = &(&x * &(&BiPoly::one() - &x)) + &(&x * &y);
        assert_eq!(p.coeff(2, 0), int(-1));
        assert_eq!(p.partial_x(), &(&BiPoly::one() - &x.scale(&int(2))) + &y);
        assert_eq!(p.partial_y(), x);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_along_curve() {
        // x + y - 1 vanishes along (t, 1 - t).
        let p = &(&BiPoly::x() + &BiPoly::y()) - &BiPoly::one();
        let t = RatFunc::t();
        let one_minus_t = &RatFunc::one() - &t;
        assert!(p.eval_ratfunc(&t, &one_minus_t).is_zero());
        let q = &BiPoly::x() * &BiPoly::y();
        let inv = RatFunc::new(UniPoly::one(), UniPoly::x()).unwrap();
        assert_eq!(q.eval_ratfunc(&t, &inv), RatFunc::one());
    }
}
