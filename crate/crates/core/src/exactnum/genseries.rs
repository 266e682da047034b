use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, Rational};
use super::ratfunc::RatFunc;
use super::series::{TruncSeries1, TruncSeries2};
use super::ExactError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

/// `x^alpha · y^beta · body`, with the body truncated in total degree.
///
/// The body order is relative to the prefactor, so the absolute precision is
/// `alpha + beta + body.order()`. Integer exponents may be negative, which gives
/// Laurent polynomials for the reversed terminating sums.
#[derive(Clone, PartialEq, Eq)]
pub struct GenSeries {
    alpha: Rational,
    beta: Rational,
    body: TruncSeries2,
}

fn integer_gap(a: &Rational, b: &Rational) -> Result<usize, ExactError> {
    let d = a - b;
    if !d.is_integer() || d.is_negative() {
        return Err(ExactError::IncompatibleExponents(format_rational(a), format_rational(b)));
    }
    Ok(d.to_integer().to_usize().expect("exponent gap fits in usize"))
}

impl GenSeries {
    pub fn new(alpha: Rational, beta: Rational, body: TruncSeries2) -> Self {
        GenSeries { alpha, beta, body }
    }

    pub fn from_series(body: TruncSeries2) -> Self {
        Self::new(Rational::zero(), Rational::zero(), body)
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        Self::from_series(TruncSeries2::constant(c, order))
    }

    pub fn zero(order: i64) -> Self {
        Self::constant(Rational::zero(), order)
    }

    /// `x^alpha · y^beta` as an exact monomial known to relative order `order`.
    pub fn monomial(alpha: Rational, beta: Rational, order: i64) -> Self {
        Self::new(alpha, beta, TruncSeries2::constant(Rational::one(), order))
    }

    pub fn var(axis: Axis, order: i64) -> Self {
        match axis {
            Axis::X => Self::monomial(Rational::one(), Rational::zero(), order),
            Axis::Y => Self::monomial(Rational::zero(), Rational::one(), order),
        }
    }

    /// Laurent expansion in `x` of a univariate rational function.
    pub fn from_ratfunc_x(f: &RatFunc, order: i64) -> Self {
        if f.is_zero() {
            return Self::zero(order);
        }
        let v = f.order_at(&Rational::zero()).unwrap();
        let num_v = f.num().valuation().unwrap();
        let den_v = f.den().valuation().unwrap();
        let num = TruncSeries1::from_coeffs(f.num().coeffs()[num_v..].to_vec(), order);
        let den = TruncSeries1::from_coeffs(f.den().coeffs()[den_v..].to_vec(), order);
        let body = &num * &den.inverse().expect("shifted denominator is a unit");
        Self::new(Rational::from_integer(v.into()), Rational::zero(), TruncSeries2::from_x_series(&body))
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn body(&self) -> &TruncSeries2 {
        &self.body
    }

    /// Total degree through which the series is exactly known.
    pub fn absolute_order(&self) -> Rational {
        &self.alpha + &self.beta + Rational::from_integer(self.body.order().into())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.alpha.clone(), self.beta.clone(), self.body.scale(c))
    }

    pub fn mul_monomial(&self, a: &Rational, b: &Rational) -> Self {
        Self::new(&self.alpha + a, &self.beta + b, self.body.clone())
    }

    pub fn checked_add(&self, o: &GenSeries) -> Result<Self, ExactError> {
        // An identically zero operand only contributes its precision, so it can sit on any lattice.
        if self.body.is_zero() && !self.same_lattice(o) {
            return Ok(o.truncate_absolute(&self.absolute_order()));
        }
        if o.body.is_zero() && !self.same_lattice(o) {
            return Ok(self.truncate_absolute(&o.absolute_order()));
        }
        let (alpha, beta) = (
            if self.alpha <= o.alpha { self.alpha.clone() } else { o.alpha.clone() },
            if self.beta <= o.beta { self.beta.clone() } else { o.beta.clone() },
        );
        let shift = |g: &GenSeries| -> Result<TruncSeries2, ExactError> {
            let a = integer_gap(&g.alpha, &alpha)?;
            let b = integer_gap(&g.beta, &beta)?;
            Ok(g.body.mul_monomial(a, b))
        };
        let body = &shift(self)? + &shift(o)?;
        Ok(Self::new(alpha, beta, body))
    }

    fn same_lattice(&self, o: &GenSeries) -> bool {
        (&self.alpha - &o.alpha).is_integer() && (&self.beta - &o.beta).is_integer()
    }

    pub fn checked_sub(&self, o: &GenSeries) -> Result<Self, ExactError> {
        self.checked_add(&-o)
    }

    /// `∂/∂axis` by the product rule on the prefactor.
    pub fn partial(&self, axis: Axis) -> Self {
        match axis {
            Axis::X => {
                let shifted = self.body.partial_x().mul_monomial(1, 0);
                let body = &self.body.scale(&self.alpha) + &shifted;
                Self::new(&self.alpha - Rational::one(), self.beta.clone(), body)
            }
            Axis::Y => {
                let shifted = self.body.partial_y().mul_monomial(0, 1);
                let body = &self.body.scale(&self.beta) + &shifted;
                Self::new(self.alpha.clone(), &self.beta - Rational::one(), body)
            }
        }
    }

    /// Moves the lowest monomial of the body into the prefactor when the body is a monomial times a unit.
    pub fn normalized(&self) -> Result<Self, ExactError> {
        let Some((i, j, _)) = self.body.first_nonzero() else {
            return Err(ExactError::NotMonomialTimesUnit);
        };
        let unit = self.body.div_monomial(i, j).ok_or(ExactError::NotMonomialTimesUnit)?;
        Ok(Self::new(
            &self.alpha + Rational::from_integer((i as i64).into()),
            &self.beta + Rational::from_integer((j as i64).into()),
            unit,
        ))
    }

    /// `G^e`; the unit part's constant must have a rational `e`-th power.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self, ExactError> {
        let n = self.normalized()?;
        Ok(Self::new(&n.alpha * e, &n.beta * e, n.body.pow_rational(e)?))
    }

    /// `G^e` up to a constant factor: the unit part is normalized to constant term 1.
    pub fn pow_up_to_constant(&self, e: &Rational) -> Result<Self, ExactError> {
        let n = self.normalized()?;
        Ok(Self::new(&n.alpha * e, &n.beta * e, n.body.unit_pow(e)?))
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        self.pow_rational(&-Rational::one())
    }

    pub fn checked_div(&self, o: &GenSeries) -> Result<Self, ExactError> {
        Ok(self * &o.inverse()?)
    }

    /// `log G` for a plain series with constant term 1.
    pub fn log(&self) -> Result<Self, ExactError> {
        if !self.alpha.is_zero() || !self.beta.is_zero() {
            return Err(ExactError::NotMonomialTimesUnit);
        }
        Ok(Self::from_series(self.body.log()?))
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Truncates to the given absolute total degree.
    pub fn truncate_absolute(&self, order: &Rational) -> Self {
        let rel = (order - &self.alpha - &self.beta).floor().to_integer().to_i64().unwrap_or(i64::MIN / 4);
        Self::new(self.alpha.clone(), self.beta.clone(), self.body.truncate(rel))
    }

    /// A plain series when both exponents are non-negative integers.
    pub fn to_series2(&self) -> Option<TruncSeries2> {
        let a = self.alpha.is_integer().then(|| self.alpha.to_integer().to_usize()).flatten()?;
        let b = self.beta.is_integer().then(|| self.beta.to_integer().to_usize()).flatten()?;
        Some(self.body.mul_monomial(a, b))
    }
}

impl fmt::Debug for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^({})*y^({})*({:?})", format_rational(&self.alpha), format_rational(&self.beta), self.body)
    }
}

impl Mul for &GenSeries {
    type Output = GenSeries;
    fn mul(self, o: &GenSeries) -> GenSeries {
        GenSeries::new(&self.alpha + &o.alpha, &self.beta + &o.beta, &self.body * &o.body)
    }
}

impl Neg for &GenSeries {
    type Output = GenSeries;
    fn neg(self) -> GenSeries {
        GenSeries::new(self.alpha.clone(), self.beta.clone(), -&self.body)
    }
}
