use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::rational::{exact_power, format_rational, Rational};
use super::unipoly::UniPoly;
use super::ExactError;

fn ri(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

/// Truncated power series in one variable, known exactly through degree `order`.
///
/// A negative order means no coefficient is known.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries1 {
    order: i64,
    coeffs: Vec<Rational>,
}

impl TruncSeries1 {
    pub fn zero(order: i64) -> Self {
        TruncSeries1 { order, coeffs: vec![Rational::zero(); (order + 1).max(0) as usize] }
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        let mut s = Self::zero(order);
        if order >= 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: i64) -> Self {
        coeffs.resize((order + 1).max(0) as usize, Rational::zero());
        TruncSeries1 { order, coeffs }
    }

    pub fn from_poly(p: &UniPoly, order: i64) -> Self {
        Self::from_coeffs(p.coeffs().iter().take((order + 1).max(0) as usize).cloned().collect(), order)
    }

    /// The variable itself.
    pub fn var(order: i64) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of degree `k`; panics when `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        assert!((k as i64) <= self.order, "coefficient {k} beyond truncation order {}", self.order);
        self.coeffs[k].clone()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self::from_coeffs(self.coeffs.iter().take((order + 1).max(0) as usize).cloned().collect(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest degree with nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries1 { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * ri(k as i64)).collect(),
            self.order - 1,
        )
    }

    /// Multiplies by `t^k`; the known range grows by `k`.
    pub fn mul_monomial(&self, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(v, self.order + k as i64)
    }

    /// `S^e` for a series with nonzero constant term; the constant `S(0)^e` must be rational.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self, ExactError> {
        let c0 = self.unit_constant()?;
        let lead = exact_power(&c0, e).ok_or_else(|| ExactError::IrrationalConstant {
            base: format_rational(&c0),
            exponent: format_rational(e),
        })?;
        Ok(self.scale(&c0.recip()).unit_pow_normalized(e).scale(&lead))
    }

    /// `(S / S(0))^e`, which is always rational.
    pub fn unit_pow(&self, e: &Rational) -> Result<Self, ExactError> {
        let c0 = self.unit_constant()?;
        Ok(self.scale(&c0.recip()).unit_pow_normalized(e))
    }

    fn unit_constant(&self) -> Result<Rational, ExactError> {
        if self.order < 0 || self.coeffs[0].is_zero() {
            return Err(ExactError::NonUnitBase);
        }
        Ok(self.coeffs[0].clone())
    }

    /// Power of a series with constant term 1 via the J.C.P. Miller recurrence.
    fn unit_pow_normalized(&self, e: &Rational) -> Self {
        let n_max = self.order.max(-1);
        let mut p = vec![Rational::zero(); (n_max + 1).max(0) as usize];
        if n_max < 0 {
            return TruncSeries1 { order: self.order, coeffs: p };
        }
        p[0] = Rational::one();
        let e1 = e + Rational::one();
        for n in 1..=n_max as usize {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let s = &self.coeffs[k];
                if s.is_zero() {
                    continue;
                }
                let w = &e1 * ri(k as i64) - ri(n as i64);
                acc += w * s * &p[n - k];
            }
            p[n] = acc / ri(n as i64);
        }
        TruncSeries1 { order: self.order, coeffs: p }
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        self.pow_rational(&ri(-1))
    }

    /// `log S` for a series with constant term 1.
    pub fn log(&self) -> Result<Self, ExactError> {
        let c0 = self.unit_constant()?;
        if !c0.is_one() {
            return Err(ExactError::IrrationalConstant { base: format_rational(&c0), exponent: "log".into() });
        }
        let q = &self.derivative() * &self.inverse()?;
        let mut v = vec![Rational::zero()];
        v.extend(q.coeffs.iter().enumerate().map(|(k, c)| c / ri(k as i64 + 1)));
        Ok(Self::from_coeffs(v, self.order))
    }

    pub fn eval_poly(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes this series into a bivariate inner series with zero constant term.
    pub fn compose_into2(&self, inner: &TruncSeries2) -> Result<TruncSeries2, ExactError> {
        if inner.order() >= 0 && !inner.coeff(0, 0).is_zero() {
            return Err(ExactError::CompositionPointMismatch);
        }
        let v = inner.valuation().map(|v| v as i64).unwrap_or(inner.order() + 1).max(1);
        let order = ((self.order + 1) * v - 1).min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = TruncSeries2::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &TruncSeries2::constant(c.clone(), order);
        }
        Ok(acc)
    }
}

/// `outer(inner(t))` for an inner series with zero constant term.
pub fn series_compose(outer: &TruncSeries1, inner: &TruncSeries1) -> Result<TruncSeries1, ExactError> {
    if inner.order >= 0 && !inner.coeffs[0].is_zero() {
        return Err(ExactError::CompositionPointMismatch);
    }
    let v = inner.valuation().map(|v| v as i64).unwrap_or(inner.order + 1).max(1);
    let order = ((outer.order + 1) * v - 1).min(inner.order);
    let inner = inner.truncate(order);
    let mut acc = TruncSeries1::zero(order);
    for c in outer.coeffs.iter().rev() {
        acc = &(&acc * &inner) + &TruncSeries1::constant(c.clone(), order);
    }
    Ok(acc)
}

/// `outer(x(t), y(t))` for inner series with zero constant terms.
pub fn series_compose2(
    outer: &TruncSeries2,
    x: &TruncSeries1,
    y: &TruncSeries1,
) -> Result<TruncSeries1, ExactError> {
    for s in [x, y] {
        if s.order >= 0 && !s.coeffs[0].is_zero() {
            return Err(ExactError::CompositionPointMismatch);
        }
    }
    let val = |s: &TruncSeries1| s.valuation().map(|v| v as i64).unwrap_or(s.order + 1).max(1);
    let v = val(x).min(val(y));
    let order = ((outer.order() + 1) * v - 1).min(x.order).min(y.order);
    let x = x.truncate(order);
    let y = y.truncate(order);
    let n = outer.order().max(0) as usize;
    let mut xp = vec![TruncSeries1::constant(Rational::one(), order)];
    let mut yp = vec![TruncSeries1::constant(Rational::one(), order)];
    for k in 1..=n {
        xp.push(&xp[k - 1] * &x);
        yp.push(&yp[k - 1] * &y);
    }
    let mut acc = TruncSeries1::zero(order);
    for (i, j, c) in outer.iter_terms() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&xp[i] * &yp[j]).scale(c);
    }
    Ok(acc)
}

impl fmt::Debug for TruncSeries1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.order + 1)
    }
}

impl Add for &TruncSeries1 {
    type Output = TruncSeries1;
    fn add(self, o: &TruncSeries1) -> TruncSeries1 {
        let order = self.order.min(o.order);
        let n = (order + 1).max(0) as usize;
        TruncSeries1 { order, coeffs: (0..n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect() }
    }
}

impl Sub for &TruncSeries1 {
    type Output = TruncSeries1;
    fn sub(self, o: &TruncSeries1) -> TruncSeries1 {
        let order = self.order.min(o.order);
        let n = (order + 1).max(0) as usize;
        TruncSeries1 { order, coeffs: (0..n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect() }
    }
}

impl Neg for &TruncSeries1 {
    type Output = TruncSeries1;
    fn neg(self) -> TruncSeries1 {
        TruncSeries1 { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &TruncSeries1 {
    type Output = TruncSeries1;
    fn mul(self, o: &TruncSeries1) -> TruncSeries1 {
        let order = self.order.min(o.order);
        let n = (order + 1).max(0) as usize;
        let mut v = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                v[i + j] += a * b;
            }
        }
        TruncSeries1 { order, coeffs: v }
    }
}

#[inline]
fn tri(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

/// Truncated power series in `x, y`, known exactly through total degree `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries2 {
    order: i64,
    coeffs: Vec<Rational>,
}

impl TruncSeries2 {
    fn len_for(order: i64) -> usize {
        if order < 0 {
            0
        } else {
            let n = order as usize + 1;
            n * (n + 1) / 2
        }
    }

    pub fn zero(order: i64) -> Self {
        TruncSeries2 { order, coeffs: vec![Rational::zero(); Self::len_for(order)] }
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        let mut s = Self::zero(order);
        if order >= 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn x(order: i64) -> Self {
        Self::from_bipoly(&BiPoly::x(), order)
    }

    pub fn y(order: i64) -> Self {
        Self::from_bipoly(&BiPoly::y(), order)
    }

    pub fn from_bipoly(p: &BiPoly, order: i64) -> Self {
        let mut s = Self::zero(order);
        for ((i, j), c) in p.terms() {
            if (i + j) as i64 <= order {
                s.coeffs[tri(*i as usize, *j as usize)] = c.clone();
            }
        }
        s
    }

    /// Embeds a univariate series as a series in `x` alone.
    pub fn from_x_series(s: &TruncSeries1) -> Self {
        let mut out = Self::zero(s.order);
        for (k, c) in s.coeffs.iter().enumerate() {
            out.coeffs[tri(k, 0)] = c.clone();
        }
        out
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `x^i y^j`; panics beyond the truncation order.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        assert!(((i + j) as i64) <= self.order, "coefficient ({i},{j}) beyond truncation order {}", self.order);
        self.coeffs[tri(i, j)].clone()
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: Rational) {
        assert!(((i + j) as i64) <= self.order);
        self.coeffs[tri(i, j)] = c;
    }

    /// Known terms as `(i, j, coefficient)` in order of total degree.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        let n = self.order.max(-1);
        (0..=n).flat_map(move |d| {
            let d = d as usize;
            (0..=d).map(move |j| (d - j, j, &self.coeffs[tri(d - j, j)]))
        })
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        TruncSeries2 { order, coeffs: self.coeffs[..Self::len_for(order)].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest total degree carrying a nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.iter_terms().find(|(_, _, c)| !c.is_zero()).map(|(i, j, _)| i + j)
    }

    /// First nonzero known coefficient in total-degree order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Rational)> {
        self.iter_terms().find(|(_, _, c)| !c.is_zero()).map(|(i, j, c)| (i, j, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries2 { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn partial_x(&self) -> Self {
        let mut out = Self::zero(self.order - 1);
        for (i, j, c) in self.iter_terms() {
            if i > 0 {
                out.coeffs[tri(i - 1, j)] = c * ri(i as i64);
            }
        }
        out
    }

    pub fn partial_y(&self) -> Self {
        let mut out = Self::zero(self.order - 1);
        for (i, j, c) in self.iter_terms() {
            if j > 0 {
                out.coeffs[tri(i, j - 1)] = c * ri(j as i64);
            }
        }
        out
    }

    /// Multiplies by `x^a y^b`; the known range grows by `a + b`.
    pub fn mul_monomial(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.order + (a + b) as i64);
        for (i, j, c) in self.iter_terms() {
            out.coeffs[tri(i + a, j + b)] = c.clone();
        }
        out
    }

    /// Divides by `x^a y^b` when every known term is divisible by it.
    pub fn div_monomial(&self, a: usize, b: usize) -> Option<Self> {
        let mut out = Self::zero(self.order - (a + b) as i64);
        for (i, j, c) in self.iter_terms() {
            if c.is_zero() {
                continue;
            }
            if i < a || j < b {
                return None;
            }
            if ((i + j - a - b) as i64) <= out.order {
                out.coeffs[tri(i - a, j - b)] = c.clone();
            }
        }
        Some(out)
    }

    /// `S^e` for a unit; the constant `S(0,0)^e` must be rational.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self, ExactError> {
        let c0 = self.unit_constant()?;
        let lead = exact_power(&c0, e).ok_or_else(|| ExactError::IrrationalConstant {
            base: format_rational(&c0),
            exponent: format_rational(e),
        })?;
        Ok(self.unit_pow(e)?.scale(&lead))
    }

    /// `(S / S(0,0))^e`.
    pub fn unit_pow(&self, e: &Rational) -> Result<Self, ExactError> {
        let c0 = self.unit_constant()?;
        let u = &self.scale(&c0.recip()) - &Self::constant(Rational::one(), self.order);
        let one_plus = TruncSeries1::from_coeffs(vec![Rational::one(), Rational::one()], self.order.max(0));
        one_plus.pow_rational(e)?.compose_into2(&u)
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        self.pow_rational(&ri(-1))
    }

    /// `log S` for a series with constant term 1.
    pub fn log(&self) -> Result<Self, ExactError> {
        let c0 = self.unit_constant()?;
        if !c0.is_one() {
            return Err(ExactError::IrrationalConstant { base: format_rational(&c0), exponent: "log".into() });
        }
        let u = &self.scale(&c0.recip()) - &Self::constant(Rational::one(), self.order);
        let mut coeffs = vec![Rational::zero()];
        for k in 1..=self.order.max(0) {
            let sign = if k % 2 == 1 { ri(1) } else { ri(-1) };
            coeffs.push(sign / ri(k));
        }
        TruncSeries1::from_coeffs(coeffs, self.order.max(0)).compose_into2(&u)
    }

    fn unit_constant(&self) -> Result<Rational, ExactError> {
        if self.order < 0 || self.coeffs[0].is_zero() {
            return Err(ExactError::NonUnitBase);
        }
        Ok(self.coeffs[0].clone())
    }

    /// `S(x(u,v), y(u,v))` for inner series with zero constant terms.
    pub fn substitute(&self, x: &TruncSeries2, y: &TruncSeries2) -> Result<TruncSeries2, ExactError> {
        for s in [x, y] {
            if s.order >= 0 && !s.coeffs[0].is_zero() {
                return Err(ExactError::CompositionPointMismatch);
            }
        }
        let val = |s: &TruncSeries2| s.valuation().map(|v| v as i64).unwrap_or(s.order + 1).max(1);
        let v = val(x).min(val(y));
        let order = ((self.order + 1) * v - 1).min(x.order).min(y.order);
        let x = x.truncate(order);
        let y = y.truncate(order);
        let n = self.order.max(0) as usize;
        let mut xp = vec![Self::constant(Rational::one(), order)];
        let mut yp = vec![Self::constant(Rational::one(), order)];
        for k in 1..=n {
            xp.push(&xp[k - 1] * &x);
            yp.push(&yp[k - 1] * &y);
        }
        let mut acc = Self::zero(order);
        for (i, j, c) in self.iter_terms() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&xp[i] * &yp[j]).scale(c);
        }
        Ok(acc)
    }

    /// Evaluation as a polynomial (all known terms) at a rational point.
    pub fn eval_poly(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (i, j, c) in self.iter_terms() {
            if c.is_zero() {
                continue;
            }
            acc += c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j);
        }
        acc
    }

    /// Restriction to `y = 0`.
    pub fn restrict_y0(&self) -> TruncSeries1 {
        let n = (self.order + 1).max(0) as usize;
        TruncSeries1::from_coeffs((0..n).map(|i| self.coeffs[tri(i, 0)].clone()).collect(), self.order)
    }
}

impl fmt::Debug for TruncSeries2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter_terms()
            .filter(|(_, _, c)| !c.is_zero())
            .map(|(i, j, c)| format!("{}*x^{i}*y^{j}", format_rational(c)))
            .collect();
        write!(f, "{} + O(deg {})", if parts.is_empty() { "0".into() } else { parts.join(" + ") }, self.order + 1)
    }
}

impl Add for &TruncSeries2 {
    type Output = TruncSeries2;
    fn add(self, o: &TruncSeries2) -> TruncSeries2 {
        let order = self.order.min(o.order);
        let n = TruncSeries2::len_for(order);
        TruncSeries2 { order, coeffs: (0..n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect() }
    }
}

impl Sub for &TruncSeries2 {
    type Output = TruncSeries2;
    fn sub(self, o: &TruncSeries2) -> TruncSeries2 {
        let order = self.order.min(o.order);
        let n = TruncSeries2::len_for(order);
        TruncSeries2 { order, coeffs: (0..n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect() }
    }
}

impl Neg for &TruncSeries2 {
    type Output = TruncSeries2;
    fn neg(self) -> TruncSeries2 {
        TruncSeries2 { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &TruncSeries2 {
    type Output = TruncSeries2;
    fn mul(self, o: &TruncSeries2) -> TruncSeries2 {
        let order = self.order.min(o.order);
        let mut out = TruncSeries2::zero(order);
        if order < 0 {
            return out;
        }
        let a_terms: Vec<_> = self.truncate(order).iter_terms().filter(|t| !t.2.is_zero()).map(|(i, j, c)| (i, j, c.clone())).collect();
        let b_terms: Vec<_> = o.truncate(order).iter_terms().filter(|t| !t.2.is_zero()).map(|(i, j, c)| (i, j, c.clone())).collect();
        let n = order as usize;
        for (i1, j1, c1) in &a_terms {
            for (i2, j2, c2) in &b_terms {
                if i1 + j1 + i2 + j2 > n {
                    // Terms are sorted by total degree, so the rest of this row is out of range.
                    break;
                }
                out.coeffs[tri(i1 + i2, j1 + j2)] += c1 * c2;
            }
        }
        out
    }
}
