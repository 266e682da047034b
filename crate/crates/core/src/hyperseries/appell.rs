use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::pfq::{gamma_ratio, nonpositive_integer, pochhammer};
use super::HyperError;
use crate::exactnum::{format_rational, rational_vec_serde, Rational, TruncSeries2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AppellKind {
    F1,
    F2,
    F3,
    F4,
}

impl AppellKind {
    /// Parameter names in canonical order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            AppellKind::F1 => &["a", "b1", "b2", "c"],
            AppellKind::F2 => &["a", "b1", "b2", "c1", "c2"],
            AppellKind::F3 => &["a1", "a2", "b1", "b2", "c"],
            AppellKind::F4 => &["a", "b", "c1", "c2"],
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "F1" => Some(AppellKind::F1),
            "F2" => Some(AppellKind::F2),
            "F3" => Some(AppellKind::F3),
            "F4" => Some(AppellKind::F4),
            _ => None,
        }
    }
}

impl fmt::Display for AppellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppellSpec {
    pub kind: AppellKind,
    /// Values in the order of [`AppellKind::param_names`].
    #[serde(with = "rational_vec_serde")]
    pub params: Vec<Rational>,
}

/// Result of summing a terminating double series at a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminatingValue {
    pub value: Rational,
    pub terms: usize,
}

/// Pochhammer values `(p)_0..(p)_n`.
fn poch_table(p: &Rational, n: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(n + 1);
    let mut acc = Rational::one();
    v.push(acc.clone());
    for k in 0..n {
        acc *= p + Rational::from_integer((k as i64).into());
        v.push(acc.clone());
    }
    v
}

fn factorials(n: usize) -> Vec<Rational> {
    poch_table(&Rational::one(), n)
}

impl AppellSpec {
    pub fn new(kind: AppellKind, params: Vec<Rational>) -> Self {
        assert_eq!(params.len(), kind.param_names().len(), "wrong parameter count for {kind}");
        AppellSpec { kind, params }
    }

    pub fn f1(a: Rational, b1: Rational, b2: Rational, c: Rational) -> Self {
        Self::new(AppellKind::F1, vec![a, b1, b2, c])
    }

    pub fn f2(a: Rational, b1: Rational, b2: Rational, c1: Rational, c2: Rational) -> Self {
        Self::new(AppellKind::F2, vec![a, b1, b2, c1, c2])
    }

    pub fn f3(a1: Rational, a2: Rational, b1: Rational, b2: Rational, c: Rational) -> Self {
        Self::new(AppellKind::F3, vec![a1, a2, b1, b2, c])
    }

    pub fn f4(a: Rational, b: Rational, c1: Rational, c2: Rational) -> Self {
        Self::new(AppellKind::F4, vec![a, b, c1, c2])
    }

    pub fn param(&self, name: &str) -> &Rational {
        let idx = self.kind.param_names().iter().position(|n| *n == name).expect("known parameter name");
        &self.params[idx]
    }

    /// Termination bounds `(n ≤ bx, m ≤ by, n + m ≤ total)`.
    pub fn bounds(&self) -> (Option<usize>, Option<usize>, Option<usize>) {
        let p = &self.params;
        let t = nonpositive_integer;
        let min = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        };
        match self.kind {
            AppellKind::F1 | AppellKind::F2 => (t(&p[1]), t(&p[2]), t(&p[0])),
            AppellKind::F3 => (min(t(&p[0]), t(&p[2])), min(t(&p[1]), t(&p[3])), None),
            AppellKind::F4 => (None, None, min(t(&p[0]), t(&p[1]))),
        }
    }

    /// Effective ranges in each direction when both directions terminate.
    pub fn terminating_ranges(&self) -> Option<(usize, usize)> {
        let (bx, by, total) = self.bounds();
        let nx = match (bx, total) {
            (Some(x), Some(t)) => Some(x.min(t)),
            (x, t) => x.or(t),
        }?;
        let ny = match (by, total) {
            (Some(y), Some(t)) => Some(y.min(t)),
            (y, t) => y.or(t),
        }?;
        Some((nx, ny))
    }

    fn in_support(&self, n: usize, m: usize) -> bool {
        let (bx, by, total) = self.bounds();
        bx.is_none_or(|b| n <= b) && by.is_none_or(|b| m <= b) && total.is_none_or(|b| n + m <= b)
    }

    /// Coefficient tables sized for all `n, m ≤ size`.
    fn tables(&self, size: usize) -> CoeffTables {
        CoeffTables {
            poch: self.params.iter().map(|p| poch_table(p, 2 * size)).collect(),
            fact: factorials(size),
        }
    }

    fn coeff_with(&self, tb: &CoeffTables, n: usize, m: usize) -> Result<Rational, HyperError> {
        if !self.in_support(n, m) {
            return Ok(Rational::zero());
        }
        let p = &tb.poch;
        let (num, dens): (Rational, [(usize, usize); 2]) = match self.kind {
            AppellKind::F1 => (&p[0][n + m] * &p[1][n] * &p[2][m], [(3, n + m), (usize::MAX, 0)]),
            AppellKind::F2 => (&p[0][n + m] * &p[1][n] * &p[2][m], [(3, n), (4, m)]),
            AppellKind::F3 => (&p[0][n] * &p[1][m] * &p[2][n] * &p[3][m], [(4, n + m), (usize::MAX, 0)]),
            AppellKind::F4 => (&p[0][n + m] * &p[1][n + m], [(2, n), (3, m)]),
        };
        if num.is_zero() {
            return Ok(num);
        }
        let mut den = &tb.fact[n] * &tb.fact[m];
        for (idx, k) in dens {
            if idx == usize::MAX {
                continue;
            }
            let d = &p[idx][k];
            if d.is_zero() {
                return Err(HyperError::ZeroDenominator { param: format_rational(&self.params[idx]), index: k });
            }
            den *= d;
        }
        Ok(num / den)
    }

    /// Coefficient of `x^n y^m`.
    pub fn coeff(&self, n: usize, m: usize) -> Result<Rational, HyperError> {
        let tb = self.tables(n.max(m));
        self.coeff_with(&tb, n, m)
    }

    /// Coefficients of the restriction to `y = 1` normalized to constant term 1.
    ///
    /// The sum over `m` is done with Gauss's theorem, which is only valid while the
    /// excess `C − A − B` of the inner `2F1(…; 1)` is positive (or the inner sum terminates).
    pub fn line_one_coefficients(&self, order: usize) -> Result<Vec<Rational>, HyperError> {
        let p = &self.params;
        let one = Rational::one();
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let nn = Rational::from_integer((n as i64).into());
            let ni = n as i64;
            // x-direction factor and the inner Gauss parameters (A, B, C) as functions of n.
            let (outer, upper, c_inner, ratio) = match self.kind {
                AppellKind::F1 => {
                    let (a, b1, b2, c) = (&p[0], &p[1], &p[2], &p[3]);
                    let outer = pochhammer(a, n) * pochhammer(b1, n) / (pochhammer(c, n) * pochhammer(&one, n));
                    let r = (|| Some(gamma_ratio(c, ni)? * gamma_ratio(&(c - b2), ni).filter(|v| !v.is_zero())?.recip()))();
                    (outer, [a + &nn, b2.clone()], c + &nn, r)
                }
                AppellKind::F2 => {
                    let (a, b1, b2, c1, c2) = (&p[0], &p[1], &p[2], &p[3], &p[4]);
                    let outer = pochhammer(a, n) * pochhammer(b1, n) / (pochhammer(c1, n) * pochhammer(&one, n));
                    let r = (|| {
                        Some(gamma_ratio(&(c2 - a - b2), -ni)? * gamma_ratio(&(c2 - a), -ni).filter(|v| !v.is_zero())?.recip())
                    })();
                    (outer, [a + &nn, b2.clone()], c2.clone(), r)
                }
                AppellKind::F3 => {
                    let (a1, a2, b1, b2, c) = (&p[0], &p[1], &p[2], &p[3], &p[4]);
                    let outer = pochhammer(a1, n) * pochhammer(b1, n) / (pochhammer(c, n) * pochhammer(&one, n));
                    let r = (|| {
                        let num = gamma_ratio(c, ni)? * gamma_ratio(&(c - a2 - b2), ni)?;
                        let den = gamma_ratio(&(c - a2), ni)? * gamma_ratio(&(c - b2), ni)?;
                        (!den.is_zero()).then(|| num / den)
                    })();
                    (outer, [a2.clone(), b2.clone()], c + &nn, r)
                }
                AppellKind::F4 => {
                    return Err(HyperError::NonTerminating("F4 has no Gauss line restriction".into()));
                }
            };
            if outer.is_zero() {
                out.push(outer);
                continue;
            }
            let inner_terminates = upper.iter().any(|u| nonpositive_integer(u).is_some());
            let excess = &c_inner - &upper[0] - &upper[1];
            if !inner_terminates && excess <= Rational::zero() {
                return Err(HyperError::Divergent { n, excess: format_rational(&excess) });
            }
            let ratio = ratio.ok_or_else(|| HyperError::ZeroDenominator {
                param: "Gamma ratio".into(),
                index: n,
            })?;
            out.push(outer * ratio);
        }
        Ok(out)
    }
}

struct CoeffTables {
    poch: Vec<Vec<Rational>>,
    fact: Vec<Rational>,
}

/// The Appell series with all coefficients of total degree `≤ order`.
pub fn appell_series(spec: &AppellSpec, order: usize) -> Result<TruncSeries2, HyperError> {
    let tb = spec.tables(order);
    let mut s = TruncSeries2::zero(order as i64);
    for d in 0..=order {
        for m in 0..=d {
            let n = d - m;
            s.set_coeff(n, m, spec.coeff_with(&tb, n, m)?);
        }
    }
    Ok(s)
}

/// Exact value of a series terminating in both directions, with the number of summed terms.
pub fn appell_terminating_eval(spec: &AppellSpec, x: &Rational, y: &Rational) -> Result<TerminatingValue, HyperError> {
    let (nx, ny) = spec
        .terminating_ranges()
        .ok_or_else(|| HyperError::NonTerminating(format!("{} with parameters {:?}", spec.kind, spec.params)))?;
    let tb = spec.tables(nx.max(ny));
    let mut value = Rational::zero();
    let mut terms = 0;
    let mut xp = Rational::one();
    for n in 0..=nx {
        let mut yp = Rational::one();
        for m in 0..=ny {
            if spec.in_support(n, m) {
                terms += 1;
                value += spec.coeff_with(&tb, n, m)? * &xp * &yp;
            }
            yp *= y;
        }
        xp *= x;
    }
    Ok(TerminatingValue { value, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::hyperseries::pfq::{pfq_series, PfqSpec};

    #[test]
    fn constant_term_is_one() {
        for spec in [
            AppellSpec::f1(rat(1, 3), rat(2, 5), rat(3, 7), rat(4, 9)),
            AppellSpec::f2(rat(1, 3), rat(2, 5), rat(3, 7), rat(4, 9), rat(5, 11)),
            AppellSpec::f3(rat(1, 3), rat(2, 5), rat(3, 7), rat(4, 9), rat(5, 11)),
            AppellSpec::f4(rat(1, 3), rat(2, 5), rat(3, 7), rat(4, 9)),
        ] {
            assert_eq!(appell_series(&spec, 3).unwrap().coeff(0, 0), int(1));
        }
    }

    #[test]
    fn f4_mixed_coefficient() {
        let (a, b, c1, c2) = (rat(1, 3), rat(2, 5), rat(3, 7), rat(4, 9));
        let s = appell_series(&AppellSpec::f4(a.clone(), b.clone(), c1.clone(), c2.clone()), 3).unwrap();
        let expected = &a * (&a + int(1)) * &b * (&b + int(1)) / (&c1 * &c2);
        assert_eq!(s.coeff(1, 1), expected);
    }

    #[test]
    fn f1_diagonal_is_gauss() {
        let (a, b1, b2, c) = (rat(1, 3), rat(-2, 5), rat(3, 7), rat(5, 9));
        let s = appell_series(&AppellSpec::f1(a.clone(), b1.clone(), b2.clone(), c.clone()), 8).unwrap();
        let g = pfq_series(&PfqSpec::new(vec![a, &b1 + &b2], vec![c]), 8).unwrap();
        for d in 0..=8 {
            let diag: Rational = (0..=d).map(|m| s.coeff(d - m, m)).sum();
            assert_eq!(diag, g.coeff(d));
        }
    }

    #[test]
    fn terminating_examples() {
        let a = rat(2, 7);
        let (x, y) = (rat(1, 3), rat(-3, 5));
        let spec = AppellSpec::f2(a.clone(), int(-1), int(-1), int(-2), int(-2));
        let v = appell_terminating_eval(&spec, &x, &y).unwrap();
        let expected = int(1) + &a * &x / int(2) + &a * &y / int(2) + &a * (&a + int(1)) * &x * &y / int(4);
        assert_eq!(v.value, expected);
        assert_eq!(v.terms, 4);
        let trivial = AppellSpec::f2(a.clone(), int(0), int(0), rat(1, 2), rat(1, 3));
        let v = appell_terminating_eval(&trivial, &x, &y).unwrap();
        assert_eq!((v.value, v.terms), (int(1), 1));
        let open = AppellSpec::f2(a, rat(1, 2), int(-1), int(1), int(1));
        assert!(matches!(appell_terminating_eval(&open, &x, &y), Err(HyperError::NonTerminating(_))));
    }

    #[test]
    fn line_one_divergence_detected() {
        // c2 − a − b2 = 1/2, so the x^1 coefficient already needs a divergent Gauss sum.
        let spec = AppellSpec::f2(rat(1, 3), rat(1, 5), rat(1, 6), rat(2, 7), int(1));
        let e = spec.line_one_coefficients(4).unwrap_err();
        assert!(matches!(e, HyperError::Divergent { n: 1, .. }));
    }

    #[test]
    fn f1_line_one_matches_reduced_gauss() {
        let (a, b1, b2, c) = (rat(1, 3), rat(2, 5), rat(1, 7), rat(9, 4));
        let spec = AppellSpec::f1(a.clone(), b1.clone(), b2.clone(), c.clone());
        let line = spec.line_one_coefficients(6).unwrap();
        let g = pfq_series(&PfqSpec::new(vec![a, b1], vec![c - b2]), 6).unwrap();
        for (n, v) in line.iter().enumerate() {
            assert_eq!(v, &g.coeff(n));
        }
    }
}
