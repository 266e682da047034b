use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::HyperError;
use crate::exactnum::{format_rational, rational_vec_serde, Rational, TruncSeries1};

/// Rising factorial `a (a+1) … (a+n−1)`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = a.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

/// `Γ(z+s)/Γ(z)` for an integer shift `s`, or `None` at a pole.
pub fn gamma_ratio(z: &Rational, s: i64) -> Option<Rational> {
    if s >= 0 {
        Some(pochhammer(z, s as usize))
    } else {
        let k = (-s) as usize;
        let d = pochhammer(&(z - Rational::from_integer(k.into())), k);
        (!d.is_zero()).then(|| d.recip())
    }
}

/// Returns `k` when `r = −k` for an integer `k ≥ 0`.
pub(crate) fn nonpositive_integer(r: &Rational) -> Option<usize> {
    if r.is_integer() && r <= &Rational::zero() {
        Some((-r).to_integer().try_into().expect("termination index fits in usize"))
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfqSpec {
    #[serde(with = "rational_vec_serde")]
    pub upper: Vec<Rational>,
    #[serde(with = "rational_vec_serde")]
    pub lower: Vec<Rational>,
}

impl PfqSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        PfqSpec { upper, lower }
    }

    /// Degree of the polynomial when some upper parameter is a non-positive integer.
    pub fn termination(&self) -> Option<usize> {
        self.upper.iter().filter_map(nonpositive_integer).min()
    }

    /// Coefficients `c_0..c_n`, stopping early (with zeros) at termination.
    pub fn coefficients(&self, n: usize) -> Result<Vec<Rational>, HyperError> {
        let mut out = Vec::with_capacity(n + 1);
        let mut c = Rational::one();
        out.push(c.clone());
        let stop = self.termination();
        for k in 0..n {
            if stop.is_some_and(|m| k >= m) {
                out.push(Rational::zero());
                continue;
            }
            let kk = Rational::from_integer((k as i64).into());
            let mut num = Rational::one();
            for a in &self.upper {
                num *= a + &kk;
            }
            let mut den = Rational::from_integer((k as i64 + 1).into());
            for b in &self.lower {
                let f = b + &kk;
                if f.is_zero() {
                    return Err(HyperError::ZeroDenominator { param: format_rational(b), index: k + 1 });
                }
                den *= f;
            }
            c = c * num / den;
            out.push(c.clone());
        }
        Ok(out)
    }
}

/// The `pFq` series truncated at degree `n`.
pub fn pfq_series(spec: &PfqSpec, n: usize) -> Result<TruncSeries1, HyperError> {
    Ok(TruncSeries1::from_coeffs(spec.coefficients(n)?, n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(3, 7), 0), int(1));
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
    }

    #[test]
    fn gamma_ratio_negative_shift() {
        // Γ(z−2)/Γ(z) = 1/((z−2)(z−1))
        assert_eq!(gamma_ratio(&int(5), -2), Some(rat(1, 12)));
        assert_eq!(gamma_ratio(&int(1), -1), None);
    }

    #[test]
    fn gauss_coefficients() {
        let s = pfq_series(&PfqSpec::new(vec![int(1), int(1)], vec![int(2)]), 6).unwrap();
        for n in 0..=6 {
            assert_eq!(s.coeff(n), rat(1, n as i64 + 1));
        }
        let generic = pfq_series(&PfqSpec::new(vec![rat(1, 3), rat(2, 5)], vec![rat(3, 7)]), 3).unwrap();
        assert_eq!(generic.coeff(0), int(1));
    }

    #[test]
    fn terminating_polynomial() {
        let s = pfq_series(&PfqSpec::new(vec![int(-2), rat(1, 3)], vec![rat(1, 5)]), 6).unwrap();
        assert!(!s.coeff(2).is_zero());
        for n in 3..=6 {
            assert!(s.coeff(n).is_zero());
        }
    }

    #[test]
    fn zero_lower_parameter() {
        let e = pfq_series(&PfqSpec::new(vec![int(1)], vec![int(-1)]), 4).unwrap_err();
        assert!(matches!(e, HyperError::ZeroDenominator { index: 2, .. }));
        // Termination before the zero denominator is fine.
        assert!(pfq_series(&PfqSpec::new(vec![int(-1)], vec![int(-2)]), 5).is_ok());
    }
}
