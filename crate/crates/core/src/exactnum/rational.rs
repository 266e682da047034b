use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// Arbitrary-precision rational; `num_rational` keeps it reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `p`, `-p`, `p/q` (whitespace tolerated).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::BadRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_int_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// `base^exponent` when the result is rational (exact roots only).
pub fn exact_power(base: &Rational, exponent: &Rational) -> Option<Rational> {
    if exponent.is_zero() {
        return Some(Rational::one());
    }
    if base.is_zero() {
        return if exponent.is_positive() { Some(Rational::zero()) } else { None };
    }
    let k = exponent.denom().to_u32()?;
    let p = exponent.numer().to_i32()?;
    let rn = exact_int_root(base.numer(), k)?;
    let rd = exact_int_root(base.denom(), k)?;
    let root = Rational::new(rn, rd);
    Some(if p >= 0 {
        num_traits::pow(root, p as usize)
    } else {
        num_traits::pow(root.recip(), (-p) as usize)
    })
}

/// Serde adapter: a single rational as a `"p/q"` string.
pub mod rational_serde {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: a list of rationals as `"p/q"` strings.
pub mod rational_vec_serde {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
    }

    #[test]
    fn exact_powers() {
        assert_eq!(exact_power(&rat(4, 9), &rat(1, 2)), Some(rat(2, 3)));
        assert_eq!(exact_power(&rat(4, 9), &rat(-3, 2)), Some(rat(27, 8)));
        assert_eq!(exact_power(&int(-8), &rat(1, 3)), Some(int(-2)));
        assert_eq!(exact_power(&int(2), &rat(1, 2)), None);
        assert_eq!(exact_power(&int(-4), &rat(1, 2)), None);
        assert_eq!(exact_power(&int(0), &rat(-1, 2)), None);
    }
}
