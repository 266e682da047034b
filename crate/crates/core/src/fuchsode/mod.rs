//! Linear ordinary differential equations over Q(t).
//!
//! Builtin hypergeometric equations, local exponents from indicial polynomials,
//! pullback and projective transforms, symmetric squares, formal application to
//! series, and canonical (monic) equality.

mod apply;
mod builtins;
mod exponents;
mod transform;

pub use apply::{annihilates, lode_apply};
pub use builtins::{builtin_ode, euler, f2_antidiagonal, f2_separated, hpg32, kato, BUILTIN_NAMES};
pub use exponents::{local_exponents, rational_roots, sorted_differences, ExponentReport, Point};
pub use transform::{change_variable_at_infinity, projective_transform, pullback_transform, symmetric_square, ThetaFactor};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{format_rational, parse_rational, ExactError, RatFunc, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuchsError {
    #[error("the leading coefficient of a differential equation must be nonzero")]
    ZeroLeading,
    #[error("irregular singular point at {point}: coefficient of d^{k}/dt^{k} has a pole of order {pole} > {allowed}")]
    Irregular { point: String, k: usize, pole: i64, allowed: i64 },
    #[error("degenerate transform: {0}")]
    Degenerate(String),
    #[error("expected an equation of order {expected}, got {got}")]
    WrongOrder { expected: usize, got: usize },
    #[error("unknown builtin equation {0:?}; known: euler, hpg32, kato, f2-antidiagonal, f2-separated")]
    UnknownBuiltin(String),
    #[error("builtin {name} takes {expected} parameters, got {got}")]
    BuiltinArity { name: String, expected: usize, got: usize },
    #[error("series known only to total degree {have}, residual to degree {need} requested")]
    InsufficientOrder { have: String, need: i64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("malformed equation JSON: {0}")]
    Json(String),
}

/// `Σ_k coeffs[k] · d^k/dt^k`, with a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Lode {
    coeffs: Vec<RatFunc>,
}

impl Lode {
    pub fn new(coeffs: Vec<RatFunc>) -> Result<Self, FuchsError> {
        match coeffs.last() {
            Some(c) if !c.is_zero() => Ok(Lode { coeffs }),
            _ => Err(FuchsError::ZeroLeading),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    /// Canonical form: leading coefficient 1.
    pub fn monic(&self) -> Lode {
        let lead = self.coeffs.last().expect("nonempty").inv().expect("leading coefficient is nonzero");
        Lode { coeffs: self.coeffs.iter().map(|c| c * &lead).collect() }
    }

    pub fn scale(&self, f: &RatFunc) -> Result<Lode, FuchsError> {
        Lode::new(self.coeffs.iter().map(|c| c * f).collect())
    }

    /// Coefficients multiplied by the lcm of their denominators, so all are polynomials.
    pub fn polynomial_coeffs(&self) -> Vec<UniPoly> {
        let mut l = UniPoly::one();
        for c in &self.coeffs {
            let g = l.gcd(c.den());
            l = (&l * c.den()).exact_div(&g).expect("gcd divides");
        }
        self.coeffs
            .iter()
            .map(|c| (&(c.num() * &l)).exact_div(c.den()).expect("den divides the lcm"))
            .collect()
    }

    pub fn to_json(&self) -> LodeJson {
        let poly = |p: &UniPoly| p.coeffs().iter().map(format_rational).collect();
        LodeJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| RatFuncJson { num: poly(c.num()), den: poly(c.den()) }).collect(),
        }
    }

    pub fn from_json(j: &LodeJson) -> Result<Lode, FuchsError> {
        if j.coeffs.len() != j.order + 1 {
            return Err(FuchsError::Json(format!("order {} needs {} coefficients, got {}", j.order, j.order + 1, j.coeffs.len())));
        }
        let poly = |v: &[String]| -> Result<UniPoly, FuchsError> {
            Ok(UniPoly::new(v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?))
        };
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| Ok(RatFunc::new(poly(&c.num)?, poly(&c.den)?)?))
            .collect::<Result<Vec<_>, FuchsError>>()?;
        Lode::new(coeffs)
    }
}

/// True when the monic forms agree coefficientwise.
pub fn lode_equal(a: &Lode, b: &Lode) -> bool {
    a.order() == b.order() && a.monic() == b.monic()
}

/// Wire format: coefficient lists are lowest degree first, rationals as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LodeJson {
    pub order: usize,
    pub coeffs: Vec<RatFuncJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl fmt::Display for Lode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let d = match k {
                0 => "y".to_string(),
                1 => "y'".to_string(),
                _ => format!("y^({k})"),
            };
            write!(f, "({})*{d}", c.to_string_var("t"))?;
        }
        write!(f, " = 0")
    }
}

impl fmt::Debug for Lode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
