//! Exact arithmetic foundation.
//!
//! Everything here is immutable once built and carries no interior mutability,
//! so values can be shared freely between threads.

mod bipoly;
mod genseries;
mod ratfunc;
mod rational;
mod series;
mod unipoly;

pub use bipoly::BiPoly;
pub use genseries::{Axis, GenSeries};
pub use ratfunc::RatFunc;
pub use rational::{
    exact_power, format_rational, int, parse_rational, rat, rational_serde, rational_vec_serde,
    Rational,
};
pub use series::{series_compose, series_compose2, TruncSeries1, TruncSeries2};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("non-unit base: series has zero constant term")]
    NonUnitBase,
    #[error("composition point mismatch: inner series has nonzero constant term")]
    CompositionPointMismatch,
    #[error("{base}^({exponent}) is not rational")]
    IrrationalConstant { base: String, exponent: String },
    #[error("exponents {0} and {1} differ by a non-integer")]
    IncompatibleExponents(String, String),
    #[error("series is not a monomial times a unit")]
    NotMonomialTimesUnit,
    #[error("truncation order {have} is below the required {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}
