//! Hypergeometric series engine.
//!
//! Pochhammer symbols, generalized `pFq` and Appell `F1..F4` series with exact
//! rational coefficients, terminating double sums evaluated at rational points,
//! and an expression language (with a text parser) that expands identity sides
//! into truncated Taylor series.

mod appell;
mod expand;
mod expr;
mod parser;
mod pfq;

pub use appell::{appell_series, appell_terminating_eval, AppellKind, AppellSpec, TerminatingValue};
pub use expand::{coefficient_at, compare_expansions, compare_series, expand, Comparison, Mismatch, Side};
pub use expr::Expr;
pub use parser::{parse_curve, parse_expression, parse_ratfunc, ParamMap, ParsedExpr};
pub use pfq::{gamma_ratio, pfq_series, pochhammer, PfqSpec};

use thiserror::Error;

use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("zero Pochhammer symbol in a denominator: ({param})_{index} with no earlier termination")]
    ZeroDenominator { param: String, index: usize },
    #[error("series does not terminate: {0}")]
    NonTerminating(String),
    #[error("hypergeometric argument {0} does not vanish at the expansion point")]
    ArgumentNotVanishing(String),
    #[error("Gauss summation at 1 diverges for coefficient x^{n} (excess {excess} is not positive)")]
    Divergent { n: usize, excess: String },
    #[error("{context}: {source}")]
    Exact { context: String, source: ExactError },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expansion reached only total degree {have}, {need} requested")]
    InsufficientOrder { have: String, need: i64 },
}

impl HyperError {
    pub(crate) fn exact(context: impl Into<String>, source: ExactError) -> Self {
        HyperError::Exact { context: context.into(), source }
    }
}
