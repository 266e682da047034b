//! Registry of identities and same-equation claims with a sampling verifier.
//!
//! Each [`IdentityRecord`] names two sides and a verification mode:
//!
//! - `Exact`: both sides are expressions in the hyperseries grammar and must agree
//!   coefficientwise through total degree `N`;
//! - `Proportional`: the sides agree up to a single constant factor;
//! - `SameOde`: two recipes (derived from an Appell system along a curve, builtin,
//!   pulled back or squared) must produce the same monic equation;
//! - `SolvesSystem`: an expression, possibly in a local chart, is annihilated by
//!   the Appell system through total degree `N`;
//! - `ExpectFail`: an `Exact` comparison that must find a mismatch.
//!
//! Parameters are drawn by [`sample_parameters`]; records list their constraints
//! (solved for dependent parameters) and the degeneracies to avoid.

mod entries;
mod recipe;
mod sampling;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::Rational;
use crate::hyperseries::{parse_expression, HyperError, ParamMap};

pub use entries::catalog_entries;
pub use recipe::{OdeRecipe, RecipeError, SystemRef, ThetaSpec};
pub use sampling::{admissibility, complete_sample, sample_parameters};
pub use verify::{verify_identity, Outcome, VerificationReport};

/// Version of the JSON layout of records and reports.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog record {0:?}")]
    UnknownRecord(String),
    #[error("record {id}: {reason}")]
    InvalidRecord { id: String, reason: String },
    #[error("record {id}: only {found} of {wanted} admissible samples found ({reason})")]
    Unsatisfiable { id: String, wanted: usize, found: usize, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Exact,
    Proportional,
    SameOde,
    SolvesSystem,
    ExpectFail,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Where a free parameter is drawn from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Domain {
    /// A non-integer rational with numerator and denominator bounded by 20.
    Rational,
    /// An integer in `min..=max`.
    Integer { min: i64, max: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamDecl {
    pub name: String,
    pub domain: Domain,
}

/// `name = value`, with `value` an affine expression in earlier parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    pub value: String,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.value)
    }
}

/// Degeneracy exclusions checked on every sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "expr", rename_all = "snake_case")]
pub enum Condition {
    NonInteger(String),
    Positive(String),
    NonZero(String),
}

/// A local chart `x = X(u, v)`, `y = Y(u, v)` given as expressions in the record variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartSpec {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Sides {
    /// Two expressions in the same expansion variables.
    Series { vars: Vec<String>, lhs: String, rhs: String },
    /// Two equation recipes in `t`.
    Odes { lhs: OdeRecipe, rhs: OdeRecipe },
    /// A candidate solution of an Appell system, in chart variables when `chart` is set.
    Solution { system: SystemRef, vars: Vec<String>, candidate: String, chart: Option<ChartSpec> },
}

/// A terminating Appell sum evaluated at rational points of a one-parameter family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminatingCheck {
    pub system: SystemRef,
    pub var: String,
    pub x: String,
    pub y: String,
    pub points: usize,
    /// Expected number of summed terms, as a constant expression in the parameters.
    pub expected_terms: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub id: String,
    pub mode: Mode,
    /// One-line statement of what is asserted.
    pub claim: String,
    pub params: Vec<ParamDecl>,
    pub constraints: Vec<Constraint>,
    pub conditions: Vec<Condition>,
    /// Change of variable appended to both expression sides, e.g. `z = w^2`.
    pub substitution: Option<String>,
    pub sides: Sides,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terminating: Vec<TerminatingCheck>,
    /// Default truncation order.
    pub order: i64,
}

impl IdentityRecord {
    /// Names of all parameters, free ones first.
    pub fn param_names(&self) -> Vec<String> {
        self.params.iter().map(|p| p.name.clone()).chain(self.constraints.iter().map(|c| c.name.clone())).collect()
    }

    fn invalid(&self, reason: impl Into<String>) -> CatalogError {
        CatalogError::InvalidRecord { id: self.id.clone(), reason: reason.into() }
    }

    /// Checks that constraints only refer to earlier parameters and that the mode fits the sides.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let mut known = ParamMap::new();
        for p in &self.params {
            if known.insert(p.name.clone(), Rational::from_integer(1.into())).is_some() {
                return Err(self.invalid(format!("parameter {} declared twice", p.name)));
            }
        }
        for c in &self.constraints {
            if known.contains_key(&c.name) {
                return Err(self.invalid(format!("constraint redefines {}", c.name)));
            }
            if let Err(e) = parse_expression(&c.value, &known, Some(&[])) {
                return Err(self.invalid(format!("constraint {c}: {e}")));
            }
            known.insert(c.name.clone(), Rational::from_integer(1.into()));
        }
        let fits = matches!(
            (self.mode, &self.sides),
            (Mode::Exact | Mode::Proportional | Mode::ExpectFail, Sides::Series { .. })
                | (Mode::SameOde, Sides::Odes { .. })
                | (Mode::SolvesSystem, Sides::Solution { .. })
        );
        if !fits {
            return Err(self.invalid(format!("mode {} does not match the kind of sides", self.mode)));
        }
        if self.order < 2 {
            return Err(self.invalid("truncation order must be at least 2"));
        }
        Ok(())
    }
}

/// Looks up a record by id.
pub fn find_record(id: &str) -> Result<IdentityRecord, CatalogError> {
    catalog_entries().into_iter().find(|r| r.id == id).ok_or_else(|| CatalogError::UnknownRecord(id.to_string()))
}

/// The catalog as a versioned JSON document.
pub fn catalog_document(records: &[IdentityRecord]) -> serde_json::Value {
    serde_json::json!({ "schema_version": SCHEMA_VERSION, "records": records })
}

/// Evaluates a constant expression in the sampled parameters.
pub(crate) fn eval_constant(src: &str, params: &ParamMap) -> Result<Rational, HyperError> {
    let parsed = parse_expression(src, params, Some(&[]))?;
    parsed.expr.const_value().ok_or(HyperError::Parse { pos: 0, msg: format!("{src} is not a constant") })
}
