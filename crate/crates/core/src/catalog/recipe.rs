use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::eval_constant;
use crate::appellpde::{minimal_ode, Curve, OdeOutcome, PdeError, SearchBounds};
use crate::fuchsode::{builtin_ode, pullback_transform, symmetric_square, FuchsError, Lode, Point, ThetaFactor};
use crate::hyperseries::{parse_curve, parse_ratfunc, AppellKind, AppellSpec, HyperError, ParamMap};

/// An Appell system with parameters given as constant expressions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemRef {
    pub kind: AppellKind,
    pub params: Vec<String>,
}

impl SystemRef {
    pub fn new(kind: AppellKind, params: &[&str]) -> Self {
        SystemRef { kind, params: params.iter().map(|s| s.to_string()).collect() }
    }

    pub fn resolve(&self, p: &ParamMap) -> Result<AppellSpec, RecipeError> {
        let want = self.kind.param_names().len();
        if self.params.len() != want {
            return Err(RecipeError::Arity { what: self.kind.to_string(), expected: want, got: self.params.len() });
        }
        let vals = self.params.iter().map(|s| eval_constant(s, p)).collect::<Result<Vec<_>, _>>()?;
        Ok(AppellSpec::new(self.kind, vals))
    }
}

/// A factor `(t − point)^exponent`; the point `inf` is accepted and contributes nothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub point: String,
    pub exponent: String,
}

impl ThetaSpec {
    pub fn new(point: &str, exponent: &str) -> Self {
        ThetaSpec { point: point.to_string(), exponent: exponent.to_string() }
    }

    fn resolve(&self, p: &ParamMap) -> Result<ThetaFactor, RecipeError> {
        let exponent = eval_constant(&self.exponent, p)?;
        let point = match self.point.trim() {
            "inf" => Point::Infinity,
            src => Point::Finite(eval_constant(src, p)?),
        };
        Ok(ThetaFactor::new(point, exponent))
    }
}

/// How to obtain a linear ODE in `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OdeRecipe {
    /// Minimal equation of the Appell function along `curve` (`"x = X(t); y = Y(t)"`).
    Derived { system: SystemRef, curve: String },
    Builtin { name: String, params: Vec<String> },
    /// Equation of `Π (t − p)^e · f(φ(t))` for `f` a solution of `base`.
    Pullback { base: Box<OdeRecipe>, phi: String, theta: Vec<ThetaSpec> },
    SymmetricSquare { base: Box<OdeRecipe> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecipeError {
    #[error(transparent)]
    Parse(#[from] HyperError),
    #[error(transparent)]
    Pde(#[from] PdeError),
    #[error(transparent)]
    Fuchs(#[from] FuchsError),
    #[error("{what} takes {expected} parameters, got {got}")]
    Arity { what: String, expected: usize, got: usize },
    #[error("no equation of order ≤ {max_order} with prolongation depth {prolong_depth}")]
    NoOde { max_order: usize, prolong_depth: u32 },
}

impl OdeRecipe {
    pub fn derived(system: SystemRef, curve: &str) -> Self {
        OdeRecipe::Derived { system, curve: curve.to_string() }
    }

    pub fn builtin(name: &str, params: &[&str]) -> Self {
        OdeRecipe::Builtin { name: name.to_string(), params: params.iter().map(|s| s.to_string()).collect() }
    }

    pub fn pullback(self, phi: &str, theta: &[(&str, &str)]) -> Self {
        OdeRecipe::Pullback {
            base: Box::new(self),
            phi: phi.to_string(),
            theta: theta.iter().map(|(p, e)| ThetaSpec::new(p, e)).collect(),
        }
    }

    /// Multiplication by power factors without a change of variable.
    pub fn projective(self, theta: &[(&str, &str)]) -> Self {
        self.pullback("t", theta)
    }

    pub fn symmetric_square(self) -> Self {
        OdeRecipe::SymmetricSquare { base: Box::new(self) }
    }

    pub fn build(&self, p: &ParamMap, bounds: SearchBounds) -> Result<Lode, RecipeError> {
        match self {
            OdeRecipe::Derived { system, curve } => {
                let spec = system.resolve(p)?;
                let (x, y) = parse_curve(curve, p)?;
                match minimal_ode(&spec, &Curve::new(x, y)?, bounds)? {
                    OdeOutcome::Found(l) => Ok(l),
                    OdeOutcome::NoOdeWithinBounds { max_order, prolong_depth } => {
                        Err(RecipeError::NoOde { max_order, prolong_depth })
                    }
                }
            }
            OdeRecipe::Builtin { name, params } => {
                let vals = params.iter().map(|s| eval_constant(s, p)).collect::<Result<Vec<_>, _>>()?;
                Ok(builtin_ode(name, &vals)?)
            }
            OdeRecipe::Pullback { base, phi, theta } => {
                let l = base.build(p, bounds)?;
                let phi = parse_ratfunc(phi, "t", p)?;
                let theta = theta.iter().map(|f| f.resolve(p)).collect::<Result<Vec<_>, _>>()?;
                Ok(pullback_transform(&l, &phi, &theta)?)
            }
            OdeRecipe::SymmetricSquare { base } => Ok(symmetric_square(&base.build(p, bounds)?)?),
        }
    }
}
