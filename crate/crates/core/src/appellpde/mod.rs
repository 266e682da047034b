//! Appell PDE systems in the Weyl algebra and elimination along rational curves.
//!
//! Each Appell function is annihilated by a small set of second order operators
//! with polynomial coefficients. Specializing those operators (and their
//! prolongations) along a curve `t ↦ (x(t), y(t))` and combining them with the
//! chain-rule expansions of `d^k/dt^k` gives linear algebra over Q(t) whose
//! solutions are ordinary differential equations for `F(x(t), y(t))`.

mod elimination;
mod mixed;
mod obstruction;
mod systems;
mod weyl;

pub use elimination::{minimal_ode, OdeOutcome, SearchBounds};
pub use mixed::{chain_rule_expansions, full_derivative_elements, specialize, MixedElement};
pub use obstruction::{f1_curve_residual, order2_obstruction, reducibility_predicate, solves_system, Chart, Reducibility};
pub use systems::{appell_system, curve_on_locus, singular_locus, Curve, SingularLocus};
pub use weyl::WeylOp;

use thiserror::Error;

use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdeError {
    #[error("curve is constant")]
    ConstantCurve,
    #[error("curve {0} lies on the singular locus")]
    OnSingularLocus(String),
    #[error("degenerate elimination: {0}")]
    Degenerate(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("residual known only to total degree {have}, degree {need} requested")]
    InsufficientOrder { have: String, need: i64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}
