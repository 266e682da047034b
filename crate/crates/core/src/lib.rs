//! Exact symbolic-numeric kernel for Appell's double hypergeometric functions.
//!
//! The crate is split by concern:
//!
//! - [`exactnum`]: rationals, dense/sparse polynomials, normalized rational
//!   functions over Q, truncated power series and series with monomial prefactors.
//! - [`hyperseries`]: Pochhammer symbols, pFq and Appell F1..F4 series, terminating
//!   sums, and an expression language that expands into truncated Taylor series.
//! - [`fuchsode`]: linear ODEs over Q(t), local exponents, pullbacks and symmetric squares.
//! - [`appellpde`]: the Appell PDE systems as Weyl-algebra operators and the linear
//!   elimination engine deriving the ODE of a univariate specialization.
//! - [`catalog`]: a registry of identities and same-ODE claims with a verifier.

pub mod appellpde;
pub mod catalog;
pub mod exactnum;
pub mod fuchsode;
pub mod hyperseries;

pub use exactnum::{BiPoly, GenSeries, RatFunc, Rational, TruncSeries1, TruncSeries2, UniPoly};
