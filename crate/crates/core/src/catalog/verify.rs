use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::recipe::RecipeError;
use super::sampling::admissibility;
use super::{eval_constant, ChartSpec, IdentityRecord, Mode, Sides, SystemRef, TerminatingCheck};
use crate::appellpde::{solves_system, Chart, PdeError, SearchBounds};
use crate::exactnum::{format_rational, GenSeries, Rational};
use crate::fuchsode::{lode_equal, Lode};
use crate::hyperseries::{
    appell_terminating_eval, coefficient_at, compare_series, expand, parse_expression, parse_ratfunc, Comparison,
    HyperError, Mismatch, ParamMap, Side,
};

/// Extra expansion order tried in turn for `SolvesSystem` candidates.
const SOLUTION_SLACKS: [i64; 5] = [2, 4, 8, 16, 32];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The sample violates a declared degeneracy or hits one during the computation.
    Degenerate,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub mode: Mode,
    pub sample: BTreeMap<String, String>,
    pub order: i64,
    pub outcome: Outcome,
    /// First mismatching coefficient, equation difference, or the reason for a non-pass.
    pub detail: Option<String>,
    /// The constant ratio `lhs / rhs` of a `Proportional` record.
    pub ratio: Option<String>,
    /// Term counts of the terminating sums evaluated at rational points.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub term_counts: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

struct Verdict {
    outcome: Outcome,
    detail: Option<String>,
    ratio: Option<String>,
    term_counts: Vec<usize>,
}

impl Verdict {
    fn new(outcome: Outcome, detail: Option<String>) -> Self {
        Verdict { outcome, detail, ratio: None, term_counts: Vec::new() }
    }

    fn pass() -> Self {
        Verdict::new(Outcome::Pass, None)
    }

    fn fail(detail: String) -> Self {
        Verdict::new(Outcome::Fail, Some(detail))
    }
}

fn hyper_verdict(e: HyperError) -> Verdict {
    let outcome = match e {
        HyperError::ZeroDenominator { .. } => Outcome::Degenerate,
        _ => Outcome::Error,
    };
    Verdict::new(outcome, Some(e.to_string()))
}

fn recipe_verdict(e: RecipeError) -> Verdict {
    let outcome = match &e {
        RecipeError::Pde(PdeError::Degenerate(_)) | RecipeError::Parse(HyperError::ZeroDenominator { .. }) => {
            Outcome::Degenerate
        }
        RecipeError::NoOde { .. } => Outcome::Fail,
        _ => Outcome::Error,
    };
    Verdict::new(outcome, Some(e.to_string()))
}

fn monomial(vars: &[String], ex: &Rational, ey: &Rational) -> String {
    let mut parts = Vec::new();
    for (v, e) in vars.iter().zip([ex, ey]) {
        if !e.is_zero() {
            parts.push(format!("{v}^{}", format_rational(e)));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn describe_mismatch(m: &Mismatch, vars: &[String]) -> String {
    match m {
        Mismatch::Coefficient { x_exp, y_exp, lhs, rhs } => format!(
            "coefficient of {}: lhs = {}, rhs = {}",
            monomial(vars, x_exp, y_exp),
            format_rational(lhs),
            format_rational(rhs)
        ),
        Mismatch::Undefined { side, reason } => {
            let s = match side {
                Side::Lhs => "lhs",
                Side::Rhs => "rhs",
            };
            format!("{s} has no formal expansion: {reason}")
        }
    }
}

fn with_substitution(src: &str, record: &IdentityRecord) -> String {
    match &record.substitution {
        Some(s) => format!("{src} (subst {s})"),
        None => src.to_string(),
    }
}

/// Expands one side, turning a divergent Gauss sum into a mismatch.
fn expand_side(src: &str, p: &ParamMap, vars: &[String], order: i64, side: Side) -> Result<Result<GenSeries, Mismatch>, HyperError> {
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let parsed = parse_expression(src, p, Some(&names))?;
    match expand(&parsed.expr, vars, order) {
        Ok(g) => Ok(Ok(g)),
        Err(err @ HyperError::Divergent { .. }) => Ok(Err(Mismatch::Undefined { side, reason: err.to_string() })),
        Err(err) => Err(err),
    }
}

fn compare_sides(record: &IdentityRecord, p: &ParamMap, vars: &[String], lhs: &str, rhs: &str, order: i64) -> Result<Comparison, HyperError> {
    let l = match expand_side(&with_substitution(lhs, record), p, vars, order, Side::Lhs)? {
        Ok(g) => g,
        Err(m) => return Ok(Comparison::Differ(m)),
    };
    let r = match expand_side(&with_substitution(rhs, record), p, vars, order, Side::Rhs)? {
        Ok(g) => g,
        Err(m) => return Ok(Comparison::Differ(m)),
    };
    Ok(compare_series(&l, &r, order))
}

fn exact(record: &IdentityRecord, p: &ParamMap, vars: &[String], lhs: &str, rhs: &str, order: i64) -> Verdict {
    let cmp = match compare_sides(record, p, vars, lhs, rhs, order) {
        Ok(c) => c,
        Err(e) => return hyper_verdict(e),
    };
    let expect_fail = record.mode == Mode::ExpectFail;
    match (cmp, expect_fail) {
        (Comparison::Equal, false) => Verdict::pass(),
        (Comparison::Equal, true) => Verdict::fail(format!("no mismatch through total degree {order}")),
        (Comparison::Differ(m), false) => Verdict::fail(describe_mismatch(&m, vars)),
        (Comparison::Differ(m), true) => Verdict::new(Outcome::Pass, Some(describe_mismatch(&m, vars))),
    }
}

fn proportional(record: &IdentityRecord, p: &ParamMap, vars: &[String], lhs: &str, rhs: &str, order: i64) -> Verdict {
    let side = |src: &str, s: Side| -> Result<GenSeries, Verdict> {
        match expand_side(&with_substitution(src, record), p, vars, order, s) {
            Ok(Ok(g)) => Ok(g),
            Ok(Err(m)) => Err(Verdict::fail(describe_mismatch(&m, vars))),
            Err(e) => Err(hyper_verdict(e)),
        }
    };
    let (l, r) = match (side(lhs, Side::Lhs), side(rhs, Side::Rhs)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(v), _) | (_, Err(v)) => return v,
    };
    let zero = Rational::zero();
    let (l0, r0) = (coefficient_at(&l, &zero, &zero), coefficient_at(&r, &zero, &zero));
    if l0.is_zero() || r0.is_zero() {
        return Verdict::new(Outcome::Degenerate, Some("a constant coefficient vanishes".into()));
    }
    let mut v = match compare_series(&l.scale(&r0), &r.scale(&l0), order) {
        Comparison::Equal => Verdict::pass(),
        Comparison::Differ(m) => Verdict::fail(format!("ratio not constant; {}", describe_mismatch(&m, vars))),
    };
    v.ratio = Some(format_rational(&(l0 / r0)));
    v
}

fn describe_lode_difference(a: &Lode, b: &Lode) -> String {
    if a.order() != b.order() {
        return format!("orders differ: lhs {} vs rhs {}", a.order(), b.order());
    }
    let (ma, mb) = (a.monic(), b.monic());
    for k in 0..ma.order() {
        if ma.coeff(k) != mb.coeff(k) {
            return format!(
                "monic coefficient of d^{k}/dt^{k}: lhs {}, rhs {}",
                ma.coeff(k).to_string_var("t"),
                mb.coeff(k).to_string_var("t")
            );
        }
    }
    "equations differ".into()
}

fn same_ode(p: &ParamMap, lhs: &super::OdeRecipe, rhs: &super::OdeRecipe) -> Verdict {
    let bounds = SearchBounds::default();
    let l = match lhs.build(p, bounds) {
        Ok(l) => l,
        Err(e) => return recipe_verdict(e),
    };
    let r = match rhs.build(p, bounds) {
        Ok(r) => r,
        Err(e) => return recipe_verdict(e),
    };
    if lode_equal(&l, &r) {
        Verdict::new(Outcome::Pass, Some(format!("order {}", l.order())))
    } else {
        Verdict::fail(describe_lode_difference(&l, &r))
    }
}

fn expand_in(src: &str, p: &ParamMap, vars: &[String], order: i64) -> Result<GenSeries, HyperError> {
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let parsed = parse_expression(src, p, Some(&names))?;
    expand(&parsed.expr, vars, order)
}

fn solution(
    record: &IdentityRecord,
    p: &ParamMap,
    system: &SystemRef,
    vars: &[String],
    candidate: &str,
    chart: Option<&ChartSpec>,
    order: i64,
) -> Verdict {
    let spec = match system.resolve(p) {
        Ok(s) => s,
        Err(e) => return recipe_verdict(e),
    };
    let mut last = String::new();
    for slack in SOLUTION_SLACKS {
        let work = order + slack;
        let build = || -> Result<(GenSeries, Option<Chart>), HyperError> {
            let g = expand_in(&with_substitution(candidate, record), p, vars, work)?;
            let ch = match chart {
                Some(c) => Some(Chart { x: expand_in(&c.x, p, vars, work)?, y: expand_in(&c.y, p, vars, work)? }),
                None => None,
            };
            Ok((g, ch))
        };
        let (g, ch) = match build() {
            Ok(v) => v,
            Err(e) => return hyper_verdict(e),
        };
        // Orders count from the candidate's leading exponent, so large exponents cannot make the check vacuous.
        let lead = (g.alpha() + g.beta()).ceil().to_integer().to_i64().unwrap_or(0);
        let target = lead + order;
        match solves_system(&spec, &g, target, ch.as_ref()) {
            Ok(true) => return Verdict::pass(),
            Ok(false) => return Verdict::fail(format!("a residual is nonzero below total degree {target}")),
            Err(e @ PdeError::InsufficientOrder { .. }) => last = e.to_string(),
            Err(e) => return recipe_verdict(RecipeError::Pde(e)),
        }
    }
    Verdict::new(Outcome::Error, Some(last))
}

/// Rational points of the check's family, skipping poles of the arguments.
fn terminating(check: &TerminatingCheck, p: &ParamMap) -> Result<Vec<usize>, String> {
    let spec = check.system.resolve(p).map_err(|e| e.to_string())?;
    let x = parse_ratfunc(&check.x, &check.var, p).map_err(|e| e.to_string())?;
    let y = parse_ratfunc(&check.y, &check.var, p).map_err(|e| e.to_string())?;
    let expected = eval_constant(&check.expected_terms, p).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut counts = Vec::with_capacity(check.points);
    while counts.len() < check.points {
        let w = Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=20).into());
        let (Some(xv), Some(yv)) = (x.eval(&w), y.eval(&w)) else {
            continue;
        };
        let v = appell_terminating_eval(&spec, &xv, &yv).map_err(|e| e.to_string())?;
        if Rational::from_integer(v.terms.into()) != expected {
            return Err(format!(
                "{} = {} gives {} terms, expected {}",
                check.var,
                format_rational(&w),
                v.terms,
                format_rational(&expected)
            ));
        }
        counts.push(v.terms);
    }
    Ok(counts)
}

/// Verifies one record at one complete parameter sample through total degree `order`
/// (the record default when `None`). Precondition violations are reported, not raised.
pub fn verify_identity(record: &IdentityRecord, sample: &ParamMap, order: Option<i64>) -> VerificationReport {
    let start = Instant::now();
    let order = order.unwrap_or(record.order);
    let verdict = match admissibility(record, sample) {
        Err(reason) => Verdict::new(Outcome::Degenerate, Some(reason)),
        Ok(()) => match &record.sides {
            Sides::Series { vars, lhs, rhs } => match record.mode {
                Mode::Proportional => proportional(record, sample, vars, lhs, rhs, order),
                _ => exact(record, sample, vars, lhs, rhs, order),
            },
            Sides::Odes { lhs, rhs } => same_ode(sample, lhs, rhs),
            Sides::Solution { system, vars, candidate, chart } => {
                solution(record, sample, system, vars, candidate, chart.as_ref(), order)
            }
        },
    };
    let mut verdict = verdict;
    if verdict.outcome == Outcome::Pass {
        for check in &record.terminating {
            match terminating(check, sample) {
                Ok(c) => verdict.term_counts.extend(c),
                Err(e) => {
                    verdict = Verdict::fail(e);
                    break;
                }
            }
        }
    }
    VerificationReport {
        id: record.id.clone(),
        mode: record.mode,
        sample: sample.iter().map(|(k, v)| (k.clone(), format_rational(v))).collect(),
        order,
        outcome: verdict.outcome,
        detail: verdict.detail,
        ratio: verdict.ratio,
        term_counts: verdict.term_counts,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    }
}
