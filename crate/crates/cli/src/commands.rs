//! Command implementations; each returns the rendered output and an exit status.

use appell_core::appellpde::{minimal_ode, Curve, OdeOutcome, SearchBounds};
use appell_core::catalog::{
    catalog_document, catalog_entries, find_record, sample_parameters, verify_identity, IdentityRecord, Outcome,
    VerificationReport, SCHEMA_VERSION,
};
use appell_core::exactnum::format_rational;
use appell_core::fuchsode::{local_exponents, pullback_transform};
use appell_core::hyperseries::{
    appell_terminating_eval, expand, parse_curve, parse_expression, parse_ratfunc, AppellSpec, ParamMap,
};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::output::{lode_text, render, series_json, series_text, Output};
use crate::{input, CatalogAction, Cli, Command, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let format = cli.global.format;
    match &cli.command {
        Command::Taylor { expr, order, params, vars } => taylor(format, expr, *order, params, vars.as_deref()),
        Command::Eval { appell, at } => eval(format, appell, at),
        Command::DeriveOde { system, params, curve, max_order, prolong_depth } => {
            derive_ode(format, system, params, curve, SearchBounds { max_order: *max_order, prolong_depth: *prolong_depth })
        }
        Command::Exponents { ode, point } => exponents(format, ode, point),
        Command::Pullback { ode, phi, theta } => pullback(format, ode, phi, theta),
        Command::Verify { id, all, seed, samples, order, jobs, timings } => {
            let records = if *all {
                catalog_entries()
            } else {
                let id = id.as_deref().expect("clap requires an id without --all");
                vec![find_record(id).map_err(input_err)?]
            };
            verify(format, &records, *seed, *samples as usize, *order, *jobs, *timings)
        }
        Command::Catalog { action } => catalog(format, action),
    }
}

fn taylor(format: Format, src: &str, order: i64, params: &str, vars: Option<&str>) -> Result<Output, CliError> {
    let params = input::params(params)?;
    let names: Option<Vec<&str>> = vars.map(|v| v.split(',').map(str::trim).filter(|s| !s.is_empty()).collect());
    let parsed = parse_expression(src, &params, names.as_deref()).map_err(input_err)?;
    let series = expand(&parsed.expr, &parsed.vars, order).map_err(input_err)?;
    Ok(render(
        format,
        || series_text(&series, &parsed.vars),
        || json!({ "schema_version": SCHEMA_VERSION, "expression": src, "order": order, "series": series_json(&series, &parsed.vars) }),
        0,
    ))
}

fn eval(format: Format, src: &str, at: &str) -> Result<Output, CliError> {
    let (head, args) = input::call(src)?;
    let kind = input::appell_kind(&head)?;
    if args.len() != kind.param_names().len() {
        return Err(CliError::Input(format!("{kind} takes {} parameters, got {}", kind.param_names().len(), args.len())));
    }
    let (x, y) = input::pair(at)?;
    let spec = AppellSpec::new(kind, args);
    let v = appell_terminating_eval(&spec, &x, &y).map_err(input_err)?;
    let value = format_rational(&v.value);
    Ok(render(
        format,
        || format!("{value}\n({} terms)\n", v.terms),
        || json!({ "schema_version": SCHEMA_VERSION, "value": value, "terms": v.terms }),
        0,
    ))
}

fn derive_ode(format: Format, system: &str, params: &str, curve: &str, bounds: SearchBounds) -> Result<Output, CliError> {
    let kind = input::appell_kind(system)?;
    let params = input::params(params)?;
    let spec = AppellSpec::new(kind, input::system_params(kind, &params)?);
    let (x, y) = parse_curve(curve, &params).map_err(input_err)?;
    let curve = Curve::new(x, y).map_err(input_err)?;
    let outcome = minimal_ode(&spec, &curve, bounds).map_err(input_err)?;
    let curve_json = json!({ "x": curve.x().to_string(), "y": curve.y().to_string() });
    Ok(match outcome {
        OdeOutcome::Found(l) => render(
            format,
            || lode_text(&l),
            || json!({ "schema_version": SCHEMA_VERSION, "found": true, "curve": curve_json, "lode": l.to_json() }),
            0,
        ),
        OdeOutcome::NoOdeWithinBounds { max_order, prolong_depth } => render(
            format,
            || format!("no ODE found within bounds (order <= {max_order}, prolongation depth {prolong_depth})\n"),
            || {
                json!({
                    "schema_version": SCHEMA_VERSION, "found": false, "curve": curve_json,
                    "max_order": max_order, "prolong_depth": prolong_depth,
                })
            },
            1,
        ),
    })
}

fn exponents(format: Format, ode: &str, point: &str) -> Result<Output, CliError> {
    let l = input::ode(ode)?;
    let p = input::point(point)?;
    let rep = local_exponents(&l, &p).map_err(input_err)?;
    let roots: Vec<String> = rep.rational_roots.iter().map(format_rational).collect();
    Ok(render(
        format,
        || {
            let mut s = format!("point: {}\nindicial: {}\nexponents: {}\n", rep.point, rep.indicial, roots.join(", "));
            if !rep.is_complete() {
                s.push_str("(the indicial polynomial has irrational roots)\n");
            }
            s
        },
        || {
            json!({
                "schema_version": SCHEMA_VERSION,
                "point": rep.point.to_string(),
                "indicial": rep.indicial.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
                "exponents": roots,
                "complete": rep.is_complete(),
            })
        },
        0,
    ))
}

fn pullback(format: Format, ode: &str, phi: &str, theta: &str) -> Result<Output, CliError> {
    let l = input::ode(ode)?;
    let phi = parse_ratfunc(phi, "t", &ParamMap::new()).map_err(input_err)?;
    let theta = input::theta(theta)?;
    let out = pullback_transform(&l, &phi, &theta).map_err(input_err)?;
    Ok(render(format, || lode_text(&out), || json!({ "schema_version": SCHEMA_VERSION, "lode": out.to_json() }), 0))
}

enum Task<'a> {
    Sample(&'a IdentityRecord, ParamMap),
    Unsampled(&'a IdentityRecord, String),
}

fn verify(
    format: Format,
    records: &[IdentityRecord],
    seed: u64,
    samples: usize,
    order: Option<i64>,
    jobs: usize,
    timings: bool,
) -> Result<Output, CliError> {
    let mut tasks = Vec::new();
    for r in records {
        match sample_parameters(r, seed, samples) {
            Ok(ps) => tasks.extend(ps.into_iter().map(|p| Task::Sample(r, p))),
            Err(e) => tasks.push(Task::Unsampled(r, e.to_string())),
        }
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| CliError::Internal(e.to_string()))?;
    let reports: Vec<VerificationReport> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| match t {
                Task::Sample(r, p) => {
                    let mut rep = verify_identity(r, p, order);
                    if !timings {
                        rep.elapsed_ms = None;
                    }
                    rep
                }
                Task::Unsampled(r, reason) => VerificationReport {
                    id: r.id.clone(),
                    mode: r.mode,
                    sample: Default::default(),
                    order: order.unwrap_or(r.order),
                    outcome: Outcome::Error,
                    detail: Some(reason.clone()),
                    ratio: None,
                    term_counts: Vec::new(),
                    elapsed_ms: None,
                },
            })
            .collect()
    });
    let count = |o: Outcome| reports.iter().filter(|r| r.outcome == o).count();
    let (pass, fail, degenerate, error) = (count(Outcome::Pass), count(Outcome::Fail), count(Outcome::Degenerate), count(Outcome::Error));
    let status = if fail + error == 0 { 0 } else { 1 };
    Ok(render(
        format,
        || {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&crate::output::report_line(r));
            }
            s.push_str(&format!("{pass} passed, {fail} failed, {degenerate} degenerate, {error} errors\n"));
            s
        },
        || {
            json!({
                "schema_version": SCHEMA_VERSION,
                "seed": seed,
                "samples": samples,
                "reports": reports,
                "summary": { "pass": pass, "fail": fail, "degenerate": degenerate, "error": error },
            })
        },
        status,
    ))
}

fn catalog(format: Format, action: &CatalogAction) -> Result<Output, CliError> {
    match action {
        CatalogAction::List => {
            let records = catalog_entries();
            Ok(render(
                format,
                || {
                    let width = records.iter().map(|r| r.id.len()).max().unwrap_or(0);
                    records.iter().map(|r| format!("{:width$}  {:<12}  {}\n", r.id, r.mode.to_string(), r.claim)).collect()
                },
                || catalog_document(&records),
                0,
            ))
        }
        CatalogAction::Show { id } => {
            let r = find_record(id).map_err(input_err)?;
            let doc = json!({ "schema_version": SCHEMA_VERSION, "record": r });
            Ok(render(
                format,
                || serde_json::to_string_pretty(&r).expect("records serialize") + "\n",
                || doc.clone(),
                0,
            ))
        }
    }
}
