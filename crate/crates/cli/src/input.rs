//! Parsing of command-line values: parameter lists, points, theta factors and ODE specs.

use std::path::Path;

use appell_core::exactnum::{parse_rational, Rational};
use appell_core::fuchsode::{builtin_ode, Lode, LodeJson, Point, ThetaFactor};
use appell_core::hyperseries::{AppellKind, ParamMap};

use crate::commands::CliError;

fn rational(s: &str, what: &str) -> Result<Rational, CliError> {
    parse_rational(s.trim()).map_err(|e| CliError::Input(format!("{what} {:?}: {e}", s.trim())))
}

/// `a=1/3,b=1/5` into a parameter map; the empty string gives an empty map.
pub fn params(src: &str) -> Result<ParamMap, CliError> {
    let mut out = ParamMap::new();
    for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) =
            item.split_once('=').ok_or_else(|| CliError::Input(format!("parameter {item:?} is not of the form name=p/q")))?;
        let name = name.trim();
        if out.insert(name.to_string(), rational(value, "parameter value")?).is_some() {
            return Err(CliError::Input(format!("parameter {name} given twice")));
        }
    }
    Ok(out)
}

pub fn appell_kind(s: &str) -> Result<AppellKind, CliError> {
    match s.trim().to_ascii_uppercase().as_str() {
        "F1" => Ok(AppellKind::F1),
        "F2" => Ok(AppellKind::F2),
        "F3" => Ok(AppellKind::F3),
        "F4" => Ok(AppellKind::F4),
        other => Err(CliError::Input(format!("unknown Appell system {other:?} (expected F1..F4)"))),
    }
}

/// The Appell parameters in the system's canonical order.
pub fn system_params(kind: AppellKind, p: &ParamMap) -> Result<Vec<Rational>, CliError> {
    let names = kind.param_names();
    if let Some(extra) = p.keys().find(|k| !names.contains(&k.as_str())) {
        return Err(CliError::Input(format!("{kind} has no parameter {extra} (expected {})", names.join(", "))));
    }
    names
        .iter()
        .map(|n| p.get(*n).cloned().ok_or_else(|| CliError::Input(format!("missing parameter {n} for {kind}"))))
        .collect()
}

/// `head(p1, p2, ...)` with rational arguments.
pub fn call(src: &str) -> Result<(String, Vec<Rational>), CliError> {
    let src = src.trim();
    let (head, rest) = src.split_once('(').ok_or_else(|| CliError::Input(format!("expected name(args) in {src:?}")))?;
    let inner = rest.strip_suffix(')').ok_or_else(|| CliError::Input(format!("missing closing parenthesis in {src:?}")))?;
    let args = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| rational(s, "argument"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((head.trim().to_string(), args))
}

/// `x,y` as two rationals.
pub fn pair(src: &str) -> Result<(Rational, Rational), CliError> {
    let (x, y) = src.split_once(',').ok_or_else(|| CliError::Input(format!("expected a point x,y, got {src:?}")))?;
    Ok((rational(x, "coordinate")?, rational(y, "coordinate")?))
}

pub fn point(src: &str) -> Result<Point, CliError> {
    src.parse().map_err(|e| CliError::Input(format!("point {src:?}: {e}")))
}

/// `(p1,e1),(p2,e2)`; points may be `inf`.
pub fn theta(src: &str) -> Result<Vec<ThetaFactor>, CliError> {
    let mut out = Vec::new();
    let mut rest = src.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        if rest.is_empty() {
            break;
        }
        let body = rest.strip_prefix('(').ok_or_else(|| CliError::Input(format!("theta factor must start with '(' at {rest:?}")))?;
        let close = body.find(')').ok_or_else(|| CliError::Input(format!("unclosed theta factor {rest:?}")))?;
        let (p, e) = body[..close]
            .split_once(',')
            .ok_or_else(|| CliError::Input(format!("theta factor {:?} needs (point,exponent)", &body[..close])))?;
        out.push(ThetaFactor::new(point(p)?, rational(e, "theta exponent")?));
        rest = &body[close + 1..];
    }
    Ok(out)
}

/// A JSON file holding a Lode (bare or under a `lode` key), or `builtin(params)`.
pub fn ode(src: &str) -> Result<Lode, CliError> {
    if Path::new(src).is_file() {
        let text = std::fs::read_to_string(src).map_err(|e| CliError::Input(format!("reading {src}: {e}")))?;
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{src}: {e}")))?;
        let value = value.get("lode").cloned().unwrap_or(value);
        let json: LodeJson = serde_json::from_value(value).map_err(|e| CliError::Input(format!("{src}: {e}")))?;
        return Lode::from_json(&json).map_err(|e| CliError::Input(format!("{src}: {e}")));
    }
    let (name, args) = call(src)?;
    builtin_ode(&name, &args).map_err(|e| CliError::Input(e.to_string()))
}
