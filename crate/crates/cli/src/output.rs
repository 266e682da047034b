//! Text and JSON rendering.

use appell_core::catalog::VerificationReport;
use appell_core::exactnum::{format_rational, GenSeries, Rational};
use appell_core::fuchsode::Lode;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::Format;

pub struct Output {
    pub text: String,
    pub status: u8,
}

pub fn render(format: Format, text: impl FnOnce() -> String, json: impl FnOnce() -> Value, status: u8) -> Output {
    let text = match format {
        Format::Text => text(),
        Format::Json => serde_json::to_string_pretty(&json()).expect("json values serialize") + "\n",
    };
    Output { text, status }
}

pub fn lode_text(l: &Lode) -> String {
    format!("order {}\n{}\n", l.order(), l)
}

fn power(var: &str, e: &Rational) -> Option<String> {
    if e.is_zero() {
        None
    } else if e.is_one() {
        Some(var.to_string())
    } else if e.is_integer() && e > &Rational::zero() {
        Some(format!("{var}^{e}"))
    } else {
        Some(format!("{var}^({})", format_rational(e)))
    }
}

/// Nonzero terms as `(exponents, coefficient)` in the series' own term order.
fn terms(g: &GenSeries) -> Vec<(Rational, Rational, Rational)> {
    g.body()
        .iter_terms()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(i, j, c)| {
            (g.alpha() + Rational::from_integer((i as i64).into()), g.beta() + Rational::from_integer((j as i64).into()), c.clone())
        })
        .collect()
}

fn axis_name(vars: &[String], k: usize) -> &str {
    vars.get(k).map(String::as_str).unwrap_or(if k == 0 { "x" } else { "y" })
}

pub fn series_text(g: &GenSeries, vars: &[String]) -> String {
    let mut s = String::new();
    for (a, b, c) in terms(g) {
        let mono: Vec<String> = [power(axis_name(vars, 0), &a), power(axis_name(vars, 1), &b)].into_iter().flatten().collect();
        let mono = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
        s.push_str(&format!("{mono}: {}\n", format_rational(&c)));
    }
    s.push_str(&format!("+ O(total degree {})\n", format_rational(&(g.absolute_order() + Rational::one()))));
    s
}

pub fn series_json(g: &GenSeries, vars: &[String]) -> Value {
    let terms: Vec<Value> = terms(g)
        .into_iter()
        .map(|(a, b, c)| {
            let exps = if vars.len() > 1 { vec![format_rational(&a), format_rational(&b)] } else { vec![format_rational(&a)] };
            json!({ "exponents": exps, "coeff": format_rational(&c) })
        })
        .collect();
    json!({ "vars": vars, "known_through": format_rational(&g.absolute_order()), "terms": terms })
}

pub fn report_line(r: &VerificationReport) -> String {
    let sample: Vec<String> = r.sample.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut s = format!("{:<10} {} [{}]", format!("{:?}", r.outcome).to_uppercase(), r.id, sample.join(", "));
    if let Some(ratio) = &r.ratio {
        s.push_str(&format!(" ratio {ratio}"));
    }
    if !r.term_counts.is_empty() {
        s.push_str(&format!(" terms {:?}", r.term_counts));
    }
    if let Some(d) = &r.detail {
        s.push_str(&format!(": {d}"));
    }
    if let Some(ms) = r.elapsed_ms {
        s.push_str(&format!(" ({ms} ms)"));
    }
    s.push('\n');
    s
}
