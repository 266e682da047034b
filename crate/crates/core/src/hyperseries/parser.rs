//! Text grammar for expressions, rational functions and curves.
//!
//! ```text
//! top    := expr { "(" "subst" ident "=" expr { "," ident "=" expr } ")" }
//! expr   := term { ("+" | "-") term }
//! term   := unary { ("*" | "/") unary }
//! unary  := ("-" | "+") unary | power
//! power  := atom [ "^" unary ]
//! atom   := integer | ident | ident "(" args ")" | "(" expr ")"
//! ```
//!
//! Function heads: `F1(a,b1,b2,c; X, Y)`, `F2(a,b1,b2,c1,c2; X, Y)`,
//! `F3(a1,a2,b1,b2,c; X, Y)`, `F4(a,b,c1,c2; X, Y)`, the Gauss-line forms
//! `F1y1`, `F2y1`, `F3y1` taking one argument, `pFq([..],[..]; X)`, `log(X)`, `sqrt(X)`,
//! and the constant Pochhammer symbol `poch(a, n)` for a non-negative integer `n`.
//! Identifiers are expansion variables or named parameters; exponents and
//! parameters must evaluate to rational constants.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use super::appell::{AppellKind, AppellSpec};
use super::expr::Expr;
use super::pfq::{pochhammer, PfqSpec};
use super::HyperError;
use crate::exactnum::{RatFunc, Rational};

pub type ParamMap = BTreeMap<String, Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedExpr {
    pub expr: Expr,
    /// Expansion variables, first one mapped to the x axis.
    pub vars: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(num_bigint::BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, HyperError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits parse")), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()[],;=".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(HyperError::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    params: &'a ParamMap,
    vars: Option<&'a [&'a str]>,
    /// Free identifiers seen, with position, to validate after substitutions are known.
    free: Vec<(String, usize)>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, HyperError> {
        Err(HyperError::Parse { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), HyperError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> Result<String, HyperError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err("expected identifier"),
        }
    }

    fn expr(&mut self) -> Result<Expr, HyperError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, HyperError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, HyperError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, HyperError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.here();
            let e = self.unary()?;
            let Some(v) = e.const_value() else {
                return Err(HyperError::Parse { pos: at, msg: "exponent must be a rational constant".into() });
            };
            return Ok(Expr::Pow(Box::new(base), v));
        }
        Ok(base)
    }

    fn constant(&mut self) -> Result<Rational, HyperError> {
        let at = self.here();
        let e = self.expr()?;
        e.const_value().ok_or(HyperError::Parse { pos: at, msg: "parameter must be a rational constant".into() })
    }

    fn constant_list(&mut self, close: char) -> Result<Vec<Rational>, HyperError> {
        let mut v = Vec::new();
        if self.eat(close) {
            return Ok(v);
        }
        loop {
            v.push(self.constant()?);
            if self.eat(close) {
                return Ok(v);
            }
            self.expect(',')?;
        }
    }

    fn atom(&mut self) -> Result<Expr, HyperError> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Const(Rational::from_integer(n)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Sym('(')) && !self.is_variable(&name) && !self.params.contains_key(&name) {
                    return self.call(&name, at);
                }
                Ok(self.identifier(name, at))
            }
            _ => self.err("expected a number, identifier or '('"),
        }
    }

    fn is_variable(&self, name: &str) -> bool {
        self.vars.is_some_and(|v| v.contains(&name))
    }

    fn identifier(&mut self, name: String, at: usize) -> Expr {
        if self.is_variable(&name) {
            return Expr::Var(name);
        }
        if let Some(v) = self.params.get(&name) {
            return Expr::Const(v.clone());
        }
        self.free.push((name.clone(), at));
        Expr::Var(name)
    }

    fn call(&mut self, name: &str, at: usize) -> Result<Expr, HyperError> {
        self.expect('(')?;
        let (head, line_one) = match name.strip_suffix("y1") {
            Some(h) => (h, true),
            None => (name, false),
        };
        if let Some(kind) = AppellKind::parse(head) {
            let mut params = Vec::new();
            loop {
                params.push(self.constant()?);
                if self.eat(';') {
                    break;
                }
                self.expect(',')?;
            }
            let want = kind.param_names().len();
            if params.len() != want {
                return Err(HyperError::Parse {
                    pos: at,
                    msg: format!("{kind} takes {want} parameters, got {}", params.len()),
                });
            }
            let spec = AppellSpec::new(kind, params);
            let x = self.expr()?;
            if line_one {
                if kind == AppellKind::F4 {
                    return Err(HyperError::Parse { pos: at, msg: "F4y1 is not supported".into() });
                }
                self.expect(')')?;
                return Ok(Expr::AppellLineOne(spec, Box::new(x)));
            }
            self.expect(',')?;
            let y = self.expr()?;
            self.expect(')')?;
            return Ok(Expr::Appell(spec, Box::new(x), Box::new(y)));
        }
        match name {
            "pFq" => {
                self.expect('[')?;
                let upper = self.constant_list(']')?;
                self.expect(',')?;
                self.expect('[')?;
                let lower = self.constant_list(']')?;
                self.expect(';')?;
                let x = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Pfq(PfqSpec::new(upper, lower), Box::new(x)))
            }
            "poch" => {
                let a = self.constant()?;
                self.expect(',')?;
                let n_at = self.here();
                let n = self.constant()?;
                self.expect(')')?;
                let n = n
                    .is_integer()
                    .then(|| n.to_integer().to_usize())
                    .flatten()
                    .ok_or(HyperError::Parse { pos: n_at, msg: "poch index must be a non-negative integer".into() })?;
                Ok(Expr::Const(pochhammer(&a, n)))
            }
            "log" | "sqrt" => {
                let x = self.expr()?;
                self.expect(')')?;
                Ok(if name == "log" {
                    Expr::Log(Box::new(x))
                } else {
                    Expr::Pow(Box::new(x), Rational::new(1.into(), 2.into()))
                })
            }
            _ => Err(HyperError::Parse { pos: at, msg: format!("unknown function {name}") }),
        }
    }

    fn at_subst(&self) -> bool {
        self.peek() == Some(&Tok::Sym('(')) && self.peek_at(1) == Some(&Tok::Ident("subst".into()))
    }
}

/// Parses an expression. When `vars` is `None`, free identifiers become variables in order of appearance.
pub fn parse_expression(src: &str, params: &ParamMap, vars: Option<&[&str]>) -> Result<ParsedExpr, HyperError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), params, vars, free: Vec::new() };
    let mut expr = p.expr()?;
    let main_free = std::mem::take(&mut p.free);
    let mut substituted: Vec<String> = Vec::new();
    while p.at_subst() {
        p.pos += 2;
        loop {
            let name = p.ident()?;
            p.expect('=')?;
            let with = p.expr()?;
            expr = expr.substitute(&name, &with);
            substituted.push(name);
            if !p.eat(',') {
                break;
            }
        }
        p.expect(')')?;
    }
    if p.pos < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    for (name, pos) in main_free.iter().chain(p.free.iter()) {
        let ok = substituted.contains(name) || vars.is_none();
        if !ok {
            return Err(HyperError::Parse { pos: *pos, msg: format!("unknown identifier {name}") });
        }
    }
    let found = expr.variables();
    let vars_out: Vec<String> = match vars {
        Some(v) => v.iter().map(|s| s.to_string()).collect(),
        None => found.clone(),
    };
    if let Some(bad) = found.iter().find(|v| !vars_out.contains(v)) {
        return Err(HyperError::Parse { pos: 0, msg: format!("unknown identifier {bad}") });
    }
    if vars_out.len() > 2 {
        return Err(HyperError::Parse { pos: 0, msg: format!("at most two variables allowed, found {vars_out:?}") });
    }
    Ok(ParsedExpr { expr, vars: vars_out })
}

/// Converts an arithmetic expression in one variable to a rational function.
fn to_ratfunc(e: &Expr, var: &str) -> Result<RatFunc, String> {
    let rec = |x: &Expr| to_ratfunc(x, var);
    Ok(match e {
        Expr::Const(c) => RatFunc::constant(c.clone()),
        Expr::Var(v) if v == var => RatFunc::t(),
        Expr::Var(v) => return Err(format!("unknown identifier {v}")),
        Expr::Add(a, b) => &rec(a)? + &rec(b)?,
        Expr::Sub(a, b) => &rec(a)? - &rec(b)?,
        Expr::Mul(a, b) => &rec(a)? * &rec(b)?,
        Expr::Div(a, b) => rec(a)?.checked_div(&rec(b)?).map_err(|e| e.to_string())?,
        Expr::Neg(a) => -&rec(a)?,
        Expr::Pow(a, k) => {
            if !k.is_integer() {
                return Err("non-integer power in a rational function".into());
            }
            let k = k.to_integer().to_i32().ok_or("exponent too large")?;
            rec(a)?.powi(k).map_err(|e| e.to_string())?
        }
        _ => return Err("only + - * / ^ are allowed in a rational function".into()),
    })
}

/// Parses a rational function in `var` (parameters allowed).
pub fn parse_ratfunc(src: &str, var: &str, params: &ParamMap) -> Result<RatFunc, HyperError> {
    let vars = [var];
    let parsed = parse_expression(src, params, Some(&vars))?;
    to_ratfunc(&parsed.expr, var).map_err(|msg| HyperError::Parse { pos: 0, msg })
}

/// Parses `"x = X(t); y = Y(t)"`.
pub fn parse_curve(src: &str, params: &ParamMap) -> Result<(RatFunc, RatFunc), HyperError> {
    let mut x = None;
    let mut y = None;
    let mut offset = 0;
    for part in src.split(';') {
        let Some((lhs, rhs)) = part.split_once('=') else {
            return Err(HyperError::Parse { pos: offset, msg: "expected 'x = ...; y = ...'".into() });
        };
        let f = parse_ratfunc(rhs, "t", params).map_err(|e| match e {
            HyperError::Parse { pos, msg } => HyperError::Parse { pos: pos + offset + lhs.len() + 1, msg },
            other => other,
        })?;
        match lhs.trim() {
            "x" => x = Some(f),
            "y" => y = Some(f),
            other => return Err(HyperError::Parse { pos: offset, msg: format!("unknown coordinate {other:?}") }),
        }
        offset += part.len() + 1;
    }
    match (x, y) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(HyperError::Parse { pos: src.len(), msg: "curve needs both x and y".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, UniPoly};

    fn params() -> ParamMap {
        [("a".to_string(), rat(1, 3)), ("b1".to_string(), rat(2, 5))].into_iter().collect()
    }

    #[test]
    fn arithmetic_and_precedence() {
        let p = parse_expression("-t^2/3 + 2*a", &params(), Some(&["t"])).unwrap();
        let expected = Expr::Add(
            Box::new(Expr::Div(Box::new(Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::var("t")), int(2))))), Box::new(Expr::Const(int(3))))),
            Box::new(Expr::Mul(Box::new(Expr::Const(int(2))), Box::new(Expr::Const(rat(1, 3))))),
        );
        assert_eq!(p.expr, expected);
    }

    #[test]
    fn function_heads() {
        let p = parse_expression("F2(a, b1, 1/2, 2*b1, 3; x, y) + pFq([1,1],[2]; x)", &params(), Some(&["x", "y"])).unwrap();
        assert_eq!(p.vars, vec!["x", "y"]);
        let e = parse_expression("F2(a, b1; x, y)", &params(), Some(&["x", "y"])).unwrap_err();
        assert!(e.to_string().contains("takes 5 parameters"));
    }

    #[test]
    fn pochhammer_constants() {
        let p = parse_expression("poch(a, 3) / poch(1, 2)", &params(), Some(&["x"])).unwrap();
        assert_eq!(p.expr.const_value(), Some(rat(1, 3) * rat(4, 3) * rat(7, 3) / int(2)));
        let e = parse_expression("poch(a, 1/2)", &params(), Some(&["x"])).unwrap_err();
        assert!(e.to_string().contains("non-negative integer"));
    }

    #[test]
    fn substitution_clause() {
        let p = parse_expression("(1 - z)^(1/2) (subst z = 2*w - w^2)", &params(), Some(&["w"])).unwrap();
        assert_eq!(p.expr.variables(), vec!["w"]);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_expression("1 + $", &params(), None).unwrap_err();
        assert_eq!(e, HyperError::Parse { pos: 4, msg: "unexpected character '$'".into() });
        let e = parse_expression("t^x", &params(), Some(&["t", "x"])).unwrap_err();
        assert!(matches!(e, HyperError::Parse { pos: 2, .. }));
        let e = parse_expression("t + q", &params(), Some(&["t"])).unwrap_err();
        assert!(matches!(e, HyperError::Parse { pos: 4, .. }));
    }

    #[test]
    fn curve_parsing() {
        let (x, y) = parse_curve("x=t^2; y=(1-t)^2", &ParamMap::new()).unwrap();
        assert_eq!(x, RatFunc::from_poly(UniPoly::from_ints(&[0, 0, 1])));
        assert_eq!(y, RatFunc::from_poly(UniPoly::from_ints(&[1, -2, 1])));
        let (x, _) = parse_curve("x = 1/(1-t); y = a*t", &params()).unwrap();
        assert_eq!(x.den(), &UniPoly::from_ints(&[-1, 1]));
    }
}
