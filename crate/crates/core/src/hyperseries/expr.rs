use std::fmt;

use num_traits::{One, Zero};

use super::appell::AppellSpec;
use super::pfq::PfqSpec;
use crate::exactnum::{exact_power, format_rational, Rational};

/// Expression tree for identity sides; parameters are already instantiated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Rational),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, Rational),
    Log(Box<Expr>),
    Pfq(PfqSpec, Box<Expr>),
    Appell(AppellSpec, Box<Expr>, Box<Expr>),
    /// Appell function with second argument 1, summed in `y` by Gauss's theorem and
    /// normalized to constant term 1.
    AppellLineOne(AppellSpec, Box<Expr>),
}

impl Expr {
    pub fn constant(c: Rational) -> Self {
        Expr::Const(c)
    }

    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    /// Value of a variable-free arithmetic expression.
    pub fn const_value(&self) -> Option<Rational> {
        match self {
            Expr::Const(c) => Some(c.clone()),
            Expr::Add(a, b) => Some(a.const_value()? + b.const_value()?),
            Expr::Sub(a, b) => Some(a.const_value()? - b.const_value()?),
            Expr::Mul(a, b) => Some(a.const_value()? * b.const_value()?),
            Expr::Div(a, b) => {
                let d = b.const_value()?;
                (!d.is_zero()).then(|| a.const_value().map(|n| n / d)).flatten()
            }
            Expr::Neg(a) => Some(-a.const_value()?),
            Expr::Pow(a, e) => exact_power(&a.const_value()?, e),
            Expr::Log(a) => a.const_value().filter(|v| v.is_one()).map(|_| Rational::zero()),
            _ => None,
        }
    }

    /// Replaces every occurrence of variable `name` by `with`.
    pub fn substitute(&self, name: &str, with: &Expr) -> Expr {
        let s = |e: &Expr| Box::new(e.substitute(name, with));
        match self {
            Expr::Var(v) if v == name => with.clone(),
            Expr::Const(_) | Expr::Var(_) => self.clone(),
            Expr::Add(a, b) => Expr::Add(s(a), s(b)),
            Expr::Sub(a, b) => Expr::Sub(s(a), s(b)),
            Expr::Mul(a, b) => Expr::Mul(s(a), s(b)),
            Expr::Div(a, b) => Expr::Div(s(a), s(b)),
            Expr::Neg(a) => Expr::Neg(s(a)),
            Expr::Pow(a, e) => Expr::Pow(s(a), e.clone()),
            Expr::Log(a) => Expr::Log(s(a)),
            Expr::Pfq(spec, a) => Expr::Pfq(spec.clone(), s(a)),
            Expr::Appell(spec, a, b) => Expr::Appell(spec.clone(), s(a), s(b)),
            Expr::AppellLineOne(spec, a) => Expr::AppellLineOne(spec.clone(), s(a)),
        }
    }

    /// Variable names in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Const(_) => {}
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Appell(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Log(a) | Expr::Pfq(_, a) | Expr::AppellLineOne(_, a) => {
                a.collect_vars(out)
            }
        }
    }
}

fn list(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => {
                if c.is_integer() && c >= &Rational::zero() {
                    write!(f, "{}", format_rational(c))
                } else {
                    write!(f, "({})", format_rational(c))
                }
            }
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Pow(a, e) => write!(f, "{a}^({})", format_rational(e)),
            Expr::Log(a) => write!(f, "log({a})"),
            Expr::Pfq(s, a) => write!(f, "pFq([{}],[{}]; {a})", list(&s.upper), list(&s.lower)),
            Expr::Appell(s, a, b) => write!(f, "{}({}; {a}, {b})", s.kind, list(&s.params)),
            Expr::AppellLineOne(s, a) => write!(f, "{}y1({}; {a})", s.kind, list(&s.params)),
        }
    }
}
