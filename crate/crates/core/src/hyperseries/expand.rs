use num_traits::{One, Signed, ToPrimitive, Zero};

use super::appell::{appell_series, AppellSpec};
use super::expr::Expr;
use super::pfq::pfq_series;
use super::HyperError;
use crate::exactnum::{format_rational, Axis, GenSeries, Rational, TruncSeries1};

/// Extra working precision tried in turn before giving up on a requested order.
const SLACKS: [i64; 4] = [2, 6, 12, 24];

struct Ctx<'a> {
    vars: &'a [String],
    order: i64,
}

fn ctx_err(what: &str) -> impl Fn(crate::exactnum::ExactError) -> HyperError + '_ {
    move |err| HyperError::exact(what, err)
}

fn ri(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

/// Plain series view of an argument together with whether it vanishes at the origin.
fn vanishing(g: &GenSeries) -> Option<crate::exactnum::TruncSeries2> {
    let s = g.to_series2()?;
    (s.order() < 0 || s.coeff(0, 0).is_zero()).then_some(s)
}

/// Lower bound on the total degree of every term of `g`.
fn lowest_degree(g: &GenSeries) -> Rational {
    g.alpha() + g.beta()
}

fn power(g: &GenSeries, k: usize, order: i64) -> GenSeries {
    let mut acc = GenSeries::constant(Rational::one(), order);
    for _ in 0..k {
        acc = &acc * g;
    }
    acc
}

/// `Σ c_k g^k` over a finite coefficient list, in the generalized-series ring.
fn poly_in(coeffs: &[Rational], g: &GenSeries, order: i64, what: &str) -> Result<GenSeries, HyperError> {
    let mut acc = GenSeries::zero(order);
    for c in coeffs.iter().rev() {
        acc = (&acc * g).checked_add(&GenSeries::constant(c.clone(), order)).map_err(|e| HyperError::exact(what, e))?;
    }
    Ok(acc)
}

impl Ctx<'_> {
    fn go(&self, e: &Expr) -> Result<GenSeries, HyperError> {
        let n = self.order;
        let ctx = e.to_string();
        let wrap = ctx_err(&ctx);
        match e {
            Expr::Const(c) => Ok(GenSeries::constant(c.clone(), n)),
            Expr::Var(v) => match self.vars.iter().position(|w| w == v) {
                Some(0) => Ok(GenSeries::var(Axis::X, n)),
                Some(1) => Ok(GenSeries::var(Axis::Y, n)),
                _ => Err(HyperError::Parse { pos: 0, msg: format!("variable {v} is not an expansion variable") }),
            },
            Expr::Add(a, b) => self.go(a)?.checked_add(&self.go(b)?).map_err(wrap),
            Expr::Sub(a, b) => self.go(a)?.checked_sub(&self.go(b)?).map_err(wrap),
            Expr::Mul(a, b) => Ok(&self.go(a)? * &self.go(b)?),
            Expr::Div(a, b) => self.go(a)?.checked_div(&self.go(b)?).map_err(wrap),
            Expr::Neg(a) => Ok(-&self.go(a)?),
            Expr::Pow(a, k) => {
                let base = self.go(a)?;
                if k.is_integer() && !k.is_negative() {
                    let k = k.to_integer().to_usize().expect("small integer exponent");
                    Ok(power(&base, k, n))
                } else {
                    base.pow_rational(k).map_err(wrap)
                }
            }
            Expr::Log(a) => self.go(a)?.log().map_err(wrap),
            Expr::Pfq(spec, a) => {
                let arg = self.go(a)?;
                if let Some(s) = vanishing(&arg) {
                    let outer = pfq_series(spec, n.max(0) as usize)?;
                    let body = outer.compose_into2(&s).map_err(wrap)?;
                    return Ok(GenSeries::from_series(body));
                }
                match spec.termination() {
                    Some(m) => poly_in(&spec.coefficients(m)?, &arg, n, &ctx),
                    None => Err(HyperError::ArgumentNotVanishing(a.to_string())),
                }
            }
            Expr::Appell(spec, a, b) => self.appell(spec, a, b),
            Expr::AppellLineOne(spec, a) => {
                let arg = self.go(a)?;
                let (bx, _, total) = spec.bounds();
                let stop = match (bx, total) {
                    (Some(x), Some(t)) => Some(x.min(t)),
                    (x, t) => x.or(t),
                };
                if let Some(s) = vanishing(&arg) {
                    let outer = TruncSeries1::from_coeffs(spec.line_one_coefficients(n.max(0) as usize)?, n.max(0));
                    return Ok(GenSeries::from_series(outer.compose_into2(&s).map_err(wrap)?));
                }
                match stop {
                    Some(m) => poly_in(&spec.line_one_coefficients(m)?, &arg, n, &ctx),
                    None => Err(HyperError::ArgumentNotVanishing(a.to_string())),
                }
            }
        }
    }

    fn appell(&self, spec: &AppellSpec, a: &Expr, b: &Expr) -> Result<GenSeries, HyperError> {
        let n = self.order;
        let ctx = format!("{}", Expr::Appell(spec.clone(), Box::new(a.clone()), Box::new(b.clone())));
        let x = self.go(a)?;
        let y = self.go(b)?;
        let (vx, vy) = (vanishing(&x), vanishing(&y));
        if let (Some(sx), Some(sy)) = (&vx, &vy) {
            let outer = appell_series(spec, n.max(0) as usize)?;
            let body = outer.substitute(sx, sy).map_err(|e| HyperError::exact(&ctx, e))?;
            return Ok(GenSeries::from_series(body));
        }
        let (bx, by, total) = spec.bounds();
        let cap = |b: Option<usize>| match (b, total) {
            (Some(u), Some(t)) => Some(u.min(t)),
            (u, t) => u.or(t),
        };
        let work = n.max(0) as usize;
        // A vanishing direction is summed up to the working order; the omitted tail is accounted for below.
        let nx = match (cap(bx), vx.is_some()) {
            (Some(k), true) => k.min(work),
            (Some(k), false) => k,
            (None, true) => work,
            (None, false) => return Err(HyperError::ArgumentNotVanishing(a.to_string())),
        };
        let ny = match (cap(by), vy.is_some()) {
            (Some(k), true) => k.min(work),
            (Some(k), false) => k,
            (None, true) => work,
            (None, false) => return Err(HyperError::ArgumentNotVanishing(b.to_string())),
        };
        let xp: Vec<GenSeries> = (0..=nx).scan(GenSeries::constant(Rational::one(), n), |p, k| {
            let cur = p.clone();
            if k < nx {
                *p = &*p * &x;
            }
            Some(cur)
        }).collect();
        let yp: Vec<GenSeries> = (0..=ny).scan(GenSeries::constant(Rational::one(), n), |p, k| {
            let cur = p.clone();
            if k < ny {
                *p = &*p * &y;
            }
            Some(cur)
        }).collect();
        let mut acc = GenSeries::zero(n);
        for i in 0..=nx {
            for j in 0..=ny {
                if total.is_some_and(|t| i + j > t) {
                    continue;
                }
                let c = spec.coeff(i, j)?;
                if c.is_zero() {
                    continue;
                }
                let term = (&xp[i] * &yp[j]).scale(&c);
                acc = acc.checked_add(&term).map_err(|e| HyperError::exact(&ctx, e))?;
            }
        }
        // Terms left out in a vanishing direction start at degree (cut + 1) times its valuation
        // plus the lowest degree reachable in the other direction.
        let low = |g: &GenSeries, upto: usize| {
            let d = lowest_degree(g);
            if d.is_negative() {
                d * ri(upto as i64)
            } else {
                Rational::zero()
            }
        };
        let mut bound: Option<Rational> = None;
        if vx.is_some() && cap(bx).is_none_or(|k| k > nx) {
            let b = lowest_degree(&x).max(Rational::one()) * ri(nx as i64 + 1) + low(&y, ny);
            bound = Some(bound.map_or(b.clone(), |c: Rational| c.min(b)));
        }
        if vy.is_some() && cap(by).is_none_or(|k| k > ny) {
            let b = lowest_degree(&y).max(Rational::one()) * ri(ny as i64 + 1) + low(&x, nx);
            bound = Some(bound.map_or(b.clone(), |c: Rational| c.min(b)));
        }
        Ok(match bound {
            Some(b) => {
                let known = (b - Rational::one()).ceil();
                acc.truncate_absolute(&known)
            }
            None => acc,
        })
    }
}

/// Expands `e` in the variables `vars` (first → x axis, second → y axis) through total degree `order`.
pub fn expand(e: &Expr, vars: &[String], order: i64) -> Result<GenSeries, HyperError> {
    let target = ri(order);
    let mut last = None;
    for slack in SLACKS {
        let g = Ctx { vars, order: order + slack }.go(e)?;
        if g.absolute_order() >= target {
            return Ok(g.truncate_absolute(&target));
        }
        last = Some(g.absolute_order());
    }
    Err(HyperError::InsufficientOrder { have: format_rational(&last.expect("at least one attempt")), need: order })
}

/// Which side of a comparison a mismatch refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    /// First differing coefficient in order of total degree.
    Coefficient { x_exp: Rational, y_exp: Rational, lhs: Rational, rhs: Rational },
    /// One side has no formal expansion (for example a divergent Gauss sum at 1).
    Undefined { side: Side, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Differ(Mismatch),
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// Coefficient of `x^ex y^ey` in `g` (zero off the prefactor lattice).
pub fn coefficient_at(g: &GenSeries, ex: &Rational, ey: &Rational) -> Rational {
    let i = ex - g.alpha();
    let j = ey - g.beta();
    if !i.is_integer() || !j.is_integer() || i.is_negative() || j.is_negative() {
        return Rational::zero();
    }
    let (i, j) = (i.to_integer().to_usize().unwrap(), j.to_integer().to_usize().unwrap());
    if (i + j) as i64 > g.body().order() {
        return Rational::zero();
    }
    g.body().coeff(i, j)
}

/// Nonzero terms with absolute exponents, in order of total degree.
fn terms(g: &GenSeries) -> Vec<(Rational, Rational, Rational)> {
    g.body()
        .iter_terms()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(i, j, c)| (g.alpha() + ri(i as i64), g.beta() + ri(j as i64), c.clone()))
        .collect()
}

/// Coefficientwise comparison of two expansions through absolute total degree `order`.
pub fn compare_series(lhs: &GenSeries, rhs: &GenSeries, order: i64) -> Comparison {
    let target = ri(order);
    let mut cand: Vec<(Rational, Rational)> = terms(lhs)
        .into_iter()
        .chain(terms(rhs))
        .filter(|(x, y, _)| &(x + y) <= &target)
        .map(|(x, y, _)| (x, y))
        .collect();
    cand.sort_by(|a, b| (&a.0 + &a.1).cmp(&(&b.0 + &b.1)).then(b.0.cmp(&a.0)));
    cand.dedup();
    for (x, y) in cand {
        let l = coefficient_at(lhs, &x, &y);
        let r = coefficient_at(rhs, &x, &y);
        if l != r {
            return Comparison::Differ(Mismatch::Coefficient { x_exp: x, y_exp: y, lhs: l, rhs: r });
        }
    }
    Comparison::Equal
}

fn side(e: &Expr, vars: &[String], order: i64, s: Side) -> Result<Result<GenSeries, Mismatch>, HyperError> {
    match expand(e, vars, order) {
        Ok(g) => Ok(Ok(g)),
        Err(err @ HyperError::Divergent { .. }) => Ok(Err(Mismatch::Undefined { side: s, reason: err.to_string() })),
        Err(err) => Err(err),
    }
}

/// Expands both sides and compares them through total degree `order`.
///
/// A side whose formal expansion does not exist counts as a mismatch; other
/// expansion failures are returned as errors.
pub fn compare_expansions(lhs: &Expr, rhs: &Expr, vars: &[String], order: i64) -> Result<Comparison, HyperError> {
    let l = match side(lhs, vars, order, Side::Lhs)? {
        Ok(g) => g,
        Err(m) => return Ok(Comparison::Differ(m)),
    };
    let r = match side(rhs, vars, order, Side::Rhs)? {
        Ok(g) => g,
        Err(m) => return Ok(Comparison::Differ(m)),
    };
    Ok(compare_series(&l, &r, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::hyperseries::{parse_expression, ParamMap};

    fn vars(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn expand_str(src: &str, v: &[&str], order: i64) -> GenSeries {
        let p = parse_expression(src, &ParamMap::new(), Some(v)).unwrap();
        expand(&p.expr, &vars(v), order).unwrap()
    }

    #[test]
    fn geometric_series() {
        let g = expand_str("(1-t)^(-1)", &["t"], 6);
        for k in 0..=6 {
            assert_eq!(coefficient_at(&g, &int(k), &int(0)), int(1));
        }
        assert_eq!(g.absolute_order(), int(6));
    }

    #[test]
    fn laurent_division_keeps_requested_order() {
        // (t + t^2)/t^2 = 1/t + 1
        let g = expand_str("(t + t^2)/t^2 - 1/t", &["t"], 5);
        assert_eq!(coefficient_at(&g, &int(0), &int(0)), int(1));
        assert!(g.absolute_order() >= int(5));
    }

    #[test]
    fn fractional_prefactor_roundtrip() {
        let g = expand_str("t^(1/2) * (1+t)^(1/2) * t^(-1/2)", &["t"], 4);
        assert_eq!(coefficient_at(&g, &int(2), &int(0)), rat(-1, 8));
    }

    #[test]
    fn terminating_argument_may_be_nonvanishing() {
        // 2F1(-1, b; c; 1 + t) = 1 - b(1+t)/c
        let g = expand_str("pFq([-1, 3],[5]; 1 + t)", &["t"], 3);
        assert_eq!(coefficient_at(&g, &int(0), &int(0)), rat(2, 5));
        assert_eq!(coefficient_at(&g, &int(1), &int(0)), rat(-3, 5));
        let p = parse_expression("pFq([1, 3],[5]; 1 + t)", &ParamMap::new(), Some(&["t"])).unwrap();
        let e = expand(&p.expr, &vars(&["t"]), 3).unwrap_err();
        assert!(matches!(e, HyperError::ArgumentNotVanishing(ref s) if s.contains("1 + t")));
    }

    #[test]
    fn appell_on_axis_matches_gauss() {
        let lhs = "F2(1/3, 2/5, 1/7, 3/4, 5/6; t, 0)";
        let rhs = "pFq([1/3, 2/5],[3/4]; t)";
        let p = |s| parse_expression(s, &ParamMap::new(), Some(&["t"])).unwrap().expr;
        assert!(compare_expansions(&p(lhs), &p(rhs), &vars(&["t"]), 8).unwrap().is_equal());
    }

    #[test]
    fn mismatch_reports_first_coefficient() {
        let p = |s| parse_expression(s, &ParamMap::new(), Some(&["t", "s"])).unwrap().expr;
        let c = compare_expansions(&p("(1-t)^(-1)"), &p("1 + t + t^2 + 2*t^3"), &vars(&["t", "s"]), 5).unwrap();
        assert_eq!(
            c,
            Comparison::Differ(Mismatch::Coefficient { x_exp: int(3), y_exp: int(0), lhs: int(1), rhs: int(2) })
        );
    }

    #[test]
    fn divergent_line_one_is_undefined_side() {
        let p = |s| parse_expression(s, &ParamMap::new(), Some(&["t"])).unwrap().expr;
        // c2 - a - b2 = 1/2, so the Gauss sum for the t^1 coefficient diverges.
        let lhs = p("F2y1(1/3, 1/5, 1/6, 2/7, 1; t)");
        let rhs = p("pFq([1/3, 1/5, 1/3],[2/7, 1/2]; t)");
        let c = compare_expansions(&lhs, &rhs, &vars(&["t"]), 6).unwrap();
        assert!(matches!(c, Comparison::Differ(Mismatch::Undefined { side: Side::Lhs, .. })));
    }

    #[test]
    fn dihedral_radical_identity_under_substitution() {
        // 2F1(a, a+1/2; 1/2; z) = ((1+√z)^(-2a) + (1-√z)^(-2a))/2 with √z = w.
        let params: ParamMap = [("a".to_string(), rat(2, 7))].into_iter().collect();
        let l = parse_expression("pFq([a, a+1/2],[1/2]; z) (subst z = w^2)", &params, Some(&["w"])).unwrap();
        let r = parse_expression("((1+w)^(-2*a) + (1-w)^(-2*a))/2", &params, Some(&["w"])).unwrap();
        assert!(compare_expansions(&l.expr, &r.expr, &vars(&["w"]), 10).unwrap().is_equal());
    }

    #[test]
    fn bivariate_bailey_separation() {
        // F4(a, b; c, a+b-c+1; x(1-y), y(1-x)) = 2F1(a,b;c;x) 2F1(a,b;a+b-c+1;y)
        let params: ParamMap =
            [("a", rat(1, 2)), ("b", rat(1, 3)), ("c", rat(1, 5))].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let l = parse_expression("F4(a, b, c, a+b-c+1; x*(1-y), y*(1-x))", &params, Some(&["x", "y"])).unwrap();
        let r = parse_expression("pFq([a,b],[c]; x) * pFq([a,b],[a+b-c+1]; y)", &params, Some(&["x", "y"])).unwrap();
        assert!(compare_expansions(&l.expr, &r.expr, &vars(&["x", "y"]), 8).unwrap().is_equal());
    }
}
