use super::recipe::{OdeRecipe, SystemRef};
use super::{ChartSpec, Condition, Constraint, Domain, IdentityRecord, Mode, ParamDecl, Sides, TerminatingCheck};
use crate::hyperseries::AppellKind::{self, F1, F2, F3, F4};

const DEFAULT_ORDER: i64 = 8;
/// Sampled `c2 − a − b2` is at most 60, so the Gauss sums of `F2(x, 1)` diverge before this order.
const DIVERGENCE_ORDER: i64 = 64;

struct Builder(IdentityRecord);

fn rec(id: &str, mode: Mode, claim: &str) -> Builder {
    Builder(IdentityRecord {
        id: id.to_string(),
        mode,
        claim: claim.to_string(),
        params: Vec::new(),
        constraints: Vec::new(),
        conditions: Vec::new(),
        substitution: None,
        sides: Sides::Series { vars: Vec::new(), lhs: String::new(), rhs: String::new() },
        terminating: Vec::new(),
        order: DEFAULT_ORDER,
    })
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl Builder {
    fn free(mut self, names: &[&str]) -> Self {
        for n in names {
            self.0.params.push(ParamDecl { name: n.to_string(), domain: Domain::Rational });
        }
        self
    }

    fn int(mut self, name: &str, min: i64, max: i64) -> Self {
        self.0.params.push(ParamDecl { name: name.to_string(), domain: Domain::Integer { min, max } });
        self
    }

    fn set(mut self, name: &str, value: &str) -> Self {
        self.0.constraints.push(Constraint { name: name.to_string(), value: value.to_string() });
        self
    }

    fn nonint(mut self, exprs: &[&str]) -> Self {
        self.0.conditions.extend(exprs.iter().map(|e| Condition::NonInteger(e.to_string())));
        self
    }

    fn positive(mut self, exprs: &[&str]) -> Self {
        self.0.conditions.extend(exprs.iter().map(|e| Condition::Positive(e.to_string())));
        self
    }

    fn nonzero(mut self, exprs: &[&str]) -> Self {
        self.0.conditions.extend(exprs.iter().map(|e| Condition::NonZero(e.to_string())));
        self
    }

    fn subst(mut self, s: &str) -> Self {
        self.0.substitution = Some(s.to_string());
        self
    }

    fn order(mut self, n: i64) -> Self {
        self.0.order = n;
        self
    }

    fn series(mut self, vars: &[&str], lhs: &str, rhs: &str) -> IdentityRecord {
        self.0.sides = Sides::Series { vars: strings(vars), lhs: lhs.to_string(), rhs: rhs.to_string() };
        self.0
    }

    fn odes(mut self, lhs: OdeRecipe, rhs: OdeRecipe) -> IdentityRecord {
        self.0.sides = Sides::Odes { lhs, rhs };
        self.0
    }

    fn solution(mut self, system: SystemRef, vars: &[&str], candidate: &str, chart: Option<(&str, &str)>) -> IdentityRecord {
        self.0.sides = Sides::Solution {
            system,
            vars: strings(vars),
            candidate: candidate.to_string(),
            chart: chart.map(|(x, y)| ChartSpec { x: x.to_string(), y: y.to_string() }),
        };
        self.0
    }

    fn terminating(mut self, system: SystemRef, var: &str, x: &str, y: &str, points: usize, expected: &str) -> Self {
        self.0.terminating.push(TerminatingCheck {
            system,
            var: var.to_string(),
            x: x.to_string(),
            y: y.to_string(),
            points,
            expected_terms: expected.to_string(),
        });
        self
    }
}

fn sys(kind: AppellKind, params: &[&str]) -> SystemRef {
    SystemRef::new(kind, params)
}

fn derived(kind: AppellKind, params: &[&str], curve: &str) -> OdeRecipe {
    OdeRecipe::derived(sys(kind, params), curve)
}

fn euler(a: &str, b: &str, c: &str) -> OdeRecipe {
    OdeRecipe::builtin("euler", &[a, b, c])
}

fn hpg32(a: &str, b: &str, c: &str, d: &str, e: &str) -> OdeRecipe {
    OdeRecipe::builtin("hpg32", &[a, b, c, d, e])
}

const F4_QUADRATIC: &str = "x = t^2; y = (1-t)^2";

/// Every record of the catalog.
pub fn catalog_entries() -> Vec<IdentityRecord> {
    let mut v = Vec::new();
    v.extend(exact_bivariate());
    v.extend(exact_univariate());
    v.extend(dihedral());
    v.extend(proportional());
    v.extend(same_ode_f2_f3());
    v.extend(same_ode_f4());
    v.extend(same_ode_f1());
    v.extend(solutions());
    v.push(wrong_formula());
    v
}

fn exact_bivariate() -> Vec<IdentityRecord> {
    vec![
        rec("bailey-separation", Mode::Exact, "F4 with c2 = a+b-c+1 on (x(1-y), y(1-x)) separates into two 2F1 factors")
            .free(&["a", "b", "c"])
            .nonint(&["a+b-c"])
            .series(
                &["x", "y"],
                "F4(a, b, c, a+b-c+1; x*(1-y), y*(1-x))",
                "pFq([a, b], [c]; x) * pFq([a, b], [a+b-c+1]; y)",
            ),
        rec("f2-separation", Mode::Exact, "F2(b1+b2-1/2; b1, b2; 2b1, 2b2) separates in (t, s)")
            .free(&["b1", "b2"])
            .nonint(&["2*b1", "2*b2", "b1+1/2"])
            .series(
                &["t", "s"],
                "F2(b1+b2-1/2, b1, b2, 2*b1, 2*b2; 4*(1-s^2)*t/(1+s+t-s*t)^2, 4*(1-t^2)*s/(1+s+t-s*t)^2)",
                "((1+s+t-s*t)/(1-s))^(2*b1+2*b2-1) * pFq([b1+b2-1/2, b2], [2*b2]; -4*s/(1-s)^2) \
                 * pFq([b1+b2-1/2, b2], [b1+1/2]; t^2)",
            ),
        rec("f4-f2-quadratic-y", Mode::Exact, "F4(a; b; 2b, a-b+1; x, y^2) is an F2 function of x/(1+y)^2 and 4y/(1+y)^2")
            .free(&["a", "b"])
            .set("c", "2*b")
            .nonint(&["a-b", "2*a-2*b", "c"])
            .series(
                &["x", "y"],
                "F4(a, b, c, a-b+1; x, y^2)",
                "(1+y)^(-2*a) * F2(a, b, a-b+1/2, c, 2*a-2*b+1; x/(1+y)^2, 4*y/(1+y)^2)",
            ),
        rec("f4-f2-quadratic-xy", Mode::Exact, "F4 in (x^2, y^2) with half-shifted parameters is an F2 function")
            .free(&["a", "b1", "b2"])
            .nonint(&["2*b1", "2*b2", "b1+1/2", "b2+1/2"])
            .series(
                &["x", "y"],
                "F4(a/2, (a+1)/2, b1+1/2, b2+1/2; x^2, y^2)",
                "(1+x+y)^(-a) * F2(a, b1, b2, 2*b1, 2*b2; 2*x/(x+y+1), 2*y/(x+y+1))",
            ),
        rec("f1-f3", Mode::Exact, "F1 is an F3 function after x -> x/(x-1)")
            .free(&["a", "b1", "b2", "c"])
            .series(&["x", "y"], "F1(a, b1, b2, c; x, y)", "(1-x)^(-b1) * F3(c-a, a, b1, b2, c; x/(x-1), y)"),
        rec("f2-kummer-x", Mode::Exact, "F2 transformation x -> x/(x-1), y -> y/(1-x)")
            .free(&["a", "b1", "b2", "c1", "c2"])
            .series(
                &["x", "y"],
                "F2(a, b1, b2, c1, c2; x, y)",
                "(1-x)^(-a) * F2(a, c1-b1, b2, c1, c2; x/(x-1), y/(1-x))",
            ),
        rec("f2-kummer-y", Mode::Exact, "F2 transformation x -> x/(1-y), y -> y/(y-1)")
            .free(&["a", "b1", "b2", "c1", "c2"])
            .series(
                &["x", "y"],
                "F2(a, b1, b2, c1, c2; x, y)",
                "(1-y)^(-a) * F2(a, b1, c2-b2, c1, c2; x/(1-y), y/(y-1))",
            ),
        rec("f2-kummer-xy", Mode::Exact, "F2 transformation x -> x/(x+y-1), y -> y/(x+y-1)")
            .free(&["a", "b1", "b2", "c1", "c2"])
            .series(
                &["x", "y"],
                "F2(a, b1, b2, c1, c2; x, y)",
                "(1-x-y)^(-a) * F2(a, c1-b1, c2-b2, c1, c2; x/(x+y-1), y/(x+y-1))",
            ),
        rec("f1-sextet-1", Mode::Exact, "F1 transformation x -> x/(x-1), y -> y/(y-1)")
            .free(&["a", "b1", "b2", "c"])
            .series(
                &["x", "y"],
                "F1(a, b1, b2, c; x, y)",
                "(1-x)^(-b1) * (1-y)^(-b2) * F1(c-a, b1, b2, c; x/(x-1), y/(y-1))",
            ),
        rec("f1-sextet-2", Mode::Exact, "F1 transformation x -> x/(x-1), y -> (x-y)/(x-1)")
            .free(&["a", "b1", "b2", "c"])
            .series(
                &["x", "y"],
                "F1(a, b1, b2, c; x, y)",
                "(1-x)^(-a) * F1(a, c-b1-b2, b2, c; x/(x-1), (x-y)/(x-1))",
            ),
        rec("f1-sextet-3", Mode::Exact, "F1 transformation x -> (x-y)/(1-y), y -> y/(y-1)")
            .free(&["a", "b1", "b2", "c"])
            .series(
                &["x", "y"],
                "F1(a, b1, b2, c; x, y)",
                "(1-y)^(-a) * F1(a, b1, c-b1-b2, c; (x-y)/(1-y), y/(y-1))",
            ),
        rec("f1-sextet-4", Mode::Exact, "F1 transformation y -> (x-y)/(1-y)")
            .free(&["a", "b1", "b2", "c"])
            .series(
                &["x", "y"],
                "F1(a, b1, b2, c; x, y)",
                "(1-x)^(c-a-b1) * (1-y)^(-b2) * F1(c-a, c-b1-b2, b2, c; x, (x-y)/(1-y))",
            ),
        rec("f1-sextet-5", Mode::Exact, "F1 transformation x -> (x-y)/(x-1)")
            .free(&["a", "b1", "b2", "c"])
            .series(
                &["x", "y"],
                "F1(a, b1, b2, c; x, y)",
                "(1-x)^(-b1) * (1-y)^(c-a-b2) * F1(c-a, b1, c-b1-b2, c; (x-y)/(x-1), y)",
            ),
        rec("f2-f3-reversal", Mode::Exact, "terminating F2(a; -k, -l; -2k, -2l) summed backwards is an F3 sum in 1/x, 1/y")
            .free(&["a"])
            .int("k", 0, 3)
            .int("l", 0, 3)
            .series(
                &["x", "y"],
                "F2(a, -k, -l, -2*k, -2*l; x, y)",
                "poch(1, k) * poch(1, l) * poch(a, k+l) / (poch(1, 2*k) * poch(1, 2*l)) * x^k * y^l \
                 * F3(k+1, l+1, -k, -l, 1-a-k-l; 1/x, 1/y)",
            ),
    ]
}

fn exact_univariate() -> Vec<IdentityRecord> {
    vec![
        rec("f1-line-zero", Mode::Exact, "F1(x, 0) is 2F1(a, b1; c; x)")
            .free(&["a", "b1", "b2", "c"])
            .series(&["x"], "F1(a, b1, b2, c; x, 0)", "pFq([a, b1], [c]; x)"),
        rec("f1-diagonal", Mode::Exact, "F1(x, x) is 2F1(a, b1+b2; c; x)")
            .free(&["a", "b1", "b2", "c"])
            .series(&["x"], "F1(a, b1, b2, c; x, x)", "pFq([a, b1+b2], [c]; x)"),
        rec("f2-antidiagonal-4f3", Mode::Exact, "F2(a; b, b; c, c; x, -x) is a 4F3 function of x^2")
            .free(&["a", "b", "c"])
            .series(&["x"], "F2(a, b, b, c, c; x, -x)", "pFq([a/2, (a+1)/2, b, c-b], [c, c/2, (c+1)/2]; x^2)"),
        rec("f2-antidiagonal-4f3-doubled", Mode::Exact, "F2(a; b1, b2; 2b1, 2b2; x, -x) is a 4F3 function of x^2")
            .free(&["a", "b1", "b2"])
            .nonint(&["2*b1", "2*b2", "b1+1/2", "b2+1/2", "b1+b2"])
            .series(
                &["x"],
                "F2(a, b1, b2, 2*b1, 2*b2; x, -x)",
                "pFq([a/2, (a+1)/2, (b1+b2)/2, (b1+b2+1)/2], [b1+1/2, b2+1/2, b1+b2]; x^2)",
            ),
        rec("f3-antidiagonal-4f3", Mode::Exact, "F3(a, a; b, b; c; x, -x) is a 4F3 function of x^2")
            .free(&["a", "b", "c"])
            .nonint(&["a+b"])
            .series(&["x"], "F3(a, a, b, b, c; x, -x)", "pFq([a, b, (a+b)/2, (a+b+1)/2], [a+b, c/2, (c+1)/2]; x^2)"),
        rec("f4-diagonal-4f3", Mode::Exact, "F4(x, x) is a 4F3 function of 4x")
            .free(&["a", "b", "c1", "c2"])
            .nonint(&["c1+c2"])
            .series(
                &["x"],
                "F4(a, b, c1, c2; x, x)",
                "pFq([a, b, (c1+c2)/2, (c1+c2-1)/2], [c1, c2, c1+c2-1]; 4*x)",
            ),
        rec("f4-antidiagonal-4f3", Mode::Exact, "F4(a; b; c, c; x, -x) is a 4F3 function of -4x^2")
            .free(&["a", "b", "c"])
            .series(&["x"], "F4(a, b, c, c; x, -x)", "pFq([a/2, (a+1)/2, b/2, (b+1)/2], [c, c/2, (c+1)/2]; -4*x^2)"),
    ]
}

fn dihedral() -> Vec<IdentityRecord> {
    let f2_plus = "F2(a, -k, -l, -2*k, -2*l; 2*w/(1+w), 2/(1+w))";
    let f2_minus = "F2(a, -k, -l, -2*k, -2*l; 2*w/(w-1), 2/(1-w))";
    let terms = "(k+1)*(l+1)";
    let f2 = || sys(F2, &["a", "-k", "-l", "-2*k", "-2*l"]);
    vec![
        rec("dihedral-even", Mode::Exact, "2F1(a/2, (a+1)/2; 1/2; z) is the even part of (1-sqrt z)^(-a)")
            .free(&["a"])
            .subst("z = w^2")
            .series(&["w"], "pFq([a/2, (a+1)/2], [1/2]; z)", "((1-w)^(-a) + (1+w)^(-a))/2"),
        rec("dihedral-odd", Mode::Exact, "2F1((a+1)/2, (a+2)/2; 3/2; z) is the odd part of (1-sqrt z)^(-a) over 2a sqrt z")
            .free(&["a"])
            .subst("z = w^2")
            .series(&["w"], "pFq([(a+1)/2, (a+2)/2], [3/2]; z)", "((1-w)^(-a) - (1+w)^(-a))/(2*a*w)"),
        rec("dihedral-log", Mode::Exact, "2F1(1/2, 1; 3/2; z) is an odd logarithm over sqrt z")
            .subst("z = w^2")
            .series(&["w"], "pFq([1/2, 1], [3/2]; z)", "(log(1+w) - log(1-w))/(2*w)"),
        rec("dihedral-sqrt", Mode::Exact, "2F1(a/2, (a+1)/2; a+1; z) is ((1+sqrt(1-z))/2)^(-a)")
            .free(&["a"])
            .subst("z = 2*w - w^2")
            .series(&["w"], "pFq([a/2, (a+1)/2], [a+1]; z)", "((2-w)/2)^(-a)"),
        rec("dih12", Mode::Exact, "dihedral 2F1 with lower parameter 1/2-k as a sum of two terminating F2 sums")
            .free(&["a"])
            .int("k", 0, 3)
            .int("l", 0, 3)
            .subst("z = w^2")
            .terminating(f2(), "w", "2*w/(1+w)", "2/(1+w)", 25, terms)
            .terminating(f2(), "w", "2*w/(w-1)", "2/(1-w)", 25, terms)
            .series(
                &["w"],
                "poch((a+1)/2, l) / poch(1/2, l) * pFq([a/2, (a+1)/2+l], [1/2-k]; z)",
                &format!("(1+w)^(-a)/2 * {f2_plus} + (1-w)^(-a)/2 * {f2_minus}"),
            ),
        rec("dih32", Mode::Exact, "dihedral 2F1 with lower parameter 3/2+k as a difference of two terminating F2 sums")
            .free(&["a"])
            .int("k", 0, 3)
            .int("l", 0, 3)
            .subst("z = w^2")
            .terminating(f2(), "w", "2*w/(1+w)", "2/(1+w)", 25, terms)
            .terminating(f2(), "w", "2*w/(w-1)", "2/(1-w)", 25, terms)
            .series(
                &["w"],
                "poch((a+1)/2, k) * poch(a/2, k+l+1) / (poch(1/2, k) * poch(1/2, k+1) * poch(1/2, l)) * (-1)^k \
                 * w^(2*k+1) * pFq([(a+1)/2+k, a/2+k+l+1], [3/2+k]; z)",
                &format!("(1-w)^(-a)/2 * {f2_minus} - (1+w)^(-a)/2 * {f2_plus}"),
            ),
        rec("diha2", Mode::Exact, "2F1((a-l)/2, (a+l+1)/2; a+k+1; z) as a terminating F3 sum in sqrt(1-z)")
            .free(&["a"])
            .int("k", 0, 3)
            .int("l", 0, 3)
            .subst("z = 2*w - w^2")
            .terminating(sys(F3, &["k+1", "l+1", "-k", "-l", "a+k+1"]), "w", "-w/(2*(1-w))", "w/2", 25, terms)
            .series(
                &["w"],
                "pFq([(a-l)/2, (a+l+1)/2], [a+k+1]; z)",
                "((2-w)/2)^(-a-k) * (1-w)^k * F3(k+1, l+1, -k, -l, a+k+1; -w/(2*(1-w)), w/2)",
            ),
    ]
}

fn proportional() -> Vec<IdentityRecord> {
    vec![
        rec("f1-line-one-series", Mode::Proportional, "F1(x, 1) is a constant multiple of 2F1(a, b1; c-b2; x)")
            .free(&["a", "b1", "b2", "c"])
            .positive(&["c-a-b2"])
            .nonint(&["c-b2"])
            .series(&["x"], "F1y1(a, b1, b2, c; x)", "pFq([a, b1], [c-b2]; x)"),
        rec("f3-line-one-series", Mode::Proportional, "F3(x, 1) is a constant multiple of 3F2(a1, b1, c-a2-b2; c-a2, c-b2; x)")
            .free(&["a1", "a2", "b1", "b2", "c"])
            .positive(&["c-a2-b2"])
            .nonint(&["c-a2", "c-b2"])
            .series(&["x"], "F3y1(a1, a2, b1, b2, c; x)", "pFq([a1, b1, c-a2-b2], [c-a2, c-b2]; x)"),
    ]
}

/// Shared by the F2(x, 1) equation record and the negative control so both see the same samples.
fn f2_line_one(id: &str, mode: Mode, claim: &str) -> Builder {
    rec(id, mode, claim).free(&["a", "b1", "b2", "c1", "c2"]).nonint(&["a-c2", "a+b2-c2", "a-b1", "c1-b1"])
}

fn wrong_formula() -> IdentityRecord {
    f2_line_one(
        "f2x1-wrongformula",
        Mode::ExpectFail,
        "F2(x, 1) is not a constant multiple of 3F2(a, b1, a-c2+1; c1, a+b2-c2+1; x) as a power series",
    )
    .order(DIVERGENCE_ORDER)
    .series(&["x"], "F2y1(a, b1, b2, c1, c2; x)", "pFq([a, b1, a-c2+1], [c1, a+b2-c2+1]; x)")
}

fn same_ode_f2_f3() -> Vec<IdentityRecord> {
    let f2 = ["a", "b1", "b2", "c1", "c2"];
    let f2q = ["b1+b2-1/2", "b1", "b2", "2*b1", "2*b2"];
    let f3 = ["a1", "a2", "b1", "b2", "c"];
    let sep_euler = || euler("b1+b2-1/2", "b2", "b1+1/2");
    vec![
        rec("hpg32-line-zero", Mode::SameOde, "F2(x, 0) satisfies Euler's equation with (a, b1; c1)")
            .free(&f2)
            .nonint(&["a-b1", "c1-a", "c1-b1"])
            .odes(derived(F2, &f2, "x = t; y = 0"), euler("a", "b1", "c1")),
        f2_line_one("hpg32-line-one", Mode::SameOde, "F2(x, 1) satisfies the 3F2 equation with (a, b1, a-c2+1; c1, a+b2-c2+1)")
            .odes(derived(F2, &f2, "x = t; y = 1"), hpg32("a", "b1", "a-c2+1", "c1", "a+b2-c2+1")),
        rec("hpg32-antidiagonal", Mode::SameOde, "F2(x, 1-x) satisfies a pulled-back 3F2 equation")
            .free(&f2)
            .nonint(&["a-c2", "a+b2-c2", "a-b1", "c1-b1", "a+b1-c1"])
            .odes(
                derived(F2, &f2, "x = t; y = 1-t"),
                hpg32("a", "c1-b1", "a-c2+1", "c1", "a+b2-c2+1").pullback("t/(t-1)", &[("1", "-a")]),
            ),
        rec("f2-xy2", Mode::SameOde, "F2(a; b1, b2; 2b1, 2b2; x, 2-x) satisfies the builtin antidiagonal equation")
            .free(&["a", "b1", "b2"])
            .nonint(&["2*b1", "2*b2", "b1+b2-a"])
            .odes(derived(F2, &["a", "b1", "b2", "2*b1", "2*b2"], "x = t; y = 2-t"), OdeRecipe::builtin("f2-antidiagonal", &["a", "b1", "b2"])),
        rec("f2-xy2-pullback", Mode::SameOde, "F2(x, 2-x) and (x-2)^(-a) 2F1(a/2, (a+1)/2-b2; b1+1/2; x^2/(2-x)^2)")
            .free(&["a", "b1", "b2"])
            .nonint(&["2*b1", "2*b2", "b1+b2-a"])
            .odes(
                derived(F2, &["a", "b1", "b2", "2*b1", "2*b2"], "x = t; y = 2-t"),
                euler("a/2", "(a+1)/2-b2", "b1+1/2").pullback("t^2/(2-t)^2", &[("2", "-a")]),
            ),
        rec("f2-quadratic-curve", Mode::SameOde, "F2 on (-4t/(t-1)^2, (1-s)(st^2-1)/(s(t-1)^2)) and (1-t)^(2b1+2b2-1) 2F1(st^2)")
            .free(&["b1", "b2", "s"])
            .nonint(&["2*b1", "2*b2", "b1+1/2"])
            .odes(
                derived(F2, &f2q, "x = -4*t/(t-1)^2; y = (1-s)*(s*t^2-1)/(s*(t-1)^2)"),
                sep_euler().pullback("s*t^2", &[("1", "2*b1+2*b2-1")]),
            ),
        rec("f2-separated-curve", Mode::SameOde, "F2 on (1-t^2, 1-(t+s)^2/(s^2-1)) satisfies the builtin separated equation")
            .free(&["b1", "b2", "s"])
            .nonint(&["2*b1", "2*b2", "b1+1/2"])
            .nonzero(&["s^2-1"])
            .odes(
                derived(F2, &f2q, "x = 1-t^2; y = 1-(t+s)^2/(s^2-1)"),
                OdeRecipe::builtin("f2-separated", &["b1", "b2", "s"]),
            ),
        rec("f2-separation-line", Mode::SameOde, "F2 on (-4st/(t-s)^2, -(s^2-1)(t^2-1)/(t-s)^2) and (s-t)^(2b1+2b2-1) 2F1(t^2)")
            .free(&["b1", "b2", "s"])
            .nonint(&["2*b1", "2*b2", "b1+1/2"])
            .nonzero(&["s^2-1"])
            .odes(
                derived(F2, &f2q, "x = -4*s*t/(t-s)^2; y = -(s^2-1)*(t^2-1)/(t-s)^2"),
                sep_euler().pullback("t^2", &[("s", "2*b1+2*b2-1")]),
            ),
        rec("f3-line-zero", Mode::SameOde, "F3(x, 0) satisfies Euler's equation with (a1, b1; c)")
            .free(&f3)
            .nonint(&["a1-b1", "c-a1", "c-b1"])
            .odes(derived(F3, &f3, "x = t; y = 0"), euler("a1", "b1", "c")),
        rec("f3-line-one", Mode::SameOde, "F3(x, 1) satisfies the 3F2 equation with (a1, b1, c-a2-b2; c-a2, c-b2)")
            .free(&f3)
            .nonint(&["c-a2", "c-b2", "c-a2-b2", "a1-b1", "c-a1-a2-b2", "c-b1-a2-b2"])
            .odes(derived(F3, &f3, "x = t; y = 1"), hpg32("a1", "b1", "c-a2-b2", "c-a2", "c-b2")),
        rec("f3-moebius", Mode::SameOde, "F3(x, x/(x-1)) and x^(1-c) (1-x)^a2 3F2(...; 1-x)")
            .free(&f3)
            .nonint(&["a1+a2-c", "b1+a2-c", "a1+a2+b1-c", "a2-b2", "a1-b1", "a1+b2-c", "b1+b2-c"])
            .odes(
                derived(F3, &f3, "x = t; y = t/(t-1)"),
                hpg32("1+a1+a2-c", "1+b1+a2-c", "1-b2", "1+a1+a2+b1-c", "1+a2-b2").pullback("1-t", &[("0", "1-c"), ("1", "a2")]),
            ),
        rec("f3-quadratic", Mode::SameOde, "F3(1-b1, 1-b2; b1, b2; c; x, x/(2x-1)) and a 2F1 of 4x(1-x)")
            .free(&["b1", "b2", "c"])
            .nonint(&["b2-b1+c", "b1+b2+c", "b1-b2", "2*c", "b1+b2"])
            .odes(
                derived(F3, &["1-b1", "1-b2", "b1", "b2", "c"], "x = t; y = t/(2*t-1)"),
                euler("(b2-b1+c)/2", "(b1+b2+c-1)/2", "c").pullback("4*t*(1-t)", &[("1", "c-1"), ("1/2", "b2")]),
            ),
        rec("f3-separated-curve", Mode::SameOde, "F3(...; 3/2) on (-(t-1)^2/(4t), s(t-1)^2/((1-s)(st^2-1))) and t^b1 (1-t)^(-1) 2F1")
            .free(&["b1", "b2", "s"])
            .nonint(&["2*b1", "2*b2", "b1+1/2"])
            .odes(
                derived(F3, &["1-b1", "1-b2", "b1", "b2", "3/2"], "x = -(t-1)^2/(4*t); y = s*(t-1)^2/((1-s)*(s*t^2-1))"),
                euler("1-b2", "b2", "b1+1/2").pullback("s*t^2/(s*t^2-1)", &[("0", "b1"), ("1", "-1")]),
            ),
        rec("f3-separation-line", Mode::SameOde, "F3(...; 3/2) on (-(t-s)^2/(4st), -(t-s)^2/((s^2-1)(t^2-1))) and its 2F1(t^2) partner")
            .free(&["b1", "b2", "s"])
            .nonint(&["2*b1", "2*b2", "b1+1/2"])
            .nonzero(&["s^2-1"])
            .odes(
                derived(F3, &["1-b1", "1-b2", "b1", "b2", "3/2"], "x = -(t-s)^2/(4*s*t); y = -(t-s)^2/((s^2-1)*(t^2-1))"),
                sep_euler().pullback("t^2", &[("0", "b1"), ("1", "b2"), ("-1", "b2"), ("s", "-1")]),
            ),
    ]
}

fn same_ode_f4() -> Vec<IdentityRecord> {
    let hpg = || hpg32("2*a", "2*b", "c", "a+b+1/2", "2*c");
    let sq = || euler("c", "3*c-1", "2*c").symmetric_square();
    vec![
        rec("kato-ode", Mode::SameOde, "F4 on the quadratic singular curve satisfies Kato's third order equation")
            .free(&["a", "b", "c1", "c2"])
            .nonint(&["c1-a", "c1-b", "c2-a", "c2-b", "c1+c2-a", "c1+c2-b", "c1+c2-a-b-1/2", "a-b", "2*c1", "2*c2"])
            .odes(derived(F4, &["a", "b", "c1", "c2"], F4_QUADRATIC), OdeRecipe::builtin("kato", &["a", "b", "c1", "c2"])),
        rec("f4-quadratic-euler", Mode::SameOde, "F4(a; b; c, a+b-c+3/2; t^2, (1-t)^2) and 2F1(2a, 2b; 2c-1; t)")
            .free(&["a", "b", "c"])
            .nonint(&["2*a", "2*b", "2*c", "a+b-c", "2*a-2*c", "2*b-2*c", "a-b"])
            .odes(derived(F4, &["a", "b", "c", "a+b-c+3/2"], F4_QUADRATIC), euler("2*a", "2*b", "2*c-1")),
        rec("bailey-family", Mode::SameOde, "F4(a; b; c, a+b-c+1; st, (1-s)(1-t)) satisfies Euler's equation in t")
            .free(&["a", "b", "c", "s"])
            .nonint(&["a+b-c", "a-b", "c-a", "c-b"])
            .odes(derived(F4, &["a", "b", "c", "a+b-c+1"], "x = s*t; y = (1-s)*(1-t)"), euler("a", "b", "c")),
        rec("f4-hpg32", Mode::SameOde, "F4(a; b; c+1/2, 1/2; t^2, (1-t)^2) and 3F2(2a, 2b, c; a+b+1/2, 2c; t)")
            .free(&["a", "b", "c"])
            .nonint(&["2*a", "2*b", "2*c", "a+b", "a-b", "a-c", "b-c", "a+b-c"])
            .odes(derived(F4, &["a", "b", "c+1/2", "1/2"], F4_QUADRATIC), hpg()),
        rec("f4-hpg32-shifted", Mode::SameOde, "(1-t) F4(a+1/2; b+1/2; c+1/2, 3/2; t^2, (1-t)^2) satisfies the same 3F2 equation")
            .free(&["a", "b", "c"])
            .nonint(&["2*a", "2*b", "2*c", "a+b", "a-b", "a-c", "b-c", "a+b-c"])
            .odes(derived(F4, &["a+1/2", "b+1/2", "c+1/2", "3/2"], F4_QUADRATIC).projective(&[("1", "1")]), hpg()),
        rec("f4-hpg32-moebius", Mode::SameOde, "(1-t)^(-2a) F4(a; a+1/2; c+1/2, 1+a-b; t^2/(t-1)^2, 1/(t-1)^2) satisfies the same 3F2 equation")
            .free(&["a", "b", "c"])
            .nonint(&["2*a", "2*b", "2*c", "a+b", "a-b", "a-c", "b-c", "a+b-c"])
            .odes(
                derived(F4, &["a", "a+1/2", "c+1/2", "1+a-b"], "x = t^2/(t-1)^2; y = 1/(t-1)^2").projective(&[("1", "-2*a")]),
                hpg(),
            ),
        rec("f4-symmetric-square", Mode::SameOde, "F4(a; b; c, a+b-c+1; t^2, (1-t)^2) and 2F1(a, b; c; t)^2")
            .free(&["a", "b", "c"])
            .nonint(&["2*a", "2*b", "2*c", "a+b-c", "2*a-2*b", "2*c-2*a", "2*c-2*b", "2*a+2*b-2*c"])
            .odes(derived(F4, &["a", "b", "c", "a+b-c+1"], F4_QUADRATIC), euler("a", "b", "c").symmetric_square()),
        rec("f4-symmetric-square-c", Mode::SameOde, "F4(2c-1/2; 3c-1; c+1/2, c+1/2; t^2, (1-t)^2) and 2F1(c, 3c-1; 2c; t)^2")
            .free(&["c"])
            .nonint(&["2*c", "3*c", "4*c", "6*c"])
            .odes(derived(F4, &["2*c-1/2", "3*c-1", "c+1/2", "c+1/2"], F4_QUADRATIC), sq()),
        rec("f4-symmetric-square-c-t", Mode::SameOde, "t^(1-2c) F4(c; 2c-1/2; 3/2-c, c+1/2; t^2, (1-t)^2) satisfies the same symmetric square")
            .free(&["c"])
            .nonint(&["2*c", "3*c", "4*c", "6*c"])
            .odes(derived(F4, &["c", "2*c-1/2", "3/2-c", "c+1/2"], F4_QUADRATIC).projective(&[("0", "1-2*c")]), sq()),
        rec("f4-symmetric-square-c-half", Mode::SameOde, "t^(1-2c) (1-t)^(1-2c) F4(1/2; c; 3/2-c, 3/2-c; t^2, (1-t)^2) satisfies the same symmetric square")
            .free(&["c"])
            .nonint(&["2*c", "3*c", "4*c", "6*c"])
            .odes(
                derived(F4, &["1/2", "c", "3/2-c", "3/2-c"], F4_QUADRATIC).projective(&[("0", "1-2*c"), ("1", "1-2*c")]),
                sq(),
            ),
    ]
}

fn same_ode_f1() -> Vec<IdentityRecord> {
    let reference = || euler("a", "1/2", "1+b").pullback("-4*t/(t-1)^2", &[("1", "-2*a")]);
    let q = |id: &str, claim: &str, params: [&str; 4], curve: &str, theta: &[(&str, &str)]| {
        let lhs = derived(F1, &params, curve);
        let lhs = if theta.is_empty() { lhs } else { lhs.projective(theta) };
        rec(id, Mode::SameOde, claim)
            .free(&["a", "b"])
            .nonint(&["2*b", "2*a", "a-b", "2*a-2*b", "a-2*b", "a+b"])
            .odes(lhs, reference())
    };
    vec![
        q("f1-parabola", "F1(a; 2b, a-b; 1+b; x, x^2) and (1-x)^(-2a) 2F1(a, 1/2; 1+b; -4x/(x-1)^2)", ["a", "2*b", "a-b", "1+b"], "x = t; y = t^2", &[]),
        q("f1-parabola-moebius-1", "(1-x)^(-a) F1(a; 1-a, a-b; 1+b; x/(x-1), -x) satisfies the same equation", ["a", "1-a", "a-b", "1+b"], "x = t/(t-1); y = -t", &[("1", "-a")]),
        q("f1-parabola-moebius-2", "(1-x^2)^(-a) F1(a; 2b, 1-a; 1+b; x/(x+1), x^2/(x^2-1)) satisfies the same equation", ["a", "2*b", "1-a", "1+b"], "x = t/(t+1); y = t^2/(t^2-1)", &[("1", "-a"), ("-1", "-a")]),
        q("f1-parabola-at-one-1", "F1(a; 2b, a-b; 2a; 1-x, 1-x^2) satisfies the same equation", ["a", "2*b", "a-b", "2*a"], "x = 1-t; y = 1-t^2", &[]),
        q("f1-parabola-at-one-2", "x^(-a) F1(a; a-b, a-b; 2a; (x-1)/x, 1-x) satisfies the same equation", ["a", "a-b", "a-b", "2*a"], "x = (t-1)/t; y = 1-t", &[("0", "-a")]),
        q("f1-parabola-at-infinity-1", "x^(-a) F1(a; a-b, a-b; 1+a-2b; 1/x, x) satisfies the same equation", ["a", "a-b", "a-b", "1+a-2*b"], "x = 1/t; y = t", &[("0", "-a")]),
        q("f1-parabola-at-infinity-2", "(x-1)^(-a) F1(a; 1-a, a-b; 1+a-2b; 1/(1-x), x+1) satisfies the same equation", ["a", "1-a", "a-b", "1+a-2*b"], "x = 1/(1-t); y = t+1", &[("1", "-a")]),
        q("f1-parabola-at-infinity-3", "x^(-b) (1-x)^(2b-2a) F1(1-2b; a-b, a-b; 1+a-2b; 1/(1-x), x/(x-1)) satisfies the same equation", ["1-2*b", "a-b", "a-b", "1+a-2*b"], "x = 1/(1-t); y = t/(t-1)", &[("0", "-b"), ("1", "2*b-2*a")]),
        q("f1-parabola-at-infinity-4", "x^(-b) (1-x)^(1-2a) F1(1-2b; a-b, 1-a; 1+a-2b; x+1, x) satisfies the same equation", ["1-2*b", "a-b", "1-a", "1+a-2*b"], "x = t+1; y = t", &[("0", "-b"), ("1", "1-2*a")]),
        rec("f1-hyperbola", Mode::SameOde, "F1(1-b2; b1, b2; 2-b1-b2; x, x/(x+1)) and (1+x)^b2/(1-x) 2F1(1-b1, 1/2; 2-b1-b2; -4x/(x-1)^2)")
            .free(&["b1", "b2"])
            .nonint(&["b1+b2", "2*b1", "2*b2", "b1-b2"])
            .odes(
                derived(F1, &["1-b2", "b1", "b2", "2-b1-b2"], "x = t; y = t/(t+1)"),
                euler("1-b1", "1/2", "2-b1-b2").pullback("-4*t/(t-1)^2", &[("-1", "b2"), ("1", "-1")]),
            ),
    ]
}

fn solutions() -> Vec<IdentityRecord> {
    let f1 = ["a", "b1", "b2", "c"];
    let f1_generic = ["c-a", "c-b1", "c-b2", "c-a-b1", "c-a-b2", "c-b1-b2", "a-b1", "a-b2", "a+b1+b2-c", "b1+b2", "c-a-b1-b2"];
    let f1_rec = |id: &str, claim: &str| rec(id, Mode::SolvesSystem, claim).free(&f1).nonint(&f1_generic);
    let f2 = ["a", "b1", "b2", "c1", "c2"];
    let f2_generic = ["c1+c2", "a-c1", "a-c2", "a-c1-c2", "b1-c1", "b2-c2", "a-b1-b2"];
    let f4 = ["a", "b", "c1", "c2"];
    let f4_generic = ["c1+c2", "a-c1", "a-c2", "b-c1", "b-c2", "a-c1-c2", "b-c1-c2", "a-b"];
    vec![
        rec("f2-solution-x", Mode::SolvesSystem, "x^(1-c1) F2(1+a-c1; 1+b1-c1, b2; 2-c1, c2; x, y) solves the F2 system")
            .free(&f2)
            .nonint(&f2_generic)
            .solution(sys(F2, &f2), &["x", "y"], "x^(1-c1) * F2(1+a-c1, 1+b1-c1, b2, 2-c1, c2; x, y)", None),
        rec("f2-solution-y", Mode::SolvesSystem, "y^(1-c2) F2(1+a-c2; b1, 1+b2-c2; c1, 2-c2; x, y) solves the F2 system")
            .free(&f2)
            .nonint(&f2_generic)
            .solution(sys(F2, &f2), &["x", "y"], "y^(1-c2) * F2(1+a-c2, b1, 1+b2-c2, c1, 2-c2; x, y)", None),
        rec("f2-solution-xy", Mode::SolvesSystem, "x^(1-c1) y^(1-c2) F2(2+a-c1-c2; 1+b1-c1, 1+b2-c2; 2-c1, 2-c2; x, y) solves the F2 system")
            .free(&f2)
            .nonint(&f2_generic)
            .solution(
                sys(F2, &f2),
                &["x", "y"],
                "x^(1-c1) * y^(1-c2) * F2(2+a-c1-c2, 1+b1-c1, 1+b2-c2, 2-c1, 2-c2; x, y)",
                None,
            ),
        rec("f2-f3-at-infinity", Mode::SolvesSystem, "x^(-b1) y^(-b2) F3(1+b1-c1, 1+b2-c2; b1, b2; 1+b1+b2-a; 1/x, 1/y) solves the F2 system")
            .free(&f2)
            .nonint(&f2_generic)
            .nonint(&["1+b1+b2-a"])
            .solution(
                sys(F2, &f2),
                &["u", "v"],
                "u^b1 * v^b2 * F3(1+b1-c1, 1+b2-c2, b1, b2, 1+b1+b2-a; u, v)",
                Some(("1/u", "1/v")),
            ),
        rec("f4-solution-origin", Mode::SolvesSystem, "F4(a; b; c1, c2; x, y) solves the F4 system")
            .free(&f4)
            .nonint(&f4_generic)
            .solution(sys(F4, &f4), &["x", "y"], "F4(a, b, c1, c2; x, y)", None),
        rec("f4-solution-x", Mode::SolvesSystem, "x^(1-c1) F4(1+a-c1; 1+b-c1; 2-c1, c2; x, y) solves the F4 system")
            .free(&f4)
            .nonint(&f4_generic)
            .solution(sys(F4, &f4), &["x", "y"], "x^(1-c1) * F4(1+a-c1, 1+b-c1, 2-c1, c2; x, y)", None),
        rec("f4-solution-y", Mode::SolvesSystem, "y^(1-c2) F4(1+a-c2; 1+b-c2; c1, 2-c2; x, y) solves the F4 system")
            .free(&f4)
            .nonint(&f4_generic)
            .solution(sys(F4, &f4), &["x", "y"], "y^(1-c2) * F4(1+a-c2, 1+b-c2, c1, 2-c2; x, y)", None),
        rec("f4-solution-xy", Mode::SolvesSystem, "x^(1-c1) y^(1-c2) F4(2+a-c1-c2; 2+b-c1-c2; 2-c1, 2-c2; x, y) solves the F4 system")
            .free(&f4)
            .nonint(&f4_generic)
            .solution(
                sys(F4, &f4),
                &["x", "y"],
                "x^(1-c1) * y^(1-c2) * F4(2+a-c1-c2, 2+b-c1-c2, 2-c1, 2-c2; x, y)",
                None,
            ),
        rec("f4-solution-y-infinity-a", Mode::SolvesSystem, "y^(-a) F4(a; 1+a-c2; c1, 1+a-b; x/y, 1/y) solves the F4 system")
            .free(&f4)
            .nonint(&f4_generic)
            .solution(sys(F4, &f4), &["u", "v"], "v^a * F4(a, 1+a-c2, c1, 1+a-b; u, v)", Some(("u/v", "1/v"))),
        rec("f4-solution-y-infinity-b", Mode::SolvesSystem, "y^(-b) F4(1+b-c2; b; c1, 1+b-a; x/y, 1/y) solves the F4 system")
            .free(&f4)
            .nonint(&f4_generic)
            .solution(sys(F4, &f4), &["u", "v"], "v^b * F4(1+b-c2, b, c1, 1+b-a; u, v)", Some(("u/v", "1/v"))),
        f1_rec("f1-solution-origin", "F1(a; b1, b2; c; x, y) solves the F1 system")
            .solution(sys(F1, &f1), &["x", "y"], "F1(a, b1, b2, c; x, y)", None),
        f1_rec("f1-solution-one", "F1(a; b1, b2; 1+a+b1+b2-c; 1-x, 1-y) solves the F1 system")
            .solution(sys(F1, &f1), &["u", "v"], "F1(a, b1, b2, 1+a+b1+b2-c; u, v)", Some(("1-u", "1-v"))),
        f1_rec("f1-solution-infinity", "x^(-b1) y^(-b2) F1(1+b1+b2-c; b1, b2; 1+b1+b2-a; 1/x, 1/y) solves the F1 system")
            .solution(
                sys(F1, &f1),
                &["u", "v"],
                "u^b1 * v^b2 * F1(1+b1+b2-c, b1, b2, 1+b1+b2-a; u, v)",
                Some(("1/u", "1/v")),
            ),
        f1_rec("f1-solution-x-infinity", "x^(-a) F1(a; 1+a-c, b2; 1+a-b1; 1/x, y/x) solves the F1 system")
            .solution(sys(F1, &f1), &["u", "v"], "u^a * F1(a, 1+a-c, b2, 1+a-b1; u, v)", Some(("1/u", "v/u"))),
        f1_rec("f1-solution-y-infinity", "y^(-a) F1(a; b1, 1+a-c; 1+a-b2; x/y, 1/y) solves the F1 system")
            .solution(sys(F1, &f1), &["u", "v"], "v^a * F1(a, b1, 1+a-c, 1+a-b2; u, v)", Some(("u/v", "1/v"))),
        f1_rec("f1-solution-ratio-y", "(1-x)^(-b1) (1-y)^(c-a-b2) F1(c-a; b1, c-b1-b2; c-a-b2+1; (1-y)/(1-x), 1-y) solves the F1 system")
            .solution(
                sys(F1, &f1),
                &["u", "v"],
                "(v/u)^(-b1) * v^(c-a-b2) * F1(c-a, b1, c-b1-b2, c-a-b2+1; u, v)",
                Some(("1-v/u", "1-v")),
            ),
        f1_rec("f1-solution-ratio-x", "(1-x)^(c-a-b1) (1-y)^(-b2) F1(c-a; c-b1-b2, b2; c-a-b1+1; 1-x, (1-x)/(1-y)) solves the F1 system")
            .solution(
                sys(F1, &f1),
                &["u", "v"],
                "u^(c-a-b1) * (u/v)^(-b2) * F1(c-a, c-b1-b2, b2, c-a-b1+1; u, v)",
                Some(("1-u", "1-u/v")),
            ),
        f1_rec("f1-solution-y-over-x", "x^(-b1) y^(b1-c+1) F1(1+b1+b2-c; b1, 1+a-c; 2+b1-c; y/x, y) solves the F1 system")
            .solution(
                sys(F1, &f1),
                &["u", "v"],
                "u^b1 * v^(1-c) * F1(1+b1+b2-c, b1, 1+a-c, 2+b1-c; u, v)",
                Some(("v/u", "v")),
            ),
        f1_rec("f1-solution-x-over-y", "x^(b2-c+1) y^(-b2) F1(1+b1+b2-c; 1+a-c, b2; 2+b2-c; x, x/y) solves the F1 system")
            .solution(
                sys(F1, &f1),
                &["u", "v"],
                "u^(1-c) * v^b2 * F1(1+b1+b2-c, 1+a-c, b2, 2+b2-c; u, v)",
                Some(("u", "u/v")),
            ),
        f1_rec("f1-solution-diagonal", "x^(b1+b2-c) (x-y)^(1-b1-b2) (x-1)^(c-a-1) F1(1-b1; 1+a-c, c-b1-b2; 2-b1-b2; (x-y)/(x-1), (x-y)/x) solves the F1 system")
            .solution(
                sys(F1, &f1),
                &["u", "w"],
                "(1-w)^(c-b1-b2) * (w*u/(1-w))^(1-b1-b2) * (w/(1-w))^(c-a-1) \
                 * F1(1-b1, 1+a-c, c-b1-b2, 2-b1-b2; u, w*u)",
                Some(("1/(1-w)", "(1-w*u)/(1-w)")),
            ),
        f1_rec("f1-f2-blowup", "(y/x)^b1 F2(b1+b2; b1, a; b1+b2, c; (x-y)/x, y) solves the F1 system near (x/y, y) = (1, 0)")
            .solution(sys(F1, &f1), &["u", "v"], "(1-u)^b1 * F2(b1+b2, b1, a, b1+b2, c; u, v)", Some(("v/(1-u)", "v"))),
        rec("f1-separation-elementary", Mode::SolvesSystem, "(s+t)^(2b) (1-s^2)^(1/2-b) (1-t^2)^(1/2-b)/(s-t) solves the F1(b+1/2; b, 1/2-b; 3/2) system in (s, t)")
            .free(&["b"])
            .nonint(&["2*b"])
            .subst("s = 1/3 + u, t = 1/5 + v")
            .solution(
                sys(F1, &["b+1/2", "b", "1/2-b", "3/2"]),
                &["u", "v"],
                "((s+t)*15/8)^(2*b) * ((1-s^2)*9/8)^(1/2-b) * ((1-t^2)*25/24)^(1/2-b) / (s-t)",
                Some((
                    "(s-t)^2/(s+t)^2 (subst s = 1/3 + u, t = 1/5 + v)",
                    "-(s-t)^2/((s^2-1)*(t^2-1)) (subst s = 1/3 + u, t = 1/5 + v)",
                )),
            ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_records_valid() {
        let all = catalog_entries();
        let mut ids: Vec<&str> = all.iter().map(|r| r.id.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
        for r in &all {
            r.validate().unwrap();
        }
        assert!(all.len() >= 40);
    }
}
