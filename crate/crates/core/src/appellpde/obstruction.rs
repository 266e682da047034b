use num_traits::Zero;

use super::mixed::{chain_rule_expansions, specialize};
use super::systems::{appell_system, Curve};
use super::PdeError;
use crate::exactnum::{Axis, BiPoly, GenSeries, RatFunc, Rational};
use crate::hyperseries::{AppellKind, AppellSpec};

/// Coefficient left on the kept second derivative after eliminating the other two
/// second order partials from `d²/dt²` with the two system operators.
///
/// F2 keeps `∂x∂y`, F4 keeps `∂x²`. An order two equation along the curve that
/// uses no prolongation needs this to vanish.
pub fn order2_obstruction(spec: &AppellSpec, curve: &Curve) -> Result<RatFunc, PdeError> {
    let (keep, elim) = match spec.kind {
        AppellKind::F2 => ((1, 1), [(2, 0), (0, 2)]),
        AppellKind::F4 => ((2, 0), [(1, 1), (0, 2)]),
        k => return Err(PdeError::Unsupported(format!("order-2 obstruction is defined for F2 and F4, not {k}"))),
    };
    let ops: Vec<_> = appell_system(spec).iter().map(|op| specialize(op, curve)).collect();
    let d2 = &chain_rule_expansions(curve, 2)[2];
    let at = |m: &std::collections::BTreeMap<(u32, u32), RatFunc>, k| m.get(&k).cloned().unwrap_or_else(RatFunc::zero);
    let (p, q) = (ops[0].partial_part(), ops[1].partial_part());
    // Solve λ·p + μ·q = d2 on the eliminated columns.
    let (a11, a12, a21, a22) = (at(p, elim[0]), at(q, elim[0]), at(p, elim[1]), at(q, elim[1]));
    let det = &(&a11 * &a22) - &(&a12 * &a21);
    if det.is_zero() {
        return Err(PdeError::OnSingularLocus(curve.to_string()));
    }
    let (r1, r2) = (at(d2, elim[0]), at(d2, elim[1]));
    let lambda = (&(&r1 * &a22) - &(&a12 * &r2)).checked_div(&det)?;
    let mu = (&(&a11 * &r2) - &(&r1 * &a21)).checked_div(&det)?;
    Ok(&(&at(d2, keep) - &(&lambda * &at(p, keep))) - &(&mu * &at(q, keep)))
}

/// Residual of the nonlinear curve condition under which the F1 system implies a
/// second order equation along `t ↦ (x(t), y(t))`.
pub fn f1_curve_residual(spec: &AppellSpec, curve: &Curve) -> Result<RatFunc, PdeError> {
    if spec.kind != AppellKind::F1 {
        return Err(PdeError::Unsupported(format!("the curve condition is specific to F1, not {}", spec.kind)));
    }
    let (a, b1, b2, c) = (spec.param("a"), spec.param("b1"), spec.param("b2"), spec.param("c"));
    let (x, y) = (curve.x().clone(), curve.y().clone());
    let (dx, dy) = curve.velocity();
    let (ddx, ddy) = curve.acceleration();
    if dx.is_zero() || dy.is_zero() {
        return Err(PdeError::Unsupported("both coordinates must vary along the curve".into()));
    }
    let one = RatFunc::one();
    let (xm1, ym1) = (&x - &one, &y - &one);
    let on_locus = || PdeError::OnSingularLocus(curve.to_string());
    let div = |p: &RatFunc, q: &RatFunc| p.checked_div(q).map_err(|_| on_locus());
    let first = &div(&ddx, &dx)? - &div(&ddy, &dy)?;
    let lin = &div(&dx, &xm1)? - &div(&dy, &ym1)?;
    let xx = &x * &xm1;
    let yy = &y * &ym1;
    let log = &div(&dx, &xx)? - &div(&dy, &yy)?;
    let ratio = &div(&dx, &x)? - &div(&dy, &y)?;
    let weight = &div(&dx, &xm1)?.scale(b1) + &div(&dy, &ym1)?.scale(b2);
    let pre = div(&(&xx * &yy), &(&(&(&y - &x) * &dx) * &dy))?;
    let cubic = &(&(&pre * &ratio) * &log) * &weight;
    let a1 = a + Rational::from_integer(1.into());
    Ok(&(&(&first - &lin.scale(&a1)) + &log.scale(c)) + &cubic)
}

/// Outcome of the F4 reducibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reducibility {
    /// The named combination is an integer.
    Reducible { witness: &'static str },
    Irreducible,
    /// `c1` or `c2` is an integer, outside the criterion's hypothesis.
    HypothesisViolated { which: &'static str },
}

/// Integer test on `a, b, c1−a, c1−b, c2−a, c2−b, c1+c2−a, c1+c2−b` for F4 parameters.
pub fn reducibility_predicate(spec: &AppellSpec) -> Result<Reducibility, PdeError> {
    if spec.kind != AppellKind::F4 {
        return Err(PdeError::Unsupported(format!("the reducibility criterion is stated for F4, not {}", spec.kind)));
    }
    let (a, b, c1, c2) = (spec.param("a"), spec.param("b"), spec.param("c1"), spec.param("c2"));
    for (name, v) in [("c1", c1), ("c2", c2)] {
        if v.is_integer() {
            return Ok(Reducibility::HypothesisViolated { which: name });
        }
    }
    let c12 = c1 + c2;
    let cands: [(&'static str, Rational); 8] = [
        ("a", a.clone()),
        ("b", b.clone()),
        ("c1-a", c1 - a),
        ("c1-b", c1 - b),
        ("c2-a", c2 - a),
        ("c2-b", c2 - b),
        ("c1+c2-a", &c12 - a),
        ("c1+c2-b", &c12 - b),
    ];
    Ok(cands
        .into_iter()
        .find(|(_, v)| v.is_integer())
        .map_or(Reducibility::Irreducible, |(w, _)| Reducibility::Reducible { witness: w }))
}

/// Local coordinates `(u, v)` around a point of interest, given as series `x(u, v)`, `y(u, v)`.
#[derive(Debug, Clone)]
pub struct Chart {
    pub x: GenSeries,
    pub y: GenSeries,
}

struct ChartOps<'a> {
    chart: &'a Chart,
    xu: GenSeries,
    xv: GenSeries,
    yu: GenSeries,
    yv: GenSeries,
    det: GenSeries,
}

impl<'a> ChartOps<'a> {
    fn new(chart: &'a Chart) -> Result<Self, PdeError> {
        let (xu, xv) = (chart.x.partial(Axis::X), chart.x.partial(Axis::Y));
        let (yu, yv) = (chart.y.partial(Axis::X), chart.y.partial(Axis::Y));
        let det = (&xu * &yv).checked_sub(&(&xv * &yu))?;
        if det.is_zero() {
            return Err(PdeError::Degenerate("chart has vanishing Jacobian".into()));
        }
        Ok(ChartOps { chart, xu, xv, yu, yv, det })
    }

    /// `∂x g` or `∂y g` by the inverse Jacobian.
    fn d(&self, g: &GenSeries, axis: Axis) -> Result<GenSeries, PdeError> {
        let (gu, gv) = (g.partial(Axis::X), g.partial(Axis::Y));
        let num = match axis {
            Axis::X => (&self.yv * &gu).checked_sub(&(&self.yu * &gv))?,
            Axis::Y => (&self.xu * &gv).checked_sub(&(&self.xv * &gu))?,
        };
        Ok(num.checked_div(&self.det)?)
    }

    fn coefficient(&self, p: &BiPoly, order: i64) -> Result<GenSeries, PdeError> {
        let mut acc = GenSeries::zero(order);
        for ((i, j), c) in p.terms() {
            let mut m = GenSeries::constant(c.clone(), order);
            for _ in 0..*i {
                m = &m * &self.chart.x;
            }
            for _ in 0..*j {
                m = &m * &self.chart.y;
            }
            acc = acc.checked_add(&m)?;
        }
        Ok(acc)
    }
}

/// Applies every system operator to `candidate` and checks that the residual
/// vanishes through absolute total degree `n`.
///
/// Without a chart the candidate is a series in `(x, y)`; with a chart it is a
/// series in the chart's local coordinates.
pub fn solves_system(spec: &AppellSpec, candidate: &GenSeries, n: i64, chart: Option<&Chart>) -> Result<bool, PdeError> {
    let target = Rational::from_integer(n.into());
    let ops = appell_system(spec);
    let residuals: Vec<GenSeries> = match chart {
        None => ops.iter().map(|op| op.apply(candidate)).collect::<Result<_, _>>()?,
        Some(ch) => {
            let cx = ChartOps::new(ch)?;
            let order = candidate.body().order();
            let mut derivs = std::collections::BTreeMap::new();
            derivs.insert((0u32, 0u32), candidate.clone());
            let max = ops.iter().filter_map(|o| o.order()).max().unwrap_or(0);
            for total in 1..=max {
                for i in 0..=total {
                    let j = total - i;
                    let (from, axis) = if i > 0 { ((i - 1, j), Axis::X) } else { ((i, j - 1), Axis::Y) };
                    let g = cx.d(&derivs[&from], axis)?;
                    derivs.insert((i, j), g);
                }
            }
            let mut out = Vec::new();
            for op in &ops {
                let mut acc: Option<GenSeries> = None;
                for ((i, j), p) in op.terms() {
                    let term = &cx.coefficient(p, order)? * &derivs[&(*i, *j)];
                    acc = Some(match acc {
                        None => term,
                        Some(a) => a.checked_add(&term)?,
                    });
                }
                out.push(acc.unwrap_or_else(|| GenSeries::zero(order)));
            }
            out
        }
    };
    for r in &residuals {
        if r.absolute_order() < target {
            return Err(PdeError::InsufficientOrder { have: crate::exactnum::format_rational(&r.absolute_order()), need: n });
        }
        let lowest = r.alpha() + r.beta();
        let ok = r.body().iter_terms().all(|(i, j, c)| {
            c.is_zero() || lowest.clone() + Rational::from_integer(((i + j) as i64).into()) > target
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
