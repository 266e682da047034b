use std::fmt;

use super::weyl::{bp, WeylOp};
use super::PdeError;
use crate::exactnum::{BiPoly, RatFunc, Rational};
use crate::hyperseries::{AppellKind, AppellSpec};

fn r(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn c(v: Rational) -> BiPoly {
    BiPoly::constant(v)
}

fn op(terms: Vec<((u32, u32), BiPoly)>) -> WeylOp {
    WeylOp::from_terms(terms)
}

/// The defining PDE operators of an Appell function with instantiated parameters.
///
/// F2, F3 and F4 give two operators each. F1 gives three: the two classical
/// ones and the second order relation `(y−x)∂x∂y + b2∂x − b1∂y`, which is
/// needed for a finite-dimensional solution space when `c = a + 1`.
pub fn appell_system(spec: &AppellSpec) -> Vec<WeylOp> {
    let p = |n: &str| spec.param(n).clone();
    let one = r(1);
    let x = BiPoly::x();
    let y = BiPoly::y();
    let xy = bp(&[(1, 1, r(1))]);
    let x_1mx = bp(&[(1, 0, r(1)), (2, 0, r(-1))]);
    let y_1my = bp(&[(0, 1, r(1)), (0, 2, r(-1))]);
    match spec.kind {
        AppellKind::F2 => {
            let (a, b1, b2, c1, c2) = (p("a"), p("b1"), p("b2"), p("c1"), p("c2"));
            let first = op(vec![
                ((2, 0), x_1mx.clone()),
                ((1, 1), -&xy),
                ((1, 0), bp(&[(0, 0, c1), (1, 0, -(&a + &b1 + &one))])),
                ((0, 1), y.scale(&-b1.clone())),
                ((0, 0), c(-(&a * &b1))),
            ]);
            let second = op(vec![
                ((0, 2), y_1my.clone()),
                ((1, 1), -&xy),
                ((0, 1), bp(&[(0, 0, c2), (0, 1, -(&a + &b2 + &one))])),
                ((1, 0), x.scale(&-b2.clone())),
                ((0, 0), c(-(&a * &b2))),
            ]);
            vec![first, second]
        }
        AppellKind::F3 => {
            let (a1, a2, b1, b2, cc) = (p("a1"), p("a2"), p("b1"), p("b2"), p("c"));
            let first = op(vec![
                ((2, 0), x_1mx.clone()),
                ((1, 1), y.clone()),
                ((1, 0), bp(&[(0, 0, cc.clone()), (1, 0, -(&a1 + &b1 + &one))])),
                ((0, 0), c(-(&a1 * &b1))),
            ]);
            let second = op(vec![
                ((0, 2), y_1my.clone()),
                ((1, 1), x.clone()),
                ((0, 1), bp(&[(0, 0, cc), (0, 1, -(&a2 + &b2 + &one))])),
                ((0, 0), c(-(&a2 * &b2))),
            ]);
            vec![first, second]
        }
        AppellKind::F4 => {
            let (a, b, c1, c2) = (p("a"), p("b"), p("c1"), p("c2"));
            let s = &a + &b + &one;
            let first = op(vec![
                ((2, 0), x_1mx.clone()),
                ((0, 2), bp(&[(0, 2, r(-1))])),
                ((1, 1), xy.scale(&r(-2))),
                ((1, 0), bp(&[(0, 0, c1), (1, 0, -s.clone())])),
                ((0, 1), y.scale(&-s.clone())),
                ((0, 0), c(-(&a * &b))),
            ]);
            let second = op(vec![
                ((0, 2), y_1my.clone()),
                ((2, 0), bp(&[(2, 0, r(-1))])),
                ((1, 1), xy.scale(&r(-2))),
                ((0, 1), bp(&[(0, 0, c2), (0, 1, -s.clone())])),
                ((1, 0), x.scale(&-s)),
                ((0, 0), c(-(&a * &b))),
            ]);
            vec![first, second]
        }
        AppellKind::F1 => {
            let (a, b1, b2, cc) = (p("a"), p("b1"), p("b2"), p("c"));
            let first = op(vec![
                ((2, 0), x_1mx.clone()),
                ((1, 1), bp(&[(0, 1, r(1)), (1, 1, r(-1))])),
                ((1, 0), bp(&[(0, 0, cc.clone()), (1, 0, -(&a + &b1 + &one))])),
                ((0, 1), y.scale(&-b1.clone())),
                ((0, 0), c(-(&a * &b1))),
            ]);
            let second = op(vec![
                ((0, 2), y_1my.clone()),
                ((1, 1), bp(&[(1, 0, r(1)), (1, 1, r(-1))])),
                ((0, 1), bp(&[(0, 0, cc), (0, 1, -(&a + &b2 + &one))])),
                ((1, 0), x.scale(&-b2.clone())),
                ((0, 0), c(-(&a * &b2))),
            ]);
            let third = op(vec![
                ((1, 1), &y - &x),
                ((1, 0), c(b2)),
                ((0, 1), c(-b1)),
            ]);
            vec![first, second, third]
        }
    }
}

/// Singular locus: affine components as polynomial equations, plus the components at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularLocus {
    pub affine: Vec<BiPoly>,
    pub at_infinity: Vec<&'static str>,
}

pub fn singular_locus(kind: AppellKind) -> SingularLocus {
    let lin = |cx: i64, cy: i64, c0: i64| bp(&[(1, 0, r(cx)), (0, 1, r(cy)), (0, 0, r(c0))]);
    let (x, xm1, y, ym1) = (lin(1, 0, 0), lin(1, 0, -1), lin(0, 1, 0), lin(0, 1, -1));
    let p1p1 = vec!["x=inf", "y=inf"];
    match kind {
        AppellKind::F1 => SingularLocus { affine: vec![x, xm1, y, ym1, lin(-1, 1, 0)], at_infinity: p1p1 },
        AppellKind::F2 => SingularLocus { affine: vec![x, xm1, y, ym1, lin(1, 1, -1)], at_infinity: p1p1 },
        AppellKind::F3 => SingularLocus {
            affine: vec![x, xm1, y, ym1, bp(&[(1, 1, r(1)), (1, 0, r(-1)), (0, 1, r(-1))])],
            at_infinity: p1p1,
        },
        AppellKind::F4 => SingularLocus {
            affine: vec![
                x,
                y,
                bp(&[(2, 0, r(1)), (0, 2, r(1)), (0, 0, r(1)), (1, 1, r(-2)), (1, 0, r(-2)), (0, 1, r(-2))]),
            ],
            at_infinity: vec!["line at infinity"],
        },
    }
}

/// A rational curve `t ↦ (x(t), y(t))`.
#[derive(Clone, PartialEq, Eq)]
pub struct Curve {
    x: RatFunc,
    y: RatFunc,
}

impl Curve {
    pub fn new(x: RatFunc, y: RatFunc) -> Result<Self, PdeError> {
        if x.is_constant() && y.is_constant() {
            return Err(PdeError::ConstantCurve);
        }
        Ok(Curve { x, y })
    }

    pub fn x(&self) -> &RatFunc {
        &self.x
    }

    pub fn y(&self) -> &RatFunc {
        &self.y
    }

    /// `(ẋ, ẏ)`.
    pub fn velocity(&self) -> (RatFunc, RatFunc) {
        (self.x.derivative(), self.y.derivative())
    }

    /// `(ẍ, ÿ)`.
    pub fn acceleration(&self) -> (RatFunc, RatFunc) {
        (self.x.derivative().derivative(), self.y.derivative().derivative())
    }

    /// `p(x(t), y(t))`.
    pub fn substitute(&self, p: &BiPoly) -> RatFunc {
        p.eval_ratfunc(&self.x, &self.y)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x, y) = ({}, {})", self.x.to_string_var("t"), self.y.to_string_var("t"))
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The first affine locus component the curve lies in, if any.
pub fn curve_on_locus(kind: AppellKind, curve: &Curve) -> Option<BiPoly> {
    singular_locus(kind).affine.into_iter().find(|p| curve.substitute(p).is_zero())
}
