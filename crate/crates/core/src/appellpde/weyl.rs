use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{Axis, BiPoly, GenSeries, Rational, TruncSeries2};

/// Partial differential operator `Σ c_{ij}(x, y) ∂x^i ∂y^j` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylOp {
    terms: BTreeMap<(u32, u32), BiPoly>,
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for i in 0..k {
        acc = acc * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    acc
}

fn partial_pow(p: &BiPoly, i: u32, j: u32) -> BiPoly {
    let mut q = p.clone();
    for _ in 0..i {
        q = q.partial_x();
    }
    for _ in 0..j {
        q = q.partial_y();
    }
    q
}

impl WeylOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BiPoly)>>(it: I) -> Self {
        let mut terms: BTreeMap<(u32, u32), BiPoly> = BTreeMap::new();
        for (k, c) in it {
            let e = terms.entry(k).or_default();
            *e = &*e + &c;
        }
        terms.retain(|_, c| !c.is_zero());
        WeylOp { terms }
    }

    /// `∂x^i ∂y^j` with coefficient 1.
    pub fn partial(i: u32, j: u32) -> Self {
        Self::from_terms([((i, j), BiPoly::one())])
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BiPoly> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> BiPoly {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total derivative order.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn add(&self, o: &WeylOp) -> WeylOp {
        Self::from_terms(self.terms.iter().chain(o.terms.iter()).map(|(k, c)| (*k, c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> WeylOp {
        Self::from_terms(self.terms.iter().map(|(k, p)| (*k, p.scale(c))))
    }

    /// Left multiplication by a polynomial.
    pub fn mul_poly(&self, p: &BiPoly) -> WeylOp {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, p * c)))
    }

    /// `∂_axis ∘ self`, expanded by the Leibniz rule.
    pub fn prolong(&self, axis: Axis) -> WeylOp {
        let d = match axis {
            Axis::X => WeylOp::partial(1, 0),
            Axis::Y => WeylOp::partial(0, 1),
        };
        d.compose(self)
    }

    /// Operator product `self ∘ other`.
    pub fn compose(&self, other: &WeylOp) -> WeylOp {
        let mut out = Vec::new();
        for ((ai, aj), p) in &self.terms {
            for ((bi, bj), q) in &other.terms {
                for gi in 0..=*ai {
                    for gj in 0..=*aj {
                        let dq = partial_pow(q, gi, gj);
                        if dq.is_zero() {
                            continue;
                        }
                        let c = binomial(*ai, gi) * binomial(*aj, gj);
                        out.push(((ai - gi + bi, aj - gj + bj), (p * &dq).scale(&c)));
                    }
                }
            }
        }
        Self::from_terms(out)
    }

    /// Applies the operator to a series in `(x, y)`.
    pub fn apply(&self, g: &GenSeries) -> Result<GenSeries, crate::exactnum::ExactError> {
        let mut acc: Option<GenSeries> = None;
        for ((i, j), c) in &self.terms {
            let mut d = g.clone();
            for _ in 0..*i {
                d = d.partial(Axis::X);
            }
            for _ in 0..*j {
                d = d.partial(Axis::Y);
            }
            let coeff = GenSeries::from_series(TruncSeries2::from_bipoly(c, d.body().order()));
            let term = &coeff * &d;
            acc = Some(match acc {
                None => term,
                Some(a) => a.checked_add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| GenSeries::zero(g.body().order())))
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| {
                let d = match (i, j) {
                    (0, 0) => String::new(),
                    _ => format!("*Dx^{i}*Dy^{j}"),
                };
                format!("({c}){d}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience for tests and system tables: `Σ c x^i y^j` from integer-exponent rational triples.
pub(crate) fn bp(terms: &[(u32, u32, Rational)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().map(|(i, j, c)| ((*i, *j), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn leibniz_prolongation() {
        // ∂x ∘ (x ∂x) = x ∂x² + ∂x
        let op = WeylOp::from_terms([((1, 0), BiPoly::x())]);
        let want = WeylOp::from_terms([((2, 0), BiPoly::x()), ((1, 0), BiPoly::one())]);
        assert_eq!(op.prolong(Axis::X), want);
        // A constant-coefficient operator only has its index bumped.
        let c = WeylOp::from_terms([((0, 1), BiPoly::constant(int(3)))]);
        assert_eq!(c.prolong(Axis::X), WeylOp::from_terms([((1, 1), BiPoly::constant(int(3)))]));
    }

    #[test]
    fn composition_is_associative() {
        let a = WeylOp::from_terms([((1, 0), bp(&[(1, 1, int(2))])), ((0, 0), BiPoly::y())]);
        let b = WeylOp::from_terms([((0, 1), bp(&[(2, 0, int(1))])), ((1, 0), BiPoly::one())]);
        let c = WeylOp::from_terms([((1, 1), BiPoly::x())]);
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }
}
