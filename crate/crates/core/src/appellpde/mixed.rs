use std::collections::BTreeMap;
use std::fmt;

use super::systems::Curve;
use super::weyl::WeylOp;
use crate::exactnum::RatFunc;

/// Q(t)-linear combination of full derivatives `d^k/dt^k` and partial derivatives `∂x^i ∂y^j`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MixedElement {
    full: BTreeMap<usize, RatFunc>,
    partial: BTreeMap<(u32, u32), RatFunc>,
}

fn insert<K: Ord>(m: &mut BTreeMap<K, RatFunc>, k: K, c: RatFunc) {
    let e = m.entry(k).or_insert_with(RatFunc::zero);
    *e = &*e + &c;
}

impl MixedElement {
    pub fn new<F, P>(full: F, partial: P) -> Self
    where
        F: IntoIterator<Item = (usize, RatFunc)>,
        P: IntoIterator<Item = ((u32, u32), RatFunc)>,
    {
        let mut e = MixedElement::default();
        for (k, c) in full {
            insert(&mut e.full, k, c);
        }
        for (k, c) in partial {
            insert(&mut e.partial, k, c);
        }
        e.full.retain(|_, c| !c.is_zero());
        e.partial.retain(|_, c| !c.is_zero());
        e
    }

    pub fn full_part(&self) -> &BTreeMap<usize, RatFunc> {
        &self.full
    }

    pub fn partial_part(&self) -> &BTreeMap<(u32, u32), RatFunc> {
        &self.partial
    }

    pub fn is_zero(&self) -> bool {
        self.full.is_empty() && self.partial.is_empty()
    }

    pub fn add(&self, o: &MixedElement) -> MixedElement {
        MixedElement::new(
            self.full.iter().chain(&o.full).map(|(k, c)| (*k, c.clone())),
            self.partial.iter().chain(&o.partial).map(|(k, c)| (*k, c.clone())),
        )
    }

    /// Multiplication by an element of Q(t).
    pub fn mul(&self, f: &RatFunc) -> MixedElement {
        MixedElement::new(
            self.full.iter().map(|(k, c)| (*k, c * f)),
            self.partial.iter().map(|(k, c)| (*k, c * f)),
        )
    }
}

/// Evaluates the polynomial coefficients of `op` along the curve.
pub fn specialize(op: &WeylOp, curve: &Curve) -> MixedElement {
    MixedElement::new([], op.terms().iter().map(|(k, c)| (*k, curve.substitute(c))))
}

/// Partial-derivative expansions of `d^k/dt^k` along the curve for `k = 0..=r`.
///
/// `d/dt` acts on a coefficient by differentiation and on `∂x^i ∂y^j` by
/// `ẋ ∂x^(i+1) ∂y^j + ẏ ∂x^i ∂y^(j+1)`.
pub fn chain_rule_expansions(curve: &Curve, r: usize) -> Vec<BTreeMap<(u32, u32), RatFunc>> {
    let (dx, dy) = curve.velocity();
    let mut out = vec![BTreeMap::from([((0, 0), RatFunc::one())])];
    for _ in 0..r {
        let prev = out.last().expect("nonempty");
        let mut next = BTreeMap::new();
        for ((i, j), c) in prev {
            insert(&mut next, (*i, *j), c.derivative());
            insert(&mut next, (i + 1, *j), c * &dx);
            insert(&mut next, (*i, j + 1), c * &dy);
        }
        next.retain(|_, c| !c.is_zero());
        out.push(next);
    }
    out
}

/// The elements `d^k/dt^k − (chain-rule expansion)` for `k = 1..=r`.
pub fn full_derivative_elements(curve: &Curve, r: usize) -> Vec<MixedElement> {
    chain_rule_expansions(curve, r)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, d)| MixedElement::new([(k, RatFunc::one())], d.into_iter().map(|(ij, c)| (ij, -&c))))
        .collect()
}

impl fmt::Display for MixedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.full.iter().rev() {
            parts.push(format!("({})*D^{k}", c.to_string_var("t")));
        }
        for ((i, j), c) in self.partial.iter().rev() {
            parts.push(format!("({})*Dx^{i}*Dy^{j}", c.to_string_var("t")));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for MixedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
