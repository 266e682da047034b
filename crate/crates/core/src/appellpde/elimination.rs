use std::collections::{BTreeMap, BTreeSet};

use super::mixed::{chain_rule_expansions, specialize};
use super::systems::{appell_system, Curve};
use super::weyl::WeylOp;
use super::PdeError;
use crate::exactnum::{Axis, RatFunc, UniPoly};
use crate::fuchsode::Lode;
use crate::hyperseries::AppellSpec;

/// Search bounds for [`minimal_ode`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest ODE order tried.
    pub max_order: usize,
    /// Largest total order of the monomial prolongations `∂x^p ∂y^q ∘ op`.
    pub prolong_depth: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_order: 4, prolong_depth: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OdeOutcome {
    Found(Lode),
    /// No relation among `d^k/dt^k`, `k ≤ max_order`, follows from the prolongations tried.
    NoOdeWithinBounds { max_order: usize, prolong_depth: u32 },
}

impl OdeOutcome {
    pub fn lode(&self) -> Option<&Lode> {
        match self {
            OdeOutcome::Found(l) => Some(l),
            OdeOutcome::NoOdeWithinBounds { .. } => None,
        }
    }
}

type Col = (u32, u32);
type Row = BTreeMap<Col, UniPoly>;

/// Elimination priority: higher total order first, then higher x-order.
fn col_key(c: &Col) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
    (std::cmp::Reverse(c.0 + c.1), std::cmp::Reverse(c.0))
}

fn lcm(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let g = a.gcd(b);
    (a * b).exact_div(&g).expect("gcd divides")
}

/// Clears denominators; returns the polynomial row and the factor it was multiplied by.
fn clear(row: &BTreeMap<Col, RatFunc>) -> (Row, UniPoly) {
    let l = row.values().fold(UniPoly::one(), |l, c| lcm(&l, c.den()));
    let out = row
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (*k, (c.num() * &l).exact_div(c.den()).expect("den divides the lcm")))
        .collect();
    (out, l)
}

/// Divides a row by the gcd of its entries; returns that gcd.
fn make_primitive(row: &mut Row) -> UniPoly {
    let g = row.values().fold(UniPoly::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_constant() {
        return UniPoly::one();
    }
    for c in row.values_mut() {
        *c = c.exact_div(&g).expect("content divides");
    }
    g
}

/// `p·a − q·b` with `(p, q) = (b[col], a[col]) / gcd`, cancelling column `col` of `a`.
/// Returns the factor `a` was multiplied by.
fn cancel(a: &mut Row, b: &Row, col: &Col) -> UniPoly {
    let Some(ac) = a.get(col).cloned() else { return UniPoly::one() };
    let bc = &b[col];
    let g = ac.gcd(bc);
    let p = bc.exact_div(&g).expect("gcd divides");
    let q = ac.exact_div(&g).expect("gcd divides");
    let mut out: Row = a.iter().map(|(k, v)| (*k, v * &p)).collect();
    for (k, v) in b {
        let e = out.entry(*k).or_insert_with(UniPoly::zero);
        *e = &*e - &(v * &q);
    }
    out.retain(|_, v| !v.is_zero());
    debug_assert!(!out.contains_key(col));
    *a = out;
    p
}

/// Fraction-free row echelon form of the specialized generators.
struct Echelon {
    pivots: Vec<(Col, Row)>,
}

impl Echelon {
    fn build(rows: Vec<Row>) -> Echelon {
        let mut rows: Vec<Row> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for r in rows.iter_mut() {
            make_primitive(r);
        }
        let mut cols: Vec<Col> = rows.iter().flat_map(|r| r.keys().copied()).collect::<BTreeSet<_>>().into_iter().collect();
        cols.sort_by_key(col_key);
        let mut pivots = Vec::new();
        for col in cols {
            let best = rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(&col).map(|c| (c.degree().unwrap_or(0), r.len(), i)))
                .min();
            let Some((_, _, i)) = best else { continue };
            let piv = rows.swap_remove(i);
            for r in rows.iter_mut() {
                cancel(r, &piv, &col);
                make_primitive(r);
            }
            rows.retain(|r| !r.is_empty());
            pivots.push((col, piv));
        }
        Echelon { pivots }
    }

    /// Normal form of `v`; returns `(R, m)` with `R ≡ m·v` modulo the row space.
    fn reduce(&self, v: &BTreeMap<Col, RatFunc>) -> (Row, RatFunc) {
        let (mut row, l) = clear(v);
        let mut mult = RatFunc::from_poly(l);
        for (col, piv) in &self.pivots {
            let p = cancel(&mut row, piv, col);
            let g = make_primitive(&mut row);
            mult = RatFunc::new(mult.num() * &p, mult.den() * &g).expect("nonzero");
        }
        (row, mult)
    }
}

/// Right kernel of the matrix with the given columns.
fn nullspace(columns: &[Row]) -> Vec<Vec<RatFunc>> {
    let n = columns.len();
    let keys: BTreeSet<Col> = columns.iter().flat_map(|c| c.keys().copied()).collect();
    let mut m: Vec<Vec<RatFunc>> = keys
        .iter()
        .map(|k| columns.iter().map(|c| c.get(k).map_or_else(RatFunc::zero, |p| RatFunc::from_poly(p.clone()))).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        m[row] = m[row].iter().map(|v| v * &inv).collect();
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pr = m[row].clone();
                m[i] = m[i].iter().zip(&pr).map(|(a, b)| a - &(b * &f)).collect();
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![RatFunc::zero(); n];
            v[free] = RatFunc::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&m[r][free];
            }
            v
        })
        .collect()
}

/// Monomial prolongations `∂x^p ∂y^q ∘ op` with `p + q ≤ depth`.
fn prolongations(ops: &[WeylOp], depth: u32) -> Vec<WeylOp> {
    let mut out = Vec::new();
    for op in ops {
        let mut layer = vec![op.clone()];
        out.push(op.clone());
        for _ in 0..depth {
            // ∂y is applied only to elements not yet hit by ∂x, so each monomial appears once.
            let mut next = vec![layer[0].prolong(Axis::X)];
            next.extend(layer.iter().map(|w| w.prolong(Axis::Y)));
            out.extend(next.iter().cloned());
            layer = next;
        }
    }
    out
}

/// The lowest order ODE in `t` that the specialization `F(x(t), y(t))` satisfies
/// as a consequence of the system and its prolongations within `bounds`.
pub fn minimal_ode(spec: &AppellSpec, curve: &Curve, bounds: SearchBounds) -> Result<OdeOutcome, PdeError> {
    let ops = prolongations(&appell_system(spec), bounds.prolong_depth);
    let rows: Vec<Row> = ops.iter().map(|op| clear(specialize(op, curve).partial_part()).0).collect();
    let ech = Echelon::build(rows);
    let expansions = chain_rule_expansions(curve, bounds.max_order);
    let mut reduced = Vec::new();
    for (k, d) in expansions.iter().enumerate() {
        let (row, mult) = ech.reduce(d);
        if k == 0 && row.is_empty() {
            return Err(PdeError::Degenerate("the system forces the specialization to vanish".into()));
        }
        reduced.push((row, mult));
        if k == 0 {
            continue;
        }
        let cols: Vec<Row> = reduced.iter().map(|(r, _)| r.clone()).collect();
        let kernel = nullspace(&cols);
        match kernel.len() {
            0 => continue,
            1 => {
                let v = &kernel[0];
                if v[k].is_zero() {
                    return Err(PdeError::Degenerate(format!("relation of order {k} has vanishing leading coefficient")));
                }
                // Σ v_j R_j = 0 and R_j ≡ m_j D_j, so the ODE coefficients are v_j m_j.
                let coeffs: Vec<RatFunc> = v.iter().zip(&reduced).map(|(c, (_, m))| c * m).collect();
                let lode = Lode::new(coeffs).map_err(|e| PdeError::Degenerate(e.to_string()))?;
                return Ok(OdeOutcome::Found(lode.monic()));
            }
            n => return Err(PdeError::Degenerate(format!("{n} independent relations of order {k}"))),
        }
    }
    Ok(OdeOutcome::NoOdeWithinBounds { max_order: bounds.max_order, prolong_depth: bounds.prolong_depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::fuchsode::{euler, f2_antidiagonal, kato, lode_equal};

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UniPoly::from_ints(c))
    }

    #[test]
    fn prolongations_are_distinct_monomials() {
        let op = WeylOp::partial(0, 0);
        let ps = prolongations(&[op], 2);
        let mut keys: Vec<_> = ps.iter().map(|w| *w.terms().keys().next().unwrap()).collect();
        keys.sort();
        assert_eq!(keys, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]);
    }

    #[test]
    fn f2_antidiagonal_case() {
        let (a, b1, b2) = (rat(1, 3), rat(2, 5), rat(-1, 7));
        let spec = AppellSpec::f2(a.clone(), b1.clone(), b2.clone(), int(2) * &b1, int(2) * &b2);
        let curve = Curve::new(poly(&[0, 1]), poly(&[2, -1])).unwrap();
        let out = minimal_ode(&spec, &curve, SearchBounds::default()).unwrap();
        assert!(lode_equal(out.lode().unwrap(), &f2_antidiagonal(&a, &b1, &b2)));
    }

    #[test]
    fn f4_on_its_quadratic_locus() {
        let (a, b, c1, c2) = (rat(1, 3), rat(2, 5), rat(3, 7), rat(5, 11));
        let spec = AppellSpec::f4(a.clone(), b.clone(), c1.clone(), c2.clone());
        let curve = Curve::new(poly(&[0, 0, 1]), poly(&[1, -2, 1])).unwrap();
        let out = minimal_ode(&spec, &curve, SearchBounds::default()).unwrap();
        let l = out.lode().unwrap();
        assert_eq!(l.order(), 3);
        assert!(lode_equal(l, &kato(&a, &b, &c1, &c2)));
    }

    #[test]
    fn f4_bailey_family_is_euler() {
        let (a, b, c1) = (rat(1, 3), rat(2, 5), rat(3, 7));
        let c2 = &a + &b - &c1 + int(1);
        let s = rat(2, 9);
        let spec = AppellSpec::f4(a.clone(), b.clone(), c1.clone(), c2);
        let curve = Curve::new(poly(&[0, 1]).scale(&s), poly(&[1, -1]).scale(&(int(1) - &s))).unwrap();
        let out = minimal_ode(&spec, &curve, SearchBounds::default()).unwrap();
        assert!(lode_equal(out.lode().unwrap(), &euler(&a, &b, &c1)));
    }

    #[test]
    fn generic_f2_antidiagonal_has_no_order_two_equation() {
        let spec = AppellSpec::f2(rat(1, 3), rat(2, 5), rat(-1, 7), rat(3, 4), rat(5, 6));
        let curve = Curve::new(poly(&[0, 1]), poly(&[2, -1])).unwrap();
        let bounds = SearchBounds { max_order: 2, prolong_depth: 2 };
        assert_eq!(
            minimal_ode(&spec, &curve, bounds).unwrap(),
            OdeOutcome::NoOdeWithinBounds { max_order: 2, prolong_depth: 2 }
        );
    }
}
