use super::exponents::Point;
use super::{FuchsError, Lode};
use crate::exactnum::{RatFunc, Rational, UniPoly};

/// One factor `(t − point)^exponent` of a projective normalization; a factor at infinity is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaFactor {
    pub point: Point,
    pub exponent: Rational,
}

impl ThetaFactor {
    pub fn new(point: Point, exponent: Rational) -> Self {
        ThetaFactor { point, exponent }
    }

    pub fn at(p: Rational, exponent: Rational) -> Self {
        Self::new(Point::Finite(p), exponent)
    }
}

/// Logarithmic derivative `θ'/θ = Σ e/(t − p)`.
fn log_derivative(theta: &[ThetaFactor]) -> RatFunc {
    let mut g = RatFunc::zero();
    for f in theta {
        if let Point::Finite(p) = &f.point {
            let term = RatFunc::new(UniPoly::constant(f.exponent.clone()), UniPoly::linear_root(p)).expect("nonzero");
            g = &g + &term;
        }
    }
    g
}

/// Solves `Σ_m d_m v_m = 0` with `d_r = 1` for vectors where `v_m[j] = 0` for `j > m` (m < r).
fn triangular_relation(v: &[Vec<RatFunc>]) -> Result<Lode, FuchsError> {
    let r = v.len() - 1;
    let mut d = vec![RatFunc::zero(); r + 1];
    d[r] = RatFunc::one();
    for j in (0..r).rev() {
        let mut acc = v[r][j].clone();
        for m in (j + 1)..r {
            acc = &acc + &(&d[m] * &v[m][j]);
        }
        let diag = &v[j][j];
        d[j] = -&acc.checked_div(diag).map_err(|_| FuchsError::Degenerate("singular triangular system".into()))?;
    }
    Lode::new(d)
}

/// The equation satisfied by `θ(t) · y(φ(t))` for solutions `y` of `l`.
pub fn pullback_transform(l: &Lode, phi: &RatFunc, theta: &[ThetaFactor]) -> Result<Lode, FuchsError> {
    let dphi = phi.derivative();
    if dphi.is_zero() {
        return Err(FuchsError::Degenerate("constant covering map".into()));
    }
    let r = l.order();
    let m = l.monic();
    let pulled: Vec<RatFunc> = (0..r).map(|k| m.coeff(k).compose(phi)).collect::<Result<_, _>>()?;
    let g = log_derivative(theta);
    // Coordinates of θ^{-1} Y^{(k)} in the basis y(φ), y'(φ), …, y^{(r−1)}(φ).
    let mut rows: Vec<Vec<RatFunc>> = Vec::with_capacity(r + 1);
    let mut cur = vec![RatFunc::zero(); r];
    cur[0] = RatFunc::one();
    rows.push(cur.clone());
    for _ in 0..r {
        let mut next = vec![RatFunc::zero(); r];
        for j in 0..r {
            if cur[j].is_zero() {
                continue;
            }
            next[j] = &(&next[j] + &cur[j].derivative()) + &(&g * &cur[j]);
            let carried = &dphi * &cur[j];
            if j + 1 < r {
                next[j + 1] = &next[j + 1] + &carried;
            } else {
                for (k, pk) in pulled.iter().enumerate() {
                    next[k] = &next[k] - &(&carried * pk);
                }
            }
        }
        rows.push(next.clone());
        cur = next;
    }
    triangular_relation(&rows)
}

/// Rewrites the equation in `u = 1/t`, so that infinity becomes the origin.
pub fn change_variable_at_infinity(l: &Lode) -> Result<Lode, FuchsError> {
    let inv = RatFunc::new(UniPoly::one(), UniPoly::x()).expect("nonzero");
    pullback_transform(l, &inv, &[])
}

/// The equation satisfied by `θ(t) · y(t)`.
pub fn projective_transform(l: &Lode, theta: &[ThetaFactor]) -> Result<Lode, FuchsError> {
    pullback_transform(l, &RatFunc::t(), theta)
}

/// Order-3 equation for the products of pairs of solutions of a second order equation.
pub fn symmetric_square(l: &Lode) -> Result<Lode, FuchsError> {
    if l.order() != 2 {
        return Err(FuchsError::WrongOrder { expected: 2, got: l.order() });
    }
    let m = l.monic();
    let (q, p) = (m.coeff(0).clone(), m.coeff(1).clone());
    let two = RatFunc::constant(Rational::from_integer(2.into()));
    // Derivatives of the basis y², y·y', y'² expressed in the same basis.
    let du = [
        [RatFunc::zero(), two.clone(), RatFunc::zero()],
        [-&q, -&p, RatFunc::one()],
        [RatFunc::zero(), -&(&two * &q), -&(&two * &p)],
    ];
    let mut rows = vec![vec![RatFunc::one(), RatFunc::zero(), RatFunc::zero()]];
    for _ in 0..3 {
        let cur = rows.last().expect("nonempty").clone();
        let mut next: Vec<RatFunc> = cur.iter().map(|c| c.derivative()).collect();
        for (i, ci) in cur.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, dj) in du[i].iter().enumerate() {
                next[j] = &next[j] + &(ci * dj);
            }
        }
        rows.push(next);
    }
    triangular_relation(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::fuchsode::{euler, lode_equal};

    #[test]
    fn identity_pullback_is_trivial() {
        let l = euler(&rat(1, 3), &rat(2, 7), &rat(5, 4));
        assert!(lode_equal(&pullback_transform(&l, &RatFunc::t(), &[]).unwrap(), &l));
    }

    #[test]
    fn constant_covering_is_rejected() {
        let l = euler(&rat(1, 3), &rat(2, 7), &rat(5, 4));
        assert!(matches!(
            pullback_transform(&l, &RatFunc::constant(int(2)), &[]),
            Err(FuchsError::Degenerate(_))
        ));
    }

    #[test]
    fn infinity_change_is_an_involution() {
        let l = euler(&rat(1, 3), &rat(2, 7), &rat(5, 4));
        let twice = change_variable_at_infinity(&change_variable_at_infinity(&l).unwrap()).unwrap();
        assert!(lode_equal(&twice, &l));
    }

    #[test]
    fn symmetric_square_of_trivial_equation() {
        let l = Lode::new(vec![RatFunc::zero(), RatFunc::zero(), RatFunc::one()]).unwrap();
        let s = symmetric_square(&l).unwrap();
        let want = Lode::new(vec![RatFunc::zero(), RatFunc::zero(), RatFunc::zero(), RatFunc::one()]).unwrap();
        assert_eq!(s, want);
        assert!(matches!(symmetric_square(&s), Err(FuchsError::WrongOrder { expected: 2, got: 3 })));
    }
}
