use super::{FuchsError, Lode};
use crate::exactnum::{format_rational, Axis, GenSeries, RatFunc, Rational};

/// Residual `L[S]` of the denominator-cleared equation applied to a series in the x axis.
///
/// Clearing denominators multiplies the residual by a polynomial, which does not
/// change whether it vanishes.
pub fn lode_apply(l: &Lode, s: &GenSeries) -> Result<GenSeries, FuchsError> {
    let order = s.body().order() + 1;
    let mut deriv = s.clone();
    let mut acc: Option<GenSeries> = None;
    for p in l.polynomial_coeffs() {
        if !p.is_zero() {
            let c = GenSeries::from_ratfunc_x(&RatFunc::from_poly(p), order);
            let term = &c * &deriv;
            acc = Some(match acc {
                None => term,
                Some(a) => a.checked_add(&term)?,
            });
        }
        deriv = deriv.partial(Axis::X);
    }
    Ok(acc.expect("leading coefficient is nonzero"))
}

/// Whether `L[S]` vanishes through absolute degree `n`; errors when `S` is not known far enough.
pub fn annihilates(l: &Lode, s: &GenSeries, n: i64) -> Result<bool, FuchsError> {
    let res = lode_apply(l, s)?;
    let target = Rational::from_integer(n.into());
    if res.absolute_order() < target {
        return Err(FuchsError::InsufficientOrder { have: format_rational(&res.absolute_order()), need: n });
    }
    Ok(res.truncate_absolute(&target).is_zero())
}
