//! Time-domain and spectral granules and the Zassenhaus map between them.

use super::GroupSystem;
use crate::error::{Error, Result};
use crate::group::{product_of_subgroups, quotient_within, zassenhaus_hom, QuotientPresentation, ZassenhausMap};

fn require_start(sys: &GroupSystem, i: i64, m: i64) -> Result<()> {
    let (t0, t1) = sys.window();
    let end = i + m.max(0);
    if i < t0 || end > t1 {
        return Err(Error::OutOfWindow(format!("granule at ({m},{i}) on window [{t0},{t1}]")));
    }
    Ok(())
}

/// The time-domain granule `X^{i+1}(X^i∩Y^{i+m}) / X^{i+1}(X^i∩Y^{i+m-1})`.
///
/// Any `m` is accepted as long as `i` and `i + m` (for `m >= 0`) lie in the
/// window. The quotient is trivial for `m < 0` and for `m` above the
/// controllability index.
pub fn time_granule(sys: &GroupSystem, i: i64, m: i64) -> Result<QuotientPresentation> {
    require_start(sys, i, m)?;
    let x_next = sys.x_set(i + 1);
    let x_here = sys.x_set(i);
    let numerator = product_of_subgroups(sys, &x_next, &x_here.intersect(&sys.y_set(i + m)))?;
    let denominator = product_of_subgroups(sys, &x_next, &x_here.intersect(&sys.y_set(i + m - 1)))?;
    quotient_within(sys, &numerator, &denominator)
}

/// The spectral granule `A^{[i,i+m]} / (A^{[i,i+m-1]} A^{[i+1,i+m]})`.
pub fn spectral_granule(sys: &GroupSystem, i: i64, m: i64) -> Result<QuotientPresentation> {
    require_start(sys, i, m)?;
    let numerator = sys.span_subgroup(i, i + m);
    let denominator = product_of_subgroups(sys, &sys.span_subgroup(i, i + m - 1), &sys.span_subgroup(i + 1, i + m))?;
    quotient_within(sys, &numerator, &denominator)
}

/// The Zassenhaus map from the time-domain granule onto the spectral granule.
///
/// Uses `U = X^{i+1}`, `U* = X^i`, `V = Y^{i+m-1}` and `V* = Y^{i+m}`. The
/// returned map is verified to be a well defined homomorphism whose induced
/// map on the quotients is an isomorphism.
pub fn zassenhaus_map(sys: &GroupSystem, i: i64, m: i64) -> Result<ZassenhausMap> {
    require_start(sys, i, m)?;
    zassenhaus_hom(sys, &sys.x_set(i + 1), &sys.x_set(i), &sys.y_set(i + m - 1), &sys.y_set(i + m))
}
