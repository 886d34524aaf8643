use serde::Serialize;

use super::fpoly::{f_poly, f_roots, GParams};
use crate::error::{Error, Result};
use crate::numerics::int_poly_squarefree;

/// Invariants of `G(m,n)` that determine `(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfileG {
    pub anti_diagonal: bool,
    pub g: i64,
    pub sum_abs: i64,
    pub ell: i64,
    pub count_c_cstar: i64,
    pub two_dim_fiber_components: i64,
}

/// Profile of `G(m,n)`, with `ℓ` cross-checked against an exact
/// squarefreeness test and the numerical root count of `f`.
pub fn invariant_profile_g(m: i64, n: i64) -> Result<InvariantProfileG> {
    let gp = GParams::new(m, n)?;
    let f = f_poly(m, n)?;
    if !int_poly_squarefree(&f)? {
        return Err(Error::Condition("f has no multiple root"));
    }
    let roots = f_roots(m, n)?.len() as i64;
    if roots != gp.ell {
        return Err(Error::Condition("number of distinct roots of f equals ell"));
    }
    let anti = gp.anti_diagonal();
    Ok(InvariantProfileG {
        anti_diagonal: anti,
        g: gp.g,
        sum_abs: n + m.abs(),
        ell: gp.ell,
        count_c_cstar: if anti { 0 } else { (n - gp.g) * gp.ell },
        two_dim_fiber_components: if anti { n - 1 } else { 0 },
    })
}
