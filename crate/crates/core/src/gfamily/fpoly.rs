use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{poly_roots, theta, Complex64, IntPoly};

/// Tolerance for the `≠` conditions of the G families.
pub const EXCLUSION_TOL: f64 = 1e-9;

/// Parameters `(m, n)` of `G(m,n)` with the derived `g = gcd(m,n)` and `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GParams {
    pub m: i64,
    pub n: i64,
    pub g: i64,
    pub ell: i64,
}

impl GParams {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be nonzero".into()));
        }
        if n <= 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        Ok(GParams {
            m,
            n,
            g: m.gcd(&n),
            ell: ell(m, n),
        })
    }

    pub fn anti_diagonal(&self) -> bool {
        self.m == -self.n
    }
}

/// `max{m, n, n − m}`.
pub fn ell(m: i64, n: i64) -> i64 {
    m.max(n).max(n - m)
}

/// `λ^(n+m) − λ^n − λ^m`, shifted by a power of `λ` to an ordinary
/// polynomial with nonzero constant term.
pub fn f_poly(m: i64, n: i64) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be nonzero".into()));
    }
    let terms = [(n + m, 1), (n, -1), (m, -1)];
    let low = terms.iter().map(|t| t.0).min().expect("three terms");
    let high = terms.iter().map(|t| t.0).max().expect("three terms");
    let mut coeffs = vec![0i64; (high - low + 1) as usize];
    for (e, c) in terms {
        coeffs[(e - low) as usize] += c;
    }
    Ok(IntPoly::from_i64(&coeffs))
}

/// The Laurent value `ϑ_n ϑ_m − 1` at `λ`.
pub fn f_value(m: i64, n: i64, lambda: Complex64) -> Complex64 {
    theta(lambda, n) * theta(lambda, m) - 1.0
}

/// Backward error of `λ` as a root of the normalized `f`.
pub fn f_residual(m: i64, n: i64, lambda: Complex64) -> Result<f64> {
    Ok(f_poly(m, n)?.to_cpoly().relative_residual(lambda))
}

/// Distinct nonzero roots of the normalized `f`, computed numerically.
pub fn f_roots(m: i64, n: i64) -> Result<Vec<Complex64>> {
    let p = f_poly(m, n)?;
    Ok(poly_roots(&p.to_cpoly())?
        .nonzero()
        .map(|r| r.value)
        .collect())
}

/// Shape of a `det_*` fiber over a point `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiberShape {
    /// `{bc = const ≠ 0} ≅ C*`
    Torus,
    /// `{bc = 0}`, two lines crossing
    Node,
}

pub fn fiber_shape(gp: &GParams, lambda: Complex64) -> Result<FiberShape> {
    if theta(lambda, gp.n).norm() <= EXCLUSION_TOL || theta(lambda, gp.m).norm() <= EXCLUSION_TOL {
        return Err(Error::Condition("lambda^n != 1 and lambda^m != 1"));
    }
    Ok(if f_residual(gp.m, gp.n, lambda)? <= 1e-9 {
        FiberShape::Node
    } else {
        FiberShape::Torus
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::r;

    #[test]
    fn f_poly_normalization() {
        assert_eq!(f_poly(1, 1).unwrap(), IntPoly::from_i64(&[-2, 1]));
        assert_eq!(f_poly(1, 2).unwrap(), IntPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(f_poly(-1, 1).unwrap(), IntPoly::from_i64(&[-1, 1, -1]));
        assert_eq!(f_poly(2, 2).unwrap(), IntPoly::from_i64(&[-2, 0, 1]));
        assert!(f_poly(0, 2).is_err());
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell(1, 1), 1);
        assert_eq!(ell(1, 2), 2);
        assert_eq!(ell(-2, 3), 5);
        assert_eq!(f_roots(-2, 3).unwrap().len(), 5);
    }

    #[test]
    fn fiber_shapes() {
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        let gp = GParams::new(1, 2).unwrap();
        assert_eq!(fiber_shape(&gp, r(golden)).unwrap(), FiberShape::Node);
        assert_eq!(fiber_shape(&gp, r(3.0)).unwrap(), FiberShape::Torus);
        let gp = GParams::new(1, 1).unwrap();
        assert_eq!(fiber_shape(&gp, r(2.0)).unwrap(), FiberShape::Node);
        assert!(fiber_shape(&gp, r(1.0)).is_err());
    }
}
