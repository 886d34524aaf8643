//! Scalars, 2×2 matrices, polynomials, root finding and small-matrix rank.

mod cpoly;
mod intpoly;
mod mat2;
mod rank;
mod roots;

use std::f64::consts::PI;

pub use num_complex::Complex64;

pub use cpoly::CPoly;
pub use intpoly::{int_poly_squarefree, IntPoly};
pub use mat2::{bracket, Mat2, RingElem};
pub use rank::{mat_rank, Mat2xN, RANK_RATIO, ZERO_RATIO};
pub use roots::{poly_roots, poly_roots_with, Root, RootSet, ABERTH_STEP_REL, ROOT_CLUSTER_REL};

use crate::error::{Error, Result};

/// Shorthand for a complex number.
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Shorthand for a real complex number.
pub fn r(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The `k`-th roots of unity other than 1, `exp(2πij/k)` for `1 ≤ j < k`.
pub fn roots_of_unity(k: usize) -> Result<Vec<Complex64>> {
    if k == 0 {
        return Err(Error::InvalidArgument("roots_of_unity needs k >= 1".into()));
    }
    Ok((1..k)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / k as f64))
        .collect())
}

/// `λ^k − 1`.
pub fn theta(lambda: Complex64, k: i64) -> Complex64 {
    lambda.powi(k as i32) - 1.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_small() {
        assert!(roots_of_unity(1).unwrap().is_empty());
        let two = roots_of_unity(2).unwrap();
        assert!((two[0] - r(-1.0)).norm() < 1e-15);
        let four = roots_of_unity(4).unwrap();
        for (z, w) in four.iter().zip([c(0., 1.), r(-1.), c(0., -1.)]) {
            assert!((z - w).norm() < 1e-15);
        }
        assert!(roots_of_unity(0).is_err());
    }
}
