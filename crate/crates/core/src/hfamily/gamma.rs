use crate::error::{Error, Result};
use crate::numerics::{CPoly, Complex64, Mat2};

/// Largest `|k|` for which `γ_k` is evaluated.
pub const GAMMA_MAX_INDEX: i64 = 200;

/// `γ_k(r)`: `γ₀ = 0`, `γ₁ = 1`, `γ_{k+1} = r γ_k − γ_{k−1}`, so that
/// `x^k = γ_k x − γ_{k−1}` for every `x` with `det x = 1`, `tr x = r`.
pub fn gamma(k: i64, r: Complex64) -> Result<Complex64> {
    if k.abs() > GAMMA_MAX_INDEX {
        return Err(Error::StabilityBound(k.abs()));
    }
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    if k == 0 {
        return Ok(prev);
    }
    for _ in 1..k.abs() {
        (prev, cur) = (cur, r * cur - prev);
    }
    Ok(if k > 0 { cur } else { -cur })
}

/// `γ_k(r)` for `k` in a contiguous range.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaSeq {
    pub r: Complex64,
    lo: i64,
    values: Vec<Complex64>,
}

impl GammaSeq {
    pub fn new(r: Complex64, lo: i64, hi: i64) -> Result<Self> {
        if lo.abs().max(hi.abs()) > GAMMA_MAX_INDEX || lo > hi {
            return Err(Error::StabilityBound(lo.abs().max(hi.abs())));
        }
        let values = (lo..=hi).map(|k| gamma(k, r)).collect::<Result<_>>()?;
        Ok(GammaSeq { r, lo, values })
    }

    /// Panics outside the cached range.
    pub fn get(&self, k: i64) -> Complex64 {
        self.values[(k - self.lo) as usize]
    }
}

/// `γ_k` as a polynomial in `r` (`k ≥ 0`).
pub fn gamma_poly(k: usize) -> CPoly {
    let mut prev = CPoly::new(vec![]);
    let mut cur = CPoly::from_real(&[1.0]);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&CPoly::x() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn rel(lhs: Complex64, rhs: Complex64, scale: f64) -> f64 {
    (lhs - rhs).norm() / scale.max(1.0)
}

/// Largest relative residual, over `|k| ≤ k_max`, of the recursion, the
/// three quadratic identities and `(2−r)γ_{k+1}γ_k = (1+γ_k−γ_{k+1})(1+γ_{k+1}−γ_k)`.
pub fn gamma_identities_check(r: Complex64, k_max: i64) -> Result<f64> {
    if k_max > 60 {
        return Err(Error::InvalidArgument("k_max must be at most 60".into()));
    }
    let s = GammaSeq::new(r, -k_max - 1, k_max + 2)?;
    let one = Complex64::new(1.0, 0.0);
    let mut worst: f64 = 0.0;
    for k in -k_max..=k_max {
        let (gm1, g0, g1, g2) = (s.get(k - 1), s.get(k), s.get(k + 1), s.get(k + 2));
        let rn = r.norm();
        let checks = [
            rel(
                g1 - r * g0 + gm1,
                Complex64::default(),
                g1.norm() + rn * g0.norm() + gm1.norm(),
            ),
            rel(
                g1 * g1 + g0 * g0 - r * g1 * g0,
                one,
                g1.norm_sqr() + g0.norm_sqr() + rn * (g1 * g0).norm(),
            ),
            rel(g0 * g0 - g1 * gm1, one, g0.norm_sqr() + (g1 * gm1).norm()),
            rel(g1 * g0 - g2 * gm1, r, (g1 * g0).norm() + (g2 * gm1).norm()),
            rel(
                (2.0 - r) * g1 * g0,
                (one + g0 - g1) * (one + g1 - g0),
                (2.0 + rn) * (g1 * g0).norm() + (1.0 + g0.norm() + g1.norm()).powi(2),
            ),
        ];
        worst = checks.iter().copied().fold(worst, f64::max);
    }
    Ok(worst)
}

/// Relative error of `x^k = γ_k x − γ_{k−1}` for `det x = 1`.
pub fn power_identity_residual(x: &Mat2, k: i64) -> Result<f64> {
    if (x.det() - 1.0).norm() > 1e-12 * x.frobenius().powi(2).max(1.0) {
        return Err(Error::Condition("det x = 1"));
    }
    let r = x.trace();
    let lhs = x.pow(k)?;
    let rhs = *x * gamma(k, r)? - Mat2::scalar(gamma(k - 1, r)?);
    Ok((lhs - rhs).frobenius() / lhs.frobenius().max(1.0))
}
