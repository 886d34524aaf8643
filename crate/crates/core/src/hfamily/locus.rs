use rand::Rng;
use serde::Serialize;

use super::gamma::{gamma, gamma_poly};
use crate::error::{Error, Result};
use crate::numerics::{poly_roots, roots_of_unity, theta, CPoly, Complex64};
use crate::sampling::annulus_avoiding;

/// Tolerance for the open conditions of the H family.
pub const H_EXCLUSION_TOL: f64 = 1e-6;

/// `h_λ(r) = γ_{m+1}(r) + γ_m(r) + ϑ_{2n+1} ϑ_{n+1}⁻¹ ϑ_n⁻¹`, monic of degree `m`.
pub fn h_lambda_poly(m: i64, n: i64, lambda: Complex64) -> Result<CPoly> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let (tn, tn1) = (theta(lambda, n), theta(lambda, n + 1));
    if tn.norm() <= 1e-12 || tn1.norm() <= 1e-12 {
        return Err(Error::Condition("theta_n theta_(n+1) != 0"));
    }
    let shift = CPoly::constant(theta(lambda, 2 * n + 1) / (tn1 * tn));
    Ok(&(&gamma_poly(m as usize + 1) + &gamma_poly(m as usize)) + &shift)
}

/// `δ_r = (2 − r)/(1 + γ_m − γ_{m+1})`, extended continuously to `r = 2`
/// by `2/((m+1)m)`.
///
/// Near `r = 2` both numerator and denominator vanish; there the equal
/// quotient `(1 + γ_{m+1} − γ_m)/(γ_{m+1} γ_m)` is used instead.
pub fn delta_r(m: i64, r: Complex64) -> Result<Complex64> {
    if (r - 2.0).norm() <= 1e-14 {
        return Ok(Complex64::new(2.0 / ((m + 1) * m) as f64, 0.0));
    }
    let (gm, gm1) = (gamma(m, r)?, gamma(m + 1, r)?);
    let omega = 1.0 + gm - gm1;
    let prod = gm1 * gm;
    if omega.norm() >= prod.norm() {
        Ok((2.0 - r) / omega)
    } else {
        Ok((1.0 + gm1 - gm) / prod)
    }
}

/// Distance of `(γ_{m+1}, γ_m)` from the excluded pairs `(1, 0)` and `(0, −1)`.
pub fn excluded_pair_distance(m: i64, r: Complex64) -> Result<f64> {
    let (gm, gm1) = (gamma(m, r)?, gamma(m + 1, r)?);
    let d1 = (gm1 - 1.0).norm().max(gm.norm());
    let d2 = gm1.norm().max((gm + 1.0).norm());
    Ok(d1.min(d2))
}

/// `|δ_r γ_m + ϑ_{n+1} + ϑ_n|`.
pub fn exception_margin(m: i64, n: i64, lambda: Complex64, r: Complex64) -> Result<f64> {
    Ok((delta_r(m, r)? * gamma(m, r)? + theta(lambda, n + 1) + theta(lambda, n)).norm())
}

/// Roots of `h_λ` that carry a jump-locus point: `(γ_{m+1}, γ_m)` away from
/// `(1, 0)` and `(0, −1)`, and `δ_r γ_m + ϑ_{n+1} + ϑ_n ≠ 0`.
pub fn admissible_roots(m: i64, n: i64, lambda: Complex64) -> Result<Vec<Complex64>> {
    let h = h_lambda_poly(m, n, lambda)?;
    let mut out = Vec::new();
    for root in poly_roots(&h)?.roots {
        let r = root.value;
        if excluded_pair_distance(m, r)? > H_EXCLUSION_TOL
            && exception_margin(m, n, lambda, r)? > H_EXCLUSION_TOL
        {
            out.push(r);
        }
    }
    Ok(out)
}

/// Which of the three descriptions of `R` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParityClass {
    MEquals1,
    MEven,
    MOddGe3,
}

impl ParityClass {
    pub fn of(m: i64) -> Self {
        if m == 1 {
            ParityClass::MEquals1
        } else if m % 2 == 0 {
            ParityClass::MEven
        } else {
            ParityClass::MOddGe3
        }
    }
}

/// Polynomials whose roots are removed from `C*` to form `R`.
fn puncture_factors(m: i64, n: i64) -> Vec<CPoly> {
    let binom = |k: i64, c0: f64, c1: f64| {
        let mut c = vec![0.0; k as usize + 1];
        c[0] = c0;
        c[k as usize] += c1;
        c
    };
    let mut factors = vec![
        CPoly::from_real(&binom(n, -1.0, 1.0)),
        CPoly::from_real(&binom(n + 1, -1.0, 1.0)),
    ];
    let extra = match ParityClass::of(m) {
        ParityClass::MEquals1 => Some(-1.0),
        ParityClass::MEven => Some(-2.0),
        ParityClass::MOddGe3 => None,
    };
    if let Some(c0) = extra {
        let mut c = binom(n + 1, c0, 1.0);
        c[n as usize] += 1.0;
        factors.push(CPoly::from_real(&c));
    }
    factors
}

/// `λ ∈ R`: `(λ^n − 1)(λ^(n+1) − 1)` times the parity-dependent extra factor
/// is nonzero, each factor by more than the exclusion tolerance.
pub fn r_membership(m: i64, n: i64, lambda: Complex64) -> bool {
    lambda.norm() > 0.0
        && puncture_factors(m, n)
            .iter()
            .all(|f| f.eval(lambda).norm() > H_EXCLUSION_TOL)
}

/// The distinct points of `C* \ R`.
pub fn puncture_points(m: i64, n: i64) -> Result<Vec<Complex64>> {
    let mut points: Vec<Complex64> = Vec::new();
    for f in puncture_factors(m, n) {
        for root in poly_roots(&f)?.roots {
            let v = root.value;
            if v.norm() > 0.0
                && points
                    .iter()
                    .all(|p| (p - v).norm() > 1e-7 * v.norm().max(1.0))
            {
                points.push(v);
            }
        }
    }
    Ok(points)
}

pub fn puncture_count(m: i64, n: i64) -> Result<usize> {
    Ok(puncture_points(m, n)?.len())
}

/// A random `λ ∈ R` in the annulus `0.5 ≤ |λ| ≤ 2`, `1e-3` away from the punctures.
pub fn sample_r_lambda(m: i64, n: i64, rng: &mut impl Rng) -> Result<Complex64> {
    let avoid = puncture_points(m, n)?;
    annulus_avoiding(rng, &avoid, 1e-3).ok_or(Error::SamplingExhausted(1000))
}

/// One `λ` at which `h_λ` has a repeated root.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DoubleRoot {
    pub lambda: Complex64,
    pub r: Complex64,
    /// `|m γ_{m+1} − (m+1) γ_m|` at the double root
    pub condition: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DoubleRootReport {
    pub checked: usize,
    pub double_roots: Vec<DoubleRoot>,
    pub violations: Vec<String>,
}

impl DoubleRootReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Roots of `h_λ` over a grid of `λ`: never triple; a double root `r`
/// satisfies `m γ_{m+1} = (m+1) γ_m`, `r ≠ ±2` and `γ_{m+1} γ_m ≠ 0`.
pub fn double_root_check(m: i64, n: i64, lambdas: &[Complex64]) -> Result<DoubleRootReport> {
    let mut report = DoubleRootReport::default();
    for &lambda in lambdas {
        let h = h_lambda_poly(m, n, lambda)?;
        if h.degree() < 2 {
            report.checked += 1;
            continue;
        }
        for root in poly_roots(&h)?.roots {
            let r = root.value;
            match root.multiplicity {
                1 => {}
                2 => {
                    let (gm, gm1) = (gamma(m, r)?, gamma(m + 1, r)?);
                    let condition = (gm1 * m as f64 - gm * (m + 1) as f64).norm();
                    if condition > H_EXCLUSION_TOL
                        || (r - 2.0).norm() <= H_EXCLUSION_TOL
                        || (r + 2.0).norm() <= H_EXCLUSION_TOL
                        || (gm1 * gm).norm() <= H_EXCLUSION_TOL
                    {
                        report.violations.push(format!(
                            "double root r = {r} at lambda = {lambda} violates the double-root conditions"
                        ));
                    }
                    report.double_roots.push(DoubleRoot {
                        lambda,
                        r,
                        condition,
                    });
                }
                k => report.violations.push(format!(
                    "root r = {r} of multiplicity {k} at lambda = {lambda}"
                )),
            }
        }
        report.checked += 1;
    }
    Ok(report)
}

/// The `λ` (for `m = 2`) at which `h_λ = (r + 1/2)²`: roots of
/// `ϑ_{2n+1} = (5/4) ϑ_{n+1} ϑ_n` that lie off the unit-root punctures.
pub fn m2_double_root_lambdas(n: i64) -> Result<Vec<Complex64>> {
    // 4(λ^(2n+1) − 1) − 5(λ^(n+1) − 1)(λ^n − 1)
    let k = (2 * n + 1) as usize;
    let mut c = vec![0.0; k + 1];
    c[k] += 4.0 - 5.0;
    c[0] += -4.0 - 5.0;
    c[n as usize + 1] += 5.0;
    c[n as usize] += 5.0;
    let p = CPoly::from_real(&c);
    let bad: Vec<Complex64> = [n, n + 1]
        .iter()
        .flat_map(|&k| roots_of_unity(k as usize).unwrap_or_default())
        .chain([Complex64::new(1.0, 0.0)])
        .collect();
    Ok(poly_roots(&p)?
        .roots
        .into_iter()
        .map(|r| r.value)
        .filter(|v| bad.iter().all(|b| (v - b).norm() > 1e-6))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::r;

    #[test]
    fn h_poly_low_degree() {
        let l = r(3.0);
        let h = h_lambda_poly(1, 1, l).unwrap();
        assert_eq!(h.degree(), 1);
        let expect = -1.0 - 26.0 / 16.0;
        assert!((h.eval(r(expect))).norm() < 1e-14);
        let h2 = h_lambda_poly(2, 2, l).unwrap();
        let shift = theta(l, 5) / (theta(l, 3) * theta(l, 2));
        let x = r(0.7);
        assert!((h2.eval(x) - (x * x + x - 1.0 + shift)).norm() < 1e-12);
        for m in 1..6 {
            assert_eq!(h_lambda_poly(m, 2, l).unwrap().leading(), r(1.0));
        }
        assert!(h_lambda_poly(1, 1, r(1.0)).is_err());
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_r(1, r(2.0)).unwrap(), r(1.0));
        assert!((delta_r(2, r(0.0)).unwrap() - r(1.0)).norm() < 1e-15);
        for m in 1..6 {
            let at2 = delta_r(m, r(2.0)).unwrap();
            for eps in [1e-6, -1e-6] {
                assert!((delta_r(m, r(2.0 + eps)).unwrap() - at2).norm() < 1e-5);
            }
        }
    }

    #[test]
    fn punctures() {
        assert_eq!(puncture_count(3, 1).unwrap(), 2);
        assert_eq!(puncture_count(1, 1).unwrap(), 4);
        assert_eq!(puncture_count(2, 1).unwrap(), 3);
        assert_eq!(puncture_count(1, 2).unwrap(), 7);
        assert_eq!(puncture_count(3, 2).unwrap(), 4);
        assert!(!r_membership(2, 1, r(-2.0)));
        assert!(r_membership(2, 1, r(3.0)));
    }

    #[test]
    fn admissible_exceptions() {
        // m = 1 with λ^(n+1) + λ^n = 1: the only root is excluded
        let golden_inv = r((5f64.sqrt() - 1.0) / 2.0);
        assert!(admissible_roots(1, 1, golden_inv).unwrap().is_empty());
        // m = 2 with λ^(n+1) + λ^n = 2 at n = 1: λ = −2
        assert!(admissible_roots(2, 1, r(-2.0)).unwrap().len() < 2);
        assert_eq!(admissible_roots(2, 1, r(1.5)).unwrap().len(), 2);
    }

    #[test]
    fn forced_double_root() {
        for lambda in m2_double_root_lambdas(2).unwrap() {
            let report = double_root_check(2, 2, &[lambda]).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.double_roots.len(), 1);
            assert!((report.double_roots[0].r - r(-0.5)).norm() < 1e-6);
        }
    }
}
