use rand::Rng;
use serde::Serialize;

use super::gamma::gamma;
use super::locus::{
    admissible_roots, delta_r, exception_margin, excluded_pair_distance, h_lambda_poly,
    sample_r_lambda, H_EXCLUSION_TOL,
};
use crate::error::{Error, Result};
use crate::fox::{
    d1_dim, default_fingerprint, fingerprint_distance, is_irreducible, FamilyTag, Presentation,
    RepPoint,
};
use crate::numerics::{bracket, poly_roots, theta, CPoly, Complex64, Mat2};
use crate::sampling::unit_square;
use crate::RESIDUAL_TOL;

/// Parameters of `σ_{λ,r,a₁}` on `H(m,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SigmaParams {
    pub m: i64,
    pub n: i64,
    pub lambda: Complex64,
    pub r: Complex64,
    pub a1: Complex64,
}

impl SigmaParams {
    /// Checks every defining condition, naming the first one that fails.
    pub fn validate(&self) -> Result<()> {
        let (m, n, l, r) = (self.m, self.n, self.lambda, self.r);
        if m < 1 || n < 1 {
            return Err(Error::InvalidArgument("m and n must be positive".into()));
        }
        if self.a1.norm() <= 1e-12 {
            return Err(Error::Condition("a1 != 0"));
        }
        if theta(l, n).norm() <= H_EXCLUSION_TOL || theta(l, n + 1).norm() <= H_EXCLUSION_TOL {
            return Err(Error::Condition("theta_n theta_(n+1) != 0"));
        }
        let h = h_lambda_poly(m, n, l)?;
        if h.relative_residual(r) > RESIDUAL_TOL {
            return Err(Error::Condition("h_lambda(r) = 0"));
        }
        if excluded_pair_distance(m, r)? <= H_EXCLUSION_TOL {
            return Err(Error::Condition(
                "(gamma_(m+1), gamma_m) not in {(1,0), (0,-1)}",
            ));
        }
        if exception_margin(m, n, l, r)? <= H_EXCLUSION_TOL {
            return Err(Error::Condition(
                "delta_r gamma_m + theta_(n+1) + theta_n != 0",
            ));
        }
        Ok(())
    }
}

/// Checks attached to a constructed point of `H(m,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HVerificationReport {
    /// `‖ρ(z^{−n−1}x^{−m}z^n x^{m+1}) − ρ(u^{−1}z^{−1}u)‖_F` divided by the
    /// largest product of syllable norms
    pub residual: f64,
    /// The same residual, unscaled.
    pub residual_abs: f64,
    pub d1: usize,
    pub irreducible: bool,
    /// `|λ^{−1}(a−1) + (d−1) − λ^{−n−1}ϑ_{n+1}ϑ_n γ_{m+1}γ_m bc|` for `x = [[a,b],[c,d]]`
    pub trace_check: f64,
    /// `‖(c′,d′)h − (0,−1)‖` with `(c′,d′)` the second row of `u`
    pub h1_check: f64,
    /// `|det h|` for `h = z^{−n−1}x^{−m}[n]_z + [−n−1]_z`
    pub det_h_margin: f64,
    pub det_star: (Complex64, Complex64),
}

impl HVerificationReport {
    pub fn accepted(&self) -> bool {
        self.residual <= RESIDUAL_TOL
            && self.d1 == 3
            && self.irreducible
            && self.trace_check <= RESIDUAL_TOL
            && self.h1_check <= RESIDUAL_TOL
            && self.det_h_margin > H_EXCLUSION_TOL
    }
}

/// `(λ, (1−λ)a₁/(2n+1))`, the image of `σ_{λ,r,a₁}` under `(det z, det u)`.
pub fn det_star_sigma(p: &SigmaParams) -> (Complex64, Complex64) {
    (p.lambda, (1.0 - p.lambda) * p.a1 / (2 * p.n + 1) as f64)
}

/// The left side `z^{−n−1} x^{−m} z^n x^{m+1}` of the `H` relation.
pub(crate) fn h_relation_lhs(m: i64, n: i64, x: &Mat2, z: &Mat2) -> Result<Mat2> {
    Ok(z.pow(-n - 1)? * x.pow(-m)? * z.pow(n)? * x.pow(m + 1)?)
}

/// `σ_{λ,r,a₁}` as images of `(x, u, z)` with `z = diag(λ, 1)`, and its report.
pub fn build_sigma(p: &SigmaParams) -> Result<(RepPoint, HVerificationReport)> {
    p.validate()?;
    let (m, n, l, a1) = (p.m, p.n, p.lambda, p.a1);
    let delta = delta_r(m, p.r)?;
    let (gm, gm1) = (gamma(m, p.r)?, gamma(m + 1, p.r)?);
    let (tn, tn1) = (theta(l, n), theta(l, n + 1));
    let ln = l.powi(n as i32);
    let one = Complex64::new(1.0, 0.0);
    let x = Mat2::new(
        one + delta * (tn.inv() + gm1),
        one,
        delta * (delta * (gm + l.powi(2 * n as i32 + 1) / (tn1 * tn)) - 2.0),
        one - delta * (ln / tn + gm),
    );
    let k = (2 * n + 1) as f64;
    let u = Mat2::new(
        a1 * (one - l + l * delta * (ln * gm1 - gm) / tn1),
        a1 * (gm / ln - gm1),
        -l * ln * delta / (tn1 * k),
        Complex64::new(1.0 / k, 0.0),
    );
    let z = Mat2::diag(l, one);
    let rep = RepPoint::new(vec![x, u, z], FamilyTag::SigmaH)?
        .with_param("lambda", l)
        .with_param("r", p.r)
        .with_param("a1", a1);
    let report = verify_h_point(m, n, &rep)?;
    Ok((rep, report))
}

/// Evaluates the checks of [`HVerificationReport`] at a point with
/// `z = diag(λ, 1)`.
pub fn verify_h_point(m: i64, n: i64, rep: &RepPoint) -> Result<HVerificationReport> {
    let (x, u, z) = (rep.image(0), rep.image(1), rep.image(2));
    let l = z.at(0, 0);
    let pres = Presentation::h_family(m, n);
    let residual = rep.relation_residual_scaled(&pres);
    let residual_abs = rep.relation_residual(&pres);
    let d1 = if is_irreducible(rep) {
        d1_dim(&pres, rep)?
    } else {
        0
    };

    let r = x.trace();
    let (gm, gm1) = (gamma(m, r)?, gamma(m + 1, r)?);
    let (a, b, c, d) = (x.at(0, 0), x.at(0, 1), x.at(1, 0), x.at(1, 1));
    let lhs = (a - 1.0) / l + (d - 1.0);
    let rhs = l.powi(-(n as i32) - 1) * theta(l, n + 1) * theta(l, n) * gm1 * gm * b * c;
    let trace_check = (lhs - rhs).norm();

    let h = z.pow(-n - 1)? * x.pow(-m)? * bracket(n, z)? + bracket(-n - 1, z)?;
    let row = u.row(1);
    let got = Mat2::vec_mul(row, &h);
    let h1_check = ((got[0]).norm_sqr() + (got[1] + 1.0).norm_sqr()).sqrt();

    Ok(HVerificationReport {
        residual,
        residual_abs,
        d1,
        irreducible: is_irreducible(rep),
        trace_check,
        h1_check,
        det_h_margin: h.det().norm(),
        det_star: (z.det(), u.det()),
    })
}

/// A random `σ` point over a random `λ ∈ R`, at a random admissible root.
pub fn sample_sigma(m: i64, n: i64, rng: &mut impl Rng) -> Result<(RepPoint, HVerificationReport)> {
    for _ in 0..crate::gfamily::SAMPLE_ATTEMPTS {
        let lambda = sample_r_lambda(m, n, rng)?;
        let roots = admissible_roots(m, n, lambda)?;
        if roots.is_empty() {
            continue;
        }
        let r = roots[rng.gen_range(0..roots.len())];
        let a1 = loop {
            let a = unit_square(rng);
            if a.norm() > 0.1 {
                break a;
            }
        };
        return build_sigma(&SigmaParams {
            m,
            n,
            lambda,
            r,
            a1,
        });
    }
    Err(Error::SamplingExhausted(crate::gfamily::SAMPLE_ATTEMPTS))
}

/// The `λ` at which `r = 2` solves `h_λ`: roots of
/// `(2m+2)λ^{2n+1} − (2m+1)λ^{n+1} − (2m+1)λ^n + 2m`, excluding `λ^n = 1`
/// and `λ^{n+1} = 1`.
pub fn r2_lambdas(m: i64, n: i64) -> Result<Vec<Complex64>> {
    let k = (2 * n + 1) as usize;
    let mut c = vec![0.0; k + 1];
    c[k] = (2 * m + 2) as f64;
    c[n as usize + 1] -= (2 * m + 1) as f64;
    c[n as usize] -= (2 * m + 1) as f64;
    c[0] += (2 * m) as f64;
    Ok(poly_roots(&CPoly::from_real(&c))?
        .roots
        .into_iter()
        .map(|r| r.value)
        .filter(|&l| theta(l, n).norm() > 1e-6 && theta(l, n + 1).norm() > 1e-6)
        .collect())
}

/// The point over `r = 2` built directly from the parabolic normal form of `x`:
/// `x = [[1+s, 1], [−s², 1−s]]` with `s = (ϑ_{n+1} − ϑ_n)/(ϑ_{n+1}ϑ_n(m+1)m)`,
/// and the rows of `u` taken as eigenrows of the relation's left side, the
/// second normalized by `(c′,d′)h = (·, −1)` and the first by `det u`.
pub fn build_r2_independent(m: i64, n: i64, lambda: Complex64, a1: Complex64) -> Result<RepPoint> {
    let (tn, tn1) = (theta(lambda, n), theta(lambda, n + 1));
    let s = (tn1 - tn) / (tn1 * tn * ((m + 1) * m) as f64);
    let one = Complex64::new(1.0, 0.0);
    let x = Mat2::new(one + s, one, -s * s, one - s);
    let z = Mat2::diag(lambda, one);
    let v = h_relation_lhs(m, n, &x, &z)?;
    let (cp, dp) = (v.at(1, 0), one - v.at(0, 0));
    let h = z.pow(-n - 1)? * x.pow(-m)? * bracket(n, z)? + bracket(-n - 1, z)?;
    let norm = -Mat2::vec_mul([cp, dp], &h)[1];
    if norm.norm() <= 1e-12 {
        return Err(Error::SingularMatrix("second row normalization"));
    }
    let row2 = [cp / norm, dp / norm];
    let row1 = (v - Mat2::scalar(lambda.inv()))
        .left_kernel()
        .ok_or(Error::SingularMatrix("v - 1/lambda"))?;
    let raw = Mat2::from_rows(row1, row2).det();
    if raw.norm() <= 1e-12 {
        return Err(Error::SingularMatrix("u"));
    }
    let target = (one - lambda) * a1 / (2 * n + 1) as f64;
    let k = target / raw;
    let u = Mat2::from_rows([row1[0] * k, row1[1] * k], row2);
    RepPoint::new(vec![x, u, z], FamilyTag::SigmaH)?
        .check_relation(&Presentation::h_family(m, n), RESIDUAL_TOL)
}

/// Fingerprint distance between `σ_{λ,2,a₁}` and [`build_r2_independent`]
/// at one `λ` where `r = 2` is a root.
pub fn r2_consistency(m: i64, n: i64, lambda: Complex64, a1: Complex64) -> Result<f64> {
    let (sigma, _) = build_sigma(&SigmaParams {
        m,
        n,
        lambda,
        r: Complex64::new(2.0, 0.0),
        a1,
    })?;
    let direct = build_r2_independent(m, n, lambda, a1)?;
    Ok(fingerprint_distance(
        &default_fingerprint(&sigma),
        &default_fingerprint(&direct),
    ))
}

/// Result of searching for jump points with parabolic `z`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParabolicSearchReport {
    pub evaluated: usize,
    pub skipped: usize,
    pub min_rank: usize,
    /// Smallest `σ₂/σ₁` of the Fox matrix over the evaluated points.
    pub min_rank_ratio: f64,
    pub max_residual: f64,
}

impl ParabolicSearchReport {
    pub fn passed(&self) -> bool {
        self.evaluated > 0 && self.min_rank == 2
    }
}

/// Grid search over `(Re r, Im r, β)` with `z = [[1,1],[0,1]]`,
/// `x = [[0, −1/c], [c, r]]` and `c` a root of
/// `(n+1)nγ_{m+1}γ_m c² − c − (2−r) = 0`, which makes the relation's left
/// side `v` unipotent. The rows of `u` are `q` with `qv = q` and
/// `p + βq` with `p(v − 1) = −q`. Reports the smallest Fox rank found.
pub fn parabolic_search(m: i64, n: i64, resolution: usize) -> Result<ParabolicSearchReport> {
    let pres = Presentation::h_family(m, n);
    let one = Complex64::new(1.0, 0.0);
    let z = Mat2::jordan(one);
    let axis = |k: usize, lo: f64, hi: f64| lo + (hi - lo) * (k as f64 + 0.5) / resolution as f64;
    let mut report = ParabolicSearchReport {
        evaluated: 0,
        skipped: 0,
        min_rank: 2,
        min_rank_ratio: f64::INFINITY,
        max_residual: 0.0,
    };
    for i in 0..resolution {
        for j in 0..resolution {
            let r = Complex64::new(axis(i, -3.0, 3.0), axis(j, -3.0, 3.0));
            let lead = gamma(m + 1, r)? * gamma(m, r)? * ((n + 1) * n) as f64;
            let cs: Vec<Complex64> = if lead.norm() <= 1e-12 {
                vec![-(2.0 - r)]
            } else {
                let disc = (one + lead * (2.0 - r) * 4.0).sqrt();
                vec![(one + disc) / (lead * 2.0), (one - disc) / (lead * 2.0)]
            };
            for c in cs {
                if c.norm() <= 1e-8 {
                    report.skipped += resolution;
                    continue;
                }
                let x = Mat2::new(Complex64::default(), -c.inv(), c, r);
                let v = h_relation_lhs(m, n, &x, &z)?;
                let nil = v - Mat2::identity();
                let Some(q) = nil
                    .left_kernel()
                    .filter(|_| nil.max_abs() > 1e-8 * v.max_abs())
                else {
                    report.skipped += resolution;
                    continue;
                };
                let (s, t) = rank_one_factors(&nil);
                let st = (s[0].norm_sqr() + s[1].norm_sqr()) * (t[0].norm_sqr() + t[1].norm_sqr());
                let qt = q[0] * t[0].conj() + q[1] * t[1].conj();
                let p = [-qt * s[0].conj() / st, -qt * s[1].conj() / st];
                for k in 0..resolution {
                    let beta = axis(k, -2.0, 2.0);
                    let u = Mat2::from_rows([p[0] + q[0] * beta, p[1] + q[1] * beta], q);
                    if u.det().norm() <= 1e-8 * u.frobenius().powi(2) {
                        report.skipped += 1;
                        continue;
                    }
                    let rep = RepPoint::new(vec![x, u, z], FamilyTag::Free)?;
                    report.max_residual =
                        report.max_residual.max(rep.relation_residual_scaled(&pres));
                    let fox = crate::fox::derivation_matrix(&pres, &rep)?.matrix;
                    report.min_rank = report.min_rank.min(fox.rank());
                    report.min_rank_ratio = report.min_rank_ratio.min(fox.rank_ratio());
                    report.evaluated += 1;
                }
            }
        }
    }
    Ok(report)
}

/// `N = s t` for a rank-one `N`: `s` its largest column, `t` the matching row rescaled.
fn rank_one_factors(nm: &Mat2) -> ([Complex64; 2], [Complex64; 2]) {
    let (c0, c1) = (nm.col(0), nm.col(1));
    let n0 = c0[0].norm_sqr() + c0[1].norm_sqr();
    let n1 = c1[0].norm_sqr() + c1[1].norm_sqr();
    let s = if n0 >= n1 { c0 } else { c1 };
    let i = if s[0].norm() >= s[1].norm() { 0 } else { 1 };
    let row = nm.row(i);
    (s, [row[0] / s[i], row[1] / s[i]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, r};
    use crate::sampling::rng_from_seed;

    #[test]
    fn sigma_at_lambda_three() {
        let lambda = r(3.0);
        let p = SigmaParams {
            m: 1,
            n: 1,
            lambda,
            r: r(-1.0 - 26.0 / 16.0),
            a1: r(3.0),
        };
        let (rep, report) = build_sigma(&p).unwrap();
        assert!(report.accepted(), "{report:?}");
        let (dz, du) = det_star_sigma(&p);
        assert_eq!((dz, du), (r(3.0), r(-2.0)));
        assert!((rep.image(1).det() - du).norm() < 1e-10);
        assert!((rep.image(2).det() - dz).norm() < 1e-10);
    }

    #[test]
    fn invalid_parameters() {
        let base = SigmaParams {
            m: 1,
            n: 1,
            lambda: r(3.0),
            r: r(-1.0 - 26.0 / 16.0),
            a1: r(0.0),
        };
        assert_eq!(build_sigma(&base).unwrap_err(), Error::Condition("a1 != 0"));
        let at_one = SigmaParams {
            lambda: r(1.0),
            a1: r(1.0),
            ..base
        };
        assert!(build_sigma(&at_one).is_err());
        let off = SigmaParams {
            r: r(0.3),
            a1: r(1.0),
            ..base
        };
        assert_eq!(
            build_sigma(&off).unwrap_err(),
            Error::Condition("h_lambda(r) = 0")
        );
    }

    #[test]
    fn random_sigma_points() {
        let mut rng = rng_from_seed(3);
        for m in 1..=4 {
            for n in 1..=4 {
                for _ in 0..3 {
                    let (rep, report) = sample_sigma(m, n, &mut rng).unwrap();
                    assert!(report.accepted(), "({m},{n}) {report:?}");
                    let p = SigmaParams {
                        m,
                        n,
                        lambda: rep.param("lambda").unwrap(),
                        r: rep.param("r").unwrap(),
                        a1: rep.param("a1").unwrap(),
                    };
                    let (_, du) = det_star_sigma(&p);
                    assert!((report.det_star.1 - du).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn r2_branch_matches_direct_construction() {
        for (m, n) in [(1, 1), (2, 1), (2, 3), (3, 2)] {
            let lambdas = r2_lambdas(m, n).unwrap();
            assert!(!lambdas.is_empty());
            for l in lambdas {
                let d = r2_consistency(m, n, l, c(0.7, -0.2)).unwrap();
                assert!(d <= 1e-8, "({m},{n}) lambda {l}: {d}");
            }
        }
    }

    #[test]
    fn parabolic_z_has_no_jump_points() {
        let report = parabolic_search(2, 1, 8).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.max_residual < 1e-9);
    }
}
