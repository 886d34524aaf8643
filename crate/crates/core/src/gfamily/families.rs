use rand::Rng;
use serde::Serialize;

use super::fpoly::{f_residual, GParams, EXCLUSION_TOL};
use super::generic::SAMPLE_ATTEMPTS;
use crate::error::{Error, Result};
use crate::fox::{FamilyTag, Presentation, RepPoint};
use crate::numerics::{theta, Complex64, Mat2};
use crate::sampling::{annulus_avoiding, unit_square};
use crate::RESIDUAL_TOL;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn is_unit_root(zeta: Complex64, k: i64) -> bool {
    (zeta.powi(k as i32) - 1.0).norm() <= 1e-10
}

fn relative_gap(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

/// `v = z^n w^-1 z^-m w^2`, the left side of the `G` relation.
pub(crate) fn g_relation_lhs(m: i64, n: i64, w: &Mat2, z: &Mat2) -> Result<Mat2> {
    let wi = w.inverse().ok_or(Error::SingularMatrix("w"))?;
    Ok(z.pow(n)? * wi * z.pow(-m)? * *w * *w)
}

fn finish(
    gp: &GParams,
    images: Vec<Mat2>,
    family: FamilyTag,
    params: &[(&str, Complex64)],
) -> Result<RepPoint> {
    let rep = params
        .iter()
        .fold(RepPoint::new(images, family)?, |r, &(k, v)| {
            r.with_param(k, v)
        })
        .check_relation(&Presentation::g_family(gp.m, gp.n), RESIDUAL_TOL)?;
    irreducible(rep)
}

fn irreducible(rep: RepPoint) -> Result<RepPoint> {
    if !crate::fox::is_irreducible(&rep) {
        return Err(Error::Reducible);
    }
    Ok(rep)
}

/// Which entry of `w` is chosen freely in the `ζ ≠ 1` branch; the other
/// one follows from the product `bc`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FreeEntry {
    B(Complex64),
    C(Complex64),
}

/// Parameters of a point of the family `F_ζ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FZetaParams {
    pub zeta: Complex64,
    pub lambda: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub aprime: Complex64,
    pub bprime: Complex64,
}

impl FZetaParams {
    /// Solve for the dependent entries given `ζ`, `λ`, the free entry (ignored
    /// when `ζ = 1`, where `b` is forced) and a scale for `(a′, b′)`.
    pub fn derive(
        gp: &GParams,
        zeta: Complex64,
        lambda: Complex64,
        free: FreeEntry,
        scale: Complex64,
    ) -> Result<Self> {
        check_lambda(gp, zeta, lambda)?;
        let (tn, tm) = (theta(lambda, gp.n), theta(lambda, gp.m));
        let lm = lambda.powi(gp.m as i32);
        let bc = lm * ((tn * tm).inv() - 1.0);
        let (b, c) = if is_unit_root(zeta, 1) {
            let b = lm * gp.n as f64 / ((lm * gp.n as f64 + gp.m as f64) * tn);
            (b, bc / b)
        } else {
            match free {
                FreeEntry::B(b) if b.norm() > 0.0 => (b, bc / b),
                FreeEntry::C(c) if c.norm() > 0.0 => (bc / c, c),
                _ => return Err(Error::InvalidArgument("free entry must be nonzero".into())),
            }
        };
        let z = Mat2::diag(lambda, zeta);
        let w = Mat2::new(tn.inv(), b, c, lm / tm);
        let v = g_relation_lhs(gp.m, gp.n, &w, &z)?;
        let k = (v - Mat2::scalar(lambda.powi(gp.n as i32)))
            .left_kernel()
            .ok_or(Error::Condition("v - lambda^n is zero; y undetermined"))?;
        Ok(FZetaParams {
            zeta,
            lambda,
            b,
            c,
            aprime: scale * k[0],
            bprime: scale * k[1],
        })
    }

    /// `det_*` in the coordinates `(det z, det y) = (λζ, t)`.
    pub fn det_star(&self, gp: &GParams) -> (Complex64, Complex64) {
        let t = self.aprime * theta(self.lambda, gp.n) * self.b - self.bprime;
        (self.lambda * self.zeta, t)
    }
}

fn check_lambda(gp: &GParams, zeta: Complex64, lambda: Complex64) -> Result<()> {
    if !is_unit_root(zeta, gp.g) {
        return Err(Error::Condition("zeta^g = 1"));
    }
    if theta(lambda, gp.n).norm() <= EXCLUSION_TOL || theta(lambda, gp.m).norm() <= EXCLUSION_TOL {
        return Err(Error::Condition("lambda^n != 1 and lambda^m != 1"));
    }
    if is_unit_root(zeta, 1) {
        let lm = lambda.powi(gp.m as i32);
        if (lm * gp.n as f64 + gp.m as f64).norm() <= EXCLUSION_TOL {
            return Err(Error::Condition("lambda^m != -m/n when zeta = 1"));
        }
    }
    Ok(())
}

/// `z = diag(λ, ζ)`, `w = [[ϑ_n⁻¹, b], [c, λ^m ϑ_m⁻¹]]`, `y = [[a′, b′], [1, ϑ_n b]]`.
pub fn build_f_zeta(gp: &GParams, p: &FZetaParams) -> Result<RepPoint> {
    check_lambda(gp, p.zeta, p.lambda)?;
    let (tn, tm) = (theta(p.lambda, gp.n), theta(p.lambda, gp.m));
    let lm = p.lambda.powi(gp.m as i32);
    let bc = lm * ((tn * tm).inv() - 1.0);
    if relative_gap(p.b * p.c, bc) > EXCLUSION_TOL {
        return Err(Error::Condition("bc = lambda^m (1/(theta_n theta_m) - 1)"));
    }
    if is_unit_root(p.zeta, 1) {
        let b = lm * gp.n as f64 / ((lm * gp.n as f64 + gp.m as f64) * tn);
        if relative_gap(p.b, b) > EXCLUSION_TOL {
            return Err(Error::Condition(
                "b = n lambda^m / ((n lambda^m + m) theta_n) when zeta = 1",
            ));
        }
    }
    let z = Mat2::diag(p.lambda, p.zeta);
    let w = Mat2::new(tn.inv(), p.b, p.c, lm / tm);
    let row = [p.aprime, p.bprime];
    let v = g_relation_lhs(gp.m, gp.n, &w, &z)?;
    let kv = Mat2::vec_mul(row, &(v - Mat2::scalar(p.lambda.powi(gp.n as i32))));
    let scale = (row[0].norm() + row[1].norm()) * v.max_abs().max(1.0);
    if scale == 0.0 || kv[0].norm() + kv[1].norm() > 1e-9 * scale {
        return Err(Error::Condition(
            "(a', b') nonzero in the left kernel of v - lambda^n",
        ));
    }
    let y = Mat2::new(p.aprime, p.bprime, one(), tn * p.b);
    finish(
        gp,
        vec![w, y, z],
        FamilyTag::FZeta,
        &[
            ("zeta", p.zeta),
            ("lambda", p.lambda),
            ("b", p.b),
            ("c", p.c),
            ("aprime", p.aprime),
            ("bprime", p.bprime),
        ],
    )
}

/// Parameters of a point of `G_ζ^λ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GZetaLambdaParams {
    pub zeta: Complex64,
    pub lambda: Complex64,
    pub c: Complex64,
    pub scale: Complex64,
}

/// `z = diag(λ, ζ)`, `w = [[λ^(m−n), 0], [c, λ^n ζ^m]]`, `y = [[a′, b′], [1, 0]]`
/// with `(a′, b′)` the given multiple of `((λ^(m−2n) ζ^−m − ϑ_−2n) c, ζ^m ϑ_n)`.
pub fn build_g_zeta_lambda(gp: &GParams, p: &GZetaLambdaParams) -> Result<RepPoint> {
    if !is_unit_root(p.zeta, gp.n) {
        return Err(Error::Condition("zeta^n = 1"));
    }
    if is_unit_root(p.zeta, gp.m) {
        return Err(Error::ContainedInF);
    }
    if f_residual(gp.m, gp.n, p.lambda)? > 1e-9 {
        return Err(Error::Condition("f(lambda) = 0"));
    }
    if p.scale.norm() == 0.0 {
        return Err(Error::Condition("(a', b') nonzero"));
    }
    let (m, n) = (gp.m as i32, gp.n as i32);
    let l = p.lambda;
    let zm = p.zeta.powi(m);
    let z = Mat2::diag(l, p.zeta);
    let w = Mat2::new(l.powi(m - n), Complex64::default(), p.c, l.powi(n) * zm);
    let aprime = p.scale * (l.powi(m - 2 * n) / zm - theta(l, -2 * gp.n)) * p.c;
    let bprime = p.scale * zm * theta(l, gp.n);
    let y = Mat2::new(aprime, bprime, one(), Complex64::default());
    finish(
        gp,
        vec![w, y, z],
        FamilyTag::GZetaLambda,
        &[
            ("zeta", p.zeta),
            ("lambda", l),
            ("c", p.c),
            ("scale", p.scale),
        ],
    )
}

/// Parameters of a point of `H_ζ` (the case `m = −n`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HZetaGParams {
    pub zeta: Complex64,
    pub aprime: Complex64,
    pub cprime: Complex64,
    pub d: Complex64,
}

impl HZetaGParams {
    /// The `ζ = 1` member, where `d = (n c′)⁻¹ − 1` is forced.
    pub fn unit(n: i64, aprime: Complex64, cprime: Complex64) -> Self {
        HZetaGParams {
            zeta: one(),
            aprime,
            cprime,
            d: (cprime * n as f64).inv() - 1.0,
        }
    }
}

/// `z = [[ζ, ζ], [0, ζ]]`, `w = [[0, −n], [1/n, d]]`,
/// `y = [[a′, n a′ d − n² c′/(d − 1)], [c′, n c′ d]]` on `G(−n, n)`.
pub fn build_h_zeta_g(n: i64, p: &HZetaGParams) -> Result<RepPoint> {
    let gp = GParams::new(-n, n)?;
    if !is_unit_root(p.zeta, n) {
        return Err(Error::Condition("zeta^n = 1"));
    }
    if p.cprime.norm() <= EXCLUSION_TOL {
        return Err(Error::Condition("c' != 0"));
    }
    if (p.d - 1.0).norm() <= EXCLUSION_TOL {
        return Err(Error::Condition("d != 1"));
    }
    let nf = n as f64;
    if is_unit_root(p.zeta, 1) && (p.cprime * nf * (p.d + 1.0) - 1.0).norm() > EXCLUSION_TOL {
        return Err(Error::Condition("n c' (d + 1) = 1 when zeta = 1"));
    }
    let z = Mat2::jordan(p.zeta);
    let w = Mat2::new(Complex64::default(), -one() * nf, one() / nf, p.d);
    let y = Mat2::new(
        p.aprime,
        p.aprime * nf * p.d - p.cprime * nf * nf / (p.d - 1.0),
        p.cprime,
        p.cprime * nf * p.d,
    );
    finish(
        &gp,
        vec![w, y, z],
        FamilyTag::HZetaG,
        &[
            ("zeta", p.zeta),
            ("aprime", p.aprime),
            ("cprime", p.cprime),
            ("d", p.d),
        ],
    )
}

/// The point `ϱ_{λ,a′,c′}` of `F_ζ` on `G(−n, n)`, which degenerates to
/// `σ_{a′,c′,0}` as `λ → ζ`.
///
/// Entries of `w` grow like `|λ − ζ|⁻²`, so the relation is checked as a
/// backward error (see [`RepPoint::relation_residual_scaled`]).
pub fn build_rho_degenerate(
    n: i64,
    zeta: Complex64,
    lambda: Complex64,
    aprime: Complex64,
    cprime: Complex64,
) -> Result<RepPoint> {
    let gp = GParams::new(-n, n)?;
    let nf = n as f64;
    let tn = theta(lambda, n);
    let ln = lambda.powi(n as i32);
    let denom = ln + ln.inv() - 1.0;
    if tn.norm() <= EXCLUSION_TOL || denom.norm() <= EXCLUSION_TOL || cprime.norm() <= EXCLUSION_TOL
    {
        return Err(Error::Condition(
            "lambda^n != 1, lambda^n + lambda^-n != 1, c' != 0",
        ));
    }
    if !is_unit_root(zeta, n) {
        return Err(Error::Condition("zeta^n = 1"));
    }
    let u = cprime * nf / denom;
    let big_a = aprime + u * ln * (2.0 - ln) / tn;
    let z = Mat2::diag(lambda, zeta);
    let w = Mat2::new(tn.inv(), -cprime * nf / (tn * tn), u.inv(), -tn.inv());
    let y = Mat2::new(big_a, -big_a * u / tn, one(), -cprime * nf / tn);
    let rep = RepPoint::new(vec![w, y, z], FamilyTag::FZeta)?
        .with_param("zeta", zeta)
        .with_param("lambda", lambda)
        .with_param("aprime", aprime)
        .with_param("cprime", cprime);
    let residual = rep.relation_residual_scaled(&Presentation::g_family(gp.m, gp.n));
    if residual > RESIDUAL_TOL {
        return Err(Error::Residual {
            residual,
            tolerance: RESIDUAL_TOL,
        });
    }
    irreducible(rep)
}

/// Distances from `ϱ_{λ,a′,c′}` to `σ_{a′,c′,0}` along a sequence `λ → ζ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegenerationReport {
    pub distances: Vec<f64>,
    /// `distance[k+1] / distance[k]`
    pub ratios: Vec<f64>,
    /// Largest scaled relation residual of the `ϱ` points.
    pub max_residual: f64,
    pub converges: bool,
}

/// Fingerprints of `ϱ_{λ,a′,c′}` must approach that of `σ_{a′,c′,0}` linearly
/// in `|λ − ζ|`: each ratio of consecutive distances is checked against the
/// ratio of consecutive `|λ − ζ|` within `[0.6, 1.4]` times.
pub fn degeneration_check(
    n: i64,
    zeta: Complex64,
    aprime: Complex64,
    cprime: Complex64,
    lambdas: &[Complex64],
) -> Result<DegenerationReport> {
    use crate::fox::{default_fingerprint, fingerprint_distance};
    if is_unit_root(zeta, 1) && (cprime * n as f64 - 1.0).norm() > EXCLUSION_TOL {
        return Err(Error::Condition("c' = 1/n when zeta = 1 (d = 0 forces it)"));
    }
    let sigma = build_h_zeta_g(
        n,
        &HZetaGParams {
            zeta,
            aprime,
            cprime,
            d: Complex64::default(),
        },
    )?;
    let target = default_fingerprint(&sigma);
    let p = Presentation::g_family(-n, n);
    let mut distances = Vec::with_capacity(lambdas.len());
    let mut max_residual: f64 = 0.0;
    for &l in lambdas {
        let rho = build_rho_degenerate(n, zeta, l, aprime, cprime)?;
        max_residual = max_residual.max(rho.relation_residual_scaled(&p));
        distances.push(fingerprint_distance(&default_fingerprint(&rho), &target));
    }
    let ratios: Vec<f64> = distances.windows(2).map(|d| d[1] / d[0]).collect();
    let steps: Vec<f64> = lambdas
        .windows(2)
        .map(|l| (l[1] - zeta).norm() / (l[0] - zeta).norm())
        .collect();
    let converges = !ratios.is_empty()
        && ratios
            .iter()
            .zip(&steps)
            .all(|(r, s)| (0.6 * s..=1.4 * s).contains(r));
    Ok(DegenerationReport {
        distances,
        ratios,
        max_residual,
        converges,
    })
}

/// `λ_k = ζ(1 + 2^−k)` for `k = k0, …, k0 + halvings`.
pub fn halving_sequence(zeta: Complex64, k0: i32, halvings: i32) -> Vec<Complex64> {
    (k0..=k0 + halvings)
        .map(|k| zeta * (1.0 + 2f64.powi(-k)))
        .collect()
}

/// Random admissible `λ` for `F_ζ`: the annulus `0.5 ≤ |λ| ≤ 2` kept `1e-3`
/// away from the `n`-th and `m`-th roots of unity and from `λ^m = −m/n`.
pub fn sample_f_lambda(gp: &GParams, rng: &mut impl Rng) -> Result<Complex64> {
    let mut avoid = Vec::new();
    for k in [gp.n, gp.m.abs()] {
        avoid.extend(
            (0..k).map(|j| {
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / k as f64)
            }),
        );
    }
    let target = Complex64::new(-(gp.m as f64) / gp.n as f64, 0.0);
    let k = gp.m.unsigned_abs() as f64;
    let base = target.powf(1.0 / k);
    let turns = gp.m.unsigned_abs();
    avoid.extend((0..turns).map(|j| {
        let root = base * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / k);
        if gp.m > 0 {
            root
        } else {
            root.inv()
        }
    }));
    annulus_avoiding(rng, &avoid, 1e-3).ok_or(Error::SamplingExhausted(1000))
}

/// A random point of `F_ζ`.
///
/// Near the excluded points the entries blow up and the relation can no
/// longer be met to the absolute tolerance; such draws are resampled.
pub fn sample_f_zeta(gp: &GParams, zeta: Complex64, rng: &mut impl Rng) -> Result<RepPoint> {
    let mut last = Error::SamplingExhausted(SAMPLE_ATTEMPTS);
    for _ in 0..SAMPLE_ATTEMPTS {
        let lambda = sample_f_lambda(gp, rng)?;
        let b = nonzero(rng);
        let scale = nonzero(rng);
        let p = FZetaParams::derive(gp, zeta, lambda, FreeEntry::B(b), scale)?;
        match build_f_zeta(gp, &p) {
            Err(e @ Error::Residual { .. }) => last = e,
            other => return other,
        }
    }
    Err(last)
}

/// A random point of `G_ζ^λ` over a root `λ` of `f`.
pub fn sample_g_zeta_lambda(
    gp: &GParams,
    zeta: Complex64,
    lambda: Complex64,
    rng: &mut impl Rng,
) -> Result<RepPoint> {
    let p = GZetaLambdaParams {
        zeta,
        lambda,
        c: unit_square(rng),
        scale: nonzero(rng),
    };
    build_g_zeta_lambda(gp, &p)
}

/// A random point of `H_ζ` on `G(−n, n)`.
pub fn sample_h_zeta(n: i64, zeta: Complex64, rng: &mut impl Rng) -> Result<RepPoint> {
    let aprime = unit_square(rng);
    let forbidden = Complex64::new(0.5 / n as f64, 0.0);
    let cprime = loop {
        let c = nonzero(rng);
        if (c - forbidden).norm() > 1e-3 {
            break c;
        }
    };
    let p = if is_unit_root(zeta, 1) {
        HZetaGParams::unit(n, aprime, cprime)
    } else {
        let d = loop {
            let d = unit_square(rng) * 2.0;
            if (d - 1.0).norm() > 1e-3 {
                break d;
            }
        };
        HZetaGParams {
            zeta,
            aprime,
            cprime,
            d,
        }
    };
    build_h_zeta_g(n, &p)
}

/// Uniform on the unit square, kept away from 0.
fn nonzero(rng: &mut impl Rng) -> Complex64 {
    loop {
        let z = unit_square(rng);
        if z.norm() > 0.1 {
            return z;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::{d1_dim, Presentation};
    use crate::numerics::{c, r};

    fn d1(gp: &GParams, rep: &RepPoint) -> usize {
        d1_dim(&Presentation::g_family(gp.m, gp.n), rep).unwrap()
    }

    #[test]
    fn f_one_at_lambda_three() {
        let gp = GParams::new(1, 1).unwrap();
        let p = FZetaParams::derive(&gp, r(1.0), r(3.0), FreeEntry::B(r(1.0)), r(1.0)).unwrap();
        assert!((p.b - r(3.0 / 8.0)).norm() < 1e-15);
        let rep = build_f_zeta(&gp, &p).unwrap();
        assert_eq!(d1(&gp, &rep), 3);
    }

    #[test]
    fn f_rejects_root_of_unity_lambda() {
        let gp = GParams::new(1, 1).unwrap();
        let err = FZetaParams::derive(&gp, r(1.0), r(1.0), FreeEntry::B(r(1.0)), r(1.0));
        assert_eq!(
            err,
            Err(Error::Condition("lambda^n != 1 and lambda^m != 1"))
        );
    }

    #[test]
    fn f_minus_one_on_2_2() {
        let gp = GParams::new(2, 2).unwrap();
        let p = FZetaParams::derive(&gp, r(-1.0), r(2.0), FreeEntry::B(r(1.0)), r(1.0)).unwrap();
        assert!((p.c - r(4.0 * (1.0 / 9.0 - 1.0))).norm() < 1e-14);
        let rep = build_f_zeta(&gp, &p).unwrap();
        assert_eq!(d1(&gp, &rep), 3);
        let (dz, t) = p.det_star(&gp);
        assert!((dz - rep.image(2).det()).norm() < 1e-12);
        assert!((t - rep.image(1).det()).norm() < 1e-12);
    }

    #[test]
    fn g_zeta_lambda_examples() {
        let gp = GParams::new(1, 2).unwrap();
        let golden = r((1.0 + 5f64.sqrt()) / 2.0);
        for cc in [r(1.0), r(0.0)] {
            let p = GZetaLambdaParams {
                zeta: r(-1.0),
                lambda: golden,
                c: cc,
                scale: r(1.0),
            };
            let rep = build_g_zeta_lambda(&gp, &p).unwrap();
            assert_eq!(d1(&gp, &rep), 3);
        }
        let p = GZetaLambdaParams {
            zeta: r(1.0),
            lambda: golden,
            c: r(1.0),
            scale: r(1.0),
        };
        assert_eq!(build_g_zeta_lambda(&gp, &p), Err(Error::ContainedInF));
    }

    #[test]
    fn h_zeta_examples() {
        let p = HZetaGParams {
            zeta: r(-1.0),
            aprime: r(0.0),
            cprime: r(1.0),
            d: r(2.0),
        };
        let rep = build_h_zeta_g(2, &p).unwrap();
        assert_eq!(d1(&GParams::new(-2, 2).unwrap(), &rep), 3);
        let bad = HZetaGParams::unit(2, r(0.0), r(0.25));
        assert!(build_h_zeta_g(2, &bad).is_err());
        let unit = HZetaGParams::unit(1, r(0.0), r(1.0));
        assert_eq!(unit.d, r(0.0));
        let rep = build_h_zeta_g(1, &unit).unwrap();
        assert_eq!(d1(&GParams::new(-1, 1).unwrap(), &rep), 3);
    }

    #[test]
    fn degeneration_examples() {
        let seq = halving_sequence(r(-1.0), 4, 6);
        let rep = degeneration_check(2, r(-1.0), r(1.0), r(1.0), &seq).unwrap();
        assert!(rep.converges, "{rep:?}");
        let seq = halving_sequence(r(1.0), 4, 6);
        assert!(
            degeneration_check(1, r(1.0), r(0.0), r(1.0), &seq)
                .unwrap()
                .converges
        );
        let constant = vec![r(-1.0); 3];
        assert!(degeneration_check(2, r(-1.0), r(1.0), r(1.0), &constant).is_err());
        let z3 = c(-0.5, 3f64.sqrt() / 2.0);
        let seq = halving_sequence(z3, 4, 6);
        assert!(
            degeneration_check(3, z3, r(0.5), r(0.8), &seq)
                .unwrap()
                .converges
        );
    }
}
