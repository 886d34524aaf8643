use rand::Rng;

use super::families::g_relation_lhs;
use super::fpoly::GParams;
use crate::error::{Error, Result};
use crate::fox::{is_irreducible, FamilyTag, Presentation, RepPoint};
use crate::numerics::{Complex64, Mat2};
use crate::sampling::{annulus, rng_from_seed, smallest_root_of_polynomial_fn, unit_square};
use crate::RESIDUAL_TOL;

/// Resampling budget for the generic samplers.
pub const SAMPLE_ATTEMPTS: usize = 50;

/// A random representation of `G(m,n)` on `(w, y, z)`, away from the jump locus.
pub fn sample_generic_rep_g(gp: &GParams, seed: u64) -> Result<RepPoint> {
    sample_generic_g_any(gp.m, gp.n, &mut rng_from_seed(seed))
}

/// As [`sample_generic_rep_g`] for any integers `m, n`, including the
/// negative ones reached by the isomorphisms.
///
/// `z = diag(λ₁, λ₂)` and `w` are random with `det w = det z^m`; one entry
/// of `w` is then solved so that `tr v = tr z^n`, and the rows of `y` are
/// left eigenvectors of `v`, which forces `y v y⁻¹ = z^n`.
pub fn sample_generic_g_any(m: i64, n: i64, rng: &mut impl Rng) -> Result<RepPoint> {
    let p = Presentation::g_family(m, n);
    for _ in 0..SAMPLE_ATTEMPTS {
        if let Some(rep) = try_generic_g(m, n, &p, rng) {
            return Ok(rep);
        }
    }
    Err(Error::SamplingExhausted(SAMPLE_ATTEMPTS))
}

fn try_generic_g(m: i64, n: i64, p: &Presentation, rng: &mut impl Rng) -> Option<RepPoint> {
    let (l1, l2) = (annulus(rng, 0.5, 2.0), annulus(rng, 0.5, 2.0));
    let (e1, e2) = (l1.powi(n as i32), l2.powi(n as i32));
    if (e1 - e2).norm() < 1e-3 * e1.norm().max(e2.norm()) {
        return None;
    }
    let z = Mat2::diag(l1, l2);
    let target = (e1 + e2, (l1 * l2).powi(m as i32));
    let (a, b) = (unit_square(rng), unit_square(rng));
    if b.norm() < 0.1 {
        return None;
    }
    let w_of = |d: Complex64| Mat2::new(a, b, (a * d - target.1) / b, d);
    let f = |d: Complex64| {
        g_relation_lhs(m, n, &w_of(d), &z)
            .map(|v| v.trace() - target.0)
            .unwrap_or(Complex64::new(f64::NAN, 0.0))
    };
    let d = smallest_root_of_polynomial_fn(3, f).ok()?;
    let w = w_of(d);
    let v = g_relation_lhs(m, n, &w, &z).ok()?;
    let r1 = (v - Mat2::scalar(e1)).left_kernel()?;
    let r2 = (v - Mat2::scalar(e2)).left_kernel()?;
    let y = Mat2::from_rows(r1, r2);
    accept(vec![w, y, z], p)
}

pub(crate) fn accept(images: Vec<Mat2>, p: &Presentation) -> Option<RepPoint> {
    let rep = RepPoint::new(images, FamilyTag::Generic).ok()?;
    let scale: f64 = rep.images().iter().map(Mat2::frobenius).product();
    if !scale.is_finite()
        || rep
            .images()
            .iter()
            .any(|m| m.det().norm() < 1e-8 * m.frobenius().powi(2))
    {
        return None;
    }
    let rep = rep.check_relation(p, RESIDUAL_TOL).ok()?;
    is_irreducible(&rep).then_some(rep)
}

/// Images `(x, y, z)` for the commutator form `x = [z^m, x][z^n, y]`.
pub fn g_commutator_images(rep: &RepPoint, m: i64) -> Result<RepPoint> {
    let (w, y, z) = (rep.image(0), rep.image(1), rep.image(2));
    RepPoint::new(vec![z.pow(-m)? * w, y, z], rep.family())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::d1_dim;

    #[test]
    fn generic_points_have_d1_two() {
        for (m, n, seed) in [(1, 1, 42), (2, 3, 7), (-2, 1, 3)] {
            let gp = GParams::new(m, n).unwrap();
            let rep = sample_generic_rep_g(&gp, seed).unwrap();
            assert_eq!(d1_dim(&Presentation::g_family(m, n), &rep).unwrap(), 2);
        }
    }

    #[test]
    fn commutator_form_satisfies_original_relation() {
        let mut rng = rng_from_seed(5);
        for (m, n) in [(2, 3), (-1, 2), (3, -2)] {
            let rep = sample_generic_g_any(m, n, &mut rng).unwrap();
            let xyz = g_commutator_images(&rep, m).unwrap();
            assert!(xyz.relation_residual(&Presentation::g_family_commutator(m, n)) < 1e-9);
        }
    }
}
