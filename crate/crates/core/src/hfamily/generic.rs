use rand::Rng;

use super::sigma::h_relation_lhs;
use crate::error::{Error, Result};
use crate::fox::{Presentation, RepPoint};
use crate::gfamily::SAMPLE_ATTEMPTS;
use crate::numerics::{Complex64, Mat2};
use crate::sampling::{annulus, rng_from_seed, smallest_root_of_polynomial_fn, unit_square};

/// A random representation of `H(m,n)` on `(x, u, z)` with `z = diag(λ, 1)`,
/// away from the jump locus.
pub fn sample_generic_rep_h(m: i64, n: i64, seed: u64) -> Result<RepPoint> {
    let mut rng = rng_from_seed(seed);
    let p = Presentation::h_family(m, n);
    for _ in 0..SAMPLE_ATTEMPTS {
        let l = annulus(&mut rng, 0.5, 2.0);
        if let Some(rep) = try_generic_h(m, n, (l, Complex64::new(1.0, 0.0)), &p, &mut rng) {
            return Ok(rep);
        }
    }
    Err(Error::SamplingExhausted(SAMPLE_ATTEMPTS))
}

/// As [`sample_generic_rep_h`] for any integers `m, n` and
/// `z = diag(λ₁, λ₂)`, covering the targets of the isomorphisms.
pub fn sample_generic_h_any(m: i64, n: i64, rng: &mut impl Rng) -> Result<RepPoint> {
    let p = Presentation::h_family(m, n);
    for _ in 0..SAMPLE_ATTEMPTS {
        let ls = (annulus(rng, 0.5, 2.0), annulus(rng, 0.5, 2.0));
        if let Some(rep) = try_generic_h(m, n, ls, &p, rng) {
            return Ok(rep);
        }
    }
    Err(Error::SamplingExhausted(SAMPLE_ATTEMPTS))
}

/// `x = [[a, b], [(ad − 1)/b, d]]` has determinant one; `d` is solved so
/// that `tr v = tr z⁻¹`, and the rows of `u` are left eigenvectors of `v`,
/// which forces `u v u⁻¹ = z⁻¹`.
fn try_generic_h(
    m: i64,
    n: i64,
    (l1, l2): (Complex64, Complex64),
    p: &Presentation,
    rng: &mut impl Rng,
) -> Option<RepPoint> {
    let (e1, e2) = (l1.inv(), l2.inv());
    if (e1 - e2).norm() < 1e-3 * e1.norm().max(e2.norm()) {
        return None;
    }
    let z = Mat2::diag(l1, l2);
    let (a, b) = (unit_square(rng), unit_square(rng));
    if b.norm() < 0.1 {
        return None;
    }
    let x_of = |d: Complex64| Mat2::new(a, b, (a * d - 1.0) / b, d);
    let f = |d: Complex64| {
        h_relation_lhs(m, n, &x_of(d), &z)
            .map(|v| v.trace() - e1 - e2)
            .unwrap_or(Complex64::new(f64::NAN, 0.0))
    };
    let degree = (m.unsigned_abs() + (m + 1).unsigned_abs()) as usize;
    let d = smallest_root_of_polynomial_fn(degree.max(1), f).ok()?;
    let x = x_of(d);
    let v = h_relation_lhs(m, n, &x, &z).ok()?;
    let r1 = (v - Mat2::scalar(e1)).left_kernel()?;
    let r2 = (v - Mat2::scalar(e2)).left_kernel()?;
    crate::gfamily::accept(vec![x, Mat2::from_rows(r1, r2), z], p)
}

/// Images `(x, y, z)` for the commutator form `x = [x^m, z^n][y, z]`.
pub fn h_commutator_images(rep: &RepPoint) -> Result<RepPoint> {
    let (x, u, z) = (rep.image(0), rep.image(1), rep.image(2));
    let zi = z.inverse().ok_or(Error::SingularMatrix("z"))?;
    RepPoint::new(vec![x, u * zi, z], rep.family())
}
