//! Seeded random sampling shared by the family samplers.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numerics::{poly_roots, CPoly, Complex64};

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer; derives independent sub-seeds from a root seed.
pub fn split_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Real and imaginary parts uniform in `[-1, 1]`.
pub fn unit_square(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

/// Uniform modulus in `[r0, r1]` and uniform argument.
pub fn annulus(rng: &mut impl Rng, r0: f64, r1: f64) -> Complex64 {
    Complex64::from_polar(rng.gen_range(r0..=r1), rng.gen_range(0.0..2.0 * PI))
}

/// A point of the annulus `0.5 ≤ |λ| ≤ 2` at distance more than `margin`
/// from every point in `avoid`; `None` after 1000 rejections.
pub fn annulus_avoiding(rng: &mut impl Rng, avoid: &[Complex64], margin: f64) -> Option<Complex64> {
    (0..1000)
        .map(|_| annulus(rng, 0.5, 2.0))
        .find(|l| avoid.iter().all(|a| (l - a).norm() > margin))
}

/// Root of smallest modulus of `f`, known to be a polynomial of degree at
/// most `degree`: interpolate on the unit circle, root-find, then Newton-polish
/// against `f` itself with the interpolant's derivative.
pub fn smallest_root_of_polynomial_fn<F>(degree: usize, f: F) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    let p = CPoly::interpolate_on_circle(degree, 1.0, &f);
    let cutoff = 1e-12 * p.max_abs_coeff();
    let trimmed = CPoly::new(
        p.coeffs()
            .iter()
            .map(|&c| {
                if c.norm() <= cutoff {
                    Complex64::default()
                } else {
                    c
                }
            })
            .collect(),
    );
    if trimmed.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let roots = poly_roots(&trimmed)?;
    let mut d = roots
        .roots
        .iter()
        .map(|r| r.value)
        .min_by(|a, b| a.norm().total_cmp(&b.norm()))
        .ok_or(Error::NoConvergence)?;
    let dp = trimmed.derivative();
    let mut res = f(d).norm();
    for _ in 0..6 {
        let slope = dp.eval(d);
        if slope.norm() == 0.0 || res == 0.0 {
            break;
        }
        let next = d - f(d) / slope;
        let r = f(next).norm();
        if r.is_nan() || r >= res {
            break;
        }
        d = next;
        res = r;
    }
    Ok(d)
}
