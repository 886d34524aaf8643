#![allow(dead_code)]

use cjl::fox::{FamilyTag, RepPoint, Word};
use cjl::numerics::{Complex64, Mat2};
use rand::Rng;

pub fn rand_c(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// A random invertible matrix with entries in the unit square, kept away from singular.
pub fn rand_invertible(rng: &mut impl Rng) -> Mat2 {
    loop {
        let m = Mat2::new(rand_c(rng), rand_c(rng), rand_c(rng), rand_c(rng));
        if m.det().norm() > 0.2 {
            return m;
        }
    }
}

pub fn rand_rep(rng: &mut impl Rng, k: usize) -> RepPoint {
    RepPoint::new(
        (0..k).map(|_| rand_invertible(rng)).collect(),
        FamilyTag::Free,
    )
    .unwrap()
}

/// A random word with at most `max_len` letters over `k` generators, as single letters.
pub fn rand_word(rng: &mut impl Rng, k: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| (rng.gen_range(0..k), if rng.gen_bool(0.5) { 1 } else { -1 })))
}

/// `ρ(∂w/∂g)` by expanding `w` into single letters and applying
/// `∂(uv) = ∂u + u ∂v` with `∂g/∂g = 1`, `∂g⁻¹/∂g = −g⁻¹`.
pub fn fox_chain_rule(w: &Word, g: usize, rep: &RepPoint) -> Mat2 {
    let mut prefix = Mat2::identity();
    let mut acc = Mat2::zero();
    for &(h, e) in w.letters() {
        let m = rep.image(h);
        let mi = m.inverse().unwrap();
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                if h == g {
                    acc = acc + prefix;
                }
                prefix = prefix * m;
            } else {
                if h == g {
                    acc = acc - prefix * mi;
                }
                prefix = prefix * mi;
            }
        }
    }
    acc
}

/// 3×3 complex matrices for the affine oracle.
type M3 = [[Complex64; 3]; 3];

fn m3_mul(a: &M3, b: &M3) -> M3 {
    let mut out = [[Complex64::default(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn affine(m: &Mat2, v: [Complex64; 2]) -> M3 {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::default();
    [
        [m.at(0, 0), m.at(0, 1), v[0]],
        [m.at(1, 0), m.at(1, 1), v[1]],
        [zero, zero, one],
    ]
}

fn affine_inv(m: &Mat2, v: [Complex64; 2]) -> M3 {
    let mi = m.inverse().unwrap();
    let t = mi.mul_vec(v);
    affine(&mi, [-t[0], -t[1]])
}

/// Translation part of `w` under `g ↦ (ρ(g), ξ_g)` acting affinely on `C²`;
/// equals `Σ_g ρ(∂w/∂g) ξ_g` for any derivation data `ξ`.
pub fn affine_translation(w: &Word, rep: &RepPoint, xi: &[[Complex64; 2]]) -> [Complex64; 2] {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::default();
    let mut acc: M3 = [[one, zero, zero], [zero, one, zero], [zero, zero, one]];
    for &(h, e) in w.letters() {
        let step = if e > 0 {
            affine(&rep.image(h), xi[h])
        } else {
            affine_inv(&rep.image(h), xi[h])
        };
        for _ in 0..e.unsigned_abs() {
            acc = m3_mul(&acc, &step);
        }
    }
    [acc[0][2], acc[1][2]]
}

pub fn rel_err(a: &Mat2, b: &Mat2) -> f64 {
    (*a - *b).frobenius() / a.frobenius().max(b.frobenius()).max(1.0)
}

pub fn line(criterion: u32, name: &str, passed: bool, detail: &str, secs: f64) {
    println!(
        "criterion {criterion} [{}] {name}: {detail} ({secs:.2} s)",
        if passed { "PASS" } else { "FAIL" }
    );
}
