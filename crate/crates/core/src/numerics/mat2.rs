use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 {
            m: [[a, b], [c, d]],
        }
    }

    /// Convenience constructor from real entries.
    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::scalar(Complex64::one())
    }

    pub fn zero() -> Self {
        Self::scalar(Complex64::zero())
    }

    pub fn scalar(s: Complex64) -> Self {
        Self::diag(s, s)
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Self::new(a, Complex64::zero(), Complex64::zero(), d)
    }

    /// Upper triangular `[[a, nu], [0, d]]`.
    pub fn upper(a: Complex64, d: Complex64, nu: Complex64) -> Self {
        Self::new(a, nu, Complex64::zero(), d)
    }

    /// Jordan-type block `[[l, l], [0, l]]`.
    pub fn jordan(l: Complex64) -> Self {
        Self::upper(l, l, l)
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.m[i][j]
    }

    pub fn row(&self, i: usize) -> [Complex64; 2] {
        self.m[i]
    }

    pub fn col(&self, j: usize) -> [Complex64; 2] {
        [self.m[0][j], self.m[1][j]]
    }

    pub fn from_rows(r0: [Complex64; 2], r1: [Complex64; 2]) -> Self {
        Mat2 { m: [r0, r1] }
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.m[0][0], self.m[1][0], self.m[0][1], self.m[1][1])
    }

    pub fn adjugate(&self) -> Self {
        Self::new(self.m[1][1], -self.m[0][1], -self.m[1][0], self.m[0][0])
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 || !det.is_finite() {
            return None;
        }
        Some(self.adjugate().scale(det.inv()))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Mat2 {
            m: [
                [self.m[0][0] * s, self.m[0][1] * s],
                [self.m[1][0] * s, self.m[1][1] * s],
            ],
        }
    }

    /// Integer power; negative exponents need an invertible matrix.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 {
            self.inverse()
                .ok_or(Error::SingularMatrix("negative power"))?
        } else {
            *self
        };
        let mut e = k.unsigned_abs();
        let mut acc = Mat2::identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq * sq;
            }
        }
        Ok(acc)
    }

    pub fn frobenius(&self) -> f64 {
        self.entries()
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| z.is_finite())
    }

    /// True if the matrix is a multiple of the identity up to `tol · max|entry|`.
    pub fn is_scalar(&self, tol: f64) -> bool {
        let scale = self.max_abs().max(f64::MIN_POSITIVE);
        self.m[0][1].norm() <= tol * scale
            && self.m[1][0].norm() <= tol * scale
            && (self.m[0][0] - self.m[1][1]).norm() <= tol * scale
    }

    pub fn mul_vec(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Row vector times matrix.
    pub fn vec_mul(v: [Complex64; 2], a: &Mat2) -> [Complex64; 2] {
        [
            v[0] * a.m[0][0] + v[1] * a.m[1][0],
            v[0] * a.m[0][1] + v[1] * a.m[1][1],
        ]
    }

    /// A nonzero row vector `v` with `v·self ≈ 0`, taken as the adjugate row
    /// of largest norm. Returns `None` for the zero matrix.
    pub fn left_kernel(&self) -> Option<[Complex64; 2]> {
        let adj = self.adjugate();
        let r0 = adj.row(0);
        let r1 = adj.row(1);
        let n0 = r0[0].norm_sqr() + r0[1].norm_sqr();
        let n1 = r1[0].norm_sqr() + r1[1].norm_sqr();
        if n0.max(n1) == 0.0 {
            return None;
        }
        Some(if n0 >= n1 { r0 } else { r1 })
    }

    /// Eigenvalues from the characteristic quadratic.
    pub fn eigenvalues(&self) -> [Complex64; 2] {
        let tr = self.trace();
        let disc = (tr * tr - self.det() * 4.0).sqrt();
        // avoid cancellation in the smaller root
        let big = if (tr + disc).norm() >= (tr - disc).norm() {
            (tr + disc) * 0.5
        } else {
            (tr - disc) * 0.5
        };
        if big.norm() == 0.0 {
            return [big, big];
        }
        [big, self.det() / big]
    }

    /// Unit-free eigenvector for `ev`, chosen from the larger of the two
    /// candidate null vectors of `self − ev·1`.
    pub fn eigenvector(&self, ev: Complex64) -> [Complex64; 2] {
        let a = self.m[0][0] - ev;
        let b = self.m[0][1];
        let c = self.m[1][0];
        let d = self.m[1][1] - ev;
        let v1 = [b, -a];
        let v2 = [-d, c];
        let n1 = v1[0].norm_sqr() + v1[1].norm_sqr();
        let n2 = v2[0].norm_sqr() + v2[1].norm_sqr();
        let v = if n1 >= n2 { v1 } else { v2 };
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if n == 0.0 {
            // self − ev·1 vanishes: every vector is an eigenvector
            return [Complex64::one(), Complex64::zero()];
        }
        [v[0] / n, v[1] / n]
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let a = &self.m;
        let b = &o.m;
        Mat2 {
            m: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
        }
    }
}

impl Mul<Complex64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: Complex64) -> Mat2 {
        self.scale(s)
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        Mat2 {
            m: [
                [self.m[0][0] + o.m[0][0], self.m[0][1] + o.m[0][1]],
                [self.m[1][0] + o.m[1][0], self.m[1][1] + o.m[1][1]],
            ],
        }
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        self + (-o)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(-Complex64::one())
    }
}

/// Minimal unital-ring interface shared by scalars and 2×2 matrices.
pub trait RingElem: Copy {
    fn ring_one() -> Self;
    fn ring_zero() -> Self;
    fn ring_add(self, o: Self) -> Self;
    fn ring_mul(self, o: Self) -> Self;
    fn ring_neg(self) -> Self;
    fn ring_inverse(self) -> Option<Self>;
}

impl RingElem for Complex64 {
    fn ring_one() -> Self {
        Complex64::one()
    }
    fn ring_zero() -> Self {
        Complex64::zero()
    }
    fn ring_add(self, o: Self) -> Self {
        self + o
    }
    fn ring_mul(self, o: Self) -> Self {
        self * o
    }
    fn ring_neg(self) -> Self {
        -self
    }
    fn ring_inverse(self) -> Option<Self> {
        (self.norm() != 0.0).then(|| self.inv())
    }
}

impl RingElem for Mat2 {
    fn ring_one() -> Self {
        Mat2::identity()
    }
    fn ring_zero() -> Self {
        Mat2::zero()
    }
    fn ring_add(self, o: Self) -> Self {
        self + o
    }
    fn ring_mul(self, o: Self) -> Self {
        self * o
    }
    fn ring_neg(self) -> Self {
        -self
    }
    fn ring_inverse(self) -> Option<Self> {
        self.inverse()
    }
}

/// The q-integer `[k]_r`: `Σ_{j<k} r^j` for `k > 0`, `−r^k Σ_{j<|k|} r^j`
/// for `k < 0`, and `0` for `k = 0`.
pub fn bracket<T: RingElem>(k: i64, r: T) -> Result<T> {
    if k == 0 {
        return Ok(T::ring_zero());
    }
    let n = k.unsigned_abs();
    let mut sum = T::ring_zero();
    let mut p = T::ring_one();
    for _ in 0..n {
        sum = sum.ring_add(p);
        p = p.ring_mul(r);
    }
    if k > 0 {
        return Ok(sum);
    }
    let inv = r
        .ring_inverse()
        .ok_or(Error::SingularMatrix("bracket with negative index"))?;
    let mut rk = T::ring_one();
    for _ in 0..n {
        rk = rk.ring_mul(inv);
    }
    Ok(rk.ring_mul(sum).ring_neg())
}
