use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

/// Dense complex polynomial, coefficients in ascending degree.
///
/// Trailing exact zeros are trimmed on construction, so the stored leading
/// coefficient is nonzero unless the polynomial is identically zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly {
    coeffs: Vec<Complex64>,
}

impl CPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CPoly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_real(&[0.0, 1.0])
    }

    /// `Π (x − r)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        roots.iter().fold(Self::from_real(&[1.0]), |acc, &r| {
            &acc * &Self::new(vec![-r, Complex64::new(1.0, 0.0)])
        })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * z + c)
    }

    /// `p(z)` together with `Σ |a_i| |z|^i`, the natural scale for judging
    /// whether `p(z)` is zero to working precision.
    pub fn eval_scaled(&self, z: Complex64) -> (Complex64, f64) {
        let r = z.norm();
        let mut v = Complex64::zero();
        let mut s = 0.0;
        for c in self.coeffs.iter().rev() {
            v = v * z + c;
            s = s * r + c.norm();
        }
        (v, s)
    }

    /// Backward-error style residual `|p(z)| / Σ|a_i||z|^i`.
    pub fn relative_residual(&self, z: Complex64) -> f64 {
        let (v, s) = self.eval_scaled(z);
        if s == 0.0 {
            0.0
        } else {
            v.norm() / s
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Taylor coefficients at `c`: the polynomial `q(t) = p(c + t)`.
    pub fn shift(&self, c: Complex64) -> Self {
        let mut out = vec![Complex64::zero(); self.coeffs.len()];
        // Horner on polynomials: q = (...(a_n)(t + c) + a_{n-1})...
        for &a in self.coeffs.iter().rev() {
            for k in (1..out.len()).rev() {
                out[k] = out[k] * c + out[k - 1];
            }
            if let Some(o) = out.first_mut() {
                *o = *o * c + a;
            }
        }
        Self::new(out)
    }

    /// Reconstruct a polynomial of degree at most `degree` from its values on
    /// `degree + 1` equally spaced points of the circle `|t| = radius`
    /// (a discrete Fourier transform; well conditioned for moderate radius).
    pub fn interpolate_on_circle<F>(degree: usize, radius: f64, mut f: F) -> Self
    where
        F: FnMut(Complex64) -> Complex64,
    {
        let n = degree + 1;
        let values: Vec<Complex64> = (0..n)
            .map(|j| {
                f(Complex64::from_polar(
                    radius,
                    2.0 * PI * j as f64 / n as f64,
                ))
            })
            .collect();
        let coeffs = (0..n)
            .map(|k| {
                let s: Complex64 = values
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        v * Complex64::from_polar(1.0, -2.0 * PI * (j * k) as f64 / n as f64)
                    })
                    .sum();
                s / (n as f64 * radius.powi(k as i32))
            })
            .collect();
        Self::new(coeffs)
    }
}

impl Add for &CPoly {
    type Output = CPoly;
    fn add(self, o: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        CPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).copied().unwrap_or_default()
                        + o.coeffs.get(i).copied().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, o: &CPoly) -> CPoly {
        self + &(-o)
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, o: &CPoly) -> CPoly {
        if self.is_zero() || o.is_zero() {
            return CPoly::new(vec![]);
        }
        let mut out = vec![Complex64::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CPoly::new(out)
    }
}
