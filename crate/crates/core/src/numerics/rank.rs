use num_complex::Complex64;

use super::mat2::Mat2;

/// σ₂ ≤ RANK_RATIO · σ₁ declares a rank deficit.
pub const RANK_RATIO: f64 = 1e-8;
/// σ₁ ≤ ZERO_RATIO · max|entry| declares the matrix zero.
pub const ZERO_RATIO: f64 = 1e-12;

/// A 2×k complex matrix stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2xN {
    cols: Vec<[Complex64; 2]>,
}

impl Mat2xN {
    pub fn from_cols(cols: Vec<[Complex64; 2]>) -> Self {
        Mat2xN { cols }
    }

    pub fn from_rows(top: &[Complex64], bottom: &[Complex64]) -> Self {
        assert_eq!(top.len(), bottom.len(), "row lengths differ");
        Mat2xN {
            cols: top.iter().zip(bottom).map(|(&a, &b)| [a, b]).collect(),
        }
    }

    pub fn from_real_rows(top: &[f64], bottom: &[f64]) -> Self {
        let c = |v: &[f64]| {
            v.iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect::<Vec<_>>()
        };
        Self::from_rows(&c(top), &c(bottom))
    }

    /// Concatenate 2×2 blocks left to right.
    pub fn from_blocks(blocks: &[Mat2]) -> Self {
        Mat2xN {
            cols: blocks.iter().flat_map(|b| [b.col(0), b.col(1)]).collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[[Complex64; 2]] {
        &self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.cols[j][i]
    }

    pub fn block(&self, k: usize) -> Mat2 {
        let (a, b) = (self.cols[2 * k], self.cols[2 * k + 1]);
        Mat2::new(a[0], b[0], a[1], b[1])
    }

    pub fn max_abs(&self) -> f64 {
        self.cols
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.cols.iter().flatten().all(|c| c.is_finite())
    }

    /// Left-multiply by a 2×2 matrix.
    pub fn left_mul(&self, a: &Mat2) -> Self {
        Mat2xN {
            cols: self.cols.iter().map(|&c| a.mul_vec(c)).collect(),
        }
    }

    /// `(σ₁, σ₂)` with `σ₁ ≥ σ₂ ≥ 0`, from the eigenvalues of the 2×2 Gram
    /// matrix `AA*`; its determinant is summed over 2×2 minors (Cauchy–Binet)
    /// so a near-rank-one matrix keeps full relative accuracy in `σ₂`.
    pub fn singular_values(&self) -> (f64, f64) {
        let tr: f64 = self.cols.iter().flatten().map(|c| c.norm_sqr()).sum();
        let mut det = 0.0;
        for i in 0..self.cols.len() {
            for j in i + 1..self.cols.len() {
                let (a, b) = (self.cols[i], self.cols[j]);
                det += (a[0] * b[1] - b[0] * a[1]).norm_sqr();
            }
        }
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        let s1sq = 0.5 * (tr + disc);
        if s1sq <= 0.0 {
            return (0.0, 0.0);
        }
        let s2sq = (det / s1sq).max(0.0);
        (s1sq.sqrt(), s2sq.sqrt())
    }

    /// `σ₂ / σ₁`, or 0 for the zero matrix.
    pub fn rank_ratio(&self) -> f64 {
        let (s1, s2) = self.singular_values();
        if s1 == 0.0 {
            0.0
        } else {
            s2 / s1
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_with_ratio(RANK_RATIO)
    }

    pub fn rank_with_ratio(&self, ratio: f64) -> usize {
        let (s1, s2) = self.singular_values();
        let scale = self.max_abs();
        if scale == 0.0 || s1 <= ZERO_RATIO * scale {
            0
        } else if s2 <= ratio * s1 {
            1
        } else {
            2
        }
    }
}

/// Numerical rank of a 2×k matrix with the fixed tolerance ratio.
pub fn mat_rank(m: &Mat2xN) -> usize {
    m.rank()
}
