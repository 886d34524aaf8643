use std::collections::BTreeMap;

use serde::Serialize;

use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};
use crate::numerics::{Complex64, Mat2};

/// Which construction produced a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyTag {
    Generic,
    FZeta,
    GZetaLambda,
    HZetaG,
    SigmaH,
    Free,
}

/// Images of the generators in `GL(2,C)` plus provenance parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct RepPoint {
    images: Vec<Mat2>,
    family: FamilyTag,
    params: BTreeMap<String, Complex64>,
}

impl RepPoint {
    /// Rejects non-finite or singular images.
    pub fn new(images: Vec<Mat2>, family: FamilyTag) -> Result<Self> {
        for m in &images {
            if !m.is_finite() {
                return Err(Error::NonFinite("generator image"));
            }
            if m.det().norm() <= f64::MIN_POSITIVE {
                return Err(Error::SingularMatrix("generator image"));
            }
        }
        Ok(RepPoint {
            images,
            family,
            params: BTreeMap::new(),
        })
    }

    pub fn free(images: Vec<Mat2>) -> Result<Self> {
        Self::new(images, FamilyTag::Free)
    }

    pub fn with_param(mut self, name: &str, value: Complex64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn images(&self) -> &[Mat2] {
        &self.images
    }

    pub fn image(&self, g: usize) -> Mat2 {
        self.images[g]
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn params(&self) -> &BTreeMap<String, Complex64> {
        &self.params
    }

    pub fn param(&self, name: &str) -> Option<Complex64> {
        self.params.get(name).copied()
    }

    /// `ρ(w)`, multiplying syllables left to right.
    ///
    /// Panics if `w` mentions a generator without an image.
    pub fn word_eval(&self, w: &Word) -> Mat2 {
        w.letters().iter().fold(Mat2::identity(), |acc, &(g, e)| {
            acc * self.images[g].pow(e).expect("images are invertible")
        })
    }

    /// `‖ρ(lhs) − ρ(rhs)‖_F` for the presentation's relation (0 if free).
    pub fn relation_residual(&self, p: &Presentation) -> f64 {
        match p.relation() {
            Some(rel) => (self.word_eval(&rel.lhs) - self.word_eval(&rel.rhs)).frobenius(),
            None => 0.0,
        }
    }

    /// Relation residual divided by the largest product of syllable norms on
    /// either side; the backward error of the relation in working precision.
    pub fn relation_residual_scaled(&self, p: &Presentation) -> f64 {
        let Some(rel) = p.relation() else { return 0.0 };
        let size = |w: &Word| -> f64 {
            w.letters()
                .iter()
                .map(|&(g, e)| {
                    self.images[g]
                        .pow(e)
                        .map(|m| m.frobenius())
                        .unwrap_or(f64::INFINITY)
                })
                .product()
        };
        let scale = size(&rel.lhs).max(size(&rel.rhs)).max(1.0);
        self.relation_residual(p) / scale
    }

    /// Fails unless the relation holds to `tol`.
    pub fn check_relation(self, p: &Presentation, tol: f64) -> Result<Self> {
        let residual = self.relation_residual(p);
        if residual <= tol {
            Ok(self)
        } else {
            Err(Error::Residual {
                residual,
                tolerance: tol,
            })
        }
    }

    /// The representation `g ↦ h⁻¹ ρ(g) h`.
    pub fn conjugate(&self, h: &Mat2) -> Result<Self> {
        let hi = h.inverse().ok_or(Error::SingularMatrix("conjugator"))?;
        Ok(RepPoint {
            images: self.images.iter().map(|&m| hi * m * *h).collect(),
            family: self.family,
            params: self.params.clone(),
        })
    }

    /// `(det ρ(g₁), ..., det ρ(g_k))`, the induced one-dimensional representation.
    pub fn det_star(&self) -> Vec<Complex64> {
        self.images.iter().map(Mat2::det).collect()
    }

    /// Pull back along a map sending source generator `i` to the word `map[i]`.
    pub fn pull_back(&self, map: &[Word]) -> Result<Self> {
        for w in map {
            if let Some(g) = w.max_generator().filter(|&g| g >= self.images.len()) {
                return Err(Error::GeneratorOutOfRange {
                    index: g,
                    count: self.images.len(),
                });
            }
        }
        Self::new(
            map.iter().map(|w| self.word_eval(w)).collect(),
            FamilyTag::Free,
        )
    }
}
