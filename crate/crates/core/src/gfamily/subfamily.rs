use rand::Rng;
use serde::Serialize;

use super::families::{sample_f_zeta, sample_g_zeta_lambda, sample_h_zeta};
use super::fpoly::{f_roots, GParams};
use crate::error::Result;
use crate::fox::RepPoint;
use crate::numerics::{roots_of_unity, Complex64};

/// One irreducible piece of the jump locus of `G(m,n)` that can be sampled.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Subfamily {
    FZeta {
        zeta: Complex64,
    },
    GZetaLambda {
        zeta: Complex64,
        lambda: Complex64,
    },
    /// Only for `m = −n`.
    HZeta {
        zeta: Complex64,
    },
}

impl Subfamily {
    pub fn label(&self) -> &'static str {
        match self {
            Subfamily::FZeta { .. } => "F_zeta",
            Subfamily::GZetaLambda { .. } => "G_zeta_lambda",
            Subfamily::HZeta { .. } => "H_zeta",
        }
    }

    pub fn zeta(&self) -> Complex64 {
        match *self {
            Subfamily::FZeta { zeta }
            | Subfamily::GZetaLambda { zeta, .. }
            | Subfamily::HZeta { zeta } => zeta,
        }
    }

    pub fn sample(&self, gp: &GParams, rng: &mut impl Rng) -> Result<RepPoint> {
        match *self {
            Subfamily::FZeta { zeta } => sample_f_zeta(gp, zeta, rng),
            Subfamily::GZetaLambda { zeta, lambda } => sample_g_zeta_lambda(gp, zeta, lambda, rng),
            Subfamily::HZeta { zeta } => sample_h_zeta(gp.n, zeta, rng),
        }
    }
}

/// `F_ζ` for `ζ ∈ Λ_g ∪ {1}`, `G_ζ^λ` for `ζ ∈ Λ_n \ Λ_g` and `f(λ) = 0`,
/// and `H_ζ` for `ζ^n = 1` when `m = −n`.
pub fn subfamilies(gp: &GParams) -> Result<Vec<Subfamily>> {
    let one = Complex64::new(1.0, 0.0);
    let g = gp.g.unsigned_abs() as usize;
    let mut out: Vec<Subfamily> = std::iter::once(one)
        .chain(roots_of_unity(g)?)
        .map(|zeta| Subfamily::FZeta { zeta })
        .collect();
    let lambdas = f_roots(gp.m, gp.n)?;
    for zeta in roots_of_unity(gp.n as usize)? {
        if (zeta.powi(g as i32) - 1.0).norm() > 1e-10 {
            out.extend(
                lambdas
                    .iter()
                    .map(|&lambda| Subfamily::GZetaLambda { zeta, lambda }),
            );
        }
    }
    if gp.anti_diagonal() {
        out.extend(
            std::iter::once(one)
                .chain(roots_of_unity(gp.n as usize)?)
                .map(|zeta| Subfamily::HZeta { zeta }),
        );
    }
    Ok(out)
}
