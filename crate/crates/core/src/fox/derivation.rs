use super::group_ring::GroupRingElem;
use super::presentation::Presentation;
use super::rep::RepPoint;
use super::word::Word;
use crate::error::{Error, Result};
use crate::numerics::{bracket, Complex64, Mat2, Mat2xN, RANK_RATIO};

/// Relative tolerance for eigenvector invariance in [`is_irreducible`].
pub const IRREDUCIBLE_TOL: f64 = 1e-8;

/// Fox derivative `∂w/∂g` in the integral group ring.
pub fn fox_derivative(w: &Word, g: usize) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix = Word::identity();
    for &(h, e) in w.letters() {
        if h == g {
            if e > 0 {
                for j in 0..e {
                    out.add_term(1, &prefix * &Word::gen_pow(g, j));
                }
            } else {
                for j in 1..=-e {
                    out.add_term(-1, &prefix * &Word::gen_pow(g, -j));
                }
            }
        }
        prefix = &prefix * &Word::gen_pow(h, e);
    }
    out
}

/// `ρ(∂w/∂g)` computed directly on matrices, syllable by syllable.
pub fn fox_eval(w: &Word, g: usize, rep: &RepPoint) -> Mat2 {
    let mut prefix = Mat2::identity();
    let mut acc = Mat2::zero();
    for &(h, e) in w.letters() {
        let m = rep.image(h);
        if h == g {
            acc = acc + prefix * bracket(e, m).expect("images are invertible");
        }
        prefix = prefix * m.pow(e).expect("images are invertible");
    }
    acc
}

/// The linear system cutting out derivations: a triple `(ξ₁, …, ξ_k)` of
/// vectors extends to a derivation iff `matrix · (ξ₁; …; ξ_k) = 0`.
#[derive(Clone, Debug)]
pub struct DerivationSystem {
    pub matrix: Mat2xN,
    pub source: RepPoint,
}

impl DerivationSystem {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

pub fn derivation_matrix(p: &Presentation, rep: &RepPoint) -> Result<DerivationSystem> {
    let relators = p.relators();
    if relators.len() != 1 {
        return Err(Error::RelatorCount(relators.len()));
    }
    check_generator_count(p, rep)?;
    let blocks: Vec<Mat2> = (0..p.generator_count())
        .map(|g| fox_eval(&relators[0], g, rep))
        .collect();
    Ok(DerivationSystem {
        matrix: Mat2xN::from_blocks(&blocks),
        source: rep.clone(),
    })
}

fn check_generator_count(p: &Presentation, rep: &RepPoint) -> Result<()> {
    if rep.generator_count() != p.generator_count() {
        return Err(Error::InvalidArgument(format!(
            "representation has {} images, presentation {} generators",
            rep.generator_count(),
            p.generator_count()
        )));
    }
    Ok(())
}

/// `dim H¹(Γ; V_ρ)` at an irreducible representation.
pub fn d1_dim(p: &Presentation, rep: &RepPoint) -> Result<usize> {
    d1_dim_with_ratio(p, rep, RANK_RATIO)
}

/// As [`d1_dim`] with an explicit singular-value ratio.
pub fn d1_dim_with_ratio(p: &Presentation, rep: &RepPoint, ratio: f64) -> Result<usize> {
    check_generator_count(p, rep)?;
    if !is_irreducible(rep) {
        return Err(Error::Reducible);
    }
    let rank = match p.relators().len() {
        0 => 0,
        _ => derivation_matrix(p, rep)?.matrix.rank_with_ratio(ratio),
    };
    Ok(2 * p.generator_count() - rank - 2)
}

/// True iff the images have no common eigenvector.
pub fn is_irreducible(rep: &RepPoint) -> bool {
    let Some(pivot) = rep.images().iter().find(|m| !m.is_scalar(IRREDUCIBLE_TOL)) else {
        return false;
    };
    let [e1, e2] = pivot.eigenvalues();
    let mut candidates = vec![pivot.eigenvector(e1)];
    if (e1 - e2).norm() > IRREDUCIBLE_TOL * e1.norm().max(e2.norm()) {
        candidates.push(pivot.eigenvector(e2));
    }
    !candidates.iter().any(|&v| {
        rep.images().iter().all(|m| {
            let mv = m.mul_vec(v);
            // component of m·v orthogonal to the unit vector v
            let along = v[0].conj() * mv[0] + v[1].conj() * mv[1];
            let perp = [mv[0] - along * v[0], mv[1] - along * v[1]];
            let off = (perp[0].norm_sqr() + perp[1].norm_sqr()).sqrt();
            off <= IRREDUCIBLE_TOL * m.max_abs()
        })
    })
}

/// Rank of the stacked blocks `ρ(gᵢ) − 1`, the dimension of the inner derivations.
pub fn inner_rank(rep: &RepPoint) -> usize {
    let blocks: Vec<Mat2> = rep
        .images()
        .iter()
        .map(|&m| (m - Mat2::identity()).transpose())
        .collect();
    Mat2xN::from_blocks(&blocks).rank()
}

/// Words `g₁, g₂, g₃, g₁g₂, g₁g₃, g₂g₃, g₁g₂g₃` (for three generators; in
/// general all nonempty increasing products).
pub fn default_fingerprint_words(k: usize) -> Vec<Word> {
    let mut subsets: Vec<Vec<usize>> = (1u32..1 << k)
        .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    subsets
        .into_iter()
        .map(|s| Word::new(s.into_iter().map(|g| (g, 1))))
        .collect()
}

/// Traces of `ρ(w)` for each word.
pub fn character_fingerprint(rep: &RepPoint, words: &[Word]) -> Vec<Complex64> {
    words.iter().map(|w| rep.word_eval(w).trace()).collect()
}

/// Traces on [`default_fingerprint_words`] followed by the generator determinants.
pub fn default_fingerprint(rep: &RepPoint) -> Vec<Complex64> {
    let mut fp = character_fingerprint(rep, &default_fingerprint_words(rep.generator_count()));
    fp.extend(rep.det_star());
    fp
}

/// Largest coordinate difference between two fingerprints.
pub fn fingerprint_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len(), "fingerprint lengths differ");
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
