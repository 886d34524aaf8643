use super::presentation::Presentation;
use super::rep::RepPoint;
use super::word::Word;
use crate::error::{Error, Result};

/// Outcome of a sampled homomorphism check.
#[derive(Clone, Debug, PartialEq)]
pub struct HomomorphismCheck {
    pub holds: bool,
    pub trials: usize,
    pub max_residual: f64,
}

/// Numerically test that sending source generator `i` to `map[i]` respects
/// the source relation, by pulling back `trials` sampled representations of
/// the target group.
pub fn check_homomorphism<F>(
    map: &[Word],
    source: &Presentation,
    trials: usize,
    tol: f64,
    mut sample_target: F,
) -> Result<HomomorphismCheck>
where
    F: FnMut(usize) -> Result<RepPoint>,
{
    if map.len() != source.generator_count() {
        return Err(Error::InvalidArgument(format!(
            "map has {} images for {} generators",
            map.len(),
            source.generator_count()
        )));
    }
    let mut max_residual: f64 = 0.0;
    for t in 0..trials {
        let target = sample_target(t)?;
        let pulled = target.pull_back(map)?;
        max_residual = max_residual.max(pulled.relation_residual(source));
    }
    Ok(HomomorphismCheck {
        holds: max_residual <= tol,
        trials,
        max_residual,
    })
}
