use serde::Serialize;

use super::locus::{admissible_roots, puncture_count, sample_r_lambda, ParityClass};
use crate::error::{Error, Result};
use crate::sampling::rng_from_seed;

/// Number of random `λ ∈ R` at which the fiber of `det_∗` is counted.
pub const PROFILE_SAMPLES: usize = 20;
const PROFILE_SEED: u64 = 0x4a4c_5f48;

/// Invariants of `H(m,n)` that determine `(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfileH {
    /// Cardinality of a generic fiber of `det_∗`, measured.
    pub m: i64,
    pub puncture_count: usize,
    pub parity_class: ParityClass,
}

pub fn invariant_profile_h(m: i64, n: i64) -> Result<InvariantProfileH> {
    invariant_profile_h_seeded(m, n, PROFILE_SEED)
}

/// Counts admissible roots of `h_λ` at [`PROFILE_SAMPLES`] random `λ ∈ R`;
/// fails with the observed counts unless they all agree.
pub fn invariant_profile_h_seeded(m: i64, n: i64, seed: u64) -> Result<InvariantProfileH> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let counts = fiber_counts(m, n, seed, PROFILE_SAMPLES)?;
    if counts.iter().any(|&c| c != counts[0]) {
        return Err(Error::NonGeneric(counts));
    }
    Ok(InvariantProfileH {
        m: counts[0] as i64,
        puncture_count: puncture_count(m, n)?,
        parity_class: ParityClass::of(m),
    })
}

/// Admissible-root counts at `samples` random `λ ∈ R`.
pub fn fiber_counts(m: i64, n: i64, seed: u64, samples: usize) -> Result<Vec<usize>> {
    let mut rng = rng_from_seed(seed);
    (0..samples)
        .map(|_| Ok(admissible_roots(m, n, sample_r_lambda(m, n, &mut rng)?)?.len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let p = invariant_profile_h(1, 1).unwrap();
        assert_eq!(
            (p.m, p.puncture_count, p.parity_class),
            (1, 4, ParityClass::MEquals1)
        );
        let p = invariant_profile_h(3, 2).unwrap();
        assert_eq!(
            (p.m, p.puncture_count, p.parity_class),
            (3, 4, ParityClass::MOddGe3)
        );
        let p = invariant_profile_h(2, 2).unwrap();
        assert_eq!((p.m, p.parity_class), (2, ParityClass::MEven));
        assert!(invariant_profile_h(0, 1).is_err());
    }
}
