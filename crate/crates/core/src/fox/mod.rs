//! Free-group words, one-relator presentations and Fox calculus.

mod derivation;
mod group_ring;
mod homomorphism;
mod presentation;
mod rep;
mod word;

pub use derivation::{
    character_fingerprint, d1_dim, d1_dim_with_ratio, default_fingerprint,
    default_fingerprint_words, derivation_matrix, fingerprint_distance, fox_derivative, fox_eval,
    inner_rank, is_irreducible, DerivationSystem, IRREDUCIBLE_TOL,
};
pub use group_ring::GroupRingElem;
pub use homomorphism::{check_homomorphism, HomomorphismCheck};
pub use presentation::{Presentation, Relation};
pub use rep::{FamilyTag, RepPoint};
pub use word::Word;

/// `ρ(w)`; free-function form of [`RepPoint::word_eval`].
pub fn word_eval(rep: &RepPoint, w: &Word) -> crate::numerics::Mat2 {
    rep.word_eval(w)
}
