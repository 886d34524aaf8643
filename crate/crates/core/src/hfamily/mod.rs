//! Jump loci of `H(m,n)`: the sequence `γ_k`, the equation `h_λ(r) = 0`,
//! the family `σ_{λ,r,a₁}`, the excluded parabolic case and the invariant profile.

mod gamma;
mod generic;
mod locus;
mod profile;
mod sigma;

pub use gamma::{
    gamma, gamma_identities_check, gamma_poly, power_identity_residual, GammaSeq, GAMMA_MAX_INDEX,
};
pub use generic::{h_commutator_images, sample_generic_h_any, sample_generic_rep_h};
pub use locus::{
    admissible_roots, delta_r, double_root_check, exception_margin, excluded_pair_distance,
    h_lambda_poly, m2_double_root_lambdas, puncture_count, puncture_points, r_membership,
    sample_r_lambda, DoubleRoot, DoubleRootReport, ParityClass, H_EXCLUSION_TOL,
};
pub use profile::{
    fiber_counts, invariant_profile_h, invariant_profile_h_seeded, InvariantProfileH,
    PROFILE_SAMPLES,
};
pub use sigma::{
    build_r2_independent, build_sigma, det_star_sigma, parabolic_search, r2_consistency,
    r2_lambdas, sample_sigma, verify_h_point, HVerificationReport, ParabolicSearchReport,
    SigmaParams,
};
