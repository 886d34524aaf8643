//! Jump loci of `G(m,n)`: the polynomial `f`, the families `F_ζ`, `G_ζ^λ`
//! and `H_ζ`, the degeneration of `F_ζ` onto `H_ζ`, and the invariant profile.

mod blocks;
mod families;
mod fpoly;
mod generic;
mod profile;
mod subfamily;

pub use blocks::{block_rank, derivation_blocks, full_block_rank};
pub use families::{
    build_f_zeta, build_g_zeta_lambda, build_h_zeta_g, build_rho_degenerate, degeneration_check,
    halving_sequence, sample_f_lambda, sample_f_zeta, sample_g_zeta_lambda, sample_h_zeta,
    DegenerationReport, FZetaParams, FreeEntry, GZetaLambdaParams, HZetaGParams,
};
pub use fpoly::{
    ell, f_poly, f_residual, f_roots, f_value, fiber_shape, FiberShape, GParams, EXCLUSION_TOL,
};
pub(crate) use generic::accept;
pub use generic::{
    g_commutator_images, sample_generic_g_any, sample_generic_rep_g, SAMPLE_ATTEMPTS,
};
pub use profile::{invariant_profile_g, InvariantProfileG};
pub use subfamily::{subfamilies, Subfamily};
