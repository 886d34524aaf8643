use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("singular matrix in {0}")]
    SingularMatrix(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("presentation must have exactly one relator, found {0}")]
    RelatorCount(usize),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("d1 defined here only for irreducible points")]
    Reducible,
    #[error("condition violated: {0}")]
    Condition(&'static str),
    #[error("point is contained in the F_zeta family (zeta^m = 1)")]
    ContainedInF,
    #[error("relation residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("sampling failed after {0} attempts")]
    SamplingExhausted(usize),
    #[error("|k| = {0} exceeds the recursion stability bound 200")]
    StabilityBound(i64),
    #[error("root finder did not converge")]
    NoConvergence,
    #[error("non-generic sampling: counts {0:?}")]
    NonGeneric(Vec<usize>),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
