//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by validation, the numerical pipeline, and file I/O.
///
/// The CLI maps these onto exit codes: validation errors exit with 1,
/// numerical failures with 2, and I/O problems with 3.
#[derive(Debug, Error)]
pub enum BlottoError {
    #[error("value vectors have different lengths ({0} vs {1}) or fewer than 2 entries")]
    DimensionMismatch(usize, usize),

    #[error("battlefield value must be strictly positive (index {0})")]
    NonPositiveValue(usize),

    #[error("budget must be strictly positive")]
    NonPositiveBudget,

    #[error("probability vector has a zero or negative entry where positive mass is required (index {0})")]
    ZeroEntry(usize),

    #[error("vectors do not describe probability distributions: {0}")]
    NotAProbability(String),

    #[error("point is not on the budget slice (residual {0:.3e})")]
    NotOnSlice(f64),

    #[error("point has a coordinate outside [0,1] (index {index}, value {value})")]
    OutsideHypercube { index: usize, value: f64 },

    #[error("more than one strict mixture among the marginals (indices {0} and {1})")]
    MultipleStrictMixtures(usize, usize),

    #[error("marginals are not jointly mixable: max b = {max_b}, half expected spend = {half_spend}")]
    NotMixable { max_b: f64, half_spend: f64 },

    #[error("grid step h = {h} exceeds a nondegenerate reduced length b* = {b_star}")]
    GridTooCoarse { h: f64, b_star: f64 },

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("tensor scaling exceeded its iteration cap ({cap}) with l1 error {l1_error:.3e} > eta = {eta:.3e}")]
    SinkhornCap { cap: usize, l1_error: f64, eta: f64 },

    #[error("anti-diagonal marginal has mass outside the reachable index range [{lo}, {hi}]")]
    UnreachableCell { lo: usize, hi: usize },

    #[error("discrete uniforms are not jointly mixable: {0}")]
    DiscreteNotMixable(String),

    #[error("parity violated during discrete construction: {0}")]
    ParityViolation(String),

    #[error("state budget exceeded: {states} atoms > {budget}")]
    StateBudget { states: usize, budget: usize },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl BlottoError {
    /// Exit code the CLI reports for this error class.
    pub fn exit_code(&self) -> i32 {
        use BlottoError::*;
        match self {
            DimensionMismatch(..) | NonPositiveValue(..) | NonPositiveBudget | ZeroEntry(..)
            | NotAProbability(..) | NotOnSlice(..) | OutsideHypercube { .. }
            | MultipleStrictMixtures(..) | NotMixable { .. } | GridTooCoarse { .. }
            | DiscreteNotMixable(..) | StateBudget { .. } => 1,
            RootFinding(..) | SinkhornCap { .. } | UnreachableCell { .. }
            | ParityViolation(..) => 2,
            Io(..) | Json(..) => 3,
        }
    }
}
