//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("vector must have at least one coordinate")]
    EmptyVector,

    #[error("vector contains a non-finite coordinate")]
    NonFinite,

    #[error("vector norm {norm:.3e} is at or below the degeneracy threshold {threshold:.3e}")]
    NearZeroVector { norm: f64, threshold: f64 },

    #[error("the tangent field needs even ambient dimension, got {0}")]
    OddDimension(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("junction gap {gap:.3e} at t = {at} exceeds tolerance {tolerance:.3e}")]
    JunctionGap { at: f64, gap: f64, tolerance: f64 },

    #[error("point with norm {norm} is not on the unit sphere (tolerance {tolerance:.3e})")]
    NotOnSphere { norm: f64, tolerance: f64 },

    #[error("invalid tolerance config: require 0 < eps_assert < eps_predicate < 1")]
    InvalidTolerances,

    #[error("invalid sphere spec: m must be at least 1")]
    InvalidSphereSpec,

    #[error("invalid annulus spec: {0}")]
    InvalidAnnulusSpec(String),

    #[error("star point {0} is not a member of its own domain")]
    StarPointNotMember(String),

    #[error("star property violated at sampled point {0}")]
    StarPropertyViolation(String),

    #[error("homotopy contract violated: {0}")]
    HomotopyContractViolation(String),

    #[error("planner has {0} rules; a contraction needs exactly one")]
    NotSingleRule(usize),

    #[error("discontinuity witness needs at least two rules, planner has {0}")]
    NeedsMultipleRules(usize),

    #[error("no rule domain accepts the pair ({start}, {goal})")]
    NoApplicableRule { start: String, goal: String },

    #[error("point {point} is outside the free space of {space}")]
    OutsideFreeSpace { point: String, space: String },

    #[error("no discontinuity witness found near the hint after {candidates} candidates")]
    WitnessNotFound { candidates: usize },
}
