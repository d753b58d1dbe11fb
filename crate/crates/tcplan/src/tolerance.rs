//! Numeric tolerances used by predicates, assertions and samplers.

use crate::error::{Error, Result};

/// Width of open-set predicates such as the sphere rule domains.
pub const EPS_PREDICATE: f64 = 1e-6;

/// Tolerance for exact contracts (endpoints, junctions, unit norms).
pub const EPS_ASSERT: f64 = 1e-9;

/// Default number of samples when a path is discretized.
pub const DEFAULT_SAMPLE_COUNT: usize = 256;

/// Bundle of the three knobs above, validated so that
/// `0 < eps_assert < eps_predicate < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub eps_predicate: f64,
    pub eps_assert: f64,
    pub sample_count: usize,
}

impl Tolerances {
    pub fn new(eps_predicate: f64, eps_assert: f64, sample_count: usize) -> Result<Self> {
        let ordered = 0.0 < eps_assert && eps_assert < eps_predicate && eps_predicate < 1.0;
        if !ordered || sample_count == 0 {
            return Err(Error::InvalidTolerances);
        }
        Ok(Self {
            eps_predicate,
            eps_assert,
            sample_count,
        })
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eps_predicate: EPS_PREDICATE,
            eps_assert: EPS_ASSERT,
            sample_count: DEFAULT_SAMPLE_COUNT,
        }
    }
}
