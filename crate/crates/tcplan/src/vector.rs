//! Points of Euclidean d-space.
//!
//! One type carries every kind of configuration in this crate: sphere points,
//! plane positions, members of star-shaped sets. Coordinates are finite by
//! construction; arithmetic between mismatched dimensions panics, since every
//! internal caller guarantees matching dimensions.

use std::fmt;

use crate::error::{Error, Result};
use crate::tolerance::EPS_PREDICATE;

#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    /// Builds a vector, rejecting empty coordinate lists and non-finite entries.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { coords })
    }

    /// Internal constructor for coordinates produced by our own arithmetic.
    pub(crate) fn raw(coords: Vec<f64>) -> Self {
        debug_assert!(!coords.is_empty());
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        Self {
            coords: vec![0.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dot(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dot product needs matching dims");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "addition needs matching dims");
        Self::raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "subtraction needs matching dims");
        Self::raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::raw(self.coords.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> Self {
        Self::raw(self.coords.iter().map(|a| -a).collect())
    }

    /// `(1 - t) * a + t * b`, coordinate-wise. Exact at `t = 0` and `t = 1`.
    pub fn lerp(a: &Self, b: &Self, t: f64) -> Self {
        assert_eq!(a.dim(), b.dim(), "lerp needs matching dims");
        Self::raw(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| (1.0 - t) * x + t * y)
                .collect(),
        )
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `v / ‖v‖`. Errors when the norm is at or below [`EPS_PREDICATE`]: every
/// planner guarantees that bound by construction, so hitting the error means
/// the caller is out of contract.
pub fn normalize(v: &Vector) -> Result<Vector> {
    let n = v.norm();
    if !n.is_finite() {
        return Err(Error::NonFinite);
    }
    if n <= EPS_PREDICATE {
        return Err(Error::NearZeroVector {
            norm: n,
            threshold: EPS_PREDICATE,
        });
    }
    Ok(Vector::raw(v.coords.iter().map(|c| c / n).collect()))
}

/// Division by the norm with only a true-degeneracy guard.
///
/// The sphere sections need this instead of [`normalize`]: inside the rule
/// domain `‖a + b‖ > eps_predicate` the interpolant's norm is only bounded
/// below by `‖a + b‖ / 2`, which may sit under the public threshold while
/// still being perfectly well-conditioned.
pub(crate) fn project_unit(v: &Vector) -> Result<Vector> {
    let n = v.norm();
    if !n.is_finite() {
        return Err(Error::NonFinite);
    }
    if n <= 1e-300 {
        return Err(Error::NearZeroVector {
            norm: n,
            threshold: 1e-300,
        });
    }
    Ok(Vector::raw(v.coords.iter().map(|c| c / n).collect()))
}

/// The nowhere-zero tangent field on odd spheres: consecutive coordinate
/// pairs `(x, y)` rotate to `(-y, x)`. Output is orthogonal to the input and
/// has the same norm.
pub fn tangent_field_nu(v: &Vector) -> Result<Vector> {
    if !v.dim().is_multiple_of(2) {
        return Err(Error::OddDimension(v.dim()));
    }
    let mut out = Vec::with_capacity(v.dim());
    for pair in v.coords.chunks_exact(2) {
        out.push(-pair[1]);
        out.push(pair[0]);
    }
    Ok(Vector::raw(out))
}
