//! Carrying planners across homotopy equivalences.
//!
//! Given maps `g : target -> source`, `f : source -> target` and a homotopy
//! `H` on the target from the identity to `f . g`, any local rule on the
//! source induces one on the target: deform the start under `H`, run the
//! source rule between the images `g(start)`, `g(goal)` pushed back through
//! `f`, then undo the deformation of the goal. The three pieces run on the
//! thirds schedule and meet exactly because `H` at time 1 is `f . g`.
//!
//! Rule domains pull back along `g x g` (the same predicate evaluated at
//! the mapped pair), so the transferred planner has the same rule count in
//! the same order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homotopy::Homotopy;
use crate::path::concat3;
use crate::rule::{LocalRule, MotionPlanner};
use crate::tolerance::EPS_ASSERT;
use crate::vector::Vector;

type MapFn = Arc<dyn Fn(&Vector) -> Vector + Send + Sync>;

/// The triple `(g, f, H)` realizing one direction of a homotopy equivalence.
#[derive(Clone)]
pub struct TransferData {
    to_source: MapFn,
    to_target: MapFn,
    homotopy: Homotopy,
    source_dim: usize,
    target_dim: usize,
}

impl TransferData {
    /// Builds the triple without checking anything. Prefer [`Self::verified`]
    /// when probe points are available.
    pub fn new<G, F>(g: G, f: F, homotopy: Homotopy, source_dim: usize, target_dim: usize) -> Self
    where
        G: Fn(&Vector) -> Vector + Send + Sync + 'static,
        F: Fn(&Vector) -> Vector + Send + Sync + 'static,
    {
        assert_eq!(homotopy.dim(), target_dim, "homotopy lives on the target");
        Self {
            to_source: Arc::new(g),
            to_target: Arc::new(f),
            homotopy,
            source_dim,
            target_dim,
        }
    }

    /// Builds the triple and checks `H(y, 0) = y` and `H(y, 1) = f(g(y))` on
    /// the probe points. The junction continuity of every transferred
    /// section silently depends on these identities, so they are not
    /// trusted.
    pub fn verified<G, F>(
        g: G,
        f: F,
        homotopy: Homotopy,
        source_dim: usize,
        target_dim: usize,
        probes: &[Vector],
    ) -> Result<Self>
    where
        G: Fn(&Vector) -> Vector + Send + Sync + 'static,
        F: Fn(&Vector) -> Vector + Send + Sync + 'static,
    {
        let data = Self::new(g, f, homotopy, source_dim, target_dim);
        for y in probes {
            let id_err = data.homotopy.eval(y, 0.0).distance(y);
            if id_err > EPS_ASSERT {
                return Err(Error::HomotopyContractViolation(format!(
                    "H(y, 0) differs from y by {id_err:.3e} at y = {y}"
                )));
            }
            let fg = data.apply_f(&data.apply_g(y));
            let end_err = data.homotopy.eval(y, 1.0).distance(&fg);
            if end_err > EPS_ASSERT {
                return Err(Error::HomotopyContractViolation(format!(
                    "H(y, 1) differs from f(g(y)) by {end_err:.3e} at y = {y}"
                )));
            }
        }
        Ok(data)
    }

    /// The trivial triple on one space: `g = f = id`, `H(y, t) = y`.
    pub fn identity(dim: usize) -> Self {
        Self::new(
            |y: &Vector| y.clone(),
            |x: &Vector| x.clone(),
            Homotopy::new(dim, |y: &Vector, _| y.clone()),
            dim,
            dim,
        )
    }

    /// `g`: target point to source point.
    pub fn apply_g(&self, y: &Vector) -> Vector {
        (self.to_source)(y)
    }

    /// `f`: source point to target point.
    pub fn apply_f(&self, x: &Vector) -> Vector {
        (self.to_target)(x)
    }

    pub fn homotopy(&self) -> &Homotopy {
        &self.homotopy
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }
}

impl std::fmt::Debug for TransferData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TransferData")
            .field("source_dim", &self.source_dim)
            .field("target_dim", &self.target_dim)
            .finish()
    }
}

/// Induces a rule on the target space from a rule on the source space.
///
/// The section is the three-piece schedule `H(y1, 3t)` / `f(s(g(y1),
/// g(y2))(3t - 1))` / `H(y2, 3 - 3t)`; the domain is the pullback of the
/// source domain.
pub fn transfer_rule(rule: &LocalRule, data: &TransferData) -> LocalRule {
    let domain_rule = rule.clone();
    let domain_data = data.clone();
    let section_rule = rule.clone();
    let section_data = data.clone();
    LocalRule::new(
        format!("{}~", rule.label()),
        move |y1: &Vector, y2: &Vector| {
            domain_rule.admits(&domain_data.apply_g(y1), &domain_data.apply_g(y2))
        },
        move |y1: &Vector, y2: &Vector| {
            let data = &section_data;
            let middle = section_rule
                .section(&data.apply_g(y1), &data.apply_g(y2))?
                .map(data.target_dim, {
                    let f = Arc::clone(&data.to_target);
                    move |x| f(&x)
                });
            concat3(
                data.homotopy.track(y1),
                middle,
                data.homotopy.reversed_track(y2),
            )
        },
    )
}

/// Transfers every rule of a planner, preserving count and order.
pub fn transfer_planner<M, V>(
    planner: &MotionPlanner,
    data: &TransferData,
    space_name: impl Into<String>,
    membership: M,
    violation: V,
) -> MotionPlanner
where
    M: Fn(&Vector) -> bool + Send + Sync + 'static,
    V: Fn(&Vector) -> f64 + Send + Sync + 'static,
{
    let rules = planner
        .rules()
        .iter()
        .map(|rule| transfer_rule(rule, data))
        .collect();
    MotionPlanner::new(space_name, rules, membership, violation)
}
