//! Single-rule planners on contractible spaces.
//!
//! A contraction `H` (identity at time 0, constant at time 1) yields a
//! continuous global planner: run the contraction of the start forwards and
//! the contraction of the goal backwards, glued at the contraction point.
//! Star-shaped sets are the concrete instance: contract along straight
//! segments to the star point. The construction also runs in reverse (a
//! single-rule planner produces a contraction), so one continuous rule
//! suffices exactly on contractible spaces.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homotopy::Homotopy;
use crate::path::concat2;
use crate::rule::{LocalRule, MotionPlanner};
use crate::tolerance::EPS_ASSERT;
use crate::vector::Vector;

type MemberFn = Arc<dyn Fn(&Vector) -> bool + Send + Sync>;
type ViolationFn = Arc<dyn Fn(&Vector) -> f64 + Send + Sync>;

/// A set that contains, for some star point, every segment from a member to
/// that point.
#[derive(Clone)]
pub struct StarDomain {
    name: String,
    star_point: Vector,
    membership: MemberFn,
    violation: ViolationFn,
}

impl StarDomain {
    /// Builds a star domain, trusting the star property. The one thing that
    /// is always checked: the star point itself must be a member.
    pub fn new<M, V>(
        name: impl Into<String>,
        star_point: Vector,
        membership: M,
        violation: V,
    ) -> Result<Self>
    where
        M: Fn(&Vector) -> bool + Send + Sync + 'static,
        V: Fn(&Vector) -> f64 + Send + Sync + 'static,
    {
        let domain = Self {
            name: name.into(),
            star_point,
            membership: Arc::new(membership),
            violation: Arc::new(violation),
        };
        if !domain.contains(&domain.star_point) {
            return Err(Error::StarPointNotMember(domain.star_point.to_string()));
        }
        Ok(domain)
    }

    /// Spot-checks the star property on the given members: for each probe
    /// point and a handful of interpolation times, the segment towards the
    /// star point must stay inside. Sampling cannot prove the property, but
    /// it catches honest mistakes.
    pub fn spot_check(&self, probes: &[Vector]) -> Result<()> {
        let times = [0.1, 0.25, 0.5, 0.75, 0.9];
        for x in probes {
            if !self.contains(x) {
                return Err(Error::StarPropertyViolation(x.to_string()));
            }
            for t in times {
                let p = Vector::lerp(x, &self.star_point, t);
                if !self.contains(&p) {
                    return Err(Error::StarPropertyViolation(p.to_string()));
                }
            }
        }
        Ok(())
    }

    /// The closed unit disk in the plane, starred at the origin.
    pub fn unit_disk() -> Self {
        Self::new(
            "disk",
            Vector::zeros(2),
            |x: &Vector| x.dim() == 2 && x.norm() <= 1.0 + EPS_ASSERT,
            |x: &Vector| {
                if x.dim() != 2 {
                    return f64::INFINITY;
                }
                (x.norm() - 1.0).max(0.0)
            },
        )
        .expect("origin is in the unit disk")
    }

    /// The axis-aligned rectangle `[-hw, hw] x [-hh, hh]`, starred at the
    /// origin.
    pub fn rectangle(half_width: f64, half_height: f64) -> Self {
        assert!(half_width > 0.0 && half_height > 0.0);
        Self::new(
            "rectangle",
            Vector::zeros(2),
            move |x: &Vector| {
                x.dim() == 2
                    && x.coords()[0].abs() <= half_width + EPS_ASSERT
                    && x.coords()[1].abs() <= half_height + EPS_ASSERT
            },
            move |x: &Vector| {
                if x.dim() != 2 {
                    return f64::INFINITY;
                }
                let dx = (x.coords()[0].abs() - half_width).max(0.0);
                let dy = (x.coords()[1].abs() - half_height).max(0.0);
                (dx * dx + dy * dy).sqrt()
            },
        )
        .expect("origin is in the rectangle")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn star_point(&self) -> &Vector {
        &self.star_point
    }

    pub fn dim(&self) -> usize {
        self.star_point.dim()
    }

    pub fn contains(&self, x: &Vector) -> bool {
        (self.membership)(x)
    }

    /// The straight-line contraction onto the star point.
    pub fn contraction(&self) -> Homotopy {
        Homotopy::linear_contraction(&self.star_point)
    }
}

impl std::fmt::Debug for StarDomain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StarDomain")
            .field("name", &self.name)
            .field("star_point", &self.star_point)
            .finish()
    }
}

fn contraction_rule(h: &Homotopy) -> LocalRule {
    let h = h.clone();
    LocalRule::new(
        "contract",
        |_: &Vector, _: &Vector| true,
        move |a: &Vector, b: &Vector| concat2(h.track(a), h.reversed_track(b)),
    )
}

/// Builds the single-rule planner induced by a contraction: the section runs
/// `H(start, 2t)` up to the contraction point and `H(goal, 2-2t)` back down.
///
/// The contract `H(x, 0) = x`, `H(x, 1) = const` is checked on the probe
/// points (skipped when `probes` is empty).
pub fn contractible_planner<M, V>(
    space_name: impl Into<String>,
    h: Homotopy,
    membership: M,
    violation: V,
    probes: &[Vector],
) -> Result<MotionPlanner>
where
    M: Fn(&Vector) -> bool + Send + Sync + 'static,
    V: Fn(&Vector) -> f64 + Send + Sync + 'static,
{
    if let Some(first) = probes.first() {
        let center = h.eval(first, 1.0);
        for x in probes {
            let start_err = h.eval(x, 0.0).distance(x);
            if start_err > EPS_ASSERT {
                return Err(Error::HomotopyContractViolation(format!(
                    "H(x, 0) differs from x by {start_err:.3e} at x = {x}"
                )));
            }
            let end_err = h.eval(x, 1.0).distance(&center);
            if end_err > EPS_ASSERT {
                return Err(Error::HomotopyContractViolation(format!(
                    "H(x, 1) varies across the space by {end_err:.3e} at x = {x}"
                )));
            }
        }
    }
    Ok(MotionPlanner::new(
        space_name,
        vec![contraction_rule(&h)],
        membership,
        violation,
    ))
}

/// The continuous planner on a star-shaped set: two straight segments
/// through the star point.
pub fn star_planner(k: &StarDomain) -> MotionPlanner {
    let membership = Arc::clone(&k.membership);
    let violation = Arc::clone(&k.violation);
    MotionPlanner::new(
        k.name.clone(),
        vec![contraction_rule(&k.contraction())],
        move |x: &Vector| membership(x),
        move |x: &Vector| violation(x),
    )
}

/// Recovers a contraction from a single-rule planner: `H(x, t)` follows the
/// planned path from `x` to the fixed base point `x0`.
pub fn contraction_from_planner(planner: &MotionPlanner, x0: &Vector) -> Result<Homotopy> {
    if planner.rule_count() != 1 {
        return Err(Error::NotSingleRule(planner.rule_count()));
    }
    if !planner.is_member(x0) {
        return Err(Error::OutsideFreeSpace {
            point: x0.to_string(),
            space: planner.space_name().to_string(),
        });
    }
    let rule = planner.rules()[0].clone();
    let x0 = x0.clone();
    Ok(Homotopy::new(x0.dim(), move |x, t| {
        rule.section(x, &x0)
            .expect("single-rule section must accept members")
            .eval(t)
    }))
}
