//! A disk robot dodging a disk obstacle in the plane.
//!
//! With the obstacle centered at the origin, the robot's reference point
//! moves freely exactly where `‖p‖ > l_obstacle + l_robot`. That punctured
//! plane deformation-retracts onto a circle along radial lines, so the
//! two-rule circle planner transfers to an explicit two-rule planner for the
//! robot: walk radially to the deformation circle, run the circle rule
//! there, walk radially back out. Two rules is again the minimum, since the
//! free space is homotopy-equivalent to a circle and rule counts are
//! invariant under that.

use crate::error::{Error, Result};
use crate::homotopy::Homotopy;
use crate::rule::{LocalRule, MotionPlanner};
use crate::sphere::{sphere_planner, SphereSpec};
use crate::tolerance::{EPS_ASSERT, EPS_PREDICATE};
use crate::transfer::{transfer_planner, TransferData};
use crate::vector::{normalize, Vector};

/// Geometry of the obstacle-avoidance problem: obstacle radius, robot
/// radius, and the radius of the circle the free space retracts onto.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnulusSpec {
    l_obstacle: f64,
    l_robot: f64,
    rho: f64,
}

impl AnnulusSpec {
    /// Default deformation circle at twice the clearance radius: always
    /// strictly inside the free space, with no assumption on the scale of
    /// the input radii.
    pub fn new(l_obstacle: f64, l_robot: f64) -> Result<Self> {
        let clearance = l_obstacle + l_robot;
        Self::with_rho(l_obstacle, l_robot, 2.0 * clearance)
    }

    pub fn with_rho(l_obstacle: f64, l_robot: f64, rho: f64) -> Result<Self> {
        if !(l_obstacle > 0.0 && l_obstacle.is_finite()) || !(l_robot > 0.0 && l_robot.is_finite())
        {
            return Err(Error::InvalidAnnulusSpec(
                "radii must be positive and finite".into(),
            ));
        }
        let clearance = l_obstacle + l_robot;
        if clearance <= EPS_PREDICATE {
            return Err(Error::InvalidAnnulusSpec(format!(
                "clearance radius {clearance} must exceed {EPS_PREDICATE}"
            )));
        }
        if !(rho > clearance && rho.is_finite()) {
            return Err(Error::InvalidAnnulusSpec(format!(
                "deformation radius {rho} must exceed the clearance radius {clearance}"
            )));
        }
        Ok(Self {
            l_obstacle,
            l_robot,
            rho,
        })
    }

    pub fn l_obstacle(&self) -> f64 {
        self.l_obstacle
    }

    pub fn l_robot(&self) -> f64 {
        self.l_robot
    }

    /// Radius of the deformation circle.
    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `l_obstacle + l_robot`: positions at or below this norm collide.
    pub fn clearance_radius(&self) -> f64 {
        self.l_obstacle + self.l_robot
    }

    pub fn contains(&self, z: &Vector) -> bool {
        z.dim() == 2 && z.norm() > self.clearance_radius()
    }

    pub fn space_name(&self) -> String {
        format!(
            "annulus(l_O={}, l_R={}, rho={})",
            self.l_obstacle, self.l_robot, self.rho
        )
    }
}

/// The circle of radius `rho`, planned by conjugating the unit-circle
/// planner with scaling. Scaling commutes with every formula involved
/// (interpolation, normalization, the tangent field), so the two rules carry
/// over verbatim.
pub fn circle_planner(rho: f64) -> MotionPlanner {
    assert!(rho > 0.0 && rho.is_finite());
    let unit = sphere_planner(&SphereSpec::new(1).expect("m = 1"));
    let rules = unit
        .rules()
        .iter()
        .map(|rule| {
            let domain_rule = rule.clone();
            let section_rule = rule.clone();
            LocalRule::new(
                rule.label(),
                move |a: &Vector, b: &Vector| {
                    domain_rule.admits(&a.scale(1.0 / rho), &b.scale(1.0 / rho))
                },
                move |a: &Vector, b: &Vector| {
                    let path = section_rule.section(&a.scale(1.0 / rho), &b.scale(1.0 / rho))?;
                    Ok(path.map(2, move |x| x.scale(rho)))
                },
            )
        })
        .collect();
    let tol = EPS_ASSERT * rho.max(1.0);
    MotionPlanner::new(
        format!("circle(rho={rho})"),
        rules,
        move |x: &Vector| x.dim() == 2 && (x.norm() - rho).abs() <= tol,
        move |x: &Vector| {
            if x.dim() != 2 {
                return f64::INFINITY;
            }
            (x.norm() - rho).abs()
        },
    )
}

/// The radial deformation retraction of the free space onto the circle of
/// radius `rho`: `g(z) = rho * z/‖z‖`, `f` the inclusion, and
/// `H(z, t) = (1-t) z + t g(z)`.
///
/// Every track moves along a ray between the norms `‖z‖` and `rho`, both
/// above the clearance radius, so tracks never leave the free space. The
/// radial projection panics if handed a point within `EPS_PREDICATE` of the
/// origin, which no free-space member can be.
pub fn annulus_retraction(spec: &AnnulusSpec) -> TransferData {
    let rho = spec.rho();
    let project = move |z: &Vector| -> Vector {
        normalize(z)
            .expect("free-space members stay away from the origin")
            .scale(rho)
    };
    let homotopy = Homotopy::new(2, move |z: &Vector, t| Vector::lerp(z, &project(z), t));

    // The contract is analytic; the sampled probe ring is a wiring check.
    let clearance = spec.clearance_radius();
    let probes: Vec<Vector> = (0..16)
        .map(|i| {
            let angle = i as f64 * std::f64::consts::TAU / 16.0;
            let radius = clearance * (1.1 + 0.2 * i as f64);
            Vector::new(vec![radius * angle.cos(), radius * angle.sin()]).unwrap()
        })
        .collect();
    TransferData::verified(project, |x: &Vector| x.clone(), homotopy, 2, 2, &probes)
        .expect("radial retraction satisfies the homotopy contract")
}

/// The two-rule planner for the disk robot: the circle planner transferred
/// along the radial retraction. Rule domains compare radial directions; the
/// planned paths consist of two radial moves and one arc-with-detour on the
/// deformation circle, so their norm never drops below
/// `min(‖start‖, ‖goal‖, rho)`.
pub fn annulus_planner(spec: &AnnulusSpec) -> MotionPlanner {
    let spec = *spec;
    let circle = circle_planner(spec.rho());
    let data = annulus_retraction(&spec);
    transfer_planner(
        &circle,
        &data,
        spec.space_name(),
        move |z: &Vector| spec.contains(z),
        move |z: &Vector| {
            if z.dim() != 2 {
                return f64::INFINITY;
            }
            (spec.clearance_radius() - z.norm()).max(0.0)
        },
    )
}
